#include "lieord/class_numbers.hpp"

#include "lieord/errors.hpp"
#include "lieord/messages.hpp"

namespace lieord {

namespace {

std::string key_text(std::string_view label, unsigned n, const BigNat& q) {
    return "classnum " + std::string(label) + " " + std::to_string(n) + " " + q.str();
}

}  // namespace

std::optional<BigNat> ClassNumberProvider::native(std::string_view label, unsigned n, const BigNat& q) const {
    const bool odd = q % 2 == 1;
    if (n == 2 && (label == "PSL" || label == "PSU" || label == "PSp")) return odd ? (q + 5) / 2 : q + 1;
    if (n == 2 && (label == "SL" || label == "SU" || label == "Sp")) return odd ? q + 4 : q + 1;
    if (label == "2B2") {
        auto spec = make_spec(Family::B2_2, 0, q);
        return spec.Q + 3;
    }
    return std::nullopt;
}

std::optional<BigNat> ClassNumberProvider::from_sum_and_difference(std::string_view label, unsigned n,
                                                                   const BigNat& q) const {
    std::string sum_label;
    std::string diff_label;
    bool plus = true;
    if (label == "SOplus" || label == "SOminus") {
        sum_label = "SumSO";
        diff_label = "DiffSO";
        plus = label == "SOplus";
    } else if (label == "OmegaPlus" || label == "OmegaMinus") {
        sum_label = "SumOmega";
        diff_label = "DiffOmega";
        plus = label == "OmegaPlus";
    } else {
        return std::nullopt;
    }
    auto s = store_->classnum(sum_label, n, q);
    auto d = store_->classnum(diff_label, n, q);
    if (!s || !d) return std::nullopt;
    if (*d > *s || (*s + *d) % 2 != 0) {
        throw DomainError("inconsistent " + sum_label + "/" + diff_label + " entries for n=" + std::to_string(n) +
                          ", q=" + q.str());
    }
    return plus ? (*s + *d) / 2 : (*s - *d) / 2;
}

ClassNumberLookup ClassNumberProvider::lookup(std::string_view label, unsigned n, const BigNat& q) const {
    if (auto v = native(label, n, q)) return {v, ClassNumberSource::NativeFormula};
    if (auto v = store_->classnum(label, n, q)) return {v, ClassNumberSource::Ingested};
    if (auto v = from_sum_and_difference(label, n, q)) return {v, ClassNumberSource::Ingested};
    return {};
}

BigNat ClassNumberProvider::require(std::string_view label, unsigned n, const BigNat& q) const {
    auto found = lookup(label, n, q);
    if (!found.value) throw DataMissing(key_text(label, n, q));
    return *found.value;
}

ClassnumRef simple_group_ref(const LieSpec& s) {
    const unsigned d = s.d;
    switch (s.family) {
        case Family::A:
            return {"PSL", d + 1, s.q()};
        case Family::A2:
            return {"PSU", d + 1, s.q()};
        case Family::B:
            if (s.p == 2) return {"Sp", 2 * d, s.q()};
            return {"Omega", 2 * d + 1, s.q()};
        case Family::C:
            return {"PSp", 2 * d, s.q()};
        case Family::D:
            return {"POmegaPlus", 2 * d, s.q()};
        case Family::D2:
            return {"POmegaMinus", 2 * d, s.q()};
        default:
            return {std::string(family_name(s.family)), s.d, s.Q};
    }
}

BigNat class_number_exact(std::string_view label, unsigned n, const BigNat& q, const DataStore& store) {
    return ClassNumberProvider(store).require(label, n, q);
}

BigNat class_number_exact(const LieSpec& spec, const DataStore& store) {
    const auto ref = simple_group_ref(spec);
    return class_number_exact(ref.label, ref.n, ref.q, store);
}

BigNat class_number_lower_bound(const LieSpec& s, unsigned level, const DataStore& store) {
    const ClassNumberProvider provider(store);
    const unsigned d = s.d;
    switch (s.family) {
        case Family::A:
        case Family::A2:
            if (level != 2) throw NotAvailable(std::string(messages::kLevelTwoOnly));
            return class_number_exact(s, store);
        case Family::B:
        case Family::C: {
            if (level != 1 && level != 2) throw NotAvailable(std::string(messages::kLevelOneOrTwo));
            const BigNat q = s.q();
            const BigNat g = gcd(2, q - 1);
            if (level == 1) return ceil_div(pow(q, d), g);
            if (s.family == Family::B) return class_number_exact(s, store);
            return ceil_div(provider.require("Sp", 2 * d, q), g);
        }
        case Family::D:
        case Family::D2: {
            if (level != 1 && level != 2) throw NotAvailable(std::string(messages::kLevelOneOrTwo));
            const BigNat q = s.q();
            const BigNat g = gcd(2, q - 1);
            if (level == 1) return ceil_div(pow(q, d), g * g);
            const bool plus = s.family == Family::D;
            const std::string omega = plus ? "OmegaPlus" : "OmegaMinus";
            const std::string so = plus ? "SOplus" : "SOminus";
            if (q % 2 == 0) return provider.require(omega, 2 * d, q);
            const bool q3 = q % 4 == 3;
            const bool d_odd = d % 2 == 1;
            const bool use_so = plus ? (q3 && d_odd) : (!q3 || !d_odd);
            if (use_so) return ceil_div(provider.require(so, 2 * d, q), 2);
            return ceil_div(provider.require(omega, 2 * d, q), 2);
        }
        case Family::E6:
            return ceil_div(provider.require("InndiagE6", 6, s.q()), outdiag_order(s));
        case Family::E6_2:
            return ceil_div(provider.require("Inndiag2E6", 6, s.Q), outdiag_order(s));
        case Family::E7:
            return ceil_div(provider.require("InndiagE7", 7, s.q()), outdiag_order(s));
        default:
            return class_number_exact(s, store);
    }
}

}  // namespace lieord
