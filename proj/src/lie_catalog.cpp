#include "lieord/lie_catalog.hpp"

#include "lieord/errors.hpp"

#include <array>

namespace lieord {

namespace {

struct FamilyInfo {
    Family family;
    std::string_view name;
    unsigned twist;
    unsigned rank;  // 0 = classical
};

constexpr std::array<FamilyInfo, 16> kFamilies{{
    {Family::A, "A", 1, 0},      {Family::A2, "2A", 2, 0},    {Family::B, "B", 1, 0},
    {Family::C, "C", 1, 0},      {Family::D, "D", 1, 0},      {Family::D2, "2D", 2, 0},
    {Family::B2_2, "2B2", 2, 2}, {Family::G2, "G2", 1, 2},    {Family::G2_2, "2G2", 2, 2},
    {Family::D4_3, "3D4", 3, 4}, {Family::F4, "F4", 1, 4},    {Family::F4_2, "2F4", 2, 4},
    {Family::E6, "E6", 1, 6},    {Family::E6_2, "2E6", 2, 6}, {Family::E7, "E7", 1, 7},
    {Family::E8, "E8", 1, 8},
}};

const FamilyInfo& info(Family f) { return kFamilies[static_cast<std::size_t>(f)]; }

BigNat prod_minus(const BigNat& q, std::initializer_list<unsigned> exps) {
    BigNat acc = 1;
    for (unsigned e : exps) acc *= pow(q, e) - 1;
    return acc;
}

}  // namespace

std::string_view family_name(Family f) { return info(f).name; }

std::optional<Family> parse_family(std::string_view name) {
    for (const auto& fi : kFamilies) {
        if (fi.name == name) return fi.family;
    }
    return std::nullopt;
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> all = [] {
        std::vector<Family> v;
        for (const auto& fi : kFamilies) v.push_back(fi.family);
        return v;
    }();
    return all;
}

bool is_classical(Family f) { return info(f).rank == 0; }

bool is_suzuki_ree(Family f) { return f == Family::B2_2 || f == Family::G2_2 || f == Family::F4_2; }

unsigned twist(Family f) { return info(f).twist; }

unsigned fixed_rank(Family f) { return info(f).rank; }

BigNat LieSpec::q() const {
    if (!q_integral()) throw DomainError(name() + ": q is not an integer");
    return pow(p, f2 / 2);
}

std::string LieSpec::name() const {
    std::string out(family_name(family));
    if (is_classical(family)) out += "_" + std::to_string(d);
    return out + "(" + Q.str() + ")";
}

LieSpec make_spec(Family family, unsigned d, const BigNat& Q) {
    using K = InvalidSpec::Kind;
    LieSpec s;
    s.family = family;
    s.Q = Q;
    s.t = twist(family);
    const std::string label(family_name(family));

    if (is_classical(family)) {
        const unsigned min_d = (family == Family::D || family == Family::D2) ? 2 : 1;
        if (d < min_d) {
            throw InvalidSpec(K::RankOutOfRange,
                              label + " requires d >= " + std::to_string(min_d) + ", got " + std::to_string(d));
        }
        s.d = d;
    } else {
        if (d != 0 && d != fixed_rank(family)) {
            throw InvalidSpec(K::RankOutOfRange, label + " has fixed rank " + std::to_string(fixed_rank(family)));
        }
        s.d = fixed_rank(family);
    }

    auto split = prime_power_split(Q);
    if (!split) throw InvalidSpec(K::NotPrimePower, "Q = " + Q.str() + " is not a prime power");
    s.p = split->first;
    s.e = split->second;

    switch (family) {
        case Family::A2:
        case Family::D2:
        case Family::E6_2:
            if (s.e % 2 != 0) throw InvalidSpec(K::WrongTwistForm, label + " requires Q = q^2, got " + Q.str());
            break;
        case Family::D4_3:
            if (s.e % 3 != 0) throw InvalidSpec(K::WrongTwistForm, label + " requires Q = q^3, got " + Q.str());
            break;
        case Family::B2_2:
        case Family::F4_2:
            if (s.p != 2 || s.e % 2 == 0 || s.e < 3) {
                throw InvalidSpec(K::WrongTwistForm, label + " requires Q = 2^(2k+1) with k >= 1, got " + Q.str());
            }
            break;
        case Family::G2_2:
            if (s.p != 3 || s.e % 2 == 0 || s.e < 3) {
                throw InvalidSpec(K::WrongTwistForm, label + " requires Q = 3^(2k+1) with k >= 1, got " + Q.str());
            }
            break;
        default:
            break;
    }
    // f = e/t, stored doubled so that the Suzuki-Ree half-integers stay exact.
    s.f2 = is_suzuki_ree(family) ? s.e : 2 * s.e / s.t;

    const auto warn = [&](const std::string& w) { s.warnings.push_back(w); };
    if (s.q_integral()) {
        const BigNat q = s.q();
        const bool rank_one_like = (family == Family::A || family == Family::A2 || family == Family::B ||
                                    family == Family::C) && d == 1;
        if (rank_one_like && (q == 2 || q == 3)) warn(s.name() + " is solvable, not simple");
        if (family == Family::A2 && d == 2 && q == 2) warn(s.name() + " is solvable, not simple");
        if ((family == Family::B || family == Family::C) && d == 2 && q == 2) warn(s.name() + " is not simple");
        if (family == Family::G2 && q == 2) warn(s.name() + " is not simple");
        if (family == Family::D && d == 2) warn(s.name() + " is a direct product, not simple");
    }
    return s;
}

LieSpec make_spec(std::string_view family, unsigned d, const BigNat& Q) {
    auto f = parse_family(family);
    if (!f) throw InvalidSpec(InvalidSpec::Kind::UnknownFamily, "unknown family " + std::string(family));
    return make_spec(*f, d, Q);
}

BigNat group_order(const LieSpec& s) {
    const unsigned d = s.d;
    const BigNat& Q = s.Q;
    switch (s.family) {
        case Family::A: {
            const BigNat q = s.q();
            BigNat acc = pow(q, d * (d + 1) / 2);
            for (unsigned i = 2; i <= d + 1; ++i) acc *= pow(q, i) - 1;
            return acc / gcd(d + 1, q - 1);
        }
        case Family::A2: {
            const BigNat q = s.q();
            BigNat acc = pow(q, d * (d + 1) / 2);
            for (unsigned i = 2; i <= d + 1; ++i) acc *= (i % 2 == 0) ? pow(q, i) - 1 : pow(q, i) + 1;
            return acc / gcd(d + 1, q + 1);
        }
        case Family::B:
        case Family::C: {
            const BigNat q = s.q();
            BigNat acc = pow(q, d * d);
            for (unsigned i = 1; i <= d; ++i) acc *= pow(q, 2 * i) - 1;
            return acc / gcd(2, q - 1);
        }
        case Family::D:
        case Family::D2: {
            const BigNat q = s.q();
            const BigNat qd = s.family == Family::D ? pow(q, d) - 1 : pow(q, d) + 1;
            BigNat acc = pow(q, d * (d - 1)) * qd;
            for (unsigned i = 1; i < d; ++i) acc *= pow(q, 2 * i) - 1;
            return acc / gcd(4, qd);
        }
        case Family::B2_2:
            return Q * Q * (Q * Q + 1) * (Q - 1);
        case Family::G2: {
            const BigNat q = s.q();
            return pow(q, 6) * prod_minus(q, {6, 2});
        }
        case Family::G2_2:
            return pow(Q, 3) * (pow(Q, 3) + 1) * (Q - 1);
        case Family::D4_3: {
            const BigNat q = s.q();
            return pow(q, 12) * (pow(q, 8) + pow(q, 4) + 1) * prod_minus(q, {6, 2});
        }
        case Family::F4: {
            const BigNat q = s.q();
            return pow(q, 24) * prod_minus(q, {12, 8, 6, 2});
        }
        case Family::F4_2:
            return pow(Q, 12) * (pow(Q, 6) + 1) * (pow(Q, 4) - 1) * (pow(Q, 3) + 1) * (Q - 1);
        case Family::E6: {
            const BigNat q = s.q();
            return pow(q, 36) * prod_minus(q, {12, 9, 8, 6, 5, 2}) / gcd(3, q - 1);
        }
        case Family::E6_2: {
            const BigNat q = s.q();
            return pow(q, 36) * prod_minus(q, {12, 8, 6, 2}) * (pow(q, 9) + 1) * (pow(q, 5) + 1) / gcd(3, q + 1);
        }
        case Family::E7: {
            const BigNat q = s.q();
            return pow(q, 63) * prod_minus(q, {18, 14, 12, 10, 8, 6, 2}) / gcd(2, q - 1);
        }
        case Family::E8: {
            const BigNat q = s.q();
            return pow(q, 120) * prod_minus(q, {30, 24, 20, 18, 14, 12, 8, 2});
        }
    }
    throw DomainError("unhandled family");
}

ApproxReal log_log_group_order(const LieSpec& spec) { return log_log(group_order(spec)); }

BigNat outdiag_order(const LieSpec& s) {
    const unsigned d = s.d;
    switch (s.family) {
        case Family::A:
            return gcd(d + 1, s.q() - 1);
        case Family::A2:
            return gcd(d + 1, s.q() + 1);
        case Family::B:
        case Family::C:
        case Family::E7:
            return gcd(2, s.q() - 1);
        case Family::D:
            return gcd(4, pow(s.q(), d) - 1);
        case Family::D2:
            return gcd(4, pow(s.q(), d) + 1);
        case Family::E6:
            return gcd(3, s.q() - 1);
        case Family::E6_2:
            return gcd(3, s.q() + 1);
        default:
            return 1;
    }
}

BigNat out_order(const LieSpec& s) {
    const unsigned d = s.d;
    const BigNat diag = outdiag_order(s);
    switch (s.family) {
        case Family::A: {
            const unsigned f = s.f2 / 2;
            return d == 1 ? diag * f : diag * f * 2;
        }
        case Family::A2: {
            const unsigned f = s.f2 / 2;  // q = p^f, Q = p^(2f)
            if (d == 1) return gcd(2, s.q() - 1) * f;
            return diag * 2 * f;
        }
        case Family::B:
        case Family::C: {
            const unsigned f = s.f2 / 2;
            return diag * f * ((d == 2 && s.p == 2) ? 2 : 1);
        }
        case Family::D: {
            const unsigned f = s.f2 / 2;
            if (d == 2) {
                const BigNat factor = gcd(2, s.q() - 1) * f;
                return 2 * factor * factor;
            }
            return diag * f * (d == 4 ? 6 : 2);
        }
        case Family::D2:
            return diag * s.f2;
        case Family::B2_2:
        case Family::G2_2:
        case Family::F4_2:
            return s.e;
        case Family::G2:
            return BigNat(s.f2 / 2) * (s.p == 3 ? 2 : 1);
        case Family::D4_3:
            return BigNat(3) * (s.f2 / 2);
        case Family::F4:
            return BigNat(s.f2 / 2) * (s.p == 2 ? 2 : 1);
        case Family::E6:
        case Family::E6_2:
            return diag * 2 * (s.f2 / 2);
        case Family::E7:
            return diag * (s.f2 / 2);
        case Family::E8:
            return s.f2 / 2;
    }
    throw DomainError("unhandled family");
}

unsigned coxeter_number(Family family, unsigned d) {
    switch (family) {
        case Family::A:
            return d + 1;
        case Family::B:
        case Family::C:
            return 2 * d;
        case Family::D:
            return 2 * d - 2;
        case Family::G2:
            return 6;
        case Family::F4:
        case Family::E6:
            return 12;
        case Family::E7:
            return 18;
        case Family::E8:
            return 30;
        default:
            throw NotAvailable("no Coxeter number function for family " + std::string(family_name(family)));
    }
}

}  // namespace lieord
