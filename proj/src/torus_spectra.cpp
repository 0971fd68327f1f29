#include "lieord/torus_spectra.hpp"

#include "abelian.hpp"
#include "lieord/data_store.hpp"
#include "lieord/errors.hpp"

#include <map>
#include <set>

namespace lieord {

using detail::BigInt;
using detail::TorusQuotient;

namespace {

void partitions_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& parts,
                    const std::function<void(const std::vector<unsigned>&)>& visit) {
    if (remaining == 0) {
        visit(parts);
        return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
        parts.push_back(part);
        partitions_rec(remaining - part, part, parts, visit);
        parts.pop_back();
    }
}

// Factorizations of the cyclic factor orders, shared across tori.
class PrimeSupport {
public:
    void add(const BigNat& m) {
        if (seen_.insert(m).second) {
            for (const auto& pp : factorize(m)) primes_.insert(pp.prime);
        }
    }
    PrimePowerDecomposition decompose(BigNat n) const {
        PrimePowerDecomposition out;
        for (const auto& p : primes_) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            if (e > 0) out.push_back({p, e});
        }
        if (n != 1) throw DomainError("torus exponent has a prime outside the torus support");
        return out;
    }

private:
    std::set<BigNat> seen_;
    std::set<BigNat> primes_;
};

class DivisorUnion {
public:
    void add(const BigNat& exponent, const PrimeSupport& support) {
        if (!done_.insert(exponent).second) return;
        for (auto& v : divisors(support.decompose(exponent))) values_.insert(std::move(v));
    }
    OrderSet result() const { return OrderSet::from_values({values_.begin(), values_.end()}); }

private:
    std::set<BigNat> done_;
    std::set<BigNat> values_;
};

BigNat ambient_lcm(const std::vector<BigNat>& moduli) { return lcm_list(moduli); }

std::vector<BigNat> signed_moduli(const SignedPartition& sp, const BigNat& q) {
    std::vector<BigNat> m;
    for (unsigned a : sp.plus_parts) m.push_back(pow(q, a) - 1);
    for (unsigned b : sp.minus_parts) m.push_back(pow(q, b) + 1);
    return m;
}

template <class Visit>
void for_each_torus(const LieSpec& s, Visit&& visit) {
    const unsigned d = s.d;
    switch (s.family) {
        case Family::A:
        case Family::A2: {
            const bool unitary = s.family == Family::A2;
            const BigNat q = s.q();
            const unsigned n = d + 1;
            const BigNat M = unitary ? q + 1 : q - 1;
            const BigNat s0 = M / gcd(n, M);
            for_each_partition(n, [&](const std::vector<unsigned>& parts) {
                TorusQuotient t;
                t.sum_modulus = M;
                for (unsigned part : parts) {
                    const bool odd = part % 2 == 1;
                    const BigNat m = (unitary && odd) ? pow(q, part) + 1 : pow(q, part) - 1;
                    t.moduli.push_back(m);
                    BigInt z = BigInt(s0) * (m / M);
                    if (unitary && !odd) z = -z;
                    t.central.push_back(z);
                }
                visit(t);
            });
            return;
        }
        case Family::B:
        case Family::C: {
            const BigNat q = s.q();
            const bool odd_q = q % 2 == 1;
            for_each_signed_partition(d, [&](const SignedPartition& sp) {
                TorusQuotient t;
                t.moduli = signed_moduli(sp, q);
                if (odd_q && s.family == Family::C) {
                    for (const auto& m : t.moduli) t.central.push_back(BigInt(m / 2));
                } else if (odd_q) {
                    t.sum_modulus = 2;  // kernel of the spinor norm
                }
                visit(t);
            });
            return;
        }
        case Family::D:
        case Family::D2: {
            const BigNat q = s.q();
            const bool odd_q = q % 2 == 1;
            const unsigned want_parity = s.family == Family::D ? 0 : 1;
            for_each_signed_partition(d, [&](const SignedPartition& sp) {
                if (sp.minus_parts.size() % 2 != want_parity) return;
                TorusQuotient t;
                t.moduli = signed_moduli(sp, q);
                if (odd_q) {
                    t.sum_modulus = 2;
                    BigNat half_sum = 0;
                    for (const auto& m : t.moduli) half_sum += m / 2;
                    if (half_sum % 2 == 0) {
                        for (const auto& m : t.moduli) t.central.push_back(BigInt(m / 2));
                    }
                }
                visit(t);
            });
            return;
        }
        default:
            throw DomainError("torus transversal is only defined for classical families");
    }
}

}  // namespace

void for_each_partition(unsigned n, const std::function<void(const std::vector<unsigned>&)>& visit) {
    std::vector<unsigned> parts;
    partitions_rec(n, n, parts, visit);
}

void for_each_signed_partition(unsigned n, const std::function<void(const SignedPartition&)>& visit) {
    SignedPartition sp;
    for (unsigned a = n + 1; a-- > 0;) {
        for_each_partition(a, [&](const std::vector<unsigned>& plus) {
            sp.plus_parts = plus;
            for_each_partition(n - a, [&](const std::vector<unsigned>& minus) {
                sp.minus_parts = minus;
                visit(sp);
            });
        });
    }
}

OrderSet semisimple_orders_gl(unsigned n, const BigNat& q) {
    if (n < 1) throw DomainError("n must be positive");
    PrimeSupport support;
    DivisorUnion out;
    for_each_partition(n, [&](const std::vector<unsigned>& parts) {
        std::vector<BigNat> m;
        for (unsigned part : parts) m.push_back(pow(q, part) - 1);
        for (const auto& v : m) support.add(v);
        out.add(ambient_lcm(m), support);
    });
    return out.result();
}

OrderSet semisimple_orders_gu(unsigned n, const BigNat& q) {
    if (n < 1) throw DomainError("n must be positive");
    PrimeSupport support;
    DivisorUnion out;
    for_each_partition(n, [&](const std::vector<unsigned>& parts) {
        std::vector<BigNat> m;
        for (unsigned part : parts) m.push_back(part % 2 == 1 ? pow(q, part) + 1 : pow(q, part) - 1);
        for (const auto& v : m) support.add(v);
        out.add(ambient_lcm(m), support);
    });
    return out.result();
}

OrderSet semisimple_orders_go(OrthogonalKind kind, unsigned n, const BigNat& q) {
    if (kind == OrthogonalKind::Odd && n % 2 == 0) throw DomainError("odd-dimensional form needs odd n");
    if (kind != OrthogonalKind::Odd && n % 2 == 1) throw DomainError("even-dimensional form needs even n");
    if (n < 2) throw DomainError("orthogonal dimension too small");
    PrimeSupport support;
    DivisorUnion out;
    for_each_signed_partition(n / 2, [&](const SignedPartition& sp) {
        if (kind == OrthogonalKind::Plus && sp.minus_parts.size() % 2 != 0) return;
        if (kind == OrthogonalKind::Minus && sp.minus_parts.size() % 2 != 1) return;
        const auto m = signed_moduli(sp, q);
        for (const auto& v : m) support.add(v);
        out.add(ambient_lcm(m), support);
    });
    return out.result();
}

std::vector<BigNat> torus_exponents(const LieSpec& spec) {
    std::vector<BigNat> out;
    for_each_torus(spec, [&](const TorusQuotient& t) { out.push_back(detail::torus_exponent(t)); });
    return out;
}

OrderSet semisimple_orders_simple(const LieSpec& spec) {
    PrimeSupport support;
    DivisorUnion out;
    for_each_torus(spec, [&](const TorusQuotient& t) {
        for (const auto& m : t.moduli) support.add(m);
        out.add(detail::torus_exponent(t), support);
    });
    return out.result();
}

BigNat nr_semisimple_orders(const LieSpec& spec) {
    if (!is_classical(spec.family)) throw DomainError("nr_semisimple_orders needs a classical family");
    return semisimple_orders_simple(spec).size();
}

BigNat nr_semisimple_orders_bound(const LieSpec& spec) {
    BigNat total = 0;
    for_each_torus(spec, [&](const TorusQuotient& t) { total += nr_divisors(detail::torus_exponent(t)); });
    return total;
}

std::vector<Family> native_spectrum_families() { return {Family::B2_2}; }

namespace {

OrderSet suzuki_spectrum(const LieSpec& s) {
    const BigNat& Q = s.Q;
    const BigNat r = pow(BigNat(2), (s.e + 1) / 2);  // sqrt(2Q)
    OrderSet out = OrderSet::divisors_of(4);
    out.merge(OrderSet::divisors_of(Q - 1));
    out.merge(OrderSet::divisors_of(Q + r + 1));
    out.merge(OrderSet::divisors_of(Q - r + 1));
    return out;
}

}  // namespace

OrderSet exceptional_spectrum(const LieSpec& spec, const DataStore& store) {
    if (is_classical(spec.family)) throw DomainError("exceptional_spectrum needs an exceptional family");
    if (spec.family == Family::E8) throw NotAvailable("no element-order spectrum is known for E8");
    if (spec.family == Family::B2_2) return suzuki_spectrum(spec);
    if (auto stored = store.spectrum(family_name(spec.family), spec.Q)) return *stored;
    throw DataMissing("spectrum " + std::string(family_name(spec.family)) + " " + spec.Q.str());
}

OrderSet exceptional_semisimple(const LieSpec& spec, const DataStore& store) {
    if (is_classical(spec.family)) throw DomainError("exceptional_semisimple needs an exceptional family");
    if (spec.family == Family::B2_2) return suzuki_spectrum(spec).coprime_to(spec.p);
    const std::string token = std::string(family_name(spec.family)) + ":ss";
    if (auto stored = store.spectrum(token, spec.Q)) return *stored;
    if (spec.family != Family::E8) {
        if (auto full = store.spectrum(family_name(spec.family), spec.Q)) return full->coprime_to(spec.p);
    }
    throw DataMissing("spectrum " + token + " " + spec.Q.str());
}

}  // namespace lieord
