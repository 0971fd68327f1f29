#include "lieord/finite_field.hpp"

#include "lieord/errors.hpp"

namespace lieord::oracle {

namespace {

struct PrimePower {
    unsigned p = 0, e = 0;
};

PrimePower split_prime_power(unsigned q) {
    if (q < 2) throw DomainError("field order must be at least 2");
    unsigned p = 2;
    while (q % p != 0) ++p;
    unsigned e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    if (q != 1) throw DomainError("field order must be a prime power");
    return {p, e};
}

std::vector<unsigned> to_digits(unsigned a, unsigned p, unsigned e) {
    std::vector<unsigned> d(e);
    for (unsigned i = 0; i < e; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

unsigned from_digits(const std::vector<unsigned>& d, unsigned p) {
    unsigned a = 0;
    for (unsigned i = static_cast<unsigned>(d.size()); i-- > 0;) a = a * p + d[i];
    return a;
}

// Multiplies a by x modulo x^e + sum m_i x^i.
std::vector<unsigned> times_x(const std::vector<unsigned>& a, const std::vector<unsigned>& m, unsigned p) {
    const std::size_t e = a.size();
    std::vector<unsigned> r(e, 0);
    const unsigned top = a[e - 1];
    for (std::size_t i = e - 1; i > 0; --i) r[i] = a[i - 1];
    for (std::size_t i = 0; i < e; ++i) r[i] = (r[i] + (p - m[i]) * top) % p;
    return r;
}

}  // namespace

FiniteField::FiniteField(unsigned q) : q_(q) {
    if (q > 1024) throw DomainError("field order must be at most 1024");
    const auto pp = split_prime_power(q);
    p_ = pp.p;
    e_ = pp.e;

    add_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    for (unsigned a = 0; a < q_; ++a) {
        const auto da = to_digits(a, p_, e_);
        std::vector<unsigned> dn(e_);
        for (unsigned i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = static_cast<Elt>(from_digits(dn, p_));
        for (unsigned b = 0; b < q_; ++b) {
            const auto db = to_digits(b, p_, e_);
            std::vector<unsigned> ds(e_);
            for (unsigned i = 0; i < e_; ++i) ds[i] = (da[i] + db[i]) % p_;
            add_[a * q_ + b] = static_cast<Elt>(from_digits(ds, p_));
        }
    }

    // Search moduli in lexicographic order until x has multiplicative order q - 1.
    for (unsigned code = 0; code < q_; ++code) {
        const auto m = to_digits(code, p_, e_);
        std::vector<Elt> exps(q_ - 1);
        std::vector<unsigned> cur(e_, 0);
        cur[0] = 1;
        bool ok = true;
        for (unsigned k = 0; k < q_ - 1; ++k) {
            const unsigned v = from_digits(cur, p_);
            if (v == 0 || (k > 0 && v == 1)) {
                ok = false;
                break;
            }
            exps[k] = static_cast<Elt>(v);
            cur = times_x(cur, m, p_);
        }
        if (!ok || from_digits(cur, p_) != 1) continue;
        modulus_ = m;
        exp_ = std::move(exps);
        break;
    }
    if (exp_.empty()) throw DomainError("no primitive modulus found");
    log_.assign(q_, 0);
    for (unsigned k = 0; k < q_ - 1; ++k) log_[exp_[k]] = k;
}

std::vector<unsigned> FiniteField::coordinates(Elt a) const { return to_digits(a, p_, e_); }

FiniteField::Elt FiniteField::inv(Elt a) const {
    if (a == 0) throw DomainError("zero has no inverse");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elt FiniteField::pow(Elt a, std::uint64_t k) const {
    if (k == 0) return 1;
    if (a == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (k % (q_ - 1))) % (q_ - 1)];
}

FiniteField::Elt FiniteField::frobenius(Elt a, unsigned k) const {
    std::uint64_t pk = 1;
    for (unsigned i = 0; i < k % e_; ++i) pk *= p_;
    return pow(a, pk);
}

unsigned FiniteField::log(Elt a) const {
    if (a == 0) throw DomainError("zero has no logarithm");
    return log_[a];
}

bool FiniteField::is_square(Elt a) const {
    if (a == 0 || p_ == 2) return true;
    return log_[a] % 2 == 0;
}

}  // namespace lieord::oracle
