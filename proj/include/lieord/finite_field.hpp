#pragma once

#include <cstdint>
#include <vector>

namespace lieord::oracle {

// GF(q) for q = p^e <= 1024. An element is the integer whose base-p digits are its
// coordinates over GF(p) in the basis 1, x, ..., x^(e-1), modulo a fixed primitive
// polynomial (the lexicographically smallest one).
class FiniteField {
public:
    using Elt = std::uint16_t;

    explicit FiniteField(unsigned q);

    unsigned order() const { return q_; }
    unsigned characteristic() const { return p_; }
    unsigned degree() const { return e_; }
    // m_0..m_(e-1) for the modulus x^e + sum m_i x^i.
    const std::vector<unsigned>& modulus() const { return modulus_; }
    std::vector<unsigned> coordinates(Elt a) const;

    Elt zero() const { return 0; }
    Elt one() const { return 1; }
    Elt primitive() const { return exp_[1 % (q_ - 1)]; }

    Elt add(Elt a, Elt b) const { return add_[a * q_ + b]; }
    Elt neg(Elt a) const { return neg_[a]; }
    Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
    Elt mul(Elt a, Elt b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    Elt inv(Elt a) const;
    Elt pow(Elt a, std::uint64_t k) const;
    // a^(p^k)
    Elt frobenius(Elt a, unsigned k = 1) const;
    Elt power_of_primitive(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }
    unsigned log(Elt a) const;
    bool is_square(Elt a) const;

private:
    unsigned q_, p_, e_;
    std::vector<unsigned> modulus_;
    std::vector<Elt> add_, neg_, exp_;
    std::vector<unsigned> log_;
};

}  // namespace lieord::oracle
