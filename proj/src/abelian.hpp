#pragma once

#include "lieord/arith.hpp"

#include <vector>

namespace lieord::detail {

using BigInt = BigNat;

// Exponent of Z^k / <rows>, given a multiple D of that exponent with D*Z^k inside the row lattice.
BigNat quotient_exponent(std::vector<std::vector<BigInt>> rows, std::size_t k, const BigNat& D);

// A finite abelian group presented as {x in prod Z/m_i : sum x_i = 0 mod M} / <z>.
struct TorusQuotient {
    std::vector<BigNat> moduli;
    BigNat sum_modulus = 1;          // M; 1 means no constraint
    std::vector<BigInt> central;     // z; empty means no quotient
};

BigNat torus_exponent(const TorusQuotient& t);

}  // namespace lieord::detail
