#include "abelian.hpp"

#include "lieord/errors.hpp"

namespace lieord::detail {

namespace {

BigInt mod_floor(const BigInt& a, const BigNat& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

BigNat quotient_exponent(std::vector<std::vector<BigInt>> a, std::size_t k, const BigNat& D) {
    for (auto& row : a) {
        for (auto& x : row) x = mod_floor(x, D);
    }
    const std::size_t rows = a.size();
    if (rows < k) throw DomainError("quotient_exponent: too few relations");
    BigNat exponent = 1;
    for (std::size_t c = 0; c < k; ++c) {
        const std::size_t r0 = c;
        while (true) {
            for (std::size_t r = r0 + 1; r < rows; ++r) {
                while (a[r][c] != 0) {
                    const BigInt factor = a[r0][c] / a[r][c];
                    for (std::size_t j = c; j < k; ++j) a[r0][j] = mod_floor(a[r0][j] - factor * a[r][j], D);
                    std::swap(a[r0], a[r]);
                }
            }
            bool changed = false;
            for (std::size_t j = c + 1; j < k; ++j) {
                while (a[r0][j] != 0) {
                    const BigInt factor = a[r0][c] / a[r0][j];
                    for (auto& row : a) {
                        row[c] = mod_floor(row[c] - factor * row[j], D);
                        std::swap(row[c], row[j]);
                    }
                    changed = true;
                }
            }
            if (!changed) break;
        }
        const BigNat dc = a[r0][c] == 0 ? D : gcd(BigNat(a[r0][c]), D);
        exponent = exponent / gcd(exponent, dc) * dc;
    }
    return exponent;
}

BigNat torus_exponent(const TorusQuotient& t) {
    const std::size_t k = t.moduli.size();
    if (k == 0) return 1;
    const BigNat& M = t.sum_modulus;
    BigNat D = 1;
    for (const auto& m : t.moduli) {
        if (m % M != 0) throw DomainError("torus modulus not divisible by the sum constraint");
        D *= m;
    }
    // Coordinates in the basis e_i - e_k (i < k), M e_k of the constrained lattice.
    auto coords = [&](const std::vector<BigInt>& y) {
        std::vector<BigInt> c(k);
        BigInt sum = 0;
        for (std::size_t i = 0; i < k; ++i) {
            sum += y[i];
            if (i + 1 < k) c[i] = y[i];
        }
        if (sum % M != 0) throw DomainError("central element violates the sum constraint");
        c[k - 1] = sum / M;
        return c;
    };
    std::vector<std::vector<BigInt>> rows;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<BigInt> y(k, 0);
        y[i] = t.moduli[i];
        rows.push_back(coords(y));
    }
    if (!t.central.empty()) rows.push_back(coords(t.central));
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<BigInt> y(k, 0);
        y[i] = D;
        rows.push_back(y);
    }
    return quotient_exponent(std::move(rows), k, D);
}

}  // namespace lieord::detail
