#pragma once

// Brute-force reference implementations used only by the tests.

#include "lieord/arith.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace refimpl {

using lieord::BigNat;
using Dec = boost::multiprecision::cpp_dec_float_50;

inline void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& parts,
                       const std::function<void(const std::vector<unsigned>&)>& visit) {
    if (n == 0) {
        visit(parts);
        return;
    }
    for (unsigned k = std::min(n, max_part); k >= 1; --k) {
        parts.push_back(k);
        partitions(n - k, k, parts, visit);
        parts.pop_back();
    }
}

inline void partitions(unsigned n, const std::function<void(const std::vector<unsigned>&)>& visit) {
    std::vector<unsigned> parts;
    partitions(n, n, parts, visit);
}

// Distinct lcm values of the partitions of n; fits in 64 bits for n <= 100.
inline std::set<std::uint64_t> sym_orders(unsigned n) {
    std::set<std::uint64_t> out;
    partitions(n, [&](const std::vector<unsigned>& parts) {
        std::uint64_t l = 1;
        for (unsigned p : parts) l = std::lcm(l, std::uint64_t{p});
        out.insert(l);
    });
    return out;
}

inline bool is_prime_power(unsigned n) {
    if (n < 2) return false;
    unsigned p = 2;
    while (n % p) ++p;
    while (n % p == 0) n /= p;
    return n == 1;
}

// Partitions of n into pairwise coprime prime powers > 1.
inline std::uint64_t coprime_prime_power_partitions(unsigned n) {
    std::uint64_t count = 0;
    partitions(n, [&](const std::vector<unsigned>& parts) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (!is_prime_power(parts[i])) return;
            for (std::size_t j = 0; j < i; ++j) {
                if (std::gcd(parts[i], parts[j]) != 1) return;
            }
        }
        ++count;
    });
    return count;
}

inline std::vector<std::uint64_t> divisor_list(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d == 0) out.push_back(d);
    }
    return out;
}

inline Dec ln(const Dec& x) { return boost::multiprecision::log(x); }
inline Dec dec(const BigNat& n) { return Dec(n.str()); }

inline Dec loglog(const BigNat& n) { return ln(ln(dec(n))); }

}  // namespace refimpl
