#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lieord {

using BigNat = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using ApproxReal = double;

inline constexpr std::uint32_t kDefaultPrimeCap = 25013;

struct PrimePower {
    BigNat prime;
    unsigned exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};
using PrimePowerDecomposition = std::vector<PrimePower>;

BigNat parse_bignat(std::string_view text);
std::string to_string(const BigNat& n);

struct FactorOptions {
    // Pollard-rho iterations allowed per composite cofactor.
    std::uint64_t rho_effort = 2'000'000;
};

// Work counters for nr_divisors; lets callers check that no divisor list is built.
struct DivisorCountStats {
    std::uint64_t trial_divisions = 0;
    std::uint64_t product_terms = 0;
};

PrimePowerDecomposition factorize(const BigNat& n, const FactorOptions& opts = {});
bool is_probable_prime(const BigNat& n);

BigNat nr_divisors(const BigNat& n, DivisorCountStats* stats = nullptr);
BigNat nr_divisors(const PrimePowerDecomposition& decomposition);
std::vector<BigNat> divisors(const PrimePowerDecomposition& decomposition);

BigNat lcm_list(std::span<const BigNat> values);
BigNat lcm_list(std::initializer_list<BigNat> values);

std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

unsigned floor_log(const BigNat& base, const BigNat& n);
unsigned ceil_log(const BigNat& base, const BigNat& n);

// Natural logarithm of an arbitrarily large positive integer.
double log_big(const BigNat& n);
ApproxReal log_log(const BigNat& n);

std::optional<std::pair<BigNat, unsigned>> prime_power_split(const BigNat& n);

BigNat integer_root(const BigNat& n, unsigned k);
BigNat ceil_div(const BigNat& a, const BigNat& b);
BigNat gcd(const BigNat& a, const BigNat& b);
BigNat pow(const BigNat& base, unsigned exponent);

}  // namespace lieord
