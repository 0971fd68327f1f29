#include "lieord/arith.hpp"
#include "reference_oracles.hpp"

#include <doctest.h>

#include <random>

using namespace lieord;

TEST_SUITE("arith") {

TEST_CASE("nr_divisors matches the divisor list") {
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        REQUIRE(nr_divisors(BigNat(n)) == refimpl::divisor_list(n).size());
    }
}

TEST_CASE("nr_divisors counts without listing") {
    const BigNat n = pow(BigNat(2), 200) * pow(BigNat(3), 100);
    DivisorCountStats stats;
    CHECK(nr_divisors(n, &stats) == 201 * 101);
    CHECK(stats.product_terms == 2);
    CHECK(stats.trial_divisions < 1000);
}

TEST_CASE("lcm_list") {
    CHECK(lcm_list({}) == 1);
    CHECK(lcm_list({BigNat(4), BigNat(6)}) == 12);

    std::mt19937 rng(7);
    std::uniform_int_distribution<unsigned> len(1, 6), entry(1, 50);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<BigNat> xs(len(rng));
        BigNat product = 1;
        for (auto& x : xs) {
            x = entry(rng);
            product *= x;
        }
        const BigNat l = lcm_list(xs);
        for (const auto& x : xs) REQUIRE(l % x == 0);
        REQUIRE(product % l == 0);
    }
}

TEST_CASE("log_log against 50 digits") {
    for (std::uint64_t n = 3; n <= 10000; ++n) {
        const double ref = refimpl::loglog(BigNat(n)).convert_to<double>();
        REQUIRE(std::abs(log_log(BigNat(n)) - ref) <= 1e-12 * std::abs(ref) + 1e-15);
    }
    const BigNat big = pow(BigNat(7), 500) + 1;
    CHECK(log_log(big) == doctest::Approx(refimpl::loglog(big).convert_to<double>()).epsilon(1e-12));
}

TEST_CASE("integer logarithms") {
    for (unsigned b = 2; b <= 10; ++b) {
        for (std::uint64_t n = 1; n <= 1000000; n += (n < 5000 ? 1 : 97)) {
            const unsigned lo = floor_log(b, n), hi = ceil_log(b, n);
            REQUIRE(lo <= hi);
            REQUIRE(hi <= lo + 1);
            REQUIRE(pow(BigNat(b), lo) <= n);
            REQUIRE(pow(BigNat(b), hi) >= n);
        }
    }
    CHECK(floor_log(2, pow(BigNat(2), 300)) == 300);
    CHECK(ceil_log(2, pow(BigNat(2), 300) + 1) == 301);
}

TEST_CASE("factorize") {
    const BigNat n = pow(BigNat(2), 10) * pow(BigNat(3), 5) * BigNat(1000003) * BigNat(1000033);
    const auto f = factorize(n);
    REQUIRE(f.size() == 4);
    CHECK(f[0] == PrimePower{2, 10});
    CHECK(f[3] == PrimePower{1000033, 1});
    CHECK(divisors(factorize(BigNat(12))).size() == 6);
    CHECK(prime_power_split(BigNat(243))->second == 5);
    CHECK_FALSE(prime_power_split(BigNat(12)));
    CHECK(parse_bignat("808017424794512875886459904961710757005754368000000000").str() ==
          "808017424794512875886459904961710757005754368000000000");
}

TEST_CASE("primality agrees with the sieve") {
    const auto ps = primes_up_to(5000);
    std::size_t k = 0;
    for (std::uint32_t n = 0; n <= 5000; ++n) {
        const bool sieve = k < ps.size() && ps[k] == n;
        if (sieve) ++k;
        CHECK(is_probable_prime(BigNat(n)) == sieve);
    }
    CHECK(factorize(BigNat(71) * 71 * 67 * 53)[0] == PrimePower{53, 1});
}

TEST_CASE("primes_up_to") {
    const auto ps = primes_up_to(25013);
    CHECK(ps.back() == 25013);
    CHECK(ps.size() == 2763);
}

}
