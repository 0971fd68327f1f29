#include "lieord/oracle.hpp"
#include "lieord/sym_partitions.hpp"
#include "reference_oracles.hpp"

#include <doctest.h>

using namespace lieord;

TEST_SUITE("sym_partitions") {

TEST_CASE("small matrices") {
    using M = std::vector<std::vector<BigNat>>;
    CHECK(partition_number_matrix(1).dense() == M{{0}});
    CHECK(partition_number_matrix(2).dense() == M{{0}, {1}});
    CHECK(partition_number_matrix(3).dense() == M{{0, 0}, {1, 0}, {0, 1}});
}

TEST_CASE("prefix consistency") {
    auto prev = partition_number_matrix(1).dense();
    auto m = partition_number_matrix(1);
    for (std::uint32_t n = 1; n < 200; ++n) {
        m = next_partition_number_matrix(m);
        const auto cur = m.dense();
        REQUIRE(cur.size() == n + 1);
        for (std::uint32_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < cur[i].size(); ++j) {
                const BigNat expected = j < prev[i].size() ? prev[i][j] : BigNat(0);
                REQUIRE(cur[i][j] == expected);
            }
        }
        if (n % 37 == 0) REQUIRE(cur == partition_number_matrix(n + 1).dense());
        prev = cur;
    }
}

TEST_CASE("coprime prime power partitions") {
    for (unsigned n = 1; n <= 30; ++n) {
        REQUIRE(nr_coprime_prime_power_partitions(n) == refimpl::coprime_prime_power_partitions(n));
    }
}

TEST_CASE("element orders of Sym(n)") {
    CHECK(nr_element_orders_sym(4) == 4);
    const auto prefix = nr_element_orders_sym_prefix(60);
    for (unsigned n = 1; n <= 40; ++n) {
        REQUIRE(prefix[n - 1] == refimpl::sym_orders(n).size());
        REQUIRE(prefix[n - 1] == nr_element_orders_sym(n));
        if (n > 1) REQUIRE(prefix[n - 1] >= prefix[n - 2]);
    }
    for (unsigned n = 1; n <= 20; ++n) {
        REQUIRE(oracle::sym_spectrum_oracle(n).size() == refimpl::sym_orders(n).size());
    }
}

TEST_CASE("distinct parts equal odd parts") {
    const auto s = distinct_parts_partition_counts(200);
    std::vector<BigNat> odd(201, 0);
    odd[0] = 1;
    for (unsigned part = 1; part <= 200; part += 2) {
        for (unsigned k = part; k <= 200; ++k) odd[k] += odd[k - part];
    }
    for (unsigned n = 0; n <= 200; ++n) REQUIRE(s[n] == odd[n]);
    CHECK(distinct_parts_partition_count(10) == 10);
}

TEST_CASE("g2 sums over ordered splittings") {
    CHECK(g2(1) == 4);
    const auto s = distinct_parts_partition_counts(12);
    for (unsigned d = 1; d <= 12; ++d) {
        BigNat total = 0;
        for (unsigned a = 0; a <= d; ++a) {
            for (unsigned i = 0; i <= a; ++i) {
                for (unsigned j = 0; j <= d - a; ++j) total += s[i] * s[j];
            }
        }
        REQUIRE(g2(d) == total);
    }
}

TEST_CASE("constants") {
    const auto list = omicron_sym_constants(200);
    REQUIRE(list.size() >= 190);
    CHECK(omicron_sym_constants_argmax(list) == 66);
}

}
