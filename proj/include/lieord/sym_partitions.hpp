#pragma once

#include "lieord/arith.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace lieord {

// Row i holds r_{p_j}(i) for the j-th prime p_j; entries past pi(i) are zero.
class PartitionNumberMatrix {
public:
    static PartitionNumberMatrix first(std::uint32_t prime_cap = kDefaultPrimeCap);

    std::uint32_t n() const { return static_cast<std::uint32_t>(rows_.size()); }
    std::size_t columns() const;
    const BigNat& at(std::uint32_t i, std::size_t j) const;  // 1-based i and j
    BigNat row_sum(std::uint32_t i) const;
    std::uint32_t prime_cap() const { return prime_cap_; }
    std::vector<std::vector<BigNat>> dense() const;

    // Append row n+1 in place.
    void extend();

private:
    explicit PartitionNumberMatrix(std::uint32_t prime_cap);
    // Sum of r_l(i) over primes l with index >= j (0-based); zero for i = 0 is never read.
    const BigNat& tail(std::uint32_t i, std::size_t j) const;

    std::uint32_t prime_cap_;
    std::vector<std::uint32_t> primes_;
    std::vector<std::vector<BigNat>> rows_;
    std::vector<std::vector<BigNat>> tails_;
};

PartitionNumberMatrix next_partition_number_matrix(const PartitionNumberMatrix& m);
PartitionNumberMatrix partition_number_matrix(std::uint32_t n);

BigNat nr_coprime_prime_power_partitions(std::uint32_t n);
BigNat nr_element_orders_sym(std::uint32_t n);
// All values 1..n at once: entry k-1 is the order count for Sym(k).
std::vector<BigNat> nr_element_orders_sym_prefix(std::uint32_t n);

using ConstantsList = std::vector<std::pair<std::uint32_t, ApproxReal>>;
ConstantsList omicron_sym_constants(std::uint32_t n);
// Largest c_k; ties within 1e-12 go to the smaller k.
std::uint32_t omicron_sym_constants_argmax(const ConstantsList& list);

BigNat distinct_parts_partition_count(std::uint32_t n);
std::vector<BigNat> distinct_parts_partition_counts(std::uint32_t n);
BigNat g2(std::uint32_t d);

}  // namespace lieord
