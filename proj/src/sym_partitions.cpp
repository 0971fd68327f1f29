#include "lieord/sym_partitions.hpp"

#include "lieord/errors.hpp"

#include <algorithm>
#include <cmath>

namespace lieord {

namespace {
const BigNat kZero = 0;
}

PartitionNumberMatrix::PartitionNumberMatrix(std::uint32_t prime_cap)
    : prime_cap_(prime_cap), primes_(primes_up_to(prime_cap)) {}

PartitionNumberMatrix PartitionNumberMatrix::first(std::uint32_t prime_cap) {
    PartitionNumberMatrix m(prime_cap);
    m.rows_.push_back({BigNat(0)});
    m.tails_.push_back({BigNat(0)});
    return m;
}

std::size_t PartitionNumberMatrix::columns() const {
    const auto pi = std::upper_bound(primes_.begin(), primes_.end(), n()) - primes_.begin();
    return std::max<std::size_t>(1, static_cast<std::size_t>(pi));
}

const BigNat& PartitionNumberMatrix::at(std::uint32_t i, std::size_t j) const {
    if (i < 1 || i > n() || j < 1 || j > columns()) throw DomainError("matrix index out of range");
    const auto& row = rows_[i - 1];
    return j <= row.size() ? row[j - 1] : kZero;
}

BigNat PartitionNumberMatrix::row_sum(std::uint32_t i) const {
    if (i < 1 || i > n()) throw DomainError("matrix row out of range");
    return tails_[i - 1][0];
}

std::vector<std::vector<BigNat>> PartitionNumberMatrix::dense() const {
    const std::size_t cols = columns();
    std::vector<std::vector<BigNat>> out(n(), std::vector<BigNat>(cols, BigNat(0)));
    for (std::uint32_t i = 0; i < n(); ++i) {
        for (std::size_t j = 0; j < rows_[i].size() && j < cols; ++j) out[i][j] = rows_[i][j];
    }
    return out;
}

const BigNat& PartitionNumberMatrix::tail(std::uint32_t i, std::size_t j) const {
    const auto& t = tails_[i - 1];
    return j < t.size() ? t[j] : kZero;
}

void PartitionNumberMatrix::extend() {
    const std::uint32_t k = n() + 1;
    if (k > prime_cap_) {
        throw CapacityError("prime cap " + std::to_string(prime_cap_) + " too small for n = " +
                                std::to_string(k),
                            k);
    }
    std::vector<BigNat> row;
    for (std::size_t j = 0; j < primes_.size() && primes_[j] <= k; ++j) {
        const std::uint64_t p = primes_[j];
        BigNat value = 0;
        for (std::uint64_t pe = p; pe <= k; pe *= p) {
            if (pe == k)
                value += 1;
            else
                value += tail(static_cast<std::uint32_t>(k - pe), j + 1);
        }
        row.push_back(std::move(value));
    }
    if (row.empty()) row.push_back(BigNat(0));
    std::vector<BigNat> t(row.size());
    BigNat acc = 0;
    for (std::size_t j = row.size(); j-- > 0;) {
        acc += row[j];
        t[j] = acc;
    }
    rows_.push_back(std::move(row));
    tails_.push_back(std::move(t));
}

PartitionNumberMatrix next_partition_number_matrix(const PartitionNumberMatrix& m) {
    PartitionNumberMatrix next = m;
    next.extend();
    return next;
}

PartitionNumberMatrix partition_number_matrix(std::uint32_t n) {
    if (n < 1) throw DomainError("partition_number_matrix: n must be positive");
    PartitionNumberMatrix m = PartitionNumberMatrix::first(std::max(kDefaultPrimeCap, n));
    while (m.n() < n) m.extend();
    return m;
}

BigNat nr_coprime_prime_power_partitions(std::uint32_t n) {
    return partition_number_matrix(n).row_sum(n);
}

std::vector<BigNat> nr_element_orders_sym_prefix(std::uint32_t n) {
    if (n < 1) throw DomainError("nr_element_orders_sym: n must be positive");
    const PartitionNumberMatrix m = partition_number_matrix(n);
    std::vector<BigNat> out;
    out.reserve(n);
    BigNat acc = 1;
    for (std::uint32_t k = 1; k <= n; ++k) {
        acc += m.row_sum(k);
        out.push_back(acc);
    }
    return out;
}

BigNat nr_element_orders_sym(std::uint32_t n) { return nr_element_orders_sym_prefix(n).back(); }

ConstantsList omicron_sym_constants(std::uint32_t n) {
    ConstantsList out;
    const auto counts = nr_element_orders_sym_prefix(n);
    for (std::uint32_t k = 1; k <= n; ++k) {
        out.emplace_back(k, log_big(counts[k - 1]) / std::sqrt(static_cast<double>(k)));
    }
    return out;
}

std::uint32_t omicron_sym_constants_argmax(const ConstantsList& list) {
    if (list.empty()) throw DomainError("empty constants list");
    auto best = list.front();
    for (const auto& entry : list) {
        if (entry.second > best.second + 1e-12) {
            best = entry;
        } else if (entry.second > best.second - 1e-12 && entry.second != best.second) {
            throw DomainError("near-tie in c_k at k = " + std::to_string(entry.first) + " and k = " +
                              std::to_string(best.first));
        }
    }
    return best.first;
}

std::vector<BigNat> distinct_parts_partition_counts(std::uint32_t n) {
    std::vector<BigNat> s(static_cast<std::size_t>(n) + 1, BigNat(0));
    s[0] = 1;
    for (std::uint32_t part = 1; part <= n; ++part) {
        for (std::uint32_t total = n; total >= part; --total) s[total] += s[total - part];
    }
    return s;
}

BigNat distinct_parts_partition_count(std::uint32_t n) { return distinct_parts_partition_counts(n)[n]; }

BigNat g2(std::uint32_t d) {
    if (d < 1) throw DomainError("g2: d must be positive");
    const auto s = distinct_parts_partition_counts(d);
    std::vector<BigNat> prefix(d + 1);
    BigNat acc = 0;
    for (std::uint32_t i = 0; i <= d; ++i) {
        acc += s[i];
        prefix[i] = acc;
    }
    BigNat total = 0;
    for (std::uint32_t plus = 0; plus <= d; ++plus) total += prefix[plus] * prefix[d - plus];
    return total;
}

}  // namespace lieord
