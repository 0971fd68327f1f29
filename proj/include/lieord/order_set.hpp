#pragma once

#include "lieord/arith.hpp"

#include <vector>

namespace lieord {

// Sorted, duplicate-free set of positive integers.
class OrderSet {
public:
    OrderSet() = default;
    static OrderSet from_values(std::vector<BigNat> values);
    static OrderSet divisors_of(const BigNat& n);

    const std::vector<BigNat>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    bool contains(const BigNat& v) const;
    bool is_divisor_closed() const;
    bool is_subset_of(const OrderSet& other) const;
    // Members not divisible by p.
    OrderSet coprime_to(const BigNat& p) const;

    void merge(const OrderSet& other);
    std::string to_string() const;  // "1,2,3"

    friend bool operator==(const OrderSet&, const OrderSet&) = default;

private:
    std::vector<BigNat> values_;
};

}  // namespace lieord
