#include "lieord/order_set.hpp"

#include "lieord/errors.hpp"

#include <algorithm>

namespace lieord {

OrderSet OrderSet::from_values(std::vector<BigNat> values) {
    for (const auto& v : values) {
        if (v == 0) throw DomainError("element orders are positive");
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    OrderSet s;
    s.values_ = std::move(values);
    return s;
}

OrderSet OrderSet::divisors_of(const BigNat& n) {
    OrderSet s;
    s.values_ = divisors(factorize(n));
    return s;
}

bool OrderSet::contains(const BigNat& v) const { return std::binary_search(values_.begin(), values_.end(), v); }

bool OrderSet::is_divisor_closed() const {
    for (const auto& v : values_) {
        for (const auto& pp : factorize(v)) {
            if (!contains(v / pp.prime)) return false;
        }
    }
    return true;
}

bool OrderSet::is_subset_of(const OrderSet& other) const {
    return std::includes(other.values_.begin(), other.values_.end(), values_.begin(), values_.end());
}

OrderSet OrderSet::coprime_to(const BigNat& p) const {
    OrderSet s;
    for (const auto& v : values_) {
        if (v % p != 0) s.values_.push_back(v);
    }
    return s;
}

void OrderSet::merge(const OrderSet& other) {
    std::vector<BigNat> out;
    out.reserve(values_.size() + other.values_.size());
    std::set_union(values_.begin(), values_.end(), other.values_.begin(), other.values_.end(),
                   std::back_inserter(out));
    values_ = std::move(out);
}

std::string OrderSet::to_string() const {
    std::string out;
    for (const auto& v : values_) {
        if (!out.empty()) out += ',';
        out += v.str();
    }
    return out;
}

}  // namespace lieord
