#pragma once

#include "lieord/data_store.hpp"
#include "lieord/lie_catalog.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace lieord {

enum class ClassNumberSource { NativeFormula, Ingested, Absent };

struct ClassNumberLookup {
    std::optional<BigNat> value;
    ClassNumberSource source = ClassNumberSource::Absent;
};

// Exact class numbers: closed forms where one is known, otherwise the data store.
class ClassNumberProvider {
public:
    explicit ClassNumberProvider(const DataStore& store) : store_(&store) {}

    ClassNumberLookup lookup(std::string_view label, unsigned n, const BigNat& q) const;
    BigNat require(std::string_view label, unsigned n, const BigNat& q) const;

private:
    std::optional<BigNat> native(std::string_view label, unsigned n, const BigNat& q) const;
    std::optional<BigNat> from_sum_and_difference(std::string_view label, unsigned n, const BigNat& q) const;

    const DataStore* store_;
};

// Label and (n, q) under which the simple group itself is stored, e.g. ("PSL", d+1, q).
struct ClassnumRef {
    std::string label;
    unsigned n = 0;
    BigNat q;
};
ClassnumRef simple_group_ref(const LieSpec& spec);

BigNat class_number_exact(const LieSpec& spec, const DataStore& store);
BigNat class_number_exact(std::string_view label, unsigned n, const BigNat& q, const DataStore& store);

// Level is ignored for exceptional families, which have a single bound.
BigNat class_number_lower_bound(const LieSpec& spec, unsigned level, const DataStore& store);

}  // namespace lieord
