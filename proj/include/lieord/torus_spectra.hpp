#pragma once

#include "lieord/lie_catalog.hpp"
#include "lieord/order_set.hpp"

#include <functional>
#include <vector>

namespace lieord {

class DataStore;

struct SignedPartition {
    std::vector<unsigned> plus_parts;
    std::vector<unsigned> minus_parts;
};

// Calls visit once per partition of n (parts in nonincreasing order).
void for_each_partition(unsigned n, const std::function<void(const std::vector<unsigned>&)>& visit);
void for_each_signed_partition(unsigned n, const std::function<void(const SignedPartition&)>& visit);

enum class OrthogonalKind { Odd, Plus, Minus };

OrderSet semisimple_orders_gl(unsigned n, const BigNat& q);
OrderSet semisimple_orders_gu(unsigned n, const BigNat& q);
// n is the dimension of the natural module.
OrderSet semisimple_orders_go(OrthogonalKind kind, unsigned n, const BigNat& q);

// Exponents of the maximal tori of a classical simple group, one per torus class.
std::vector<BigNat> torus_exponents(const LieSpec& spec);

OrderSet semisimple_orders_simple(const LieSpec& spec);
BigNat nr_semisimple_orders(const LieSpec& spec);
BigNat nr_semisimple_orders_bound(const LieSpec& spec);

// Families with a built-in spectrum formula.
std::vector<Family> native_spectrum_families();
OrderSet exceptional_spectrum(const LieSpec& spec, const DataStore& store);
OrderSet exceptional_semisimple(const LieSpec& spec, const DataStore& store);

}  // namespace lieord
