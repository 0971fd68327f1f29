#pragma once

#include "lieord/arith.hpp"
#include "lieord/lie_catalog.hpp"
#include "lieord/order_set.hpp"
#include "lieord/perm_group.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lieord::oracle {

inline constexpr std::uint64_t kDefaultGroupCap = 10'000'000;
inline constexpr std::uint64_t kDefaultAutCap = 100'000;

// A finite group realized as a permutation group; immutable once built.
struct SmallGroup {
    std::string name;
    std::shared_ptr<const PermGroup> perm;

    std::uint64_t order() const { return perm->order(); }
    std::size_t degree() const { return perm->degree(); }
};

enum class ClassicalKind {
    GL, SL, PSL,
    GU, SU, PSU,
    Sp, PSp,
    GO, SO, Omega,
    GOplus, SOplus, OmegaPlus, POmegaPlus,
    GOminus, SOminus, OmegaMinus, POmegaMinus,
};

std::string_view classical_kind_name(ClassicalKind kind);
std::optional<ClassicalKind> parse_classical_kind(std::string_view name);
// Order polynomial of the matrix group; n is the dimension of the natural module.
BigNat classical_order(ClassicalKind kind, unsigned n, const BigNat& q);

// Forms (row vectors, coordinates 0..n-1, m = floor(n/2)):
//   symplectic  B(x,y) = sum_{i<m} x_i y_{n-1-i} - x_{n-1-i} y_i
//   hermitian   h(x,y) = sum_i x_i y_{n-1-i}^q over GF(q^2)
//   quadratic   Q(x) = sum_{i<m} x_i x_{n-1-i}            (plus type)
//               Q(x) = sum_{i<m} x_i x_{n-1-i} + x_m^2    (odd dimension)
//               Q(x) = sum_{i<m-1} x_i x_{n-1-i} + x_{m-1}^2 + t x_{m-1} x_m + c x_m^2
//                 with the first (t, c) making the last binary form anisotropic (minus type)
// Linear groups act on the nonzero vectors (isotropic or singular ones when a form
// has them); projective groups act on normalized points. The smallest faithful orbit is kept.
SmallGroup build_classical(ClassicalKind kind, unsigned n, const BigNat& q, std::uint64_t cap = kDefaultGroupCap);
// Sz(Q), Q = 2^(2m+1), as a subgroup of Sp4(Q) acting on its ovoid.
SmallGroup build_suzuki(const BigNat& Q, std::uint64_t cap = kDefaultGroupCap);
SmallGroup symmetric_group(unsigned n);
SmallGroup alternating_group(unsigned n);
SmallGroup cyclic_group(unsigned n);
SmallGroup from_permutations(std::string name, std::size_t degree, std::vector<Perm> generators,
                             std::uint64_t cap = kDefaultGroupCap);
// The simple group a catalog spec names, e.g. 2A_2(9) -> PSU(3,3).
SmallGroup build_simple(const LieSpec& spec, std::uint64_t cap = kDefaultGroupCap);
// "PSL(2,7)", "OmegaMinus(4,3)", "Sz(8)", "Sym(4)", "Alt(5)", "C(6)" or a catalog name "2A_2(9)".
SmallGroup parse_group(std::string_view text, std::uint64_t cap = kDefaultGroupCap);

struct ConjugacyClass {
    std::uint64_t representative = 0;  // element index
    std::uint64_t size = 0;
    std::uint64_t element_order = 0;
};

struct ClassPartition {
    std::vector<std::uint32_t> class_of;  // per element index
    std::vector<ConjugacyClass> classes;
};

ClassPartition conjugacy_classes(const SmallGroup& g, std::uint64_t cap = kDefaultGroupCap);
OrderSet element_orders(const SmallGroup& g, std::uint64_t cap = kDefaultGroupCap);
BigNat nr_element_orders(const SmallGroup& g, std::uint64_t cap = kDefaultGroupCap);
BigNat conjugacy_class_count(const SmallGroup& g, std::uint64_t cap = kDefaultGroupCap);

struct AutOrbits {
    BigNat omega;        // orbits of Aut(G) on G
    BigNat aut_order;
    BigNat inn_order;
    BigNat out_order;
};

// Enumerates Aut(G) as the graphs <(x_i, y_i)> in G x G of generator images.
AutOrbits aut_orbits(const SmallGroup& g, std::uint64_t cap = kDefaultAutCap);
BigNat nr_aut_orbits(const SmallGroup& g, std::uint64_t cap = kDefaultAutCap);

// Distinct lcm values over the partitions of n.
OrderSet sym_spectrum_oracle(unsigned n);

}  // namespace lieord::oracle
