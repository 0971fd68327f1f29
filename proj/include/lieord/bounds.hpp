#pragma once

#include "lieord/data_store.hpp"
#include "lieord/lie_catalog.hpp"

#include <optional>

namespace lieord {

struct EpsilonResult {
    ApproxReal value = 0;
    BigNat omega_bound;
    // Absent for the omega statistic.
    std::optional<BigNat> omicron_bound;
    // Extra divisor of omega_bound, for the fixed-field formulas whose numerator is a fraction.
    BigNat omega_denominator = 1;
    ApproxReal loglog_order = 0;
};

BigNat nr_aut_orbits_lower(const LieSpec& spec, unsigned level, const DataStore& store);
EpsilonResult epsilon_omega_lower(const LieSpec& spec, unsigned level, const DataStore& store);

// Number of element orders that are powers of p: 1 + ceil(log_p M) with the family's M.
BigNat nr_p_power_orders(const LieSpec& spec);

// Level 1 sums over tori, level 2 is exact; exceptional families ignore the level.
BigNat nr_semisimple_orders_upper(const LieSpec& spec, unsigned level, const DataStore& store);
BigNat nr_element_orders_upper(const LieSpec& spec, unsigned level, const DataStore& store);

EpsilonResult epsilon_q_lower(const LieSpec& spec, unsigned omega_level, unsigned omicron_level,
                              const DataStore& store);

// Fixed field sizes: q = 2 for A, B, C, D and Q = 4 for 2A, 2D. Needs the ingested constant
// omicron_ss_<family>_90_<Q>.
EpsilonResult epsilon_q_fixed_small_q(Family family, unsigned d, const DataStore& store);
std::string fixed_small_q_constant_name(Family family);

// log log(num/den + 3), exact until the final logarithms.
ApproxReal log_log_ratio_plus_three(const BigNat& num, const BigNat& den);

}  // namespace lieord
