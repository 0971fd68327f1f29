#include "lieord/bounds.hpp"

#include "lieord/class_numbers.hpp"
#include "lieord/errors.hpp"
#include "lieord/messages.hpp"
#include "lieord/torus_spectra.hpp"

#include <cmath>

namespace lieord {

namespace {

void check_omega_level(const LieSpec& s, unsigned level) {
    switch (s.family) {
        case Family::A:
        case Family::A2:
            if (level != 2) throw NotAvailable(std::string(messages::kLevelTwoOnly));
            return;
        case Family::B:
        case Family::C:
        case Family::D:
        case Family::D2:
            if (level != 1 && level != 2) throw NotAvailable(std::string(messages::kLevelOneOrTwo));
            return;
        default:
            return;
    }
}

void check_omicron_level(const LieSpec& s, unsigned level) {
    switch (s.family) {
        case Family::A:
        case Family::A2:
        case Family::D:
        case Family::D2:
            if (level < 1 || level > 3) throw NotAvailable(std::string(messages::kLevelOneToThree));
            if (level == 3) throw OutOfScope("quality level 3 needs the sharply-divisible method, which is not reproduced");
            return;
        case Family::B:
        case Family::C:
            if (level != 1 && level != 2) throw NotAvailable(std::string(messages::kLevelOneOrTwo));
            return;
        default:
            return;
    }
}

void check_level_pair(const LieSpec& s, unsigned l1, unsigned l2) {
    switch (s.family) {
        case Family::A:
        case Family::A2:
            if (l1 != 2 || l2 < 1 || l2 > 3) throw NotAvailable(std::string(messages::kPairsSecondRow));
            break;
        case Family::B:
        case Family::C:
            if (l1 < 1 || l1 > 2 || l2 < 1 || l2 > 2) throw NotAvailable(std::string(messages::kPairsTwoByTwo));
            break;
        case Family::D:
        case Family::D2:
            if (l1 < 1 || l1 > 2 || l2 < 1 || l2 > 3) throw NotAvailable(std::string(messages::kPairsTwoByThree));
            break;
        default:
            return;
    }
    if (l2 == 3) throw OutOfScope("quality level 3 needs the sharply-divisible method, which is not reproduced");
}

ApproxReal checked_log_log(const BigNat& omega) {
    if (omega < 3) throw DomainError("omega bound " + omega.str() + " < 3 makes log log nonpositive");
    return log_log(omega);
}

}  // namespace

ApproxReal log_log_ratio_plus_three(const BigNat& num, const BigNat& den) {
    if (den == 0) throw DomainError("zero denominator");
    const BigNat top = num + 3 * den;
    return std::log(log_big(top) - log_big(den));
}

BigNat nr_aut_orbits_lower(const LieSpec& spec, unsigned level, const DataStore& store) {
    check_omega_level(spec, level);
    return ceil_div(class_number_lower_bound(spec, level, store), out_order(spec));
}

EpsilonResult epsilon_omega_lower(const LieSpec& spec, unsigned level, const DataStore& store) {
    EpsilonResult r;
    r.omega_bound = nr_aut_orbits_lower(spec, level, store);
    r.loglog_order = log_log_group_order(spec);
    r.value = checked_log_log(r.omega_bound) / r.loglog_order;
    return r;
}

BigNat nr_p_power_orders(const LieSpec& s) {
    unsigned m = 0;
    switch (s.family) {
        case Family::A:
        case Family::A2:
            m = s.d + 1;
            break;
        case Family::B:
        case Family::C:
            m = 2 * s.d;
            break;
        case Family::D:
        case Family::D2:
            m = 2 * s.d - 2;
            break;
        case Family::E8:
            m = 30;
            break;
        default:
            throw DomainError("p-power order count is only used for classical families and E8");
    }
    return 1 + ceil_log(s.p, m);
}

BigNat nr_semisimple_orders_upper(const LieSpec& spec, unsigned level, const DataStore& store) {
    if (!is_classical(spec.family)) return exceptional_semisimple(spec, store).size();
    check_omicron_level(spec, level);
    if (level == 1) return nr_semisimple_orders_bound(spec);
    return nr_semisimple_orders(spec);
}

BigNat nr_element_orders_upper(const LieSpec& spec, unsigned level, const DataStore& store) {
    if (spec.family == Family::E8) return exceptional_semisimple(spec, store).size() * nr_p_power_orders(spec);
    if (!is_classical(spec.family)) return exceptional_spectrum(spec, store).size();
    return nr_semisimple_orders_upper(spec, level, store) * nr_p_power_orders(spec);
}

EpsilonResult epsilon_q_lower(const LieSpec& spec, unsigned omega_level, unsigned omicron_level,
                              const DataStore& store) {
    check_level_pair(spec, omega_level, omicron_level);
    EpsilonResult r;
    r.omega_bound = nr_aut_orbits_lower(spec, omega_level, store);
    r.omicron_bound = nr_element_orders_upper(spec, omicron_level, store);
    r.loglog_order = log_log_group_order(spec);
    r.value = log_log_ratio_plus_three(r.omega_bound, *r.omicron_bound) / r.loglog_order;
    return r;
}

std::string fixed_small_q_constant_name(Family family) {
    switch (family) {
        case Family::A:
            return "omicron_ss_A_90_2";
        case Family::A2:
            return "omicron_ss_2A_90_4";
        case Family::B:
            return "omicron_ss_B_90_2";
        case Family::C:
            return "omicron_ss_C_90_2";
        case Family::D:
            return "omicron_ss_D_90_2";
        case Family::D2:
            return "omicron_ss_2D_90_4";
        default:
            throw DomainError("fixed small-q bounds exist only for classical families");
    }
}

EpsilonResult epsilon_q_fixed_small_q(Family family, unsigned d, const DataStore& store) {
    const std::string name = fixed_small_q_constant_name(family);
    const bool twisted = family == Family::A2 || family == Family::D2;
    const LieSpec spec = make_spec(family, d, twisted ? 4 : 2);
    const auto oss90 = store.constant(name);
    if (!oss90) throw DataMissing("constant " + name);

    EpsilonResult r;
    switch (family) {
        case Family::A:
            r.omega_bound = pow(BigNat(2), d - 1);
            break;
        case Family::A2: {
            const BigNat g = gcd(d + 1, 3);
            r.omega_bound = pow(BigNat(2), d);
            r.omega_denominator = 2 * g * g;
            break;
        }
        default:
            r.omega_bound = nr_aut_orbits_lower(spec, 2, store);
            break;
    }
    r.omicron_bound = *oss90 * nr_p_power_orders(spec);
    r.loglog_order = log_log_group_order(spec);
    r.value = log_log_ratio_plus_three(r.omega_bound, *r.omicron_bound * r.omega_denominator) / r.loglog_order;
    return r;
}

}  // namespace lieord
