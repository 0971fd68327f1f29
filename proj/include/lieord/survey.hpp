#pragma once

#include "lieord/data_store.hpp"
#include "lieord/lie_catalog.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieord {

// Empty when the expression has a nonpositive logarithm argument.
using MaybeReal = std::optional<ApproxReal>;

// q = p^(twice_exponent / 2); covers prime powers and sqrt(2^(2k+1)).
struct FieldSize {
    BigNat p;
    unsigned twice_exponent = 0;

    static FieldSize integer(const BigNat& q);
    static FieldSize sqrt_of(const BigNat& Q);  // Q must be a prime power
    std::string to_string() const;
};

MaybeReal epsilon_omega_general2(unsigned d);
MaybeReal epsilon_omega_general3(unsigned d, const FieldSize& q);
MaybeReal epsilon_q_classical1(unsigned d, unsigned type);
MaybeReal epsilon_q_classical2(unsigned d, const BigNat& q);

struct ThresholdConfig {
    ApproxReal epsilon_omega_alt5 = 0;
    ApproxReal epsilon_q_monster = 0;
};

ApproxReal epsilon_omega_alt5();
// From the constants monster_omega, monster_omicron and monster_order.
ApproxReal epsilon_q_monster(const DataStore& store);
ThresholdConfig default_thresholds(const DataStore& store);

struct SurveyEntry {
    LieSpec spec;
    MaybeReal best_bound;  // empty: no bound could be evaluated
    std::string source;    // which bound produced best_bound
};

// q0 keys: a decimal rank for the classical families, or an exceptional family name.
// Classical keys bound q, exceptional keys bound Q.
std::vector<SurveyEntry> exceptions_omega(const std::map<std::string, BigNat, std::less<>>& q0,
                                          ApproxReal threshold, const DataStore& data);
std::vector<SurveyEntry> exceptions_q_classical(const std::map<std::string, BigNat, std::less<>>& q0,
                                                ApproxReal threshold, const DataStore& data);
std::vector<SurveyEntry> exceptions_q_exceptional(const std::map<std::string, BigNat, std::less<>>& q0,
                                                  ApproxReal threshold, const DataStore& data);

// Best lower bounds used by the searches.
SurveyEntry best_epsilon_omega(const LieSpec& spec, const DataStore& data);
SurveyEntry best_epsilon_q(const LieSpec& spec, const DataStore& data);

}  // namespace lieord
