#pragma once

#include "lieord/arith.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lieord {

enum class Family { A, A2, B, C, D, D2, B2_2, G2, G2_2, D4_3, F4, F4_2, E6, E6_2, E7, E8 };

std::string_view family_name(Family f);  // "A", "2A", ..., "2B2", ...
std::optional<Family> parse_family(std::string_view name);
const std::vector<Family>& all_families();
bool is_classical(Family f);
// Families whose argument is Q = p^(2k+1) with q = sqrt(Q) non-integral.
bool is_suzuki_ree(Family f);
unsigned twist(Family f);
// Rank of an exceptional family, 0 for classical ones.
unsigned fixed_rank(Family f);

struct LieSpec {
    Family family{};
    unsigned d = 0;
    BigNat Q;          // field parameter as passed in
    BigNat p;          // characteristic
    unsigned e = 0;    // Q = p^e
    unsigned t = 1;    // twist degree
    unsigned f2 = 0;   // twice the field exponent f, q = p^(f2/2)
    std::vector<std::string> warnings;

    bool q_integral() const { return f2 % 2 == 0; }
    // q = Q^(1/t); throws for the Suzuki-Ree families.
    BigNat q() const;
    std::string name() const;  // e.g. "2A_3(9)"
};

LieSpec make_spec(Family family, unsigned d, const BigNat& Q);
LieSpec make_spec(std::string_view family, unsigned d, const BigNat& Q);

BigNat group_order(const LieSpec& spec);
ApproxReal log_log_group_order(const LieSpec& spec);
BigNat out_order(const LieSpec& spec);
BigNat outdiag_order(const LieSpec& spec);
unsigned coxeter_number(Family family, unsigned d);

}  // namespace lieord
