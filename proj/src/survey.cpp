#include "lieord/survey.hpp"

#include "lieord/bounds.hpp"
#include "lieord/errors.hpp"
#include "lieord/messages.hpp"
#include "lieord/sym_partitions.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <charconv>
#include <functional>

namespace lieord {

namespace {

using Dec = boost::multiprecision::cpp_dec_float_50;

Dec dec(const BigNat& n) { return Dec(n.str()); }
Dec dec(unsigned n) { return Dec(n); }
Dec ln(const Dec& x) { return boost::multiprecision::log(x); }

const Dec& ln2() {
    static const Dec v = ln(Dec(2));
    return v;
}
const Dec& inv_e_ln2() {
    static const Dec v = 1 / (boost::multiprecision::exp(Dec(1)) * ln2());
    return v;
}

// Exact sign tests are impossible here; the 1e-20 band around zero is treated as undecidable.
bool positive_guarded(const Dec& x) {
    static const Dec band("1e-20");
    if (boost::multiprecision::abs(x) < band) throw Error("logarithm argument is within 1e-20 of zero");
    return x > 0;
}

ApproxReal to_real(const Dec& x) { return x.convert_to<double>(); }

Dec log_field(const FieldSize& q) { return ln(dec(q.p)) * q.twice_exponent / 2; }

std::uint64_t partition_count(unsigned n) {
    std::vector<std::uint64_t> p(n + 1, 0);
    p[0] = 1;
    for (unsigned part = 1; part <= n; ++part) {
        for (unsigned k = part; k <= n; ++k) p[k] += p[k - part];
    }
    return p[n];
}

std::uint64_t torus_class_count(const LieSpec& s) {
    if (s.family == Family::A || s.family == Family::A2) return partition_count(s.d + 1);
    std::uint64_t total = 0;
    for (unsigned a = 0; a <= s.d; ++a) total += partition_count(a) * partition_count(s.d - a);
    return total;
}

constexpr std::uint64_t kTorusBudget = 5000;

void consider(SurveyEntry& e, MaybeReal v, const std::string& source) {
    if (v && (!e.best_bound || *v > *e.best_bound)) {
        e.best_bound = v;
        e.source = source;
    }
}

template <class F>
MaybeReal attempt(F&& f) {
    try {
        return f();
    } catch (const DataMissing&) {
    } catch (const DomainError&) {
    } catch (const NotAvailable&) {
    } catch (const OutOfScope&) {
    }
    return std::nullopt;
}

FieldSize field_of(const LieSpec& s) { return FieldSize{s.p, s.f2}; }

bool is_two(const FieldSize& q) { return q.p == 2 && q.twice_exponent == 2; }

std::vector<BigNat> prime_powers_below(const BigNat& bound) {
    std::vector<BigNat> out;
    for (BigNat q = 2; q < bound; ++q) {
        if (prime_power_split(q)) out.push_back(q);
    }
    return out;
}

bool entry_less(const SurveyEntry& a, const SurveyEntry& b) {
    return std::tie(a.spec.family, a.spec.d, a.spec.Q) < std::tie(b.spec.family, b.spec.d, b.spec.Q);
}

struct KeyRule {
    unsigned min_rank;
    unsigned max_rank;
    std::vector<Family> exceptional;
};

std::optional<unsigned> parse_rank(std::string_view key) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
    if (ec != std::errc() || ptr != key.data() + key.size()) return std::nullopt;
    return v;
}

std::vector<SurveyEntry> run_search(const std::map<std::string, BigNat, std::less<>>& q0, const KeyRule& rule,
                                    ApproxReal threshold,
                                    const std::function<SurveyEntry(const LieSpec&)>& evaluate) {
    std::vector<SurveyEntry> out;
    if (q0.empty()) return out;
    if (rule.max_rank > 0) {
        for (unsigned d = rule.min_rank; d <= rule.max_rank; ++d) {
            if (!q0.count(std::to_string(d))) throw DataMissing("q0 " + std::to_string(d));
        }
    }
    auto keep = [&](SurveyEntry e) {
        if (!e.best_bound || *e.best_bound <= threshold) out.push_back(std::move(e));
    };
    for (const auto& [key, bound] : q0) {
        if (auto d = parse_rank(key)) {
            if (rule.max_rank == 0 || *d < rule.min_rank || *d > rule.max_rank) {
                throw DomainError("q0 key '" + key + "' is not a rank this search covers");
            }
            for (const auto& q : prime_powers_below(bound)) {
                for (Family f : {Family::A, Family::A2, Family::B, Family::C, Family::D, Family::D2}) {
                    LieSpec spec;
                    try {
                        spec = make_spec(f, *d, pow(q, twist(f)));
                    } catch (const InvalidSpec&) {
                        continue;
                    }
                    keep(evaluate(spec));
                }
            }
            continue;
        }
        auto fam = parse_family(key);
        if (!fam || std::find(rule.exceptional.begin(), rule.exceptional.end(), *fam) == rule.exceptional.end()) {
            throw DomainError("q0 key '" + key + "' is not a family this search covers");
        }
        for (const auto& Q : prime_powers_below(bound)) {
            LieSpec spec;
            try {
                spec = make_spec(*fam, 0, Q);
            } catch (const InvalidSpec&) {
                continue;
            }
            keep(evaluate(spec));
        }
    }
    std::sort(out.begin(), out.end(), entry_less);
    return out;
}

}  // namespace

FieldSize FieldSize::integer(const BigNat& q) {
    auto split = prime_power_split(q);
    if (!split) throw InvalidSpec(InvalidSpec::Kind::NotPrimePower, q.str() + " is not a prime power");
    return FieldSize{split->first, 2 * split->second};
}

FieldSize FieldSize::sqrt_of(const BigNat& Q) {
    auto split = prime_power_split(Q);
    if (!split) throw InvalidSpec(InvalidSpec::Kind::NotPrimePower, Q.str() + " is not a prime power");
    return FieldSize{split->first, split->second};
}

std::string FieldSize::to_string() const {
    if (twice_exponent % 2 == 0) return pow(p, twice_exponent / 2).str();
    return "sqrt(" + pow(p, twice_exponent).str() + ")";
}

MaybeReal epsilon_omega_general2(unsigned d) {
    if (d < 3) throw DomainError("epsilon_omega_general2 needs d >= 3");
    if (pow(BigNat(2), d) <= 6 * BigNat(d + 1) * (d + 1)) return std::nullopt;
    const Dec D = dec(d);
    const Dec inner = D - 2 * ln(D + 1) / ln2() - ln(Dec(6)) / ln2();
    const Dec lnln2 = ln(ln2());
    return to_real((ln(inner) + lnln2) / (ln(4 * D * D) + lnln2));
}

MaybeReal epsilon_omega_general3(unsigned d, const FieldSize& q) {
    if (d < 3) throw DomainError("epsilon_omega_general3 needs d >= 3");
    if (q.p == 2 ? q.twice_exponent <= 2 : q.twice_exponent == 0) throw DomainError("epsilon_omega_general3 needs q > 2");
    if (q.twice_exponent % 2 == 1 && q.p != 2) throw DomainError("a non-integral q must have the form sqrt(2^(2k+1))");
    const Dec D = dec(d);
    const Dec lq = log_field(q);
    const Dec inner = D - 2 * ln(D + 1) / lq - ln(Dec(6)) / lq - inv_e_ln2();
    if (!positive_guarded(inner)) return std::nullopt;
    return to_real(ln(inner) / ln(4 * D * D));
}

MaybeReal epsilon_q_classical1(unsigned d, unsigned type) {
    if (type < 1 || type > 4) throw NotAvailable(std::string(messages::kTypeOneToFour));
    if (d < 1) throw DomainError("epsilon_q_classical1 needs d >= 1");
    const Dec D = dec(d);
    const Dec ln3 = ln(Dec(3));
    const Dec ln4 = ln(Dec(4));
    const Dec lnln2 = ln(ln2());
    const Dec twist_term = ln(2 + ln(2 * D) / ln2());
    const Dec denominator = ln(4 * D * D);
    const Dec sqrt_term = 2 * boost::math::constants::pi<Dec>() / boost::multiprecision::sqrt(Dec(3)) *
                          boost::multiprecision::sqrt(D);
    Dec inner;
    switch (type) {
        case 1:
            inner = (1 - ln3 / ln4) * D - (sqrt_term + 3 * ln(D + 1) + twist_term + ln4) / ln2();
            break;
        case 2:
            inner = (1 - ln4 / ln(Dec(9))) * D - (sqrt_term + 3 * ln(D + 1) + twist_term + ln4) / ln3 - inv_e_ln2();
            break;
        case 3:
            inner = (1 - Dec("0.311") * ln3 / ln2()) * D - (ln(dec(g2(d))) + 2 * ln3 + twist_term + ln2()) / ln2();
            break;
        default:
            inner = (1 - ln4 / ln(Dec(27))) * D - (ln(dec(g2(d))) + 2 * ln(D + 1) + twist_term + ln2()) / ln3 -
                    inv_e_ln2();
            break;
    }
    if (!positive_guarded(inner)) return std::nullopt;
    if (type == 1 || type == 3) return to_real((ln(inner) + lnln2) / (denominator + lnln2));
    return to_real(ln(inner) / denominator);
}

MaybeReal epsilon_q_classical2(unsigned d, const BigNat& q) {
    if (d < 1) throw DomainError("epsilon_q_classical2 needs d >= 1");
    const FieldSize field = FieldSize::integer(q);
    const Dec Q = dec(q);
    const Dec lq = log_field(field);
    const Dec log2q = lq / ln2();
    if (d == 1) {
        const Dec x = (Q + 1) / (8 * log2q *
                                 (boost::multiprecision::sqrt((Q + 1) / 2) + boost::multiprecision::sqrt((Q - 1) / 2)));
        const Dec lx = ln(x);
        if (!positive_guarded(lx)) return std::nullopt;
        return to_real(ln(lx) / ln(ln(Q * (Q * Q - 1))));
    }
    const Dec D = dec(d);
    const unsigned c = d == 4 ? 6 : 2;
    const BigNat m = std::min(BigNat(d + 1), q + 1);
    const unsigned unipotent = 1 + ceil_log(2, 2 * d);
    const Dec lx = D * lq - (ln(Dec(2 * c)) + ln(log2q) + 2 * ln(dec(m)) + ln(dec(g2(d))) + ln(Dec(unipotent)) +
                             D / 2 * ln(Q + 1));
    if (!positive_guarded(lx)) return std::nullopt;
    return to_real(ln(lx) / ln(4 * D * D * lq));
}

ApproxReal epsilon_omega_alt5() { return to_real(ln(ln(Dec(4))) / ln(ln(Dec(60)))); }

ApproxReal epsilon_q_monster(const DataStore& store) {
    auto omega = store.constant("monster_omega");
    auto omicron = store.constant("monster_omicron");
    auto order = store.constant("monster_order");
    if (!omega) throw DataMissing("constant monster_omega");
    if (!omicron) throw DataMissing("constant monster_omicron");
    if (!order) throw DataMissing("constant monster_order");
    return log_log_ratio_plus_three(*omega, *omicron) / log_log(*order);
}

ThresholdConfig default_thresholds(const DataStore& store) {
    return ThresholdConfig{epsilon_omega_alt5(), epsilon_q_monster(store)};
}

SurveyEntry best_epsilon_omega(const LieSpec& spec, const DataStore& data) {
    SurveyEntry e{spec, std::nullopt, ""};
    const ApproxReal llo = log_log_group_order(spec);
    consider(e, std::log(std::log(4.0)) / llo, "trivial");
    if (is_classical(spec.family)) {
        for (unsigned level : {1u, 2u}) {
            consider(e, attempt([&]() -> MaybeReal { return epsilon_omega_lower(spec, level, data).value; }),
                     "level " + std::to_string(level));
        }
    } else {
        consider(e, attempt([&]() -> MaybeReal { return epsilon_omega_lower(spec, 0, data).value; }), "catalog");
    }
    if (spec.d >= 3) {
        const FieldSize q = field_of(spec);
        if (is_two(q)) {
            consider(e, epsilon_omega_general2(spec.d), "general2");
        } else {
            consider(e, attempt([&] { return epsilon_omega_general3(spec.d, q); }), "general3");
        }
    }
    return e;
}

SurveyEntry best_epsilon_q(const LieSpec& spec, const DataStore& data) {
    SurveyEntry e{spec, std::nullopt, ""};
    const ApproxReal llo = log_log_group_order(spec);
    consider(e, std::log(std::log(3.0)) / llo, "trivial");
    if (!is_classical(spec.family)) {
        consider(e, attempt([&]() -> MaybeReal { return epsilon_q_lower(spec, 0, 0, data).value; }), "catalog");
        return e;
    }
    if (torus_class_count(spec) <= kTorusBudget) {
        const unsigned first = (spec.family == Family::A || spec.family == Family::A2) ? 2 : 1;
        for (unsigned l1 = first; l1 <= 2; ++l1) {
            for (unsigned l2 = 1; l2 <= 2; ++l2) {
                consider(e, attempt([&]() -> MaybeReal { return epsilon_q_lower(spec, l1, l2, data).value; }),
                         "levels " + std::to_string(l1) + "," + std::to_string(l2));
            }
        }
    }
    const BigNat q = spec.q();
    if (q == 2) {
        consider(e, epsilon_q_classical1(spec.d, 1), "classical1 type 1");
        if (spec.d >= 91) consider(e, epsilon_q_classical1(spec.d, 3), "classical1 type 3");
    } else {
        consider(e, epsilon_q_classical1(spec.d, 2), "classical1 type 2");
        if (spec.d >= 55) consider(e, epsilon_q_classical1(spec.d, 4), "classical1 type 4");
    }
    consider(e, attempt([&] { return epsilon_q_classical2(spec.d, q); }), "classical2");
    return e;
}

std::vector<SurveyEntry> exceptions_omega(const std::map<std::string, BigNat, std::less<>>& q0, ApproxReal threshold,
                                          const DataStore& data) {
    const KeyRule rule{3, 18,
                       {Family::D4_3, Family::F4, Family::F4_2, Family::E6, Family::E6_2, Family::E7, Family::E8}};
    return run_search(q0, rule, threshold, [&](const LieSpec& s) { return best_epsilon_omega(s, data); });
}

std::vector<SurveyEntry> exceptions_q_classical(const std::map<std::string, BigNat, std::less<>>& q0,
                                                ApproxReal threshold, const DataStore& data) {
    const KeyRule rule{1, 53, {}};
    return run_search(q0, rule, threshold, [&](const LieSpec& s) { return best_epsilon_q(s, data); });
}

std::vector<SurveyEntry> exceptions_q_exceptional(const std::map<std::string, BigNat, std::less<>>& q0,
                                                  ApproxReal threshold, const DataStore& data) {
    const KeyRule rule{0, 0,
                       {Family::B2_2, Family::G2, Family::G2_2, Family::D4_3, Family::F4, Family::F4_2, Family::E6,
                        Family::E6_2, Family::E7, Family::E8}};
    return run_search(q0, rule, threshold, [&](const LieSpec& s) { return best_epsilon_q(s, data); });
}

}  // namespace lieord
