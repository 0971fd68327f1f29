#include "lieord/errors.hpp"
#include "lieord/survey.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace lieord;

namespace {

using Q0 = std::map<std::string, BigNat, std::less<>>;

std::set<std::string> names(const std::vector<SurveyEntry>& entries) {
    std::set<std::string> out;
    for (const auto& e : entries) out.insert(e.spec.name());
    return out;
}

bool subset(const std::set<std::string>& a, const std::set<std::string>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_SUITE("survey") {

TEST_CASE("general2 is undefined exactly below ten") {
    for (unsigned d = 3; d <= 9; ++d) CHECK_FALSE(epsilon_omega_general2(d));
    for (unsigned d = 10; d <= 100; ++d) CHECK(epsilon_omega_general2(d));
    CHECK_THROWS_AS(epsilon_omega_general2(2), DomainError);
}

TEST_CASE("domains") {
    CHECK_THROWS_AS(epsilon_omega_general3(5, FieldSize::integer(2)), DomainError);
    CHECK_THROWS_AS(epsilon_omega_general3(5, FieldSize::sqrt_of(27)), DomainError);
    CHECK_FALSE(epsilon_omega_general3(5, FieldSize::sqrt_of(8)));
    CHECK(epsilon_omega_general3(7, FieldSize::sqrt_of(8)));
    CHECK_THROWS_AS(epsilon_q_classical1(10, 5), NotAvailable);
    CHECK_THROWS_AS(epsilon_q_classical2(3, 6), InvalidSpec);
    CHECK(FieldSize::sqrt_of(8).to_string() == "sqrt(8)");
}

TEST_CASE("thresholds") {
    const auto data = DataStore::seeded();
    const auto t = default_thresholds(data);
    CHECK(t.epsilon_omega_alt5 == doctest::Approx(std::log(std::log(4.0)) / std::log(std::log(60.0))));
    CHECK(t.epsilon_q_monster > 0);
    CHECK(t.epsilon_q_monster < 1);
    CHECK_THROWS_AS(epsilon_q_monster(DataStore{}), DataMissing);
}

TEST_CASE("exceptions are monotone in the threshold and in coverage") {
    const auto data = DataStore::seeded();
    const Q0 small{{"2B2", 40}, {"G2", 6}};
    const Q0 large{{"2B2", 600}, {"G2", 10}};
    const auto low = names(exceptions_q_exceptional(small, 0.10, data));
    const auto high = names(exceptions_q_exceptional(small, 0.30, data));
    const auto wide = names(exceptions_q_exceptional(large, 0.30, data));
    CHECK(subset(low, high));
    CHECK(subset(high, wide));
    CHECK(high.count("2B2(8)"));
}

TEST_CASE("classical q0 tables need every rank") {
    const auto data = DataStore::seeded();
    CHECK_THROWS_AS(exceptions_omega(Q0{{"3", 4}}, 0.2, data), DataMissing);
    CHECK_THROWS_AS(exceptions_q_exceptional(Q0{{"3", 4}}, 0.2, data), DomainError);
    CHECK(exceptions_omega(Q0{}, 0.2, data).empty());
}

}
