#include "lieord/class_numbers.hpp"
#include "lieord/errors.hpp"
#include "lieord/oracle.hpp"

#include <doctest.h>

using namespace lieord;

namespace {

std::string needed_label(const LieSpec& spec) {
    const DataStore empty;
    try {
        class_number_lower_bound(spec, 2, empty);
    } catch (const DataMissing& e) {
        return e.needed();
    }
    return "";
}

}  // namespace

TEST_SUITE("class_numbers") {

TEST_CASE("native formulas") {
    const DataStore empty;
    const ClassNumberProvider provider(empty);
    CHECK(provider.require("PSL", 2, 5) == 5);
    CHECK(provider.require("PSL", 2, 8) == 9);
    CHECK(provider.require("SL", 2, 7) == 11);
    CHECK(provider.require("2B2", 2, 8) == 11);
    CHECK(provider.lookup("PSL", 3, 4).source == ClassNumberSource::Absent);
    CHECK_THROWS_AS(provider.require("PSL", 3, 4), DataMissing);
}

TEST_CASE("sum and difference reconstruction") {
    DataStore store;
    store.load_text("classnum SumSO 8 3 300\nclassnum DiffSO 8 3 40\n");
    const ClassNumberProvider provider(store);
    CHECK(provider.require("SOplus", 8, 3) == 170);
    CHECK(provider.require("SOminus", 8, 3) == 130);
    DataStore odd;
    odd.load_text("classnum SumOmega 8 3 301\nclassnum DiffOmega 8 3 40\n");
    CHECK_THROWS_AS(ClassNumberProvider(odd).require("OmegaPlus", 8, 3), DomainError);
}

TEST_CASE("seed entries agree with the oracle") {
    const auto data = DataStore::seeded();
    REQUIRE(data.classnum("PSL", 2, 5) == BigNat(5));
    std::size_t checked = 0;
    for (const auto& [key, k] : data.classnums()) {
        const auto kind = oracle::parse_classical_kind(key.label);
        if (!kind || oracle::classical_order(*kind, key.n, key.q) > 200'000) continue;
        CAPTURE(key.label);
        CAPTURE(key.n);
        CAPTURE(key.q.str());
        const auto g = oracle::build_classical(*kind, key.n, key.q);
        CHECK(oracle::conjugacy_class_count(g) == k);
        ++checked;
    }
    CHECK(checked >= 40);
}

TEST_CASE("orthogonal branch selection") {
    for (unsigned q : {2u, 3u, 5u, 7u}) {
        for (unsigned d : {2u, 3u, 4u}) {
            const bool odd_q = q % 2 == 1, q3 = q % 4 == 3, odd_d = d % 2 == 1;
            const std::string tail = " " + std::to_string(2 * d) + " " + std::to_string(q);
            const std::string plus = !odd_q ? "OmegaPlus" : (q3 && odd_d) ? "SOplus" : "OmegaPlus";
            const std::string minus = !odd_q ? "OmegaMinus" : (q3 && odd_d) ? "OmegaMinus" : "SOminus";
            CHECK(needed_label(make_spec("D", d, q)) == "classnum " + plus + tail);
            CHECK(needed_label(make_spec("2D", d, q * q)) == "classnum " + minus + tail);
        }
    }
}

TEST_CASE("level one is below level two is below the exact count") {
    const auto data = DataStore::seeded();
    std::size_t compared = 0;
    for (const char* f : {"B", "C", "D", "2D"}) {
        for (unsigned d = 2; d <= 4; ++d) {
            for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
                LieSpec s;
                try {
                    s = make_spec(f, d, f[0] == '2' ? q * q : q);
                } catch (const InvalidSpec&) {
                    continue;
                }
                CAPTURE(s.name());
                try {
                    const BigNat l1 = class_number_lower_bound(s, 1, data);
                    const BigNat l2 = class_number_lower_bound(s, 2, data);
                    CHECK(l1 >= 1);
                    CHECK(l1 <= l2);
                    CHECK(l2 <= class_number_exact(s, data));
                    ++compared;
                } catch (const DataMissing&) {
                }
            }
        }
    }
    CHECK(compared >= 8);
}

TEST_CASE("unavailable levels") {
    const auto data = DataStore::seeded();
    CHECK_THROWS_AS(class_number_lower_bound(make_spec("A", 1, 5), 1, data), NotAvailable);
    CHECK_THROWS_AS(class_number_lower_bound(make_spec("C", 2, 3), 3, data), NotAvailable);
}

}
