#include "lieord/errors.hpp"
#include "lieord/lie_catalog.hpp"
#include "lieord/oracle.hpp"

#include <doctest.h>

using namespace lieord;

TEST_SUITE("lie_catalog") {

TEST_CASE("known orders") {
    CHECK(group_order(make_spec("A", 1, 4)) == 60);
    CHECK(group_order(make_spec("A", 1, 7)) == 168);
    CHECK(group_order(make_spec("A", 2, 4)) == 20160);
    CHECK(group_order(make_spec("2A", 2, 9)) == 6048);
    CHECK(group_order(make_spec("C", 2, 3)) == 25920);
    CHECK(group_order(make_spec("2B2", 0, 8)) == 29120);
    CHECK(group_order(make_spec("G2", 0, 3)) == 4245696);
    CHECK(group_order(make_spec("E8", 0, 2)) ==
          parse_bignat("337804753143634806261388190614085595079991692242467651576160959909068800000"));
}

TEST_CASE("names") {
    CHECK(make_spec("2A", 2, 9).name() == "2A_2(9)");
    CHECK(make_spec("2B2", 0, 8).name() == "2B2(8)");
}

TEST_CASE("invalid specs") {
    CHECK_THROWS_AS(make_spec("A", 1, 6), InvalidSpec);
    CHECK_THROWS_AS(make_spec("2A", 2, 8), InvalidSpec);
    CHECK_THROWS_AS(make_spec("2B2", 0, 4), InvalidSpec);
    CHECK_THROWS_AS(make_spec("X", 1, 4), InvalidSpec);
    CHECK_FALSE(make_spec("A", 1, 2).warnings.empty());
    CHECK(make_spec("A", 1, 5).warnings.empty());
}

TEST_CASE("loglog order increases along powers of p") {
    const std::vector<std::vector<unsigned>> chains{{2, 4, 8, 16, 32}, {3, 9, 27, 81}, {5, 25, 125}};
    for (const char* f : {"A", "B", "C", "D", "G2", "F4", "E6", "E7", "E8"}) {
        for (unsigned d = 1; d <= 6; ++d) {
            for (const auto& qs : chains) {
                double prev = -1;
                for (unsigned q : qs) {
                    LieSpec s;
                    try {
                        s = make_spec(f, is_classical(*parse_family(f)) ? d : 0, q);
                    } catch (const InvalidSpec&) {
                        continue;
                    }
                    const double v = log_log_group_order(s);
                    CHECK(v > prev);
                    prev = v;
                }
            }
        }
    }
}

TEST_CASE("order matches the oracle") {
    const std::vector<std::tuple<const char*, unsigned, unsigned>> grid{
        {"A", 1, 8},  {"A", 1, 25}, {"A", 2, 3}, {"2A", 2, 16}, {"A", 3, 2},
        {"B", 2, 3},  {"C", 2, 4},  {"D", 3, 2}, {"2D", 3, 4},  {"2D", 2, 9}};
    for (const auto& [f, d, q] : grid) {
        const auto spec = make_spec(f, d, q);
        CAPTURE(spec.name());
        CHECK(oracle::build_simple(spec).order() == group_order(spec));
    }
}

TEST_CASE("outer automorphism orders match the oracle") {
    const std::vector<std::tuple<const char*, unsigned, unsigned>> grid{
        {"A", 1, 5}, {"A", 1, 7}, {"A", 1, 8}, {"A", 1, 9}, {"A", 1, 16}, {"A", 1, 27},
        {"A", 2, 3}, {"A", 2, 4}, {"2A", 2, 9}, {"C", 2, 3}, {"2D", 2, 9}, {"2B2", 0, 8}};
    for (const auto& [f, d, q] : grid) {
        const auto spec = make_spec(f, d, q);
        CAPTURE(spec.name());
        const auto a = oracle::aut_orbits(oracle::build_simple(spec), 1'000'000);
        CHECK(a.out_order == out_order(spec));
    }
}

TEST_CASE("coxeter numbers") {
    CHECK(coxeter_number(Family::A, 4) == 5);
    CHECK(coxeter_number(Family::E8, 0) == 30);
    CHECK(coxeter_number(Family::B, 3) == 6);
}

}
