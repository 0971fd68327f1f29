#include "lieord/data_store.hpp"
#include "lieord/errors.hpp"

#include <doctest.h>

using namespace lieord;

TEST_SUITE("data_store") {

TEST_CASE("records load") {
    DataStore s;
    s.load_text(
        "# comment\n"
        "classnum PSL 2 5 5\n"
        "spectrum 2B2 8 1,2,4,5,7,13\n"
        "q0 3 16\n"
        "constant monster_omega 194\n");
    CHECK(s.classnum("PSL", 2, 5) == BigNat(5));
    CHECK(s.spectrum("2B2", 8)->to_string() == "1,2,4,5,7,13");
    CHECK(s.q0("3") == BigNat(16));
    CHECK(s.constant("monster_omega") == BigNat(194));
}

TEST_CASE("serialization round-trips") {
    DataStore s;
    s.load_text("classnum PSU 3 3 14\nspectrum G2:ss 4 1,3,5,7,13\nq0 E8 5\nconstant x 12345678901234567890\n");
    DataStore t;
    t.load_text(s.serialize());
    CHECK(t.serialize() == s.serialize());
    CHECK(t.classnum("PSU", 3, 3) == BigNat(14));
}

TEST_CASE("loading is transactional") {
    DataStore s;
    s.load_text("classnum PSL 2 5 5\n");
    try {
        s.load_text("classnum PSL 3 3 12\nclassnum PSL 3 nope 1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_FALSE(s.classnum("PSL", 3, 3));
    CHECK_THROWS_AS(s.load_text("classnum Bogus 2 5 5\n"), ParseError);
    CHECK_THROWS_AS(s.load_text("q0 3 6\n"), ParseError);
    CHECK_THROWS_AS(s.load_text("classnum PSL 2 5 6\n"), DuplicateKey);
    CHECK_NOTHROW(s.load_text("classnum PSL 2 5 5\n"));
}

TEST_CASE("seed") {
    const auto s = DataStore::seeded();
    CHECK(s.constant("monster_order")->str() == "808017424794512875886459904961710757005754368000000000");
    CHECK(s.constant("monster_omega") == BigNat(194));
    CHECK(s.constant("monster_omicron") == BigNat(73));
    CHECK(s.classnums().size() >= 50);
}

}
