#include "lieord/errors.hpp"
#include "lieord/data_store.hpp"
#include "lieord/oracle.hpp"
#include "lieord/torus_spectra.hpp"

#include <doctest.h>

using namespace lieord;

namespace {

std::vector<LieSpec> grid() {
    std::vector<LieSpec> out;
    for (const char* f : {"A", "2A", "B", "C", "D", "2D"}) {
        for (unsigned d = 1; d <= 5; ++d) {
            for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
                const bool twisted = f[0] == '2';
                try {
                    out.push_back(make_spec(f, d, twisted ? q * q : q));
                } catch (const InvalidSpec&) {
                }
            }
        }
    }
    return out;
}

}  // namespace

TEST_SUITE("torus_spectra") {

TEST_CASE("semisimple sets are divisor closed and coprime to p") {
    for (const auto& s : grid()) {
        CAPTURE(s.name());
        const auto set = semisimple_orders_simple(s);
        REQUIRE(set.is_divisor_closed());
        for (const auto& v : set.values()) REQUIRE(v % s.p != 0);
        REQUIRE(nr_semisimple_orders_bound(s) >= nr_semisimple_orders(s));
    }
}

TEST_CASE("simple groups sit inside their ambient groups") {
    for (const auto& s : grid()) {
        CAPTURE(s.name());
        const auto q = s.q();
        const auto set = semisimple_orders_simple(s);
        switch (s.family) {
            case Family::A: CHECK(set.is_subset_of(semisimple_orders_gl(s.d + 1, q))); break;
            case Family::A2: CHECK(set.is_subset_of(semisimple_orders_gu(s.d + 1, q))); break;
            case Family::B: CHECK(set.is_subset_of(semisimple_orders_go(OrthogonalKind::Odd, 2 * s.d + 1, q))); break;
            case Family::C: CHECK(set.is_subset_of(semisimple_orders_gl(2 * s.d, q))); break;
            case Family::D: CHECK(set.is_subset_of(semisimple_orders_go(OrthogonalKind::Plus, 2 * s.d, q))); break;
            case Family::D2: CHECK(set.is_subset_of(semisimple_orders_go(OrthogonalKind::Minus, 2 * s.d, q))); break;
            default: break;
        }
    }
}

TEST_CASE("partition enumeration") {
    unsigned count = 0;
    for_each_partition(10, [&](const std::vector<unsigned>&) { ++count; });
    CHECK(count == 42);
    count = 0;
    for_each_signed_partition(4, [&](const SignedPartition&) { ++count; });
    CHECK(count == 20);
}

TEST_CASE("small spectra against the oracle") {
    for (const auto& [f, d, q] : std::vector<std::tuple<const char*, unsigned, unsigned>>{
             {"A", 1, 11}, {"A", 1, 16}, {"A", 2, 3}, {"2A", 2, 16}, {"C", 2, 3}, {"2D", 2, 25}}) {
        const auto spec = make_spec(f, d, q);
        CAPTURE(spec.name());
        const auto orders = oracle::element_orders(oracle::build_simple(spec));
        CHECK(orders.coprime_to(spec.p) == semisimple_orders_simple(spec));
    }
}

TEST_CASE("Suzuki spectrum") {
    const auto data = DataStore::seeded();
    const auto s = make_spec("2B2", 0, 8);
    CHECK(exceptional_spectrum(s, data).to_string() == "1,2,4,5,7,13");
    CHECK(exceptional_semisimple(s, data).to_string() == "1,5,7,13");
}

}
