#include "lieord/bounds.hpp"
#include "lieord/errors.hpp"
#include "lieord/survey.hpp"
#include "reference_oracles.hpp"

#include <doctest.h>

using namespace lieord;
using refimpl::Dec;

namespace {

const DataStore& data() {
    static const DataStore d = DataStore::seeded();
    return d;
}

std::vector<LieSpec> specs() {
    std::vector<LieSpec> out;
    for (const char* f : {"A", "2A", "B", "C", "D", "2D"}) {
        for (unsigned d = 1; d <= 4; ++d) {
            for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
                try {
                    out.push_back(make_spec(f, d, f[0] == '2' ? q * q : q));
                } catch (const InvalidSpec&) {
                }
            }
        }
    }
    out.push_back(make_spec("2B2", 0, 8));
    out.push_back(make_spec("2B2", 0, 32));
    return out;
}

template <class F>
auto try_get(F&& f) -> std::optional<decltype(f())> {
    try {
        return f();
    } catch (const DataMissing&) {
    } catch (const NotAvailable&) {
    } catch (const DomainError&) {
    }
    return std::nullopt;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("level monotonicity") {
    std::size_t omega_pairs = 0, omicron_pairs = 0;
    for (const auto& s : specs()) {
        CAPTURE(s.name());
        auto w1 = try_get([&] { return nr_aut_orbits_lower(s, 1, data()); });
        auto w2 = try_get([&] { return nr_aut_orbits_lower(s, 2, data()); });
        if (w1 && w2) {
            CHECK(*w1 <= *w2);
            ++omega_pairs;
        }
        auto o1 = try_get([&] { return nr_element_orders_upper(s, 1, data()); });
        auto o2 = try_get([&] { return nr_element_orders_upper(s, 2, data()); });
        if (o1 && o2) {
            CHECK(*o2 <= *o1);
            ++omicron_pairs;
        }
    }
    CHECK(omega_pairs >= 20);
    CHECK(omicron_pairs >= 100);
}

TEST_CASE("epsilon values recompute at 50 digits") {
    std::size_t checked = 0;
    for (const auto& s : specs()) {
        CAPTURE(s.name());
        const Dec llo = refimpl::loglog(group_order(s));
        if (auto r = try_get([&] { return epsilon_omega_lower(s, 2, data()); })) {
            const Dec ref = refimpl::loglog(r->omega_bound) / llo;
            CHECK(std::abs(r->value - ref.convert_to<double>()) < 1e-9);
            ++checked;
        }
        if (auto r = try_get([&] { return epsilon_q_lower(s, 2, 2, data()); })) {
            const Dec ratio = refimpl::dec(r->omega_bound) / refimpl::dec(*r->omicron_bound) + 3;
            const Dec ref = refimpl::ln(refimpl::ln(ratio)) / llo;
            CHECK(std::abs(r->value - ref.convert_to<double>()) < 1e-9);
            ++checked;
        }
    }
    CHECK(checked >= 40);
}

TEST_CASE("Suzuki group epsilon") {
    const auto r = epsilon_omega_lower(make_spec("2B2", 0, 8), 2, data());
    CHECK(r.omega_bound == 4);
    CHECK(r.value == doctest::Approx(0.14012).epsilon(1e-4));
}

TEST_CASE("availability") {
    const auto a = make_spec("A", 2, 3);
    const auto d = make_spec("D", 4, 3);
    CHECK_THROWS_AS(nr_aut_orbits_lower(a, 1, data()), NotAvailable);
    CHECK_THROWS_AS(nr_element_orders_upper(a, 3, data()), OutOfScope);
    CHECK_THROWS_AS(nr_element_orders_upper(a, 4, data()), NotAvailable);
    CHECK_THROWS_AS(epsilon_q_lower(d, 2, 3, data()), OutOfScope);
    CHECK_THROWS_AS(epsilon_q_lower(d, 3, 1, data()), NotAvailable);
}

TEST_CASE("ratio logarithm is exact until the end") {
    CHECK(log_log_ratio_plus_three(BigNat(194), BigNat(73)) ==
          doctest::Approx(std::log(std::log(194.0 / 73.0 + 3))).epsilon(1e-14));
    const BigNat huge = pow(BigNat(10), 400);
    CHECK(log_log_ratio_plus_three(huge, BigNat(1)) == doctest::Approx(std::log(400 * std::log(10.0))).epsilon(1e-12));
}

}
