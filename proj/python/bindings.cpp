#include "lieord/arith.hpp"
#include "lieord/bounds.hpp"
#include "lieord/class_numbers.hpp"
#include "lieord/cli.hpp"
#include "lieord/data_store.hpp"
#include "lieord/errors.hpp"
#include "lieord/lie_catalog.hpp"
#include "lieord/oracle.hpp"
#include "lieord/survey.hpp"
#include "lieord/sym_partitions.hpp"
#include "lieord/torus_spectra.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace lieord;

namespace {

py::int_ to_py(const BigNat& n) { return py::int_(py::str(n.str())); }

BigNat from_py(const py::int_& n) {
    const auto text = py::cast<std::string>(py::str(n));
    if (text.starts_with('-')) throw py::value_error("expected a nonnegative integer");
    return parse_bignat(text);
}

py::list to_py(const OrderSet& s) {
    py::list out;
    for (const auto& v : s.values()) out.append(to_py(v));
    return out;
}

DataStore& store() {
    static DataStore data = DataStore::seeded();
    return data;
}

LieSpec spec(const std::string& family, unsigned d, const py::int_& Q) { return make_spec(family, d, from_py(Q)); }

py::dict epsilon(const EpsilonResult& r) {
    py::dict out;
    out["value"] = r.value;
    out["omega_bound"] = to_py(r.omega_bound);
    out["omega_denominator"] = to_py(r.omega_denominator);
    out["omicron_bound"] = r.omicron_bound ? py::object(to_py(*r.omicron_bound)) : py::object(py::none());
    out["loglog_order"] = r.loglog_order;
    return out;
}

py::list survey(const std::vector<SurveyEntry>& entries) {
    py::list out;
    for (const auto& e : entries) {
        out.append(py::make_tuple(std::string(family_name(e.spec.family)), e.spec.d, to_py(e.spec.Q), e.best_bound,
                                  e.source));
    }
    return out;
}

std::map<std::string, BigNat, std::less<>> q0_table(const py::dict& table) {
    std::map<std::string, BigNat, std::less<>> out;
    for (auto [k, v] : table) out.emplace(py::cast<std::string>(py::str(k)), from_py(py::reinterpret_borrow<py::int_>(v)));
    return out;
}

}  // namespace

PYBIND11_MODULE(_lieord, m) {
    m.doc() = "Element orders, conjugacy classes and automorphism orbits of finite simple groups";

    // Translators run newest first, so the base class goes in first.
    const auto& base = py::register_exception<Error>(m, "Error");
    py::register_exception<NotAvailable>(m, "NotAvailable", base.ptr());
    py::register_exception<DataMissing>(m, "DataMissing", base.ptr());
    py::register_exception<OutOfScope>(m, "OutOfScope", base.ptr());
    py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
    py::register_exception<InvalidSpec>(m, "InvalidSpec", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("load_data", [](const std::string& path) { store().load_file(path); }, py::arg("path"));

    m.def("lcm_list", [](const std::vector<py::int_>& xs) {
        std::vector<BigNat> v;
        for (const auto& x : xs) v.push_back(from_py(x));
        return to_py(lcm_list(v));
    });
    m.def("nr_divisors", [](const py::int_& n) { return to_py(nr_divisors(from_py(n))); });
    m.def("factorize", [](const py::int_& n) {
        py::list out;
        for (const auto& pp : factorize(from_py(n))) out.append(py::make_tuple(to_py(pp.prime), pp.exponent));
        return out;
    });

    m.def("nr_element_orders_sym", [](std::uint32_t n) { return to_py(nr_element_orders_sym(n)); });
    m.def("nr_coprime_prime_power_partitions",
          [](std::uint32_t n) { return to_py(nr_coprime_prime_power_partitions(n)); });
    m.def("partition_number_matrix", [](std::uint32_t n) {
        py::list rows;
        for (const auto& row : partition_number_matrix(n).dense()) {
            py::list r;
            for (const auto& x : row) r.append(to_py(x));
            rows.append(r);
        }
        return rows;
    });
    m.def("omicron_sym_constants", &omicron_sym_constants);
    m.def("omicron_sym_constants_argmax", &omicron_sym_constants_argmax);

    m.def("group_order", [](const std::string& f, unsigned d, const py::int_& Q) { return to_py(group_order(spec(f, d, Q))); },
          py::arg("family"), py::arg("d"), py::arg("Q"));
    m.def("out_order", [](const std::string& f, unsigned d, const py::int_& Q) { return to_py(out_order(spec(f, d, Q))); },
          py::arg("family"), py::arg("d"), py::arg("Q"));
    m.def("spec_name", [](const std::string& f, unsigned d, const py::int_& Q) { return spec(f, d, Q).name(); },
          py::arg("family"), py::arg("d"), py::arg("Q"));
    m.def("class_number_lower_bound",
          [](const std::string& f, unsigned d, const py::int_& Q, unsigned level) {
              return to_py(class_number_lower_bound(spec(f, d, Q), level, store()));
          },
          py::arg("family"), py::arg("d"), py::arg("Q"), py::arg("level") = 2);
    m.def("nr_aut_orbits_lower",
          [](const std::string& f, unsigned d, const py::int_& Q, unsigned level) {
              return to_py(nr_aut_orbits_lower(spec(f, d, Q), level, store()));
          },
          py::arg("family"), py::arg("d"), py::arg("Q"), py::arg("level") = 2);
    m.def("nr_element_orders_upper",
          [](const std::string& f, unsigned d, const py::int_& Q, unsigned level) {
              return to_py(nr_element_orders_upper(spec(f, d, Q), level, store()));
          },
          py::arg("family"), py::arg("d"), py::arg("Q"), py::arg("level") = 2);
    m.def("epsilon_omega_lower",
          [](const std::string& f, unsigned d, const py::int_& Q, unsigned level) {
              return epsilon(epsilon_omega_lower(spec(f, d, Q), level, store()));
          },
          py::arg("family"), py::arg("d"), py::arg("Q"), py::arg("level") = 2);
    m.def("epsilon_q_lower",
          [](const std::string& f, unsigned d, const py::int_& Q, unsigned l1, unsigned l2) {
              return epsilon(epsilon_q_lower(spec(f, d, Q), l1, l2, store()));
          },
          py::arg("family"), py::arg("d"), py::arg("Q"), py::arg("omega_level") = 2, py::arg("omicron_level") = 2);
    m.def("semisimple_orders",
          [](const std::string& f, unsigned d, const py::int_& Q) { return to_py(semisimple_orders_simple(spec(f, d, Q))); },
          py::arg("family"), py::arg("d"), py::arg("Q"));
    m.def("exceptional_spectrum",
          [](const std::string& f, const py::int_& Q) { return to_py(exceptional_spectrum(spec(f, 0, Q), store())); },
          py::arg("family"), py::arg("Q"));

    m.def("epsilon_omega_general2", &epsilon_omega_general2, py::arg("d"));
    m.def("epsilon_omega_general3",
          [](unsigned d, const py::int_& q) { return epsilon_omega_general3(d, FieldSize::integer(from_py(q))); },
          py::arg("d"), py::arg("q"));
    m.def("epsilon_q_classical1", &epsilon_q_classical1, py::arg("d"), py::arg("type"));
    m.def("epsilon_q_classical2", [](unsigned d, const py::int_& q) { return epsilon_q_classical2(d, from_py(q)); },
          py::arg("d"), py::arg("q"));
    m.def("exceptions_omega",
          [](const py::dict& q0, double t) { return survey(exceptions_omega(q0_table(q0), t, store())); });
    m.def("exceptions_q_classical",
          [](const py::dict& q0, double t) { return survey(exceptions_q_classical(q0_table(q0), t, store())); });
    m.def("exceptions_q_exceptional",
          [](const py::dict& q0, double t) { return survey(exceptions_q_exceptional(q0_table(q0), t, store())); });

    m.def("group_info",
          [](const std::string& text, bool aut, std::uint64_t cap) {
              py::gil_scoped_release release;
              const auto g = oracle::parse_group(text, cap);
              const auto cp = oracle::conjugacy_classes(g, cap);
              std::vector<BigNat> ords;
              for (const auto& c : cp.classes) ords.emplace_back(c.element_order);
              std::optional<oracle::AutOrbits> a;
              if (aut) a = oracle::aut_orbits(g, cap);
              py::gil_scoped_acquire acquire;
              py::dict out;
              out["name"] = g.name;
              out["order"] = g.order();
              out["classes"] = cp.classes.size();
              out["element_orders"] = to_py(OrderSet::from_values(ords));
              if (a) {
                  out["omega"] = to_py(a->omega);
                  out["out_order"] = to_py(a->out_order);
              }
              return out;
          },
          py::arg("group"), py::arg("aut") = false, py::arg("cap") = oracle::kDefaultGroupCap);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli_main(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
