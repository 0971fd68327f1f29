#include "lieord/cli.hpp"

#include "lieord/bounds.hpp"
#include "lieord/class_numbers.hpp"
#include "lieord/data_store.hpp"
#include "lieord/errors.hpp"
#include "lieord/lie_catalog.hpp"
#include "lieord/oracle.hpp"
#include "lieord/survey.hpp"
#include "lieord/sym_partitions.hpp"
#include "lieord/torus_spectra.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <variant>

namespace lieord {

namespace {

using json = nlohmann::json;

using Value = std::variant<std::monostate, BigNat, double, std::string, std::vector<BigNat>>;
using Row = std::vector<std::pair<std::string, Value>>;
using Rows = std::vector<Row>;

Value maybe(const MaybeReal& x) { return x ? Value(*x) : Value(std::monostate{}); }

Value orders(const OrderSet& s) { return s.values(); }

class Renderer {
public:
    Renderer(bool as_json, int precision) : json_(as_json), precision_(precision) {}

    void emit(const Rows& rows, std::ostream& out) const {
        if (json_) {
            for (const auto& row : rows) {
                json obj = json::object();
                for (const auto& [key, v] : row) obj[key] = to_json(v);
                out << obj.dump() << '\n';
            }
            return;
        }
        if (rows.size() == 1 && rows[0].size() == 1) {
            out << text(rows[0][0].second) << '\n';
            return;
        }
        if (rows.empty()) return;
        std::vector<std::size_t> width;
        for (const auto& [key, v] : rows[0]) width.push_back(key.size());
        std::vector<std::vector<std::string>> cells;
        for (const auto& row : rows) {
            std::vector<std::string> line;
            for (std::size_t i = 0; i < row.size(); ++i) {
                line.push_back(text(row[i].second));
                width[i] = std::max(width[i], line.back().size());
            }
            cells.push_back(std::move(line));
        }
        auto print = [&](const std::vector<std::string>& line) {
            std::string s;
            for (std::size_t i = 0; i < line.size(); ++i) {
                if (i > 0) s += "  ";
                s += line[i];
                if (i + 1 < line.size()) s.append(width[i] - line[i].size(), ' ');
            }
            out << s << '\n';
        };
        std::vector<std::string> header;
        for (const auto& [key, v] : rows[0]) header.push_back(key);
        print(header);
        for (const auto& line : cells) print(line);
    }

private:
    std::string real(double x) const {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*g", precision_, x);
        return buf;
    }

    std::string text(const Value& v) const {
        if (std::holds_alternative<std::monostate>(v)) return "undefined";
        if (auto* n = std::get_if<BigNat>(&v)) return n->str();
        if (auto* x = std::get_if<double>(&v)) return real(*x);
        if (auto* s = std::get_if<std::string>(&v)) return *s;
        std::string out;
        for (const auto& n : std::get<std::vector<BigNat>>(v)) {
            if (!out.empty()) out += ',';
            out += n.str();
        }
        return out;
    }

    json to_json(const Value& v) const {
        if (std::holds_alternative<std::monostate>(v)) return nullptr;
        if (auto* n = std::get_if<BigNat>(&v)) return n->str();
        if (auto* x = std::get_if<double>(&v)) return std::strtod(real(*x).c_str(), nullptr);
        if (auto* s = std::get_if<std::string>(&v)) return *s;
        json arr = json::array();
        for (const auto& n : std::get<std::vector<BigNat>>(v)) arr.push_back(n.str());
        return arr;
    }

    bool json_;
    int precision_;
};

struct SpecArgs {
    std::string family;
    unsigned d = 0;
    std::string q;

    LieSpec make(std::ostream& err) const {
        auto spec = make_spec(family, d, parse_bignat(q));
        for (const auto& w : spec.warnings) err << "warning: " << w << '\n';
        return spec;
    }
};

void add_spec_options(CLI::App* cmd, SpecArgs& a, bool need_q = true) {
    cmd->add_option("--family", a.family, "Lie family: A, 2A, B, C, D, 2D, 2B2, G2, 2G2, 3D4, F4, 2F4, E6, 2E6, E7, E8")
        ->required();
    cmd->add_option("--d", a.d, "Rank (classical families)");
    auto* q = cmd->add_option("--q", a.q, "Field parameter Q (q^2 for 2A, 2D, 2E6; q^3 for 3D4)");
    if (need_q) q->required();
}

using Thresholds = std::map<std::string, BigNat, std::less<>>;

std::string label_for_dump(std::string_view text, unsigned& n, BigNat& q) {
    const auto open = text.find('(');
    const std::string head(text.substr(0, open));
    const std::string args(text.substr(open + 1, text.size() - open - 2));
    const auto comma = args.find(',');
    const auto& labels = DataStore::classnum_labels();
    if (oracle::parse_classical_kind(head) && comma != std::string::npos) {
        if (std::find(labels.begin(), labels.end(), head) == labels.end()) return {};
        n = static_cast<unsigned>(std::stoul(args.substr(0, comma)));
        q = parse_bignat(args.substr(comma + 1));
        return head;
    }
    if (head == "Sz") {
        n = 2;
        q = parse_bignat(args);
        return "2B2";
    }
    const auto underscore = head.find('_');
    const auto family = parse_family(head.substr(0, underscore));
    if (!family || (underscore == std::string::npos && is_classical(*family))) return {};
    const unsigned d = underscore == std::string::npos ? 0 : static_cast<unsigned>(std::stoul(head.substr(underscore + 1)));
    const auto ref = simple_group_ref(make_spec(*family, d, parse_bignat(args)));
    n = ref.n;
    q = ref.q;
    return ref.label;
}

double threshold_from_config(const std::string& path, const std::function<double()>& fallback) {
    if (path.empty()) return fallback();
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file " + path);
    json cfg;
    try {
        cfg = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error("config file " + path + ": " + e.what());
    }
    if (!cfg.contains("threshold")) return fallback();
    return cfg.at("threshold").get<double>();
}

Rows survey_rows(const std::vector<SurveyEntry>& entries) {
    Rows rows;
    for (const auto& e : entries) {
        rows.push_back({{"group", e.spec.name()},
                        {"family", std::string(family_name(e.spec.family))},
                        {"d", BigNat(e.spec.d)},
                        {"Q", e.spec.Q},
                        {"bound", maybe(e.best_bound)},
                        {"source", e.source}});
    }
    return rows;
}

Rows epsilon_rows(const EpsilonResult& r) {
    Row row{{"epsilon", r.value}, {"omega_bound", r.omega_bound}};
    if (r.omega_denominator != 1) row.push_back({"omega_denominator", r.omega_denominator});
    if (r.omicron_bound) row.push_back({"omicron_bound", *r.omicron_bound});
    row.push_back({"loglog_order", r.loglog_order});
    return {row};
}

Rows single(Value v) { return {{{"value", std::move(v)}}}; }

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Element-order and automorphism-orbit statistics of finite simple groups", "lieord"};
    app.require_subcommand(1);

    bool as_json = false;
    int precision = 15;
    std::vector<std::string> data_files;
    app.add_flag("--json", as_json, "Emit one JSON object per result");
    app.add_option("--precision", precision, "Significant digits for approximate reals")->check(CLI::Range(1, 17));
    app.add_option("--data", data_files, "Extra data files loaded on top of the built-in seed")->check(CLI::ExistingFile);

    std::function<Rows(const DataStore&)> action;
    auto set = [&](CLI::App* cmd, std::function<Rows(const DataStore&)> f) {
        cmd->callback([&action, f = std::move(f)] { action = f; });
    };

    // sym
    auto* sym = app.add_subcommand("sym", "Symmetric groups");
    sym->require_subcommand(1);
    std::uint32_t sym_n = 0;
    bool argmax = false;
    {
        auto* c = sym->add_subcommand("omicron", "Number of element orders of Sym(n)");
        c->add_option("--n", sym_n)->required();
        set(c, [&](const DataStore&) { return single(nr_element_orders_sym(sym_n)); });
        c = sym->add_subcommand("r", "Partitions of n into pairwise coprime prime powers");
        c->add_option("--n", sym_n)->required();
        set(c, [&](const DataStore&) { return single(nr_coprime_prime_power_partitions(sym_n)); });
        c = sym->add_subcommand("constants", "The constants log(omicron(Sym(k)))/sqrt(k)");
        c->add_option("--max", sym_n)->required();
        c->add_flag("--argmax", argmax, "Print only the k with the largest constant");
        set(c, [&](const DataStore&) {
            const auto list = omicron_sym_constants(sym_n);
            if (argmax) return single(BigNat(omicron_sym_constants_argmax(list)));
            Rows rows;
            for (const auto& [k, c] : list) rows.push_back({{"k", BigNat(k)}, {"c", c}});
            return rows;
        });
    }

    // lie
    auto* lie = app.add_subcommand("lie", "Finite simple groups of Lie type");
    lie->require_subcommand(1);
    SpecArgs spec_args;
    unsigned level = 0;
    std::vector<unsigned> levels;
    bool exact = false;
    bool semisimple = false;
    {
        auto* c = lie->add_subcommand("order", "Group order");
        add_spec_options(c, spec_args);
        set(c, [&](const DataStore&) { return single(group_order(spec_args.make(err))); });

        c = lie->add_subcommand("loglog", "log log of the group order");
        add_spec_options(c, spec_args);
        set(c, [&](const DataStore&) { return single(log_log_group_order(spec_args.make(err))); });

        c = lie->add_subcommand("out", "Order of the outer automorphism group");
        add_spec_options(c, spec_args);
        set(c, [&](const DataStore&) { return single(out_order(spec_args.make(err))); });

        c = lie->add_subcommand("coxeter", "Coxeter number");
        add_spec_options(c, spec_args, false);
        set(c, [&](const DataStore&) {
            const auto f = parse_family(spec_args.family);
            if (!f) throw InvalidSpec(InvalidSpec::Kind::UnknownFamily, "unknown family " + spec_args.family);
            return single(BigNat(coxeter_number(*f, spec_args.d)));
        });

        c = lie->add_subcommand("k", "Lower bound for the number of conjugacy classes");
        add_spec_options(c, spec_args);
        c->add_option("--level", level, "Quality level");
        c->add_flag("--exact", exact, "Exact class number of the simple group");
        set(c, [&](const DataStore& data) {
            const auto spec = spec_args.make(err);
            if (exact) return single(class_number_exact(spec, data));
            return single(class_number_lower_bound(spec, level, data));
        });

        c = lie->add_subcommand("omega-bound", "Lower bound for the number of Aut-orbits");
        add_spec_options(c, spec_args);
        c->add_option("--level", level, "Quality level")->required();
        set(c, [&](const DataStore& data) { return single(nr_aut_orbits_lower(spec_args.make(err), level, data)); });

        c = lie->add_subcommand("oord-bound", "Upper bound for the number of element orders");
        add_spec_options(c, spec_args);
        c->add_option("--level", level, "Quality level")->required();
        set(c, [&](const DataStore& data) {
            return single(nr_element_orders_upper(spec_args.make(err), level, data));
        });

        c = lie->add_subcommand("ss-bound", "Upper bound for the number of semisimple element orders");
        add_spec_options(c, spec_args);
        c->add_option("--level", level, "Quality level")->required();
        set(c, [&](const DataStore& data) {
            return single(nr_semisimple_orders_upper(spec_args.make(err), level, data));
        });

        c = lie->add_subcommand("epsilon-omega", "Lower bound for log log omega / log log |G|");
        add_spec_options(c, spec_args);
        c->add_option("--levels", levels, "Quality level")->delimiter(',')->expected(1);
        set(c, [&](const DataStore& data) {
            const unsigned l = levels.empty() ? 2 : levels[0];
            return epsilon_rows(epsilon_omega_lower(spec_args.make(err), l, data));
        });

        c = lie->add_subcommand("epsilon-q", "Lower bound for log log (omega/omicron + 3) / log log |G|");
        add_spec_options(c, spec_args);
        c->add_option("--levels", levels, "Quality levels for omega and omicron")->delimiter(',')->expected(2);
        set(c, [&](const DataStore& data) {
            const unsigned l1 = levels.size() == 2 ? levels[0] : 2;
            const unsigned l2 = levels.size() == 2 ? levels[1] : 2;
            return epsilon_rows(epsilon_q_lower(spec_args.make(err), l1, l2, data));
        });

        c = lie->add_subcommand("epsilon-q-small", "epsilon_q bound at q = 2 (Q = 4 for twisted families)");
        add_spec_options(c, spec_args, false);
        set(c, [&](const DataStore& data) {
            const auto f = parse_family(spec_args.family);
            if (!f) throw InvalidSpec(InvalidSpec::Kind::UnknownFamily, "unknown family " + spec_args.family);
            return epsilon_rows(epsilon_q_fixed_small_q(*f, spec_args.d, data));
        });

        c = lie->add_subcommand("spectrum", "Element orders");
        add_spec_options(c, spec_args);
        c->add_flag("--semisimple", semisimple, "Only the orders of semisimple elements");
        set(c, [&](const DataStore& data) {
            const auto spec = spec_args.make(err);
            if (is_classical(spec.family)) {
                if (!semisimple) throw DomainError("full spectra of classical groups are not available; use --semisimple");
                return single(orders(semisimple_orders_simple(spec)));
            }
            return single(orders(semisimple ? exceptional_semisimple(spec, data) : exceptional_spectrum(spec, data)));
        });
    }

    // survey
    auto* survey = app.add_subcommand("survey", "Uniform bounds and exception lists");
    survey->require_subcommand(1);
    unsigned survey_d = 0, type = 0;
    std::string survey_q, survey_sqrt, q0_file, config_file;
    std::optional<double> threshold;
    {
        auto* c = survey->add_subcommand("general2", "Uniform epsilon_omega bound at q = 2");
        c->add_option("--d", survey_d)->required();
        set(c, [&](const DataStore&) { return single(maybe(epsilon_omega_general2(survey_d))); });

        c = survey->add_subcommand("general3", "Uniform epsilon_omega bound for q > 2");
        c->add_option("--d", survey_d)->required();
        auto* qopt = c->add_option("--q", survey_q, "Integral q");
        auto* sopt = c->add_option("--sqrt", survey_sqrt, "Q, for q = sqrt(Q)");
        qopt->excludes(sopt);
        set(c, [&](const DataStore&) {
            if (survey_q.empty() == survey_sqrt.empty()) throw CLI::ValidationError("exactly one of --q and --sqrt is needed");
            const FieldSize q = survey_q.empty() ? FieldSize::sqrt_of(parse_bignat(survey_sqrt))
                                                 : FieldSize::integer(parse_bignat(survey_q));
            return single(maybe(epsilon_omega_general3(survey_d, q)));
        });

        c = survey->add_subcommand("classical1", "Uniform epsilon_q bound of the given type");
        c->add_option("--d", survey_d)->required();
        c->add_option("--type", type)->required();
        set(c, [&](const DataStore&) { return single(maybe(epsilon_q_classical1(survey_d, type))); });

        c = survey->add_subcommand("classical2", "Uniform epsilon_q bound depending on q");
        c->add_option("--d", survey_d)->required();
        c->add_option("--q", survey_q)->required();
        set(c, [&](const DataStore&) { return single(maybe(epsilon_q_classical2(survey_d, parse_bignat(survey_q)))); });

        auto* ex = survey->add_subcommand("exceptions", "Groups whose best bound is at most the threshold");
        ex->require_subcommand(1);
        for (std::string which : {"omega", "q-classical", "q-exceptional"}) {
            c = ex->add_subcommand(which, "");
            c->add_option("--q0", q0_file, "File with q0 records")->required()->check(CLI::ExistingFile);
            c->add_option("--config", config_file, "JSON file with an optional \"threshold\"")->check(CLI::ExistingFile);
            c->add_option("--threshold", threshold, "Overrides the configured threshold");
            set(c, [&, which](const DataStore& data) {
                DataStore q0_store;
                q0_store.load_file(q0_file);
                const auto& q0 = q0_store.q0_table();
                auto fallback = [&]() -> double {
                    return which == "omega" ? epsilon_omega_alt5() : epsilon_q_monster(data);
                };
                const double t = threshold ? *threshold : threshold_from_config(config_file, fallback);
                if (which == "omega") return survey_rows(exceptions_omega(q0, t, data));
                if (which == "q-classical") return survey_rows(exceptions_q_classical(q0, t, data));
                return survey_rows(exceptions_q_exceptional(q0, t, data));
            });
        }
    }

    // oracle
    auto* orc = app.add_subcommand("oracle", "Brute-force computations in small groups");
    orc->require_subcommand(1);
    std::string group_text, out_file;
    std::uint64_t cap = oracle::kDefaultGroupCap;
    bool with_aut = false;
    {
        auto* c = orc->add_subcommand("info", "Order, classes, element orders and Aut-orbits of a group");
        c->add_option("--group", group_text, "e.g. PSL(2,7), Sz(8), Alt(5), 2A_2(9)")->required();
        c->add_option("--cap", cap, "Largest group order to construct");
        c->add_flag("--aut", with_aut, "Also count Aut-orbits (slower)");
        set(c, [&](const DataStore&) {
            const auto g = oracle::parse_group(group_text, cap);
            const auto cp = oracle::conjugacy_classes(g, cap);
            std::vector<BigNat> ord;
            for (const auto& cl : cp.classes) ord.emplace_back(cl.element_order);
            Row row{{"group", g.name},
                    {"order", BigNat(g.order())},
                    {"degree", BigNat(g.degree())},
                    {"classes", BigNat(cp.classes.size())},
                    {"orders", orders(OrderSet::from_values(ord))}};
            if (with_aut) {
                const auto a = oracle::aut_orbits(g, cap);
                row.push_back({"omega", a.omega});
                row.push_back({"out", a.out_order});
            }
            return Rows{row};
        });

        c = orc->add_subcommand("dump", "Write class-number and spectrum records for a group");
        c->add_option("--group", group_text)->required();
        c->add_option("--out", out_file, "Output file, - for standard output")->required();
        c->add_option("--cap", cap, "Largest group order to construct");
        set(c, [&](const DataStore&) {
            const auto g = oracle::parse_group(group_text, cap);
            const auto cp = oracle::conjugacy_classes(g, cap);
            std::vector<BigNat> ord;
            for (const auto& cl : cp.classes) ord.emplace_back(cl.element_order);
            const auto spectrum = OrderSet::from_values(ord);
            unsigned n = 0;
            BigNat q;
            const std::string label = label_for_dump(group_text, n, q);
            std::string text = "# " + g.name + ": order " + std::to_string(g.order()) + ", element orders " +
                               spectrum.to_string() + "\n";
            if (!label.empty()) {
                text += "classnum " + label + " " + std::to_string(n) + " " + q.str() + " " +
                        std::to_string(cp.classes.size()) + "\n";
            }
            if (label == "2B2") text += "spectrum 2B2 " + q.str() + " " + spectrum.to_string() + "\n";
            if (out_file == "-") {
                out << text;
            } else {
                std::ofstream f(out_file);
                if (!f) throw Error("cannot write " + out_file);
                f << text;
            }
            return Rows{};
        });
    }

    // data
    auto* data_cmd = app.add_subcommand("data", "Data files");
    data_cmd->require_subcommand(1);
    std::string import_file;
    {
        auto* c = data_cmd->add_subcommand("import", "Validate a data file and summarize its records");
        c->add_option("--file", import_file)->required()->check(CLI::ExistingFile);
        set(c, [&](const DataStore&) {
            DataStore store;
            store.load_file(import_file);
            std::size_t spectra = store.spectrum_tokens().size();
            return Rows{{{"classnum", BigNat(store.classnums().size())},
                         {"spectrum", BigNat(spectra)},
                         {"q0", BigNat(store.q0_table().size())}}};
        });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_code::kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_code::kUsage;
    }

    try {
        DataStore data = DataStore::seeded();
        for (const auto& f : data_files) data.load_file(f);
        const Renderer renderer(as_json, precision);
        renderer.emit(action(data), out);
        return exit_code::kOk;
    } catch (const NotAvailable& e) {
        err << e.what() << '\n';
        return exit_code::kUnavailable;
    } catch (const DataMissing& e) {
        err << e.what() << '\n';
        return exit_code::kDataMissing;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kFailure;
    }
}

}  // namespace lieord
