#include "lieord/data_store.hpp"

#include "lieord/errors.hpp"
#include "lieord/lie_catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace lieord {

namespace detail {
extern const std::string_view kSeedData;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

BigNat parse_positive(const std::string& tok, std::size_t line, const char* what) {
    BigNat v;
    try {
        v = parse_bignat(tok);
    } catch (const DomainError&) {
        throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
    }
    if (v == 0) throw ParseError(line, std::string(what) + " must be positive");
    return v;
}

bool valid_spectrum_token(const std::string& token) {
    std::string_view fam = token;
    if (fam.size() > 3 && fam.substr(fam.size() - 3) == ":ss") fam.remove_suffix(3);
    auto f = parse_family(fam);
    return f && !is_classical(*f);
}

template <class Map, class Key, class Value>
void insert_checked(Map& map, const Key& key, const Value& value, const std::string& what) {
    auto [it, inserted] = map.emplace(key, value);
    if (!inserted && !(it->second == value)) throw DuplicateKey(0, "conflicting value for " + what);
}

}  // namespace

const std::vector<std::string>& DataStore::classnum_labels() {
    static const std::vector<std::string> labels = {
        "PSL",        "PSU",        "SL",          "SU",          "Sp",        "PSp",      "Omega",
        "SOplus",     "SOminus",    "OmegaPlus",   "OmegaMinus",  "POmegaPlus", "POmegaMinus",
        "SumOmega",   "DiffOmega",  "SumSO",       "DiffSO",      "InndiagE6", "Inndiag2E6", "InndiagE7",
        "2B2",        "G2",         "2G2",         "3D4",         "F4",        "2F4",      "E6",
        "2E6",        "E7",         "E8"};
    return labels;
}

DataStore DataStore::seeded() {
    DataStore store;
    store.load_text(detail::kSeedData);
    return store;
}

void DataStore::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open data file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        load_text(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path + ": " + std::string(e.what()));
    }
}

void DataStore::load_text(std::string_view text) {
    DataStore staged = *this;
    std::set<std::string> seen;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const auto tok = split_ws(raw);
        if (tok.empty()) continue;
        const std::string& kind = tok[0];
        std::string key;
        try {
            if (kind == "classnum") {
                if (tok.size() != 5) throw ParseError(line_no, "classnum needs: <label> <n> <q> <k>");
                const auto& labels = classnum_labels();
                if (std::find(labels.begin(), labels.end(), tok[1]) == labels.end()) {
                    throw ParseError(line_no, "unknown class-number label '" + tok[1] + "'");
                }
                const BigNat n = parse_positive(tok[2], line_no, "dimension");
                if (n > 1000) throw ParseError(line_no, "dimension out of range");
                ClassnumKey ck{tok[1], n.convert_to<unsigned>(), parse_positive(tok[3], line_no, "field size")};
                key = "classnum " + tok[1] + " " + tok[2] + " " + tok[3];
                if (!seen.insert(key).second) throw DuplicateKey(line_no, "duplicate key " + key);
                staged.add_classnum(ck, parse_positive(tok[4], line_no, "class number"));
            } else if (kind == "spectrum") {
                if (tok.size() != 4) throw ParseError(line_no, "spectrum needs: <family>[:ss] <Q> <orders>");
                if (!valid_spectrum_token(tok[1])) {
                    throw ParseError(line_no, "spectrum family must be exceptional, got '" + tok[1] + "'");
                }
                std::vector<BigNat> orders;
                std::stringstream list(tok[3]);
                std::string item;
                while (std::getline(list, item, ',')) orders.push_back(parse_positive(item, line_no, "order"));
                const OrderSet set = OrderSet::from_values(orders);
                if (set.size() != orders.size()) throw ParseError(line_no, "repeated order in spectrum");
                key = "spectrum " + tok[1] + " " + tok[2];
                if (!seen.insert(key).second) throw DuplicateKey(line_no, "duplicate key " + key);
                staged.add_spectrum(tok[1], parse_positive(tok[2], line_no, "Q"), set);
            } else if (kind == "q0") {
                if (tok.size() != 3) throw ParseError(line_no, "q0 needs: <key> <q0>");
                const BigNat q0 = parse_positive(tok[2], line_no, "q0");
                if (!prime_power_split(q0)) throw ParseError(line_no, "q0 must be a prime power");
                key = "q0 " + tok[1];
                if (!seen.insert(key).second) throw DuplicateKey(line_no, "duplicate key " + key);
                staged.add_q0(tok[1], q0);
            } else if (kind == "constant") {
                if (tok.size() != 3) throw ParseError(line_no, "constant needs: <name> <value>");
                key = "constant " + tok[1];
                if (!seen.insert(key).second) throw DuplicateKey(line_no, "duplicate key " + key);
                staged.add_constant(tok[1], parse_positive(tok[2], line_no, "value"));
            } else {
                throw ParseError(line_no, "unknown record kind '" + kind + "'");
            }
        } catch (const DuplicateKey& e) {
            if (e.line() != 0) throw;
            throw DuplicateKey(line_no, e.what());
        }
    }
    *this = std::move(staged);
}

void DataStore::add_classnum(const ClassnumKey& key, const BigNat& k) {
    if (k == 0) throw DomainError("class numbers are positive");
    insert_checked(classnums_, key, k, "classnum " + key.label);
}

void DataStore::add_spectrum(const std::string& token, const BigNat& Q, const OrderSet& orders) {
    insert_checked(spectra_, std::make_pair(token, Q), orders, "spectrum " + token);
}

void DataStore::add_q0(const std::string& key, const BigNat& q0) { insert_checked(q0_, key, q0, "q0 " + key); }

void DataStore::add_constant(const std::string& name, const BigNat& value) {
    insert_checked(constants_, name, value, "constant " + name);
}

std::optional<BigNat> DataStore::classnum(std::string_view label, unsigned n, const BigNat& q) const {
    auto it = classnums_.find(ClassnumKey{std::string(label), n, q});
    if (it == classnums_.end()) return std::nullopt;
    return it->second;
}

std::optional<OrderSet> DataStore::spectrum(std::string_view token, const BigNat& Q) const {
    auto it = spectra_.find(std::make_pair(std::string(token), Q));
    if (it == spectra_.end()) return std::nullopt;
    return it->second;
}

std::optional<BigNat> DataStore::q0(std::string_view key) const {
    auto it = q0_.find(key);
    if (it == q0_.end()) return std::nullopt;
    return it->second;
}

std::optional<BigNat> DataStore::constant(std::string_view name) const {
    auto it = constants_.find(name);
    if (it == constants_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> DataStore::spectrum_tokens() const {
    std::set<std::string> tokens;
    for (const auto& [key, _] : spectra_) tokens.insert(key.first);
    return {tokens.begin(), tokens.end()};
}

std::string DataStore::serialize() const {
    std::ostringstream out;
    for (const auto& [k, v] : classnums_) out << "classnum " << k.label << ' ' << k.n << ' ' << k.q << ' ' << v << '\n';
    for (const auto& [k, v] : spectra_) out << "spectrum " << k.first << ' ' << k.second << ' ' << v.to_string() << '\n';
    for (const auto& [k, v] : q0_) out << "q0 " << k << ' ' << v << '\n';
    for (const auto& [k, v] : constants_) out << "constant " << k << ' ' << v << '\n';
    return out.str();
}

}  // namespace lieord
