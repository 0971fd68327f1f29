#pragma once

#include "lieord/arith.hpp"
#include "lieord/order_set.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace lieord {

struct ClassnumKey {
    std::string label;
    unsigned n = 0;
    BigNat q;
    friend bool operator<(const ClassnumKey& a, const ClassnumKey& b) {
        return std::tie(a.label, a.n, a.q) < std::tie(b.label, b.n, b.q);
    }
    friend bool operator==(const ClassnumKey&, const ClassnumKey&) = default;
};

// Ingested values: class numbers, spectra, q0 tables and named constants.
//
// File format, one record per line, '#' starts a comment:
//   classnum <label> <n> <q> <k>
//   spectrum <family>[:ss] <Q> <o1,o2,...>
//   q0 <key> <q0>
//   constant <name> <value>
class DataStore {
public:
    DataStore() = default;
    static DataStore seeded();
    static const std::vector<std::string>& classnum_labels();

    // All-or-nothing: a bad line leaves the store untouched.
    void load_file(const std::string& path);
    void load_text(std::string_view text);

    void add_classnum(const ClassnumKey& key, const BigNat& k);
    void add_spectrum(const std::string& token, const BigNat& Q, const OrderSet& orders);
    void add_q0(const std::string& key, const BigNat& q0);
    void add_constant(const std::string& name, const BigNat& value);

    std::optional<BigNat> classnum(std::string_view label, unsigned n, const BigNat& q) const;
    std::optional<OrderSet> spectrum(std::string_view token, const BigNat& Q) const;
    std::optional<BigNat> q0(std::string_view key) const;
    std::optional<BigNat> constant(std::string_view name) const;

    const std::map<ClassnumKey, BigNat>& classnums() const { return classnums_; }
    const std::map<std::string, BigNat, std::less<>>& q0_table() const { return q0_; }
    std::vector<std::string> spectrum_tokens() const;

    std::string serialize() const;

private:
    std::map<ClassnumKey, BigNat> classnums_;
    std::map<std::pair<std::string, BigNat>, OrderSet> spectra_;
    std::map<std::string, BigNat, std::less<>> q0_;
    std::map<std::string, BigNat, std::less<>> constants_;
};

}  // namespace lieord
