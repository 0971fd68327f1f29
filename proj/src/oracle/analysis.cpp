#include "lieord/errors.hpp"
#include "lieord/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>

namespace lieord::oracle {

namespace {

void require_cap(const SmallGroup& g, std::uint64_t cap) {
    if (g.order() > cap) {
        throw CapExceeded(g.name + " has order " + std::to_string(g.order()) + ", above the cap " + std::to_string(cap),
                          std::to_string(g.order()));
    }
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) std::swap(a, b);
        parent_[a] = b;
    }

private:
    std::vector<std::uint32_t> parent_;
};

std::uint64_t random_index(std::mt19937_64& rng, std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}

bool generates(const PermGroup& g, const std::vector<Perm>& gens) {
    return PermGroup(g.degree(), gens, g.order()).order() == g.order();
}

std::vector<Perm> small_generating_set(const PermGroup& g, std::mt19937_64& rng) {
    if (g.order() == 1) return {};
    for (std::size_t k = 1; k <= 3; ++k) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            std::vector<Perm> gens;
            for (std::size_t i = 0; i < k; ++i) gens.push_back(g.element(random_index(rng, g.order())));
            if (k == 1 ? perm_order(gens[0]) == g.order() : generates(g, gens)) return gens;
        }
    }
    return g.generators();
}

// Base images of z^-1 x z for x given by digits.
void conjugate_base_images(const PermGroup& g, const std::vector<Point>& base, const std::vector<std::uint32_t>& x,
                           const Perm& z, const Perm& z_inv, std::vector<Point>& out) {
    for (std::size_t j = 0; j < base.size(); ++j) out[j] = z[g.apply(x, z_inv[base[j]])];
}

}  // namespace

ClassPartition conjugacy_classes(const SmallGroup& sg, std::uint64_t cap) {
    require_cap(sg, cap);
    const PermGroup& g = *sg.perm;
    const std::uint64_t n = g.order();
    std::mt19937_64 rng(0x6c69656f7264ULL);
    const auto gens = small_generating_set(g, rng);
    std::vector<Perm> gens_inv;
    for (const auto& s : gens) gens_inv.push_back(perm_inv(s));
    const auto base = g.base();

    UnionFind uf(n);
    std::vector<Point> images(base.size());
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        const auto d = g.digits(idx);
        for (std::size_t s = 0; s < gens.size(); ++s) {
            conjugate_base_images(g, base, d, gens[s], gens_inv[s], images);
            uf.unite(static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(g.index_of_base_images(images)));
        }
    }

    ClassPartition out;
    out.class_of.resize(n);
    std::vector<std::int64_t> id_of_root(n, -1);
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        const std::uint32_t root = uf.find(static_cast<std::uint32_t>(idx));
        if (id_of_root[root] < 0) {
            id_of_root[root] = static_cast<std::int64_t>(out.classes.size());
            out.classes.push_back({idx, 0, g.element_order(g.digits(idx))});
        }
        const auto id = static_cast<std::uint32_t>(id_of_root[root]);
        out.class_of[idx] = id;
        ++out.classes[id].size;
    }
    return out;
}

OrderSet element_orders(const SmallGroup& g, std::uint64_t cap) {
    const auto cp = conjugacy_classes(g, cap);
    std::vector<BigNat> orders;
    for (const auto& c : cp.classes) orders.emplace_back(c.element_order);
    return OrderSet::from_values(std::move(orders));
}

BigNat nr_element_orders(const SmallGroup& g, std::uint64_t cap) { return element_orders(g, cap).size(); }

BigNat conjugacy_class_count(const SmallGroup& g, std::uint64_t cap) { return conjugacy_classes(g, cap).classes.size(); }

namespace {

using ClassInvariant = std::pair<std::uint64_t, std::uint64_t>;  // element order, class size

class AutSearch {
public:
    AutSearch(const SmallGroup& sg, std::uint64_t cap)
        : sg_(sg), g_(*sg.perm), n_(g_.degree()), base_(g_.base()), cp_(conjugacy_classes(sg, cap)) {
        members_.resize(cp_.classes.size());
        for (std::uint64_t idx = 0; idx < g_.order(); ++idx) members_[cp_.class_of[idx]].push_back(idx);
    }

    AutOrbits run() {
        choose_generators();
        const auto nc = cp_.classes.size();
        UnionFind orbits(nc);
        BigNat aut_order = 0;

        const auto first_targets = equivalent_classes(cls_[0]);
        for (std::uint32_t a_class : first_targets) {
            const std::uint64_t y0_index = cp_.classes[a_class].representative;
            Chosen y0 = chosen(y0_index);
            std::vector<Chosen> ys{y0};
            BigNat count = 0;
            search(1, ys, count, orbits);
            aut_order += count * cp_.classes[a_class].size;
        }
        if (aut_order == 0) throw AutGenerationFailed(sg_.name + ": no automorphism found");

        std::uint64_t center = 0;
        for (const auto& c : cp_.classes) center += c.size == 1 ? 1 : 0;
        AutOrbits out;
        out.aut_order = aut_order;
        out.inn_order = BigNat(g_.order() / center);
        if (out.aut_order % out.inn_order != 0) throw AutGenerationFailed(sg_.name + ": |Inn| does not divide |Aut|");
        out.out_order = out.aut_order / out.inn_order;
        std::set<std::uint32_t> roots;
        for (std::uint32_t c = 0; c < nc; ++c) roots.insert(orbits.find(c));
        out.omega = roots.size();
        return out;
    }

private:
    struct Chosen {
        std::uint64_t index;
        Perm perm;
        Perm inv;
    };

    Chosen chosen(std::uint64_t index) const {
        Perm p = g_.element(index);
        Perm inv = perm_inv(p);
        return {index, std::move(p), std::move(inv)};
    }

    ClassInvariant invariant(std::uint32_t c) const { return {cp_.classes[c].element_order, cp_.classes[c].size}; }

    std::vector<std::uint32_t> equivalent_classes(std::uint32_t c) const {
        std::vector<std::uint32_t> out;
        for (std::uint32_t k = 0; k < cp_.classes.size(); ++k) {
            if (invariant(k) == invariant(c)) out.push_back(k);
        }
        return out;
    }

    std::uint32_t class_of_product(const Perm& a, const Perm& b) {
        for (std::size_t j = 0; j < base_.size(); ++j) images_[j] = b[a[base_[j]]];
        return cp_.class_of[g_.index_of_base_images(images_)];
    }

    void choose_generators() {
        images_.resize(base_.size());
        std::mt19937_64 rng(0x617574ULL);
        const auto nc = static_cast<std::uint32_t>(cp_.classes.size());
        std::vector<std::uint64_t> equiv_count(nc), equiv_weight(nc);
        for (std::uint32_t c = 0; c < nc; ++c) {
            for (std::uint32_t k : equivalent_classes(c)) {
                ++equiv_count[c];
                equiv_weight[c] += cp_.classes[k].size;
            }
        }
        if (g_.order() == 1) {
            gens_ = {};
            return;
        }
        for (std::uint32_t c = 0; c < nc; ++c) {
            if (cp_.classes[c].element_order == g_.order()) {
                set_generators({cp_.classes[c].representative});
                return;
            }
        }
        struct Pair {
            long double cost;
            std::uint32_t a, b;
        };
        std::vector<Pair> pairs;
        for (std::uint32_t a = 0; a < nc; ++a) {
            if (cp_.classes[a].size == 1) continue;
            for (std::uint32_t b = 0; b < nc; ++b) {
                if (cp_.classes[b].size == 1) continue;
                pairs.push_back({static_cast<long double>(equiv_count[a]) * equiv_weight[b], a, b});
            }
        }
        std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
            return std::tie(x.cost, x.a, x.b) < std::tie(y.cost, y.a, y.b);
        });
        int budget = 400;
        for (const auto& pr : pairs) {
            if (budget <= 0) break;
            const Perm a = g_.element(cp_.classes[pr.a].representative);
            const auto& bs = members_[pr.b];
            for (int attempt = 0; attempt < 4 && budget > 0; ++attempt, --budget) {
                const std::uint64_t b_index = bs[random_index(rng, bs.size())];
                if (generates(g_, {a, g_.element(b_index)})) {
                    set_generators({cp_.classes[pr.a].representative, b_index});
                    return;
                }
            }
        }
        // Fall back to a random generating tuple with the first entry moved to its class representative.
        auto gens = small_generating_set(g_, rng);
        std::vector<std::uint64_t> idx;
        for (const auto& s : gens) idx.push_back(g_.index_of(s));
        const Perm rep = g_.element(cp_.classes[cp_.class_of[idx[0]]].representative);
        // Conjugate the tuple so that x_0 is the representative.
        for (std::uint64_t z = 0; z < g_.order(); ++z) {
            const Perm zp = g_.element(z);
            const Perm zi = perm_inv(zp);
            if (perm_mul(perm_mul(zi, gens[0]), zp) != rep) continue;
            for (auto& i : idx) i = g_.index_of(perm_mul(perm_mul(zi, g_.element(i)), zp));
            break;
        }
        set_generators(idx);
    }

    void set_generators(const std::vector<std::uint64_t>& idx) {
        gens_.clear();
        cls_.clear();
        for (auto i : idx) {
            gens_.push_back(chosen(i));
            cls_.push_back(cp_.class_of[i]);
        }
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            std::vector<std::pair<ClassInvariant, ClassInvariant>> row;
            for (std::size_t j = 0; j < i; ++j) {
                row.push_back({invariant(class_of_product(gens_[j].perm, gens_[i].perm)),
                               invariant(class_of_product(gens_[j].perm, gens_[i].inv))});
            }
            pair_invariants_.push_back(std::move(row));
        }
    }

    bool consistent(const std::vector<Chosen>& ys, const Chosen& y, std::size_t pos) {
        for (std::size_t j = 0; j < pos; ++j) {
            if (invariant(class_of_product(ys[j].perm, y.perm)) != pair_invariants_[pos][j].first) return false;
            if (invariant(class_of_product(ys[j].perm, y.inv)) != pair_invariants_[pos][j].second) return false;
        }
        return true;
    }

    // Elements commuting with y, found by a scan over G.
    std::vector<Perm> centralizer_generators(const Chosen& y) {
        std::vector<std::uint64_t> cent;
        std::vector<Point> yb(base_.size());
        for (std::size_t j = 0; j < base_.size(); ++j) yb[j] = y.perm[base_[j]];
        for (std::uint64_t z = 0; z < g_.order(); ++z) {
            const auto d = g_.digits(z);
            bool commutes = true;
            for (std::size_t j = 0; j < base_.size() && commutes; ++j) {
                commutes = g_.apply(d, yb[j]) == y.perm[g_.apply(d, base_[j])];
            }
            if (commutes) cent.push_back(z);
        }
        std::mt19937_64 rng(cent.size());
        for (std::size_t k = 1; k <= 4; ++k) {
            for (int attempt = 0; attempt < 32; ++attempt) {
                std::vector<Perm> gens;
                for (std::size_t i = 0; i < k; ++i) gens.push_back(g_.element(cent[random_index(rng, cent.size())]));
                if (PermGroup(n_, gens, cent.size()).order() == cent.size()) return gens;
            }
        }
        std::vector<Perm> all;
        for (auto z : cent) all.push_back(g_.element(z));
        return all;
    }

    void search(std::size_t pos, std::vector<Chosen>& ys, BigNat& count, UnionFind& orbits) {
        if (pos == gens_.size()) {
            if (try_graph(ys, orbits)) count += 1;
            return;
        }
        std::vector<std::uint64_t> candidates;
        for (std::uint32_t c : equivalent_classes(cls_[pos])) {
            candidates.insert(candidates.end(), members_[c].begin(), members_[c].end());
        }
        if (pos != 1) {
            for (auto idx : candidates) {
                Chosen y = chosen(idx);
                if (!consistent(ys, y, pos)) continue;
                ys.push_back(std::move(y));
                search(pos + 1, ys, count, orbits);
                ys.pop_back();
            }
            return;
        }
        // Automorphisms differing by an inner one fixing y_0 give the same class action,
        // so one candidate per orbit of the centralizer of y_0 suffices.
        std::map<std::uint64_t, std::uint32_t> slot;
        for (std::uint32_t i = 0; i < candidates.size(); ++i) slot[candidates[i]] = i;
        UnionFind cuf(candidates.size());
        const auto cent = centralizer_generators(ys[0]);
        for (const auto& z : cent) {
            const Perm zi = perm_inv(z);
            for (std::uint32_t i = 0; i < candidates.size(); ++i) {
                conjugate_base_images(g_, base_, g_.digits(candidates[i]), z, zi, images_);
                cuf.unite(i, slot.at(g_.index_of_base_images(images_)));
            }
        }
        std::map<std::uint32_t, std::uint64_t> orbit_size;
        for (std::uint32_t i = 0; i < candidates.size(); ++i) ++orbit_size[cuf.find(i)];
        for (const auto& [root, size] : orbit_size) {
            Chosen y = chosen(candidates[root]);
            if (!consistent(ys, y, pos)) continue;
            ys.push_back(std::move(y));
            BigNat sub = 0;
            search(pos + 1, ys, sub, orbits);
            ys.pop_back();
            count += sub * size;
        }
    }

    bool try_graph(const std::vector<Chosen>& ys, UnionFind& orbits) {
        std::vector<Perm> pairs;
        std::vector<Perm> images;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            Perm p(2 * n_);
            for (std::size_t x = 0; x < n_; ++x) {
                p[x] = gens_[i].perm[x];
                p[n_ + x] = static_cast<Point>(n_ + ys[i].perm[x]);
            }
            pairs.push_back(std::move(p));
            images.push_back(ys[i].perm);
        }
        std::optional<PermGroup> graph;
        try {
            graph.emplace(2 * n_, std::move(pairs), g_.order());
        } catch (const CapExceeded&) {
            return false;
        }
        if (graph->order() != g_.order() || !generates(g_, images)) return false;

        const auto hbase = graph->base();
        std::vector<Point> himages(hbase.size());
        for (std::uint32_t c = 0; c < cp_.classes.size(); ++c) {
            const Perm r = g_.element(cp_.classes[c].representative);
            for (std::size_t j = 0; j < hbase.size(); ++j) himages[j] = r[hbase[j]];
            const Perm h = graph->element(graph->index_of_base_images(himages));
            for (std::size_t j = 0; j < base_.size(); ++j) images_[j] = h[n_ + base_[j]] - static_cast<Point>(n_);
            orbits.unite(c, cp_.class_of[g_.index_of_base_images(images_)]);
        }
        return true;
    }

    const SmallGroup& sg_;
    const PermGroup& g_;
    std::size_t n_;
    std::vector<Point> base_;
    ClassPartition cp_;
    std::vector<std::vector<std::uint64_t>> members_;
    std::vector<Chosen> gens_;
    std::vector<std::uint32_t> cls_;
    std::vector<std::vector<std::pair<ClassInvariant, ClassInvariant>>> pair_invariants_;
    std::vector<Point> images_;
};

void lcm_partitions(unsigned remaining, unsigned max_part, std::uint64_t acc, std::set<std::uint64_t>& out) {
    if (remaining == 0) {
        out.insert(acc);
        return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
        lcm_partitions(remaining - part, part, std::lcm(acc, std::uint64_t{part}), out);
    }
}

}  // namespace

AutOrbits aut_orbits(const SmallGroup& g, std::uint64_t cap) {
    require_cap(g, cap);
    if (g.order() == 1) return {1, 1, 1, 1};
    return AutSearch(g, cap).run();
}

BigNat nr_aut_orbits(const SmallGroup& g, std::uint64_t cap) { return aut_orbits(g, cap).omega; }

OrderSet sym_spectrum_oracle(unsigned n) {
    if (n > 60) throw DomainError("sym_spectrum_oracle is limited to n <= 60");
    std::set<std::uint64_t> values;
    lcm_partitions(n, n, 1, values);
    std::vector<BigNat> out;
    for (auto v : values) out.emplace_back(v);
    return OrderSet::from_values(std::move(out));
}

}  // namespace lieord::oracle
