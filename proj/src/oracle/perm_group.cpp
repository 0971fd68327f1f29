#include "lieord/perm_group.hpp"

#include "lieord/errors.hpp"

#include <numeric>

namespace lieord::oracle {

Perm perm_identity(std::size_t degree) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), Point{0});
    return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) c[x] = b[a[x]];
    return c;
}

Perm perm_inv(const Perm& a) {
    Perm c(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) c[a[x]] = static_cast<Point>(x);
    return c;
}

bool perm_is_identity(const Perm& a) {
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (a[x] != x) return false;
    }
    return true;
}

std::uint64_t perm_order(const Perm& a) {
    std::vector<char> seen(a.size(), 0);
    std::uint64_t order = 1;
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (seen[x]) continue;
        std::uint64_t len = 0;
        for (std::size_t y = x; !seen[y]; y = a[y]) {
            seen[y] = 1;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::uint64_t order_cap)
    : degree_(degree), generators_(std::move(generators)) {
    for (const auto& g : generators_) {
        if (g.size() != degree_) throw DomainError("generator has the wrong degree");
    }
    build(order_cap);
}

std::vector<Point> PermGroup::base() const {
    std::vector<Point> b;
    for (const auto& l : levels_) b.push_back(l.base);
    return b;
}

void PermGroup::new_level(Point base) {
    Level l;
    l.base = base;
    l.pos.assign(degree_, -1);
    l.orbit.push_back(base);
    l.pos[base] = 0;
    l.rep.push_back(perm_identity(degree_));
    l.rep_inv.push_back(perm_identity(degree_));
    levels_.push_back(std::move(l));
}

void PermGroup::grow_orbit(Level& l) {
    for (std::size_t i = 0; i < l.orbit.size(); ++i) {
        const std::size_t first_gen = i < l.expanded_points ? l.expanded_gens : 0;
        for (std::size_t gi = first_gen; gi < l.gens.size(); ++gi) {
            const Perm& s = strong_[l.gens[gi]];
            const Point y = s[l.orbit[i]];
            if (l.pos[y] >= 0) continue;
            l.pos[y] = static_cast<std::int32_t>(l.orbit.size());
            l.orbit.push_back(y);
            l.rep.push_back(perm_mul(l.rep[i], s));
            l.rep_inv.push_back(perm_mul(strong_inv_[l.gens[gi]], l.rep_inv[i]));
        }
    }
    l.expanded_points = l.orbit.size();
    l.expanded_gens = l.gens.size();
}

std::pair<Perm, std::size_t> PermGroup::sift(Perm g, std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
        const Level& l = levels_[i];
        const std::int32_t p = l.pos[g[l.base]];
        if (p < 0) return {std::move(g), i};
        g = perm_mul(g, l.rep_inv[static_cast<std::size_t>(p)]);
    }
    return {std::move(g), levels_.size()};
}

void PermGroup::add_strong(const Perm& h, std::size_t from, std::size_t to) {
    if (to == levels_.size()) {
        Point moved = 0;
        while (h[moved] == moved) ++moved;
        new_level(moved);
    }
    strong_.push_back(h);
    strong_inv_.push_back(perm_inv(h));
    const auto idx = static_cast<std::uint32_t>(strong_.size() - 1);
    for (std::size_t i = from; i <= to; ++i) {
        levels_[i].gens.push_back(idx);
        grow_orbit(levels_[i]);
    }
}

void PermGroup::check_cap(std::uint64_t order_cap) const {
    if (order_cap == kNoCap) return;
    long double prod = 1;
    for (const auto& l : levels_) prod *= static_cast<long double>(l.orbit.size());
    if (prod > static_cast<long double>(order_cap)) {
        throw CapExceeded("group order exceeds the cap " + std::to_string(order_cap), "");
    }
}

void PermGroup::build(std::uint64_t order_cap) {
    for (const auto& g : generators_) {
        auto [h, j] = sift(g, 0);
        if (perm_is_identity(h)) continue;
        add_strong(h, 0, j);
        check_cap(order_cap);

        std::size_t i = levels_.size();
        while (i-- > 0) {
            Level& l = levels_[i];
            bool restarted = false;
            for (std::size_t xi = 0; !restarted && xi < l.orbit.size(); ++xi) {
                for (std::size_t si = 0; si < l.gens.size(); ++si) {
                    if (xi < l.done_points && si < l.done_gens) continue;
                    const Perm& s = strong_[l.gens[si]];
                    const Point y = s[l.orbit[xi]];
                    Perm schreier = perm_mul(perm_mul(l.rep[xi], s), l.rep_inv[static_cast<std::size_t>(l.pos[y])]);
                    auto [r, stop] = sift(std::move(schreier), i + 1);
                    if (perm_is_identity(r)) continue;
                    add_strong(r, i + 1, stop);
                    check_cap(order_cap);
                    i = stop + 1;
                    restarted = true;
                    break;
                }
            }
            if (restarted) {
                if (i > levels_.size()) i = levels_.size();
                continue;
            }
            levels_[i].done_points = levels_[i].orbit.size();
            levels_[i].done_gens = levels_[i].gens.size();
        }
    }

    strides_.assign(levels_.size(), 1);
    order_ = 1;
    for (std::size_t i = levels_.size(); i-- > 0;) {
        strides_[i] = order_;
        order_ *= levels_[i].orbit.size();
    }
}

bool PermGroup::contains(const Perm& g) const {
    if (g.size() != degree_) return false;
    return perm_is_identity(sift(g, 0).first);
}

std::vector<std::uint32_t> PermGroup::digits(std::uint64_t index) const {
    std::vector<std::uint32_t> d(levels_.size());
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        d[i] = static_cast<std::uint32_t>(index / strides_[i]);
        index %= strides_[i];
    }
    return d;
}

std::uint64_t PermGroup::index_of_base_images(std::vector<Point>& images) const {
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        const std::int32_t p = levels_[i].pos[images[i]];
        if (p < 0) throw DomainError("element is not in the group");
        index += static_cast<std::uint64_t>(p) * strides_[i];
        const Perm& inv = levels_[i].rep_inv[static_cast<std::size_t>(p)];
        for (std::size_t j = i + 1; j < levels_.size(); ++j) images[j] = inv[images[j]];
    }
    return index;
}

std::uint64_t PermGroup::index_of(const Perm& g) const {
    if (!contains(g)) throw DomainError("element is not in the group");
    std::vector<Point> images;
    for (const auto& l : levels_) images.push_back(g[l.base]);
    return index_of_base_images(images);
}

Point PermGroup::apply(const std::vector<std::uint32_t>& d, Point x) const {
    for (std::size_t i = levels_.size(); i-- > 0;) x = levels_[i].rep[d[i]][x];
    return x;
}

Perm PermGroup::element(std::uint64_t index) const {
    const auto d = digits(index);
    Perm g = perm_identity(degree_);
    for (std::size_t i = levels_.size(); i-- > 0;) g = perm_mul(g, levels_[i].rep[d[i]]);
    return g;
}

std::uint64_t PermGroup::element_order(const std::vector<std::uint32_t>& d) const {
    std::uint64_t order = 1;
    for (const auto& l : levels_) {
        std::uint64_t len = 0;
        Point y = l.base;
        do {
            y = apply(d, y);
            ++len;
        } while (y != l.base);
        order = std::lcm(order, len);
    }
    return order;
}

}  // namespace lieord::oracle
