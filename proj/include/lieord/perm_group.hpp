#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace lieord::oracle {

using Point = std::uint32_t;
// p[x] is the image of x; products act left to right: x^(ab) = (x^a)^b.
using Perm = std::vector<Point>;

Perm perm_identity(std::size_t degree);
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inv(const Perm& a);
bool perm_is_identity(const Perm& a);
std::uint64_t perm_order(const Perm& a);

// Permutation group with a stabilizer chain; elements are indexed 0..order-1.
class PermGroup {
public:
    static constexpr std::uint64_t kNoCap = std::numeric_limits<std::uint64_t>::max();

    // Throws CapExceeded once the order is known to pass order_cap.
    PermGroup(std::size_t degree, std::vector<Perm> generators, std::uint64_t order_cap = kNoCap);

    std::size_t degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return generators_; }
    std::uint64_t order() const { return order_; }
    std::size_t base_length() const { return levels_.size(); }
    std::vector<Point> base() const;

    bool contains(const Perm& g) const;

    // Digits of an element: orbit positions, level 0 first.
    std::vector<std::uint32_t> digits(std::uint64_t index) const;
    std::uint64_t index_of(const Perm& g) const;
    // Consumes the images of the base points under g.
    std::uint64_t index_of_base_images(std::vector<Point>& images) const;
    Perm element(std::uint64_t index) const;
    Point apply(const std::vector<std::uint32_t>& digits, Point x) const;
    std::uint64_t element_order(const std::vector<std::uint32_t>& digits) const;

private:
    struct Level {
        Point base = 0;
        std::vector<std::uint32_t> gens;  // indices into strong_
        std::vector<Point> orbit;
        std::vector<std::int32_t> pos;    // position in orbit, -1 if absent
        std::vector<Perm> rep;            // rep[i] maps base to orbit[i]
        std::vector<Perm> rep_inv;
        std::size_t expanded_points = 0;
        std::size_t expanded_gens = 0;
        std::size_t done_points = 0;
        std::size_t done_gens = 0;
    };

    void new_level(Point base);
    void grow_orbit(Level& level);
    // Returns the residue and the level where sifting stopped.
    std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const;
    void add_strong(const Perm& h, std::size_t from, std::size_t to);
    void build(std::uint64_t order_cap);
    void check_cap(std::uint64_t order_cap) const;

    std::size_t degree_;
    std::vector<Perm> generators_;
    std::vector<Perm> strong_;
    std::vector<Perm> strong_inv_;
    std::vector<Level> levels_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t order_ = 1;
};

}  // namespace lieord::oracle
