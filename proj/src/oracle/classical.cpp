#include "lieord/errors.hpp"
#include "lieord/finite_field.hpp"
#include "lieord/oracle.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <numeric>
#include <random>

namespace lieord::oracle {

namespace {

using Elt = FiniteField::Elt;
using Vec = std::vector<Elt>;
using Mat = std::vector<Elt>;  // row-major; x -> x M

enum class Form { None, Symplectic, Hermitian, QuadPlus, QuadMinus, QuadOdd };
enum class Depth { General, Special, Omega };

struct KindTraits {
    ClassicalKind kind;
    std::string_view name;
    Form form;
    Depth depth;
    bool projective;
};

constexpr std::array<KindTraits, 19> kKinds{{
    {ClassicalKind::GL, "GL", Form::None, Depth::General, false},
    {ClassicalKind::SL, "SL", Form::None, Depth::Special, false},
    {ClassicalKind::PSL, "PSL", Form::None, Depth::Special, true},
    {ClassicalKind::GU, "GU", Form::Hermitian, Depth::General, false},
    {ClassicalKind::SU, "SU", Form::Hermitian, Depth::Special, false},
    {ClassicalKind::PSU, "PSU", Form::Hermitian, Depth::Special, true},
    {ClassicalKind::Sp, "Sp", Form::Symplectic, Depth::Special, false},
    {ClassicalKind::PSp, "PSp", Form::Symplectic, Depth::Special, true},
    {ClassicalKind::GO, "GO", Form::QuadOdd, Depth::General, false},
    {ClassicalKind::SO, "SO", Form::QuadOdd, Depth::Special, false},
    {ClassicalKind::Omega, "Omega", Form::QuadOdd, Depth::Omega, false},
    {ClassicalKind::GOplus, "GOplus", Form::QuadPlus, Depth::General, false},
    {ClassicalKind::SOplus, "SOplus", Form::QuadPlus, Depth::Special, false},
    {ClassicalKind::OmegaPlus, "OmegaPlus", Form::QuadPlus, Depth::Omega, false},
    {ClassicalKind::POmegaPlus, "POmegaPlus", Form::QuadPlus, Depth::Omega, true},
    {ClassicalKind::GOminus, "GOminus", Form::QuadMinus, Depth::General, false},
    {ClassicalKind::SOminus, "SOminus", Form::QuadMinus, Depth::Special, false},
    {ClassicalKind::OmegaMinus, "OmegaMinus", Form::QuadMinus, Depth::Omega, false},
    {ClassicalKind::POmegaMinus, "POmegaMinus", Form::QuadMinus, Depth::Omega, true},
}};

const KindTraits& traits(ClassicalKind kind) {
    for (const auto& t : kKinds) {
        if (t.kind == kind) return t;
    }
    throw DomainError("unknown classical kind");
}

bool is_quadratic(Form f) { return f == Form::QuadPlus || f == Form::QuadMinus || f == Form::QuadOdd; }

void check_dimension(const KindTraits& t, unsigned n, const BigNat& q) {
    const std::string what = std::string(t.name) + "(" + std::to_string(n) + "," + q.str() + ")";
    if (!prime_power_split(q)) throw DomainError(what + ": q must be a prime power");
    switch (t.form) {
        case Form::None:
            if (n < 1) throw DomainError(what + ": dimension must be positive");
            break;
        case Form::Hermitian:
            if (n < 2) throw DomainError(what + ": unitary groups need dimension at least 2");
            break;
        case Form::Symplectic:
        case Form::QuadPlus:
        case Form::QuadMinus:
            if (n < 2 || n % 2 != 0) throw DomainError(what + ": dimension must be even and positive");
            break;
        case Form::QuadOdd:
            if (n < 3 || n % 2 != 1) throw DomainError(what + ": dimension must be odd and at least 3");
            if (q % 2 == 0) throw DomainError(what + ": odd-dimensional orthogonal groups need odd q");
            break;
    }
}

class Geometry {
public:
    Geometry(const FiniteField& f, unsigned n, Form form) : f_(f), n_(n), form_(form) {
        if (form == Form::Hermitian) conj_k_ = f.degree() / 2;
        if (form == Form::QuadMinus) choose_anisotropic();
    }

    const FiniteField& field() const { return f_; }
    unsigned n() const { return n_; }
    Form form() const { return form_; }

    Elt conj(Elt a) const { return f_.frobenius(a, conj_k_); }

    Elt quad(const Vec& x) const {
        const unsigned m = n_ / 2;
        Elt s = 0;
        const unsigned hyperbolic = form_ == Form::QuadMinus ? m - 1 : m;
        for (unsigned i = 0; i < hyperbolic; ++i) s = f_.add(s, f_.mul(x[i], x[n_ - 1 - i]));
        if (form_ == Form::QuadOdd) s = f_.add(s, f_.mul(x[m], x[m]));
        if (form_ == Form::QuadMinus) {
            const Elt a = x[m - 1], b = x[m];
            s = f_.add(s, f_.add(f_.mul(a, a), f_.add(f_.mul(t_, f_.mul(a, b)), f_.mul(c_, f_.mul(b, b)))));
        }
        return s;
    }

    Elt bilinear(const Vec& x, const Vec& y) const {
        const unsigned m = n_ / 2;
        Elt s = 0;
        switch (form_) {
            case Form::Symplectic:
                for (unsigned i = 0; i < m; ++i) {
                    s = f_.add(s, f_.sub(f_.mul(x[i], y[n_ - 1 - i]), f_.mul(x[n_ - 1 - i], y[i])));
                }
                return s;
            case Form::Hermitian:
                for (unsigned i = 0; i < n_; ++i) s = f_.add(s, f_.mul(x[i], conj(y[n_ - 1 - i])));
                return s;
            case Form::None:
                throw DomainError("no form");
            default: {
                Vec xy(n_);
                for (unsigned i = 0; i < n_; ++i) xy[i] = f_.add(x[i], y[i]);
                return f_.sub(f_.sub(quad(xy), quad(x)), quad(y));
            }
        }
    }

    bool isotropic(const Vec& v) const {
        if (form_ == Form::Hermitian) return bilinear(v, v) == 0;
        if (is_quadratic(form_)) return quad(v) == 0;
        return true;
    }

private:
    void choose_anisotropic() {
        const unsigned q = f_.order();
        for (unsigned t = 0; t < q; ++t) {
            for (unsigned c = 1; c < q; ++c) {
                bool anisotropic = true;
                for (unsigned y = 0; y < q && anisotropic; ++y) {
                    // x^2 + t x + c has no root, checked against x = y.
                    const Elt v = f_.add(f_.mul(y, y), f_.add(f_.mul(t, y), c));
                    if (v == 0) anisotropic = false;
                }
                if (anisotropic) {
                    t_ = static_cast<Elt>(t);
                    c_ = static_cast<Elt>(c);
                    return;
                }
            }
        }
        throw DomainError("no anisotropic binary form");
    }

    const FiniteField& f_;
    unsigned n_;
    Form form_;
    unsigned conj_k_ = 0;
    Elt t_ = 0, c_ = 0;
};

Vec axpy(const FiniteField& f, Vec x, Elt c, const Vec& v) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = f.add(x[i], f.mul(c, v[i]));
    return x;
}

Vec unit(unsigned n, unsigned i) {
    Vec e(n, 0);
    e[i] = 1;
    return e;
}

Mat matrix_of(unsigned n, const std::function<Vec(const Vec&)>& map) {
    Mat m(static_cast<std::size_t>(n) * n);
    for (unsigned i = 0; i < n; ++i) {
        const Vec row = map(unit(n, i));
        std::copy(row.begin(), row.end(), m.begin() + static_cast<std::ptrdiff_t>(i) * n);
    }
    return m;
}

Mat diagonal(unsigned n, const Vec& d) {
    Mat m(static_cast<std::size_t>(n) * n, 0);
    for (unsigned i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = d[i];
    return m;
}

Mat mat_mul(const FiniteField& f, unsigned n, const Mat& a, const Mat& b) {
    Mat c(static_cast<std::size_t>(n) * n, 0);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned k = 0; k < n; ++k) {
            const Elt aik = a[static_cast<std::size_t>(i) * n + k];
            if (aik == 0) continue;
            for (unsigned j = 0; j < n; ++j) {
                auto& cij = c[static_cast<std::size_t>(i) * n + j];
                cij = f.add(cij, f.mul(aik, b[static_cast<std::size_t>(k) * n + j]));
            }
        }
    }
    return c;
}

// Enumerates F^n in code order, code = sum x_i |F|^i.
class VectorSpace {
public:
    VectorSpace(const FiniteField& f, unsigned n) : f_(f), n_(n) {
        total_ = 1;
        for (unsigned i = 0; i < n; ++i) {
            total_ *= f.order();
            if (total_ > (1u << 24)) throw DomainError("vector space is too large for the oracle");
        }
    }
    std::uint64_t size() const { return total_; }
    Vec decode(std::uint64_t code) const {
        Vec v(n_);
        for (unsigned i = 0; i < n_; ++i) {
            v[i] = static_cast<Elt>(code % f_.order());
            code /= f_.order();
        }
        return v;
    }
    std::uint64_t encode(const Vec& v) const {
        std::uint64_t code = 0;
        for (unsigned i = n_; i-- > 0;) code = code * f_.order() + v[i];
        return code;
    }
    bool normalized(const Vec& v) const {
        for (Elt x : v) {
            if (x != 0) return x == 1;
        }
        return false;
    }
    Vec normalize(Vec v) const {
        for (Elt x : v) {
            if (x == 0) continue;
            const Elt s = f_.inv(x);
            for (auto& y : v) y = f_.mul(y, s);
            break;
        }
        return v;
    }

private:
    const FiniteField& f_;
    unsigned n_;
    std::uint64_t total_ = 1;
};

std::vector<std::vector<Point>> orbits_of(std::size_t degree, const std::vector<Perm>& gens) {
    std::vector<std::int32_t> label(degree, -1);
    std::vector<std::vector<Point>> out;
    for (Point start = 0; start < degree; ++start) {
        if (label[start] >= 0) continue;
        const auto id = static_cast<std::int32_t>(out.size());
        std::vector<Point> orbit{start};
        label[start] = id;
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            for (const auto& g : gens) {
                const Point y = g[orbit[i]];
                if (label[y] < 0) {
                    label[y] = id;
                    orbit.push_back(y);
                }
            }
        }
        out.push_back(std::move(orbit));
    }
    return out;
}

std::vector<Perm> restrict_to(const std::vector<Perm>& gens, const std::vector<Point>& orbit, std::size_t degree) {
    std::vector<Point> index(degree, 0);
    for (std::size_t i = 0; i < orbit.size(); ++i) index[orbit[i]] = static_cast<Point>(i);
    std::vector<Perm> out;
    for (const auto& g : gens) {
        Perm r(orbit.size());
        for (std::size_t i = 0; i < orbit.size(); ++i) r[i] = index[g[orbit[i]]];
        out.push_back(std::move(r));
    }
    return out;
}

// Permutation group from matrices acting on the chosen vectors or points.
SmallGroup realize(std::string name, const Geometry& geo, std::vector<Mat> gens, bool projective,
                   const BigNat& expected, std::uint64_t cap) {
    const FiniteField& f = geo.field();
    const unsigned n = geo.n();
    const VectorSpace space(f, n);

    bool any_isotropic = false;
    for (std::uint64_t code = 1; code < space.size() && !any_isotropic; ++code) {
        any_isotropic = geo.isotropic(space.decode(code));
    }
    // In dimension 2 the isotropic points of a quadratic form need not carry a faithful action.
    const bool use_isotropic = geo.form() != Form::None && any_isotropic && (n > 2 || !is_quadratic(geo.form()));

    std::vector<std::int32_t> index(space.size(), -1);
    std::vector<Vec> points;
    for (std::uint64_t code = 1; code < space.size(); ++code) {
        Vec v = space.decode(code);
        if (projective && !space.normalized(v)) continue;
        if (use_isotropic && !geo.isotropic(v)) continue;
        index[code] = static_cast<std::int32_t>(points.size());
        points.push_back(std::move(v));
    }
    if (points.empty()) throw DomainError(name + ": no points to act on");

    std::mt19937 rng(20240601);
    std::shuffle(gens.begin(), gens.end(), rng);

    std::vector<Perm> perms;
    for (const auto& m : gens) {
        Perm p(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) {
            Vec w(n, 0);
            for (unsigned r = 0; r < n; ++r) {
                const Elt x = points[i][r];
                if (x == 0) continue;
                for (unsigned c = 0; c < n; ++c) w[c] = f.add(w[c], f.mul(x, m[static_cast<std::size_t>(r) * n + c]));
            }
            if (projective) w = space.normalize(std::move(w));
            const std::int32_t j = index[space.encode(w)];
            if (j < 0) throw Error(name + ": a generator does not preserve the point set");
            p[i] = static_cast<Point>(j);
        }
        if (!perm_is_identity(p)) perms.push_back(std::move(p));
    }
    // A shuffled prefix usually generates already.
    for (std::size_t take = 8; take < perms.size(); take *= 2) {
        const PermGroup trial(points.size(), {perms.begin(), perms.begin() + static_cast<std::ptrdiff_t>(take)}, cap);
        if (trial.order() == expected) {
            perms.resize(take);
            break;
        }
    }
    return from_permutations(std::move(name), points.size(), std::move(perms), cap);
}

std::vector<Elt> subfield_basis(const FiniteField& f, unsigned sub_order) {
    // Powers of a primitive element of GF(sub_order) inside f.
    unsigned p = f.characteristic(), e = 0;
    for (unsigned x = sub_order; x > 1; x /= p) ++e;
    const Elt theta = f.power_of_primitive((f.order() - 1) / (sub_order - 1));
    std::vector<Elt> basis;
    Elt cur = 1;
    for (unsigned k = 0; k < e; ++k) {
        basis.push_back(cur);
        cur = f.mul(cur, theta);
    }
    return basis;
}

std::vector<Vec> projective_points(const FiniteField& f, unsigned n) {
    const VectorSpace space(f, n);
    std::vector<Vec> out;
    for (std::uint64_t code = 1; code < space.size(); ++code) {
        Vec v = space.decode(code);
        if (space.normalized(v)) out.push_back(std::move(v));
    }
    return out;
}

std::vector<Mat> linear_generators(const FiniteField& f, unsigned n, Depth depth) {
    std::vector<Mat> gens;
    const auto basis = subfield_basis(f, f.order());
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            if (i == j) continue;
            for (Elt c : basis) {
                Mat m = diagonal(n, Vec(n, 1));
                m[static_cast<std::size_t>(i) * n + j] = c;
                gens.push_back(std::move(m));
            }
        }
    }
    if (depth == Depth::General && f.order() > 2) {
        Vec d(n, 1);
        d[0] = f.primitive();
        gens.push_back(diagonal(n, d));
    }
    return gens;
}

std::vector<Mat> symplectic_generators(const Geometry& geo) {
    const auto& f = geo.field();
    std::vector<Mat> gens;
    const auto basis = subfield_basis(f, f.order());
    for (const auto& v : projective_points(f, geo.n())) {
        for (Elt c : basis) {
            gens.push_back(matrix_of(geo.n(), [&](const Vec& x) { return axpy(f, x, f.mul(c, geo.bilinear(x, v)), v); }));
        }
    }
    return gens;
}

std::vector<Mat> unitary_generators(const Geometry& geo, unsigned q, Depth depth) {
    const auto& f = geo.field();
    const unsigned n = geo.n();
    // a0 with a0^q = -a0 spans the trace-zero line over GF(q).
    const Elt a0 = q % 2 == 0 ? Elt{1} : f.power_of_primitive((q + 1) / 2);
    std::vector<Mat> gens;
    const auto basis = subfield_basis(f, q);
    for (const auto& v : projective_points(f, n)) {
        if (!geo.isotropic(v)) continue;
        for (Elt c : basis) {
            const Elt a = f.mul(a0, c);
            gens.push_back(matrix_of(n, [&](const Vec& x) { return axpy(f, x, f.mul(a, geo.bilinear(x, v)), v); }));
        }
    }
    // Transvections alone miss SU(3,2); add products r_(v0,z) r_(w,1/z) of quasi-reflections
    // x -> x + (z - 1) h(x,v)/h(v,v) v with z of norm one.
    const Elt lambda = f.primitive();
    const Elt zeta = f.pow(lambda, q - 1);
    auto quasi = [&](const Vec& v, Elt z) {
        const Elt c = f.mul(f.sub(z, 1), f.inv(geo.bilinear(v, v)));
        return matrix_of(n, [&](const Vec& x) { return axpy(f, x, f.mul(c, geo.bilinear(x, v)), v); });
    };
    const Vec* anchor = nullptr;
    for (const auto& w : projective_points(f, n)) {
        if (q != 2 || geo.isotropic(w)) continue;
        if (!anchor) {
            anchor = &w;
            continue;
        }
        gens.push_back(mat_mul(f, n, quasi(*anchor, zeta), quasi(w, f.inv(zeta))));
    }
    if (depth == Depth::General) {
        Vec d(n, 1);
        d[0] = lambda;
        d[n - 1] = f.inv(f.pow(lambda, q));
        gens.push_back(diagonal(n, d));
    }
    return gens;
}

std::vector<Mat> orthogonal_generators(const Geometry& geo, Depth depth) {
    const auto& f = geo.field();
    const unsigned n = geo.n();
    const bool odd_q = f.characteristic() != 2;
    std::vector<Vec> nonsingular;
    for (const auto& v : projective_points(f, n)) {
        if (geo.quad(v) != 0) nonsingular.push_back(v);
    }
    if (nonsingular.empty()) throw DomainError("no nonsingular vectors");
    auto reflection = [&](const Vec& v) {
        const Elt s = f.neg(f.inv(geo.quad(v)));
        return matrix_of(n, [&](const Vec& x) { return axpy(f, x, f.mul(s, geo.bilinear(x, v)), v); });
    };

    std::vector<Mat> gens;
    if (geo.form() == Form::QuadPlus && n == 4 && f.order() == 2) {
        // Reflections do not generate O+(4,2); add the Eichler transformations.
        const VectorSpace space(f, n);
        for (const auto& u : projective_points(f, n)) {
            if (geo.quad(u) != 0) continue;
            for (std::uint64_t code = 1; code < space.size(); ++code) {
                const Vec w = space.decode(code);
                if (geo.bilinear(u, w) != 0) continue;
                gens.push_back(matrix_of(n, [&](const Vec& x) {
                    Vec y = axpy(f, x, geo.bilinear(x, u), w);
                    y = axpy(f, y, f.neg(geo.bilinear(x, w)), u);
                    return axpy(f, y, f.neg(f.mul(geo.quad(w), geo.bilinear(x, u))), u);
                }));
            }
        }
    }
    if (depth == Depth::General || (depth == Depth::Special && !odd_q)) {
        for (const auto& v : nonsingular) gens.push_back(reflection(v));
        return gens;
    }
    // Products of two reflections; for Omega with odd q both factors share a square class.
    std::vector<const Vec*> anchors{&nonsingular.front()};
    if (depth == Depth::Omega && odd_q) {
        const bool first_square = f.is_square(geo.quad(nonsingular.front()));
        for (const auto& v : nonsingular) {
            if (f.is_square(geo.quad(v)) != first_square) {
                anchors.push_back(&v);
                break;
            }
        }
    }
    for (const Vec* anchor : anchors) {
        const Mat ra = reflection(*anchor);
        const bool anchor_square = f.is_square(geo.quad(*anchor));
        for (const auto& v : nonsingular) {
            if (depth == Depth::Omega && odd_q && f.is_square(geo.quad(v)) != anchor_square) continue;
            gens.push_back(mat_mul(f, n, ra, reflection(v)));
        }
    }
    return gens;
}

std::uint64_t to_u64(const BigNat& x) {
    if (x > BigNat(std::numeric_limits<std::uint32_t>::max())) throw DomainError("field too large for the oracle");
    return static_cast<std::uint64_t>(x);
}

std::string group_label(std::string_view kind, unsigned n, const BigNat& q) {
    return std::string(kind) + "(" + std::to_string(n) + "," + q.str() + ")";
}

void check_cap(const std::string& name, const BigNat& order, std::uint64_t cap) {
    if (order > BigNat(cap)) {
        throw CapExceeded(name + " has order " + order.str() + ", above the cap " + std::to_string(cap), order.str());
    }
}

}  // namespace

std::string_view classical_kind_name(ClassicalKind kind) { return traits(kind).name; }

std::optional<ClassicalKind> parse_classical_kind(std::string_view name) {
    for (const auto& t : kKinds) {
        if (t.name == name) return t.kind;
    }
    return std::nullopt;
}

BigNat classical_order(ClassicalKind kind, unsigned n, const BigNat& q) {
    const auto& t = traits(kind);
    check_dimension(t, n, q);
    const unsigned m = n / 2;
    const bool odd_q = q % 2 == 1;
    BigNat order = 1;
    switch (t.form) {
        case Form::None: {
            order = pow(q, n * (n - 1) / 2);
            for (unsigned i = 1; i <= n; ++i) order *= pow(q, i) - 1;
            if (t.depth == Depth::General) return order;
            order /= q - 1;
            return t.projective ? order / gcd(BigNat(n), q - 1) : order;
        }
        case Form::Hermitian: {
            order = pow(q, n * (n - 1) / 2);
            for (unsigned i = 1; i <= n; ++i) order *= i % 2 == 1 ? pow(q, i) + 1 : pow(q, i) - 1;
            if (t.depth == Depth::General) return order;
            order /= q + 1;
            return t.projective ? order / gcd(BigNat(n), q + 1) : order;
        }
        case Form::Symplectic: {
            order = pow(q, m * m);
            for (unsigned i = 1; i <= m; ++i) order *= pow(q, 2 * i) - 1;
            return t.projective && odd_q ? order / 2 : order;
        }
        case Form::QuadOdd: {
            order = 2 * pow(q, m * m);
            for (unsigned i = 1; i <= m; ++i) order *= pow(q, 2 * i) - 1;
            if (t.depth == Depth::General) return order;
            return t.depth == Depth::Special ? order / 2 : order / 4;
        }
        case Form::QuadPlus:
        case Form::QuadMinus: {
            const bool plus = t.form == Form::QuadPlus;
            const BigNat qm = pow(q, m);
            order = 2 * pow(q, m * (m - 1)) * (plus ? qm - 1 : qm + 1);
            for (unsigned i = 1; i < m; ++i) order *= pow(q, 2 * i) - 1;
            if (t.depth == Depth::General) return order;
            if (t.depth == Depth::Special) return odd_q ? order / 2 : order;
            if (!odd_q) return order / 2;
            if (!t.projective) return order / 4;
            return order / (2 * gcd(BigNat(4), plus ? qm - 1 : qm + 1));
        }
    }
    return order;
}

SmallGroup build_classical(ClassicalKind kind, unsigned n, const BigNat& q, std::uint64_t cap) {
    const auto& t = traits(kind);
    const std::string name = group_label(t.name, n, q);
    const BigNat order = classical_order(kind, n, q);
    check_cap(name, order, cap);
    if (n > 8) throw DomainError(name + ": dimension above 8");

    const auto qq = static_cast<unsigned>(to_u64(q));
    if (t.form == Form::Hermitian) {
        if (static_cast<std::uint64_t>(qq) * qq > 1024) throw DomainError(name + ": field too large for the oracle");
        const FiniteField f(qq * qq);
        const Geometry geo(f, n, t.form);
        return realize(name, geo, unitary_generators(geo, qq, t.depth), t.projective, order, cap);
    }
    if (qq > 1024) throw DomainError(name + ": field too large for the oracle");
    // -1 has determinant -1 in odd dimension, so SO and Omega act faithfully on points.
    const bool on_points = t.projective || (t.form == Form::QuadOdd && t.depth != Depth::General);
    const FiniteField f(qq);
    const Geometry geo(f, n, t.form);
    switch (t.form) {
        case Form::None:
            return realize(name, geo, linear_generators(f, n, t.depth), t.projective, order, cap);
        case Form::Symplectic:
            return realize(name, geo, symplectic_generators(geo), t.projective, order, cap);
        default:
            return realize(name, geo, orthogonal_generators(geo, t.depth), on_points, order, cap);
    }
}

SmallGroup build_suzuki(const BigNat& Q, std::uint64_t cap) {
    const std::string name = "Sz(" + Q.str() + ")";
    const auto split = prime_power_split(Q);
    if (!split || split->first != 2 || split->second % 2 == 0) throw DomainError(name + ": Q must be an odd power of 2");
    const BigNat order = Q * Q * (Q * Q + 1) * (Q - 1);
    check_cap(name, order, cap);
    if (Q > 1024) throw DomainError(name + ": field too large for the oracle");

    const FiniteField f(static_cast<unsigned>(Q));
    const unsigned m = (split->second - 1) / 2;
    auto sigma = [&](Elt a) { return f.frobenius(a, m + 1); };
    auto S = [&](Elt a, Elt b) {
        const Elt r41 = f.add(f.add(f.mul(f.mul(a, a), sigma(a)), f.mul(a, b)), sigma(b));
        const Elt r42 = f.add(f.mul(a, sigma(a)), b);
        return Mat{1, 0, 0, 0, a, 1, 0, 0, b, sigma(a), 1, 0, r41, r42, a, 1};
    };
    std::vector<Mat> gens;
    for (Elt c : subfield_basis(f, f.order())) {
        gens.push_back(S(c, 0));
        gens.push_back(S(0, c));
    }
    const Elt lambda = f.primitive();
    const std::uint64_t s = std::uint64_t{1} << m;
    gens.push_back(diagonal(4, {f.pow(lambda, 1 + s), f.pow(lambda, s), f.inv(f.pow(lambda, s)),
                                f.inv(f.pow(lambda, 1 + s))}));
    gens.push_back(Mat{0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0});
    const Geometry geo(f, 4, Form::None);
    return realize(name, geo, std::move(gens), true, order, cap);
}

SmallGroup from_permutations(std::string name, std::size_t degree, std::vector<Perm> generators, std::uint64_t cap) {
    auto full = std::make_shared<PermGroup>(degree, generators, cap);
    SmallGroup g{std::move(name), full};
    if (degree <= 1 || generators.empty()) return g;

    // Keep the smallest orbit on which the action stays faithful.
    auto orbits = orbits_of(degree, generators);
    std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (const auto& orbit : orbits) {
        if (orbit.size() < 2 || orbit.size() == degree) continue;
        auto restricted = restrict_to(generators, orbit, degree);
        auto candidate = std::make_shared<PermGroup>(orbit.size(), std::move(restricted), full->order());
        if (candidate->order() == full->order()) {
            g.perm = candidate;
            break;
        }
    }
    return g;
}

SmallGroup symmetric_group(unsigned n) {
    if (n == 0) throw DomainError("Sym(0) is not supported");
    std::vector<Perm> gens;
    if (n >= 2) {
        Perm swap = perm_identity(n);
        std::swap(swap[0], swap[1]);
        Perm cycle(n);
        for (unsigned i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
        gens = {swap, cycle};
    }
    return {"Sym(" + std::to_string(n) + ")", std::make_shared<PermGroup>(n, gens)};
}

SmallGroup alternating_group(unsigned n) {
    if (n == 0) throw DomainError("Alt(0) is not supported");
    std::vector<Perm> gens;
    if (n >= 3) {
        Perm three = perm_identity(n);
        three[0] = 1;
        three[1] = 2;
        three[2] = 0;
        gens.push_back(three);
        // An (n-1)- or n-cycle of even sign.
        const unsigned start = n % 2 == 1 ? 0 : 1;
        Perm cycle = perm_identity(n);
        for (unsigned i = start; i < n; ++i) cycle[i] = i + 1 < n ? i + 1 : start;
        if (n > 3) gens.push_back(cycle);
    }
    return {"Alt(" + std::to_string(n) + ")", std::make_shared<PermGroup>(n, gens)};
}

SmallGroup cyclic_group(unsigned n) {
    if (n == 0) throw DomainError("C(0) is not supported");
    Perm cycle(n);
    for (unsigned i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    std::vector<Perm> gens;
    if (n > 1) gens.push_back(cycle);
    return {"C(" + std::to_string(n) + ")", std::make_shared<PermGroup>(n, gens)};
}

SmallGroup build_simple(const LieSpec& spec, std::uint64_t cap) {
    const unsigned d = spec.d;
    switch (spec.family) {
        case Family::A:
            return build_classical(ClassicalKind::PSL, d + 1, spec.q(), cap);
        case Family::A2:
            return build_classical(ClassicalKind::PSU, d + 1, spec.q(), cap);
        case Family::B:
            if (spec.q() % 2 == 0) return build_classical(ClassicalKind::PSp, 2 * d, spec.q(), cap);
            return build_classical(ClassicalKind::Omega, 2 * d + 1, spec.q(), cap);
        case Family::C:
            return build_classical(ClassicalKind::PSp, 2 * d, spec.q(), cap);
        case Family::D:
            return build_classical(ClassicalKind::POmegaPlus, 2 * d, spec.q(), cap);
        case Family::D2:
            return build_classical(ClassicalKind::POmegaMinus, 2 * d, spec.q(), cap);
        case Family::B2_2:
            return build_suzuki(spec.Q, cap);
        default:
            throw DomainError("the oracle has no construction for " + spec.name());
    }
}

namespace {

std::vector<unsigned> parse_args(std::string_view text, std::string_view whole) {
    std::vector<unsigned> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view part = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        unsigned v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
            throw DomainError("cannot parse group " + std::string(whole));
        }
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

SmallGroup parse_group(std::string_view text, std::uint64_t cap) {
    const std::size_t open = text.find('(');
    if (open == std::string_view::npos || text.back() != ')') throw DomainError("cannot parse group " + std::string(text));
    const std::string_view head = text.substr(0, open);
    const auto args = parse_args(text.substr(open + 1, text.size() - open - 2), text);

    if (auto kind = parse_classical_kind(head)) {
        if (args.size() != 2) throw DomainError("expected KIND(n,q): " + std::string(text));
        return build_classical(*kind, args[0], BigNat(args[1]), cap);
    }
    if (args.size() == 1) {
        if (head == "Sz") return build_suzuki(BigNat(args[0]), cap);
        if (head == "Sym") return symmetric_group(args[0]);
        if (head == "Alt") return alternating_group(args[0]);
        if (head == "C") return cyclic_group(args[0]);
    }
    // Catalog form: FAMILY_d(Q) or FAMILY(Q).
    const std::size_t underscore = head.find('_');
    const std::string_view family = head.substr(0, underscore);
    unsigned d = 0;
    if (underscore != std::string_view::npos) d = parse_args(head.substr(underscore + 1), text).at(0);
    if (args.size() == 1 && parse_family(family)) {
        return build_simple(make_spec(family, d, BigNat(args[0])), cap);
    }
    throw DomainError("cannot parse group " + std::string(text));
}

}  // namespace lieord::oracle
