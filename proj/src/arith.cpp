#include "lieord/arith.hpp"

#include "lieord/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace lieord {

namespace mp = boost::multiprecision;

BigNat parse_bignat(std::string_view text) {
    if (text.empty()) throw DomainError("empty integer literal");
    for (char c : text) {
        if (c < '0' || c > '9') throw DomainError("not a nonnegative integer: " + std::string(text));
    }
    return BigNat(std::string(text));
}

std::string to_string(const BigNat& n) { return n.str(); }

BigNat gcd(const BigNat& a, const BigNat& b) { return mp::gcd(a, b); }

BigNat pow(const BigNat& base, unsigned exponent) { return mp::pow(base, exponent); }

BigNat ceil_div(const BigNat& a, const BigNat& b) {
    if (b == 0) throw DomainError("division by zero");
    BigNat q, r;
    mp::divide_qr(a, b, q, r);
    if (r != 0) ++q;
    return q;
}

namespace {

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = primes_up_to(1 << 16);
    return primes;
}

BigNat mulmod(const BigNat& a, const BigNat& b, const BigNat& m) { return (a * b) % m; }

bool miller_rabin_round(const BigNat& n, const BigNat& d, unsigned s, const BigNat& a) {
    BigNat x = mp::powm(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

BigNat pollard_brent(const BigNat& n, std::uint64_t effort) {
    if (n % 2 == 0) return 2;
    std::uint64_t spent = 0;
    for (unsigned c = 1; c < 64; ++c) {
        BigNat y = 2, x, ys, g = 1, q = 1;
        std::uint64_t r = 1;
        const std::uint64_t m = 128;
        auto f = [&](const BigNat& v) { return (v * v + c) % n; };
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                std::uint64_t lim = std::min(m, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = mp::gcd(q, n);
                k += lim;
                spent += lim;
            }
            r *= 2;
            if (spent > effort) return 0;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = mp::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
    return 0;
}

void factor_rec(const BigNat& n, std::map<BigNat, unsigned>& out, const FactorOptions& opts) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    // Perfect powers defeat rho cheaply otherwise handled by recursion.
    for (unsigned k = static_cast<unsigned>(mp::msb(n)); k >= 2; --k) {
        BigNat r = integer_root(n, k);
        if (mp::pow(r, k) == n) {
            std::map<BigNat, unsigned> sub;
            factor_rec(r, sub, opts);
            for (auto& [p, e] : sub) out[p] += e * k;
            return;
        }
    }
    BigNat d = pollard_brent(n, opts.rho_effort);
    if (d == 0) throw CapacityError("factorization effort cap exceeded for " + n.str(), 0);
    factor_rec(d, out, opts);
    factor_rec(n / d, out, opts);
}

}  // namespace

bool is_probable_prime(const BigNat& n) {
    if (n < 2) return false;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    BigNat d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // The first 13 prime bases are deterministic below 3.3e24.
    for (unsigned a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u, 53u,
                       59u, 61u, 67u, 71u}) {
        if (n <= a) break;
        if (!miller_rabin_round(n, d, s, BigNat(a))) return false;
    }
    return true;
}

PrimePowerDecomposition factorize(const BigNat& n, const FactorOptions& opts) {
    if (n == 0) throw DomainError("factorize: n must be positive");
    std::map<BigNat, unsigned> found;
    BigNat rest = n;
    for (std::uint32_t p : small_primes()) {
        if (BigNat(p) * p > rest) break;
        if (rest % p == 0) {
            unsigned e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            found[BigNat(p)] = e;
        }
    }
    if (rest > 1) factor_rec(rest, found, opts);
    PrimePowerDecomposition out;
    for (auto& [p, e] : found) out.push_back({p, e});
    return out;
}

BigNat nr_divisors(const PrimePowerDecomposition& decomposition) {
    BigNat count = 1;
    for (const auto& pp : decomposition) count *= (pp.exponent + 1);
    return count;
}

BigNat nr_divisors(const BigNat& n, DivisorCountStats* stats) {
    if (n == 0) throw DomainError("nr_divisors: n must be at least 1");
    BigNat rest = n;
    BigNat count = 1;
    auto take = [&](const BigNat& p) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
            if (stats) ++stats->trial_divisions;
        }
        if (e > 0) {
            count *= (e + 1);
            if (stats) ++stats->product_terms;
        }
    };
    for (std::uint32_t p : small_primes()) {
        if (rest == 1 || BigNat(p) * p > rest) break;
        if (stats) ++stats->trial_divisions;
        if (rest % p == 0) take(BigNat(p));
    }
    if (rest > 1) {
        for (const auto& pp : factorize(rest)) {
            count *= (pp.exponent + 1);
            if (stats) ++stats->product_terms;
        }
    }
    return count;
}

std::vector<BigNat> divisors(const PrimePowerDecomposition& decomposition) {
    std::vector<BigNat> out{1};
    for (const auto& pp : decomposition) {
        const std::size_t base = out.size();
        BigNat power = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            power *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigNat lcm_list(std::span<const BigNat> values) {
    BigNat acc = 1;
    for (const BigNat& v : values) {
        if (v == 0) throw DomainError("lcm_list: entries must be positive");
        acc = acc / mp::gcd(acc, v) * v;
    }
    return acc;
}

BigNat lcm_list(std::initializer_list<BigNat> values) {
    return lcm_list(std::span<const BigNat>(values.begin(), values.size()));
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return out;
}

unsigned floor_log(const BigNat& base, const BigNat& n) {
    if (base < 2) throw DomainError("floor_log: base must be at least 2");
    if (n < 1) throw DomainError("floor_log: n must be at least 1");
    // Square the base while it still fits, then descend.
    std::vector<BigNat> squares{base};
    while (squares.back() * squares.back() <= n) squares.push_back(squares.back() * squares.back());
    unsigned e = 0;
    BigNat acc = 1;
    for (std::size_t i = squares.size(); i-- > 0;) {
        BigNat next = acc * squares[i];
        if (next <= n) {
            acc = next;
            e += 1u << i;
        }
    }
    return e;
}

unsigned ceil_log(const BigNat& base, const BigNat& n) {
    unsigned e = floor_log(base, n);
    return mp::pow(base, e) == n ? e : e + 1;
}

double log_big(const BigNat& n) {
    if (n <= 0) throw DomainError("log of a nonpositive integer");
    const unsigned bits = static_cast<unsigned>(mp::msb(n)) + 1;
    if (bits <= 63) return std::log(static_cast<double>(n.convert_to<std::uint64_t>()));
    const unsigned shift = bits - 64;
    const std::uint64_t top = static_cast<std::uint64_t>(n >> shift);
    // top/2^63 lies in [1,2).
    const double mantissa = std::ldexp(static_cast<double>(top), -63);
    return std::log(mantissa) + static_cast<double>(shift + 63) * std::numbers::ln2;
}

ApproxReal log_log(const BigNat& n) {
    if (n <= 2) throw DomainError("log_log: n must be at least 3");
    return std::log(log_big(n));
}

BigNat integer_root(const BigNat& n, unsigned k) {
    if (k == 0) throw DomainError("integer_root: k must be positive");
    if (n < 2 || k == 1) return n;
    const unsigned bits = static_cast<unsigned>(mp::msb(n)) + 1;
    BigNat lo = 1, hi = BigNat(1) << (bits / k + 1);
    while (lo < hi) {
        BigNat mid = (lo + hi + 1) / 2;
        if (mp::pow(mid, k) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

std::optional<std::pair<BigNat, unsigned>> prime_power_split(const BigNat& n) {
    if (n < 2) return std::nullopt;
    const unsigned bits = static_cast<unsigned>(mp::msb(n)) + 1;
    for (unsigned k = bits; k >= 1; --k) {
        BigNat r = integer_root(n, k);
        if (r >= 2 && mp::pow(r, k) == n && is_probable_prime(r)) return std::make_pair(r, k);
    }
    return std::nullopt;
}

}  // namespace lieord
