#include "crcodes/lloyd.hpp"

#include <numeric>

#include "crcodes/errors.hpp"

namespace crc {

IntersectionMatrix intersection_matrix(const IntersectionArray& ia) {
    int k = ia.rho() + 1;
    IntersectionMatrix m;
    m.A.assign(k, std::vector<std::int64_t>(k, 0));
    for (int l = 0; l < k; ++l) {
        if (l > 0) m.A[l][l - 1] = ia.c_at(l);
        m.A[l][l] = ia.a_at(l);
        if (l + 1 < k) m.A[l][l + 1] = ia.b_at(l);
    }
    return m;
}

namespace {

using IntPoly = std::vector<BigInt>;

IntPoly mul_linear(const IntPoly& p, const BigInt& shift) {  // p * (x - shift)
    IntPoly out(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i + 1] += p[i];
        out[i] -= shift * p[i];
    }
    return out;
}

BigInt eval(const IntPoly& p, const BigInt& x) {
    BigInt acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// p / (x - r), assuming exact.
IntPoly deflate(const IntPoly& p, const BigInt& r) {
    IntPoly out(p.size() - 1, 0);
    BigInt carry = 0;
    for (std::size_t i = p.size(); i-- > 1;) {
        carry = carry * r + p[i];
        out[i - 1] = carry;
    }
    return out;
}

}  // namespace

std::vector<BigInt> characteristic_polynomial(const IntersectionArray& ia) {
    // f_k = (x - a_k) f_{k-1} - b_{k-1} c_k f_{k-2}
    IntPoly prev{1}, cur = mul_linear(IntPoly{1}, ia.a_at(0));
    for (int k = 1; k <= ia.rho(); ++k) {
        IntPoly next = mul_linear(cur, ia.a_at(k));
        BigInt bc = BigInt(ia.b_at(k - 1)) * ia.c_at(k);
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= bc * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

EigenvalueReport eigenvalue_membership_test(const IntersectionArray& ia, bool strict) {
    EigenvalueReport rep;
    rep.strict = strict;
    rep.needed = strict ? ia.rho() + 1 : ia.rho();
    IntPoly p = characteristic_polynomial(ia);
    for (int j = 0; j <= ia.n && p.size() > 1; ++j) {
        std::int64_t lam = static_cast<std::int64_t>(ia.q - 1) * ia.n - static_cast<std::int64_t>(ia.q) * j;
        while (p.size() > 1 && eval(p, lam) == 0) {
            p = deflate(p, lam);
            rep.eigenvalues.emplace_back(j, lam);
        }
    }
    rep.found = static_cast<int>(rep.eigenvalues.size());
    rep.pass = rep.found >= rep.needed;
    return rep;
}

Rational lloyd_polynomial(int n, int q, const PackingParameters& beta, const Rational& xi) {
    Rational acc = 0;
    for (std::size_t r = 0; r < beta.size(); ++r)
        if (beta[r] != 0) acc += beta[r] * krawtchouk(n, q, static_cast<long long>(r), xi);
    return acc;
}

LloydReport lloyd_roots(int n, int q, const PackingParameters& beta) {
    LloydReport rep;
    if (beta.empty()) return rep;
    int rho = static_cast<int>(beta.size()) - 1;
    for (int xi = 0; xi <= n; ++xi) {
        Rational acc = 0;
        for (int r = 0; r <= rho; ++r)
            if (beta[r] != 0) acc += beta[r] * Rational(krawtchouk(n, q, r, xi));
        if (acc == 0) rep.roots.push_back(xi);
    }
    rep.pass = static_cast<int>(rep.roots.size()) == rho;
    return rep;
}

bool cardinality_identity(const BigInt& size, int n, int q, const PackingParameters& beta) {
    Rational total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i)
        total += beta[i] * Rational(big_pow(q - 1, static_cast<long long>(i)) * binomial(n, static_cast<long long>(i)));
    return total * Rational(size) == Rational(big_pow(q, n));
}

bool cardinality_identity(const Code& c, const PackingParameters& beta) {
    return cardinality_identity(c.size(), c.n(), c.q(), beta);
}

// ------------------------------------------------------------- rho = 1 bounds

namespace {

bool is_pow2(long long x) { return x > 0 && (x & (x - 1)) == 0; }

bool divisible_pair(int b, int c) {
    if (b <= 0 || c <= 0) return false;
    return is_pow2((b + c) / std::gcd(b, c));
}

std::optional<int> upper_rec(int b, int c, int depth) {
    if (!divisible_pair(b, c) || depth > 64) return std::nullopt;
    std::optional<int> best;
    auto take = [&](std::optional<int> v) {
        if (v && (!best || *v < *best)) best = v;
    };
    if (b >= c && b % c == 0) take(0);  // divisibility makes (b+c)/c a power of two
    if (is_pow2(b + c)) take(c - 1);    // c translates of a perfect code of length b+c-1
    if (b < c) {
        auto v = upper_rec(c, b, depth + 1);
        if (v) take(*v + c - b);
    }
    if (b > c && (b - c) % 2 == 0) {
        auto v = upper_rec((b - c) / 2, c, depth + 1);
        if (v) take(std::max(0, *v - 1));
    }
    return best;
}

}  // namespace

std::optional<int> a_star_upper(int b, int c) { return upper_rec(b, c, 0); }

int a_star_lower(int b, int c) {
    int lo = 0;
    if (c < b && b < 2 * c) {
        // a >= 1/2 + sqrt(c(b-c) + 1/4) - (b-c)  <=>  (2(a+b-c)-1)^2 >= 4c(b-c)+1 with 2(a+b-c)-1 >= 0
        BigInt rhs = BigInt(4) * c * (b - c) + 1;
        int a = 0;
        while (true) {
            BigInt L = BigInt(2) * (a + b - c) - 1;
            if (L >= 0 && L * L >= rhs) break;
            ++a;
        }
        lo = std::max(lo, a);
    }
    if (2 * c < b) {
        long long d = b - 2 * c;
        if (d * d < 3LL * c - 2) lo = std::max(lo, 1);
    }
    return lo;
}

Rho1Report rho1_bounds(int b, int c, int n) {
    Rho1Report rep;
    rep.b = b;
    rep.c = c;
    rep.n = n;
    rep.a = n - b;
    auto add = [&](std::string name, bool applicable, bool pass, std::string detail) {
        rep.checks.push_back({std::move(name), applicable, pass, std::move(detail)});
    };
    bool nonzero = b != 0 && c != 0;
    add("nonzero", true, nonzero, nonzero ? "b ≠ 0 ≠ c" : "violates b ≠ 0 ≠ c");
    bool positive = b >= 0 && c >= 0;
    add("length", true, positive && rep.a >= 0, "a = n - b = " + std::to_string(rep.a));
    if (nonzero && positive) {
        int g = std::gcd(b, c);
        bool div = is_pow2((b + c) / g);
        add("divisibility", true, div, "(b+c)/gcd(b,c) = " + std::to_string((b + c) / g));
        if (b != c) {
            bool ok = 3LL * (c - rep.a) <= n;
            add("correlation_immunity", true, ok,
                "c - a = " + std::to_string(c - rep.a) + ", n/3 = " + std::to_string(n) + "/3");
        } else {
            add("correlation_immunity", false, true, "b = c");
        }
        int lo = a_star_lower(b, c);
        rep.a_star_lower = lo;
        add("a_star_lower", true, rep.a >= lo, "a* >= " + std::to_string(lo));
        if (div) {
            rep.a_star_upper = a_star_upper(b, c);
            if (rep.a_star_upper)
                add("a_star_upper", true, true,
                    "a* <= " + std::to_string(*rep.a_star_upper) +
                        (rep.a >= *rep.a_star_upper ? ", a code exists" : ", existence open"));
        }
    }
    rep.pass = true;
    for (const auto& ch : rep.checks)
        if (ch.applicable && !ch.pass) rep.pass = false;
    return rep;
}

bool design_existence_guard(const IntersectionArray& ia) {
    if (ia.n <= 0 || ia.q < 2) return false;
    if (ia.b.size() != ia.c.size()) return false;
    std::int64_t deg = static_cast<std::int64_t>(ia.n) * (ia.q - 1);
    for (int l = 0; l <= ia.rho(); ++l) {
        if (l < ia.rho() && (ia.b_at(l) <= 0 || ia.b_at(l) > deg)) return false;
        if (l > 0 && (ia.c_at(l) <= 0 || ia.c_at(l) > deg)) return false;
        if (ia.a_at(l) < 0) return false;
    }
    return true;
}

}  // namespace crc
