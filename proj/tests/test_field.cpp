#include <random>

#include "crcodes/errors.hpp"
#include "crcodes/field.hpp"
#include "doctest.h"

using namespace crc;

namespace {
std::vector<int> prime_powers() {
    std::vector<int> out;
    for (int q = 2; q <= 256; ++q) {
        try {
            prime_power(q);
            out.push_back(q);
        } catch (const DomainError&) {
        }
    }
    return out;
}
}  // namespace

TEST_CASE("every prime power up to 256 builds a field satisfying the axioms") {
    auto qs = prime_powers();
    CHECK(qs.size() == 70);
    std::mt19937 rng(7);
    for (int q : qs) {
        CAPTURE(q);
        auto f = gf(q);
        REQUIRE(f->q() == q);
        // alpha generates the multiplicative group
        std::vector<char> seen(q, 0);
        for (int k = 0; k < q - 1; ++k) seen[f->exp(k)] = 1;
        for (int a = 1; a < q; ++a) CHECK(seen[a]);
        for (int a = 1; a < q; ++a) CHECK(f->mul(static_cast<Elem>(a), f->inv(static_cast<Elem>(a))) == 1);
        std::uniform_int_distribution<int> d(0, q - 1);
        for (int t = 0; t < 500; ++t) {
            Elem a = static_cast<Elem>(d(rng)), b = static_cast<Elem>(d(rng)), c = static_cast<Elem>(d(rng));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
            CHECK(f->sub(f->add(a, b), b) == a);
            CHECK(f->trace(f->add(a, b)) == (f->trace(a) + f->trace(b)) % f->p());
        }
        // trace is onto the prime field
        std::vector<int> tc(f->p(), 0);
        for (int a = 0; a < q; ++a) ++tc[f->trace(static_cast<Elem>(a))];
        for (int v : tc) CHECK(v == q / f->p());
    }
}

TEST_CASE("non prime powers are rejected") {
    CHECK_THROWS_AS(gf(6), DomainError);
    CHECK_THROWS_AS(gf(1), DomainError);
    CHECK_THROWS_AS(gf(257), DomainError);
    CHECK_THROWS_AS(gf_checked(2, 3, {1, 0, 1, 1, 0}), DomainError);
}

TEST_CASE("subfield embedding is a ring homomorphism") {
    for (auto [s, b] : std::vector<std::pair<int, int>>{{2, 4}, {2, 8}, {4, 16}, {3, 9}, {2, 256}, {4, 64}, {8, 64}}) {
        CAPTURE(s);
        CAPTURE(b);
        SubfieldMap m(gf(s), gf(b));
        auto fs = gf(s);
        auto fb = gf(b);
        for (int x = 0; x < s; ++x)
            for (int y = 0; y < s; ++y) {
                Elem X = static_cast<Elem>(x), Y = static_cast<Elem>(y);
                CHECK(m(fs->add(X, Y)) == fb->add(m(X), m(Y)));
                CHECK(m(fs->mul(X, Y)) == fb->mul(m(X), m(Y)));
            }
        for (int x = 0; x < s; ++x) CHECK(m.preimage(m(static_cast<Elem>(x))) == x);
    }
    CHECK_THROWS_AS(SubfieldMap(gf(4), gf(8)), DomainError);
}

TEST_CASE("cyclotomic cosets partition Z_n") {
    auto cs = cyclotomic_cosets(15, 2);
    CHECK(cs.size() == 5);
    CHECK(cyclotomic_coset(1, 15, 2) == std::vector<int>{1, 2, 4, 8});
    CHECK(cyclotomic_coset(5, 15, 2) == std::vector<int>{5, 10});
    int total = 0;
    for (auto& c : cs) total += static_cast<int>(c.size());
    CHECK(total == 15);
}

TEST_CASE("minimal polynomials divide x^n - 1") {
    auto ext = gf(32);
    auto base = gf(2);
    Poly xn = poly_from(base, std::vector<int>(32, 0));
    xn.c.assign(32, 0);
    xn.c[0] = 1;
    xn.c[31] = 1;
    for (auto& cos : cyclotomic_cosets(31, 2)) {
        auto mp = minimal_polynomial(ext, 31, cos[0], base);
        CHECK(mp.degree() == static_cast<int>(cos.size()));
        Poly qt, r;
        poly_divmod(xn, mp, qt, r);
        CHECK(r.is_zero());
    }
}

TEST_CASE("Krawtchouk orthogonality and closed forms") {
    // sum_i C(n,i)(q-1)^i K_r(i) K_s(i) = q^n C(n,r)(q-1)^r delta_rs
    for (auto [n, q] : std::vector<std::pair<int, int>>{{7, 2}, {5, 3}, {6, 4}}) {
        for (int r = 0; r <= n; ++r)
            for (int s = 0; s <= n; ++s) {
                BigInt acc = 0;
                for (int i = 0; i <= n; ++i)
                    acc += binomial(n, i) * big_pow(q - 1, i) * krawtchouk(n, q, r, i) * krawtchouk(n, q, s, i);
                BigInt want = r == s ? big_pow(q, n) * binomial(n, r) * big_pow(q - 1, r) : BigInt(0);
                CHECK(acc == want);
            }
        for (int i = 0; i <= n; ++i) CHECK(krawtchouk(n, q, 1, i) == BigInt((q - 1) * n - q * i));
    }
    CHECK(krawtchouk(7, 2, 3, Rational(1, 2)) == Rational(krawtchouk(7, 2, 3, Rational(1, 2))));
}

TEST_CASE("rational formatting round trips") {
    CHECK(to_string(Rational(1, 5)) == "1/5");
    CHECK(to_string(Rational(-4, 2)) == "-2");
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(is_integer(Rational(4, 2)));
}
