#include "crcodes/lloyd.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace crc;
using namespace testutil;

namespace {

// Oracle: determinant of (x I - A) by exact Gaussian elimination over Q at integer x.
Rational det_at(const IntersectionMatrix& m, long long x) {
    int k = m.size();
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[i][j] = (i == j ? Rational(x) : Rational(0)) - Rational(m.A[i][j]);
    Rational det = 1;
    for (int c = 0; c < k; ++c) {
        int p = -1;
        for (int r = c; r < k; ++r)
            if (a[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < k; ++r) {
            Rational f = a[r][c] / a[c][c];
            for (int j = c; j < k; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

PackingParameters P(std::initializer_list<Rational> v) { return v; }

}  // namespace

TEST_CASE("intersection matrix rows sum to n(q-1)") {
    auto ia = parse_ia("{23,22,21;1,2,3}", 23, 2);
    auto m = intersection_matrix(ia);
    for (const auto& row : m.A) {
        std::int64_t s = 0;
        for (auto x : row) s += x;
        CHECK(s == 23);
    }
}

TEST_CASE("characteristic polynomial matches a determinant oracle") {
    for (auto [s, n, q] : std::vector<std::tuple<const char*, int, int>>{
             {"{23,22,21;1,2,3}", 23, 2}, {"{7;1}", 7, 2}, {"{24,23,22,21;1,2,3,24}", 24, 2}, {"{22,20;1,6}", 11, 3},
             {"{23,22,21;1,2,4}", 23, 2}}) {
        auto ia = parse_ia(s, n, q);
        auto p = characteristic_polynomial(ia);
        auto m = intersection_matrix(ia);
        for (long long x = -30; x <= 30; ++x) {
            BigInt v = 0;
            for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
            CHECK(Rational(v) == det_at(m, x));
        }
    }
}

TEST_CASE("eigenvalue membership") {
    auto ham = eigenvalue_membership_test(parse_ia("{7;1}", 7, 2));
    CHECK(ham.pass);
    REQUIRE(ham.eigenvalues.size() == 2);
    CHECK(ham.eigenvalues[0] == std::pair<int, std::int64_t>{0, 7});
    CHECK(ham.eigenvalues[1] == std::pair<int, std::int64_t>{4, -1});
    auto gol = eigenvalue_membership_test(parse_ia("{23,22,21;1,2,3}", 23, 2));
    CHECK(gol.pass);
    CHECK(gol.found == 4);
    auto bad = eigenvalue_membership_test(parse_ia("{23,22,21;1,2,4}", 23, 2));
    CHECK_FALSE(bad.pass);
    auto badlax = eigenvalue_membership_test(parse_ia("{23,22,21;1,2,4}", 23, 2), false);
    CHECK_FALSE(badlax.pass);
}

TEST_CASE("eigenvalue test is invariant under reversal") {
    auto ia = parse_ia("{24,23,22,21;1,2,3,24}", 24, 2);
    CHECK(characteristic_polynomial(ia) == characteristic_polynomial(ia.reversed()));
}

TEST_CASE("Lloyd roots") {
    auto bch = lloyd_roots(31, 2, P({1, 1, Rational(1, 5), Rational(1, 5)}));
    CHECK(bch.pass);
    CHECK(bch.roots == std::vector<int>{12, 16, 20});
    auto ham = lloyd_roots(7, 2, P({1, 1}));
    CHECK(ham.pass);
    CHECK(ham.roots == std::vector<int>{4});
    CHECK_FALSE(lloyd_roots(6, 2, P({1, 1})).pass);
    // Preparata-like parameters, checked arithmetically
    for (int m : {2, 3}) {
        int n = (1 << (2 * m)) - 1;
        int s = 1 << m;
        auto r = lloyd_roots(n, 2, P({1, 1, Rational(3, n), Rational(3, n)}));
        CHECK(r.pass);
        CHECK(r.roots == std::vector<int>{(n + 1 - s) / 2, (n + 1) / 2, (n + 1 + s) / 2});
    }
    // the even-weight code has its root at xi = n
    auto ev = lloyd_roots(6, 2, P({1, Rational(1, 6)}));
    CHECK(ev.pass);
    CHECK(ev.roots == std::vector<int>{6});
}

TEST_CASE("roots of the Lloyd polynomial are the nonzero dual weights") {
    auto c = cyclic(2, 31, {1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1});
    auto cl = classify(c);
    REQUIRE(cl.beta);
    auto r = lloyd_roots(31, 2, *cl.beta);
    auto B = dual_distance_distribution(c);
    std::vector<int> w;
    for (int i = 1; i <= 31; ++i)
        if (B[i] != 0) w.push_back(i);
    CHECK(r.roots == w);
}

TEST_CASE("cardinality identity") {
    CHECK(cardinality_identity(hamming(2, 3), P({1, 1})));
    CHECK(cardinality_identity(BigInt(1) << 21, 31, 2, P({1, 1, Rational(1, 5), Rational(1, 5)})));
    CHECK_FALSE(cardinality_identity(binary_golay(), P({1, 1, 1, Rational(1, 2)})));
    CHECK(cardinality_identity(binary_golay(), P({1, 1, 1, 1})));
}

TEST_CASE("rho = 1 bounds") {
    auto r = rho1_bounds(9, 7, 12);
    CHECK(r.pass);
    CHECK(*r.a_star_lower == 3);
    CHECK(*r.a_star_upper == 5);
    CHECK(rho1_bounds(3, 1, 3).pass);
    auto t = rho1_bounds(5, 3, 6);
    CHECK(t.pass);
    CHECK(*t.a_star_lower == 1);
    CHECK(*t.a_star_upper == 1);
    auto z = rho1_bounds(9, 0, 12);
    CHECK_FALSE(z.pass);
    CHECK(z.checks[0].detail == "violates b ≠ 0 ≠ c");
    CHECK(rho1_bounds(11, 5, 12).pass);  // passes every bound, nonexistence needs a separate argument
    CHECK_FALSE(rho1_bounds(6, 3, 8).pass);  // (6+3)/3 = 3 is not a power of two
    CHECK_FALSE(rho1_bounds(9, 7, 11).pass);  // a = 2 below the lower bound
}

TEST_CASE("IA sanity guard") {
    CHECK(design_existence_guard(parse_ia("{23,22,21;1,2,3}", 23, 2)));
    CHECK_FALSE(design_existence_guard(parse_ia("{24,22,21;1,2,3}", 23, 2)));
    CHECK_FALSE(design_existence_guard(parse_ia("{23,22,21;1,2,24}", 23, 2)));
    CHECK_FALSE(design_existence_guard(parse_ia("{23,0,21;1,2,3}", 23, 2)));
}
