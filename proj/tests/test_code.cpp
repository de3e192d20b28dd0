#include "crcodes/errors.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace crc;
using namespace testutil;

TEST_CASE("Hamming codes have the expected parameters") {
    for (auto [q, m] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {4, 2}, {2, 4}, {3, 3}}) {
        CAPTURE(q);
        CAPTURE(m);
        auto c = hamming(q, m);
        int n = 1;
        for (int i = 1; i < m; ++i) n = n * q + 1;
        CHECK(c.n() == n);
        CHECK(c.dimension() == n - m);
        CHECK(c.minimum_distance() == 3);
        CHECK(c.covering_radius() == 1);
    }
}

TEST_CASE("Golay codes") {
    auto g = binary_golay();
    CHECK(g.dimension() == 12);
    CHECK(g.minimum_distance() == 7);
    auto wd = g.weight_distribution();
    CHECK(wd.A[7] == 253);
    CHECK(wd.A[8] == 506);
    CHECK(wd.A[11] == 1288);
    auto t = ternary_golay();
    CHECK(t.dimension() == 6);
    CHECK(t.minimum_distance() == 5);
    CHECK(t.weight_distribution().A[5] == 132);
}

TEST_CASE("weight distribution by enumeration matches MacWilliams route") {
    auto g = binary_golay();
    Guards small;
    small.max_codewords = 3000;  // forces the dual route
    auto viadual = g.weight_distribution(small).A;
    auto plain = binary_golay().weight_distribution().A;
    CHECK(viadual == plain);
}

TEST_CASE("extend, puncture, shorten") {
    auto h = hamming(2, 3);
    auto e = extend(h);
    CHECK(e.n() == 8);
    CHECK(e.minimum_distance() == 4);
    auto p = puncture(e, 7);
    CHECK(same_code(p, h));
    auto s = shorten(h, 0);
    CHECK(s.n() == 6);
    CHECK(s.dimension() == 3);
    auto ex = h.as_explicit();
    CHECK(ex.size() == 16);
    CHECK(same_code(shorten(ex, 0).as_explicit(), s.as_explicit()));
    CHECK(same_code(*linearize(ex), h));
}

TEST_CASE("dual and direct sum") {
    auto h = hamming(2, 3);
    auto d = dual(h);
    CHECK(d.dimension() == 3);
    CHECK(d.minimum_distance() == 4);
    auto ds = direct_sum({h, h});
    CHECK(ds.n() == 14);
    CHECK(ds.dimension() == 8);
}

TEST_CASE("lift keeps the parity-check matrix and extends the field") {
    auto H = projective_columns(2, 3);
    auto l = lift(H, 2);
    CHECK(l.q() == 4);
    CHECK(l.n() == 7);
    CHECK(l.dimension() == 4);
}

TEST_CASE("incomparable fields are rejected") {
    auto a = projective_columns(4, 2);
    auto b = projective_columns(8, 2);
    CHECK_THROWS_AS(kronecker_parity(a, b), DomainError);
}

TEST_CASE("empty code is rejected") { CHECK_THROWS_AS(Code::from_codewords(gf(2), 3, {}), DomainError); }

TEST_CASE("enumeration guard") {
    Guards g;
    g.max_codewords = 10;
    CHECK_THROWS_AS(binary_golay().codewords(g), ResourceError);
}
