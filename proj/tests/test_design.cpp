#include "crcodes/design.hpp"
#include "crcodes/errors.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace crc;
using namespace testutil;

namespace {

// Even-weight half of a binary code.
Code even_half(const Code& c) {
    auto ones = Matrix(c.field(), 1, c.n());
    for (int j = 0; j < c.n(); ++j) ones.at(0, j) = 1;
    return add_parity_rows(c, ones);
}

}  // namespace

TEST_CASE("Steiner systems from perfect codes") {
    auto fano = verify_design(hamming(2, 3), 3, 2);
    REQUIRE(fano);
    CHECK(fano->lambda == 1);
    CHECK(fano->blocks == 7);
    CHECK(fano->replication == 3);
    auto s23 = verify_design(binary_golay(), 7, 4);
    REQUIRE(s23);
    CHECK(s23->lambda == 1);
    CHECK(s23->blocks == 253);
    auto s24 = verify_design(extend(binary_golay()), 8, 5);
    REQUIRE(s24);
    CHECK(s24->lambda == 1);
    CHECK(s24->blocks == 759);
    CHECK_FALSE(verify_design(binary_golay(), 7, 5));
}

TEST_CASE("q-ary design from the ternary Golay code") {
    // perfect with e = 2: C_5 is a Steiner system S(11,5,3)_3
    auto d = verify_design(ternary_golay(), 5, 3);
    REQUIRE(d);
    CHECK(d->qary);
    CHECK(d->lambda == 1);
    CHECK(d->blocks == 132);
}

TEST_CASE("design strength") {
    auto [t, lam] = max_design_strength(extend(binary_golay()), 8);
    CHECK(t == 5);
    CHECK(lam == 1);
    auto half = even_half(binary_golay());
    CHECK(max_design_strength(half, 8).first >= 4);
    auto rep = Code::from_codewords(gf(2), 3, {{0, 0, 0}, {1, 1, 1}});
    auto r = max_design_strength(rep, 3);
    CHECK(r.first == 3);
    CHECK(r.second == 1);
}

TEST_CASE("smaller strengths follow with the derived lambdas") {
    auto g = binary_golay();
    auto d4 = verify_design(g, 8, 4);
    REQUIRE(d4);
    auto lams = design_lambdas(23, 8, 4, d4->lambda);
    REQUIRE(lams);
    for (int t = 0; t <= 4; ++t) {
        auto d = verify_design(g, 8, t);
        REQUIRE(d);
        CHECK(d->lambda == (*lams)[t]);
    }
}

TEST_CASE("weight recursion") {
    auto half = even_half(binary_golay());
    auto p = puncture(half, 0);
    auto A = p.weight_distribution().A;
    CHECK(A[7] == 176);
    CHECK(A[8] == 330);
    CHECK(A[11] == 672);
    CHECK(A[12] == 616);
    CHECK(A[15] == 176);
    CHECK(A[16] == 77);
    CHECK(weight_recursion_check(p));
    CHECK(BigInt(22 - 7) * A[7] == BigInt(8) * A[8]);
    CHECK(weight_recursion_check(hamming(2, 3)));
}

TEST_CASE("perfect weight distribution") {
    auto A = perfect_weight_distribution(7);
    CHECK(A == std::vector<BigInt>{1, 0, 0, 7, 7, 0, 0, 1});
    auto B = perfect_weight_distribution(15);
    CHECK(B[3] == 35);
    CHECK(B == hamming(2, 4).weight_distribution().A);
    for (int n : {7, 15, 31, 63}) {
        auto W = perfect_weight_distribution(n);
        auto at = [&](int i) { return i >= 0 && i <= n ? W[i] : BigInt(0); };
        for (int i = 0; i <= n; ++i) CHECK(BigInt(n - i + 1) * at(i - 1) + at(i) + BigInt(i + 1) * at(i + 1) == binomial(n, i));
    }
    CHECK_THROWS_AS(perfect_weight_distribution(8), DomainError);
}

TEST_CASE("design errors") {
    CHECK_THROWS_AS(verify_design(hamming(2, 3), 3, 4), DomainError);
    CHECK_THROWS_AS(verify_design(hamming(2, 3), 2, 1), DomainError);
}
