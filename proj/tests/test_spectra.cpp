#include <map>

#include "crcodes/errors.hpp"
#include "crcodes/spectra.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace crc;
using namespace testutil;

namespace {

// Brute-force outer distribution: every vector against every codeword.
std::map<std::vector<BigInt>, BigInt> brute_rows(const Code& c) {
    auto words = c.codewords();
    std::map<std::vector<BigInt>, BigInt> rows;
    Word x(c.n(), 0);
    while (true) {
        std::vector<BigInt> B(c.n() + 1, 0);
        for (const auto& w : words) B[distance(x, w)] += 1;
        rows[B] += 1;
        int j = 0;
        for (; j < c.n(); ++j) {
            if (++x[j] < c.q()) break;
            x[j] = 0;
        }
        if (j == c.n()) break;
    }
    return rows;
}

std::map<std::vector<BigInt>, BigInt> as_map(const OuterProfile& p) {
    std::map<std::vector<BigInt>, BigInt> m;
    for (const auto& r : p.rows) m[r.B] += r.multiplicity;
    return m;
}

std::vector<Rational> R(std::initializer_list<Rational> v) { return v; }

}  // namespace

TEST_CASE("dual-route outer profile matches brute force") {
    std::vector<Code> codes{hamming(2, 3), hamming(3, 2), hamming(4, 2), extend(hamming(2, 3)), ternary_golay(),
                            shorten(hamming(2, 4), 0), cyclic(2, 9, {1, 1, 1})};
    for (const auto& c : codes) {
        CAPTURE(c.describe());
        auto dual = outer_profile(c, ProfileRoute::Dual);
        auto direct = outer_profile(c, ProfileRoute::Direct);
        auto brute = brute_rows(c);
        CHECK(as_map(dual) == brute);
        CHECK(as_map(direct) == brute);
    }
}

TEST_CASE("syndrome and vector partitions agree") {
    for (const auto& c : {hamming(3, 2), extend(hamming(2, 3)), cyclic(2, 9, {1, 1, 1})}) {
        auto a = distance_partition(c, PartitionMode::Syndrome);
        auto b = distance_partition(c, PartitionMode::Vector);
        CHECK(a.rho == b.rho);
        CHECK(a.vector_sizes() == b.vector_sizes());
        auto ea = equitable_counts(c, a);
        auto eb = equitable_counts(c, b);
        CHECK(ea.equitable == eb.equitable);
        CHECK(ea.observed == eb.observed);
    }
}

TEST_CASE("binary Golay is completely regular") {
    auto g = binary_golay();
    auto v = is_completely_regular(g);
    REQUIRE(v.completely_regular);
    CHECK(v.ia->to_string() == "{23, 22, 21; 1, 2, 3}");
    auto part = distance_partition(g);
    CHECK(part.sizes == std::vector<std::uint64_t>{1, 23, 253, 1771});
}

TEST_CASE("extended Golay IA") {
    auto v = is_completely_regular(extend(binary_golay()));
    REQUIRE(v.completely_regular);
    CHECK(v.ia->to_string() == "{24, 23, 22, 21; 1, 2, 3, 24}");
}

TEST_CASE("Hamming packing parameters are all ones") {
    auto cl = classify(hamming(2, 4));
    CHECK(cl.perfect);
    CHECK(cl.completely_regular);
    CHECK(*cl.beta == R({1, 1}));
}

TEST_CASE("double-error-correcting BCH packing parameters") {
    // m1*m3 for n=31: x^5+x^2+1 and x^5+x^4+x^3+x^2+1
    auto c = cyclic(2, 31, {1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1});
    auto cl = classify(c);
    CHECK(cl.d == 5);
    CHECK(cl.rho == 3);
    CHECK(cl.up_wide);
    CHECK(*cl.beta == R({1, 1, Rational(1, 5), Rational(1, 5)}));
    CHECK(cl.completely_regular);
}

TEST_CASE("IA parsing") {
    auto ia = parse_ia("{23,22,21;1,2,3}", 23, 2);
    CHECK(ia.b == std::vector<std::int64_t>{23, 22, 21});
    CHECK(ia.reversed().to_string() == "{3, 2, 1; 21, 22, 23}");
    CHECK_THROWS_AS(parse_ia("{1,2;3}", 3, 2), FormatError);
    CHECK_THROWS_AS(parse_ia("{1,x;3,4}", 3, 2), FormatError);
}

TEST_CASE("resource guard on syndrome space") {
    Guards g;
    g.max_syndromes = 4;
    CHECK_THROWS_AS(distance_partition(hamming(2, 4), PartitionMode::Syndrome, g), ResourceError);
}

TEST_CASE("outer test and equitable test agree on a non-CR code") {
    auto c = shorten(shorten(binary_golay(), 0), 1);
    auto v = is_completely_regular(c);
    CHECK(v.outer_test == v.equitable_test);
}

TEST_CASE("MacWilliams transform equals the dual distribution and round-trips") {
    std::vector<Code> codes{hamming(2, 3), hamming(3, 2), hamming(4, 2), testutil::binary_golay(),
                            testutil::ternary_golay(), extend(hamming(2, 4))};
    for (const auto& c : codes) {
        Code d = dual(c);
        CHECK(dual_distance_distribution(c) == distance_distribution(d));
        CHECK(dual_distance_distribution(d) == distance_distribution(c));
    }
    // Explicit route: same set, no parity matrix.
    Code g = testutil::binary_golay();
    CHECK(dual_distance_distribution(g.as_explicit()) == dual_distance_distribution(g));
}
