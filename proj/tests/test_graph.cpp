#include "crcodes/errors.hpp"
#include "crcodes/graph.hpp"
#include "doctest.h"
#include "json.hpp"
#include "test_util.hpp"

using namespace crc;
using namespace testutil;

TEST_CASE("Hamming coset graph is K8") {
    auto g = build_coset_graph(hamming(2, 3));
    CHECK(g.V == 8);
    auto s = g.simple();
    CHECK(s.edges() == 28);
    auto rep = is_distance_regular(s);
    CHECK(rep.distance_regular);
    CHECK(rep.ia->to_string() == "{7; 1}");
    auto dot = export_dot(g);
    CHECK(std::count(dot.begin(), dot.end(), '-') == 2 * 28);
}

TEST_CASE("Golay coset graph") {
    auto g = build_coset_graph(binary_golay());
    CHECK(g.V == 2048);
    auto rep = is_distance_regular(g.simple());
    CHECK(rep.distance_regular);
    CHECK(rep.diameter == 3);
    CHECK(rep.ia->b == std::vector<std::int64_t>{23, 22, 21});
    auto j = nlohmann::json::parse(export_json(g));
    CHECK(j["nodes"].size() == 2048);
    for (const auto& nd : j["nodes"]) CHECK(nd["degree"] == 23);
    auto gia = coset_graph_ia(g);
    CHECK(gia.via_simple);
    CHECK(*gia.ia == *is_completely_regular(binary_golay()).ia);
}

TEST_CASE("even-weight code graph has two vertices and multiplicity 4") {
    auto f = gf(2);
    auto c = Code::from_parity_check(matrix_from_rows(f, {{1, 1, 1, 1}}));
    auto g = build_coset_graph(c);
    CHECK(g.V == 2);
    REQUIRE(g.adj[0].size() == 1);
    CHECK(g.adj[0][0].second == 4);
    auto gia = coset_graph_ia(g);
    CHECK_FALSE(gia.via_simple);
    CHECK(gia.ia->to_string() == "{4; 4}");
}

TEST_CASE("path graph is not distance-regular") {
    auto p3 = SimpleGraph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(is_distance_regular(p3).distance_regular);
    auto split = SimpleGraph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_distance_regular(split).connected);
}

TEST_CASE("multigraph counts agree with the syndrome equitable counts") {
    for (const auto& c : {hamming(3, 2), extend(hamming(2, 3)), ternary_golay(), cyclic(2, 9, {1, 1, 1})}) {
        auto part = distance_partition(c, PartitionMode::Syndrome);
        auto eq = equitable_counts(c, part);
        auto layers = multigraph_layer_counts(build_coset_graph(c));
        CHECK(eq.observed == layers);
    }
}

TEST_CASE("graph errors") {
    CHECK_THROWS_AS(export_dot(CosetGraph{}), DomainError);
    CHECK_THROWS_AS(build_coset_graph(hamming(2, 3).as_explicit()), DomainError);
}
