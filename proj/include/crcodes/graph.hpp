#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crcodes/spectra.hpp"

namespace crc {

struct SimpleGraph {
    std::vector<std::vector<std::uint32_t>> adj;  // sorted, no loops
    std::size_t vertices() const { return adj.size(); }
    std::size_t edges() const;
    static SimpleGraph from_edges(std::size_t v, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& e);
};

// Coset multigraph: vertices are syndromes, s -> s + gamma h_i for every
// column i and nonzero gamma, counted with multiplicity (loops kept).
struct CosetGraph {
    int n = 0, q = 2;
    std::uint64_t V = 0;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj;  // (neighbour, multiplicity), sorted
    SimpleGraph simple() const;
    std::uint64_t degree(std::uint64_t v) const;
};

CosetGraph build_coset_graph(const Code& c, const Guards& g = default_guards());

struct DRGReport {
    bool connected = false;
    bool distance_regular = false;
    bool sampled = false;
    int roots_checked = 0;
    int diameter = 0;
    std::optional<IntersectionArray> ia;  // n = degree, q = 2 convention
};

// Full check over every root when V <= 2^13, else 64 evenly spaced roots.
DRGReport is_distance_regular(const SimpleGraph& g);

// Weighted neighbour counts (c, a, b) per cell of the distance partition
// from vertex 0, using multiplicities.
std::vector<std::set<std::array<std::int64_t, 3>>> multigraph_layer_counts(const CosetGraph& g);

// IA of the coset graph to compare with the code IA. Uses the simple-graph
// DRG check when the simple graph carries the full degree (no repeated or
// zero columns), otherwise the multigraph layer counts.
struct GraphIA {
    bool regular = false;
    bool via_simple = false;
    bool sampled = false;
    std::optional<IntersectionArray> ia;
};
GraphIA coset_graph_ia(const CosetGraph& g);

std::string export_dot(const CosetGraph& g);
std::string export_json(const CosetGraph& g);

}  // namespace crc
