#include "crcodes/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "crcodes/errors.hpp"
#include "crcodes/syndrome.hpp"
#include "json.hpp"

namespace crc {

std::size_t SimpleGraph::edges() const {
    std::size_t deg = 0;
    for (const auto& a : adj) deg += a.size();
    return deg / 2;
}

SimpleGraph SimpleGraph::from_edges(std::size_t v, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& e) {
    SimpleGraph g;
    g.adj.resize(v);
    for (auto [a, b] : e) {
        if (a >= v || b >= v) throw DomainError("edge endpoint out of range");
        if (a == b) continue;
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return g;
}

SimpleGraph CosetGraph::simple() const {
    SimpleGraph s;
    s.adj.resize(V);
    for (std::uint64_t v = 0; v < V; ++v)
        for (auto [u, m] : adj[v])
            if (u != v) s.adj[v].push_back(u);
    return s;
}

std::uint64_t CosetGraph::degree(std::uint64_t v) const {
    std::uint64_t d = 0;
    for (auto [u, m] : adj[v]) d += m;
    return d;
}

CosetGraph build_coset_graph(const Code& c, const Guards& g) {
    if (!c.is_linear()) throw DomainError("coset graph needs a linear code");
    require_within("max_syndromes", sat_pow(c.q(), c.redundancy()), g.max_syndromes);
    SyndromeSpace sp(c.field(), c.redundancy());
    auto cols = column_syndromes(c, sp);
    std::map<std::uint64_t, std::uint32_t> mult;
    for (auto s : cols) ++mult[s];
    require_within("max_pair_ops", sat_mul(sp.size(), mult.size()), g.max_pair_ops);
    CosetGraph gr;
    gr.n = c.n();
    gr.q = c.q();
    gr.V = sp.size();
    gr.adj.resize(gr.V);
    for (std::uint64_t s = 0; s < gr.V; ++s) {
        auto& a = gr.adj[s];
        a.reserve(mult.size());
        for (auto [h, m] : mult) a.emplace_back(static_cast<std::uint32_t>(sp.add(s, h)), m);
        std::sort(a.begin(), a.end());
    }
    return gr;
}

namespace {

// BFS layers from root; returns distances (UINT32_MAX if unreachable).
std::vector<std::uint32_t> bfs(const SimpleGraph& g, std::uint32_t root) {
    std::vector<std::uint32_t> dist(g.vertices(), UINT32_MAX);
    std::vector<std::uint32_t> queue{root};
    dist[root] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        auto v = queue[h];
        for (auto u : g.adj[v])
            if (dist[u] == UINT32_MAX) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
    }
    return dist;
}

}  // namespace

DRGReport is_distance_regular(const SimpleGraph& g) {
    DRGReport rep;
    const std::size_t V = g.vertices();
    if (V == 0) throw DomainError("empty graph");
    std::vector<std::uint32_t> roots;
    if (V <= (std::size_t{1} << 13)) {
        for (std::size_t v = 0; v < V; ++v) roots.push_back(static_cast<std::uint32_t>(v));
    } else {
        rep.sampled = true;
        for (std::size_t i = 0; i < 64; ++i) roots.push_back(static_cast<std::uint32_t>(i * V / 64));
    }
    std::vector<std::int64_t> bvec, cvec;  // per distance
    bool first = true;
    rep.distance_regular = true;
    for (auto root : roots) {
        auto dist = bfs(g, root);
        std::uint32_t diam = 0;
        for (auto d : dist) {
            if (d == UINT32_MAX) {
                rep.connected = false;
                rep.distance_regular = false;
                return rep;
            }
            diam = std::max(diam, d);
        }
        std::vector<std::int64_t> b(diam + 1, -1), c(diam + 1, -1);
        for (std::size_t v = 0; v < V; ++v) {
            std::int64_t up = 0, down = 0;
            for (auto u : g.adj[v]) {
                if (dist[u] + 1 == dist[v]) ++down;
                else if (dist[u] == dist[v] + 1) ++up;
            }
            auto d = dist[v];
            if (b[d] < 0) {
                b[d] = up;
                c[d] = down;
            } else if (b[d] != up || c[d] != down) {
                rep.distance_regular = false;
            }
        }
        ++rep.roots_checked;
        if (first) {
            bvec = b;
            cvec = c;
            rep.diameter = static_cast<int>(diam);
            first = false;
        } else if (b != bvec || c != cvec) {
            rep.distance_regular = false;
        }
        if (!rep.distance_regular) break;
    }
    rep.connected = true;
    if (rep.distance_regular) {
        IntersectionArray ia;
        ia.n = static_cast<int>(g.adj[0].size());
        ia.q = 2;
        for (int l = 0; l < rep.diameter; ++l) ia.b.push_back(bvec[l]);
        for (int l = 1; l <= rep.diameter; ++l) ia.c.push_back(cvec[l]);
        rep.ia = ia;
    }
    return rep;
}

std::vector<std::set<std::array<std::int64_t, 3>>> multigraph_layer_counts(const CosetGraph& g) {
    if (g.V == 0) throw DomainError("empty graph");
    std::vector<std::uint32_t> dist(g.V, UINT32_MAX);
    std::vector<std::uint32_t> queue{0};
    dist[0] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        auto v = queue[h];
        for (auto [u, m] : g.adj[v])
            if (dist[u] == UINT32_MAX) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
    }
    std::uint32_t diam = 0;
    for (auto d : dist) {
        if (d == UINT32_MAX) throw DomainError("coset graph is disconnected");
        diam = std::max(diam, d);
    }
    std::vector<std::set<std::array<std::int64_t, 3>>> out(diam + 1);
    for (std::uint64_t v = 0; v < g.V; ++v) {
        std::array<std::int64_t, 3> t{0, 0, 0};
        for (auto [u, m] : g.adj[v]) {
            if (dist[u] + 1 == dist[v]) t[0] += m;
            else if (dist[u] == dist[v]) t[1] += m;
            else t[2] += m;
        }
        out[dist[v]].insert(t);
    }
    return out;
}

GraphIA coset_graph_ia(const CosetGraph& g) {
    GraphIA out;
    std::uint64_t full = static_cast<std::uint64_t>(g.n) * (g.q - 1);
    bool simple_full = g.adj[0].size() == full;
    for (auto [u, m] : g.adj[0])
        if (u == 0 || m != 1) simple_full = false;
    if (simple_full) {
        out.via_simple = true;
        auto rep = is_distance_regular(g.simple());
        out.sampled = rep.sampled;
        out.regular = rep.distance_regular;
        if (rep.ia) {
            out.ia = rep.ia;
            out.ia->n = g.n;
            out.ia->q = g.q;
        }
        return out;
    }
    auto layers = multigraph_layer_counts(g);
    out.regular = true;
    for (const auto& s : layers)
        if (s.size() != 1) out.regular = false;
    if (out.regular) {
        IntersectionArray ia;
        ia.n = g.n;
        ia.q = g.q;
        int rho = static_cast<int>(layers.size()) - 1;
        for (int l = 0; l < rho; ++l) ia.b.push_back((*layers[l].begin())[2]);
        for (int l = 1; l <= rho; ++l) ia.c.push_back((*layers[l].begin())[0]);
        out.ia = ia;
    }
    return out;
}

std::string export_dot(const CosetGraph& g) {
    if (g.V == 0) throw DomainError("empty graph");
    std::ostringstream os;
    os << "graph coset {\n";
    for (std::uint64_t v = 0; v < g.V; ++v) os << "  " << v << ";\n";
    for (std::uint64_t v = 0; v < g.V; ++v)
        for (auto [u, m] : g.adj[v])
            if (u >= v) os << "  " << v << " -- " << u << " [label=" << m << "];\n";
    os << "}\n";
    return os.str();
}

std::string export_json(const CosetGraph& g) {
    if (g.V == 0) throw DomainError("empty graph");
    nlohmann::ordered_json j;
    j["n"] = g.n;
    j["q"] = g.q;
    j["vertices"] = g.V;
    auto nodes = nlohmann::ordered_json::array();
    auto edges = nlohmann::ordered_json::array();
    for (std::uint64_t v = 0; v < g.V; ++v) {
        nodes.push_back({{"id", v}, {"degree", g.degree(v)}});
        for (auto [u, m] : g.adj[v])
            if (u >= v) edges.push_back({v, u, m});
    }
    j["nodes"] = nodes;
    j["edges"] = edges;
    return j.dump();
}

}  // namespace crc
