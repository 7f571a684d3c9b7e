#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sccol/errors.hpp"

namespace sccol {

/// Finite simple undirected graph over named vertices. Vertices are kept
/// in sorted order and edges normalized (first endpoint < second), so all
/// iteration is deterministic.
class Graph {
public:
    Graph() = default;

    static Graph from_vertices_edges(const std::vector<std::string>& vertices,
                                     const std::vector<std::pair<std::string, std::string>>& edges);

    void add_vertex(const std::string& name);
    /// Both endpoints must already be vertices; loops are rejected.
    void add_edge(const std::string& u, const std::string& v);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return vertices_.empty(); }

    std::vector<std::string> vertices() const;
    std::vector<std::pair<std::string, std::string>> edges() const;

    bool has_vertex(const std::string& name) const;
    bool has_edge(const std::string& u, const std::string& v) const;
    const std::set<std::string>& neighbours(const std::string& v) const;

    /// The empty graph counts as connected.
    bool is_connected() const;

private:
    std::set<std::string> vertices_;
    std::set<std::pair<std::string, std::string>> edges_;
    std::map<std::string, std::set<std::string>> adj_;
};

/// A colour map over vertex names with palette {1, ..., k}.
struct GraphColouring {
    int k = 0;
    std::map<std::string, int> colours;
};

/// True iff adjacent vertices always get different colours. Errors:
/// MissingVertex when the map is not total on V(G), PaletteMismatch when a
/// colour falls outside {1..k}.
bool verify_colouring(const Graph& g, const GraphColouring& c);

/// Exact decision: returns a valid k-colouring if one exists. Backtracking
/// in saturation-degree order, ties broken by canonical vertex order, and
/// colours tried lowest-first with at most one fresh colour per step; the
/// witness is therefore reproducible across runs and platforms.
std::optional<GraphColouring> is_k_colourable(const Graph& g, int k);

/// Least k admitting a colouring: 0 for the empty graph, 1 for non-empty
/// edgeless graphs.
int chromatic_number(const Graph& g);

/// Sum (join): disjoint union plus all cross edges. Vertex names must be
/// disjoint (NameClash otherwise).
Graph graph_sum(const Graph& g1, const Graph& g2);

/// Cartesian product; product vertices are named "u,v".
Graph graph_cartesian(const Graph& g1, const Graph& g2);

/// Disjoint union; names must be disjoint (NameClash otherwise).
Graph graph_disjoint_union(const Graph& g1, const Graph& g2);

/// Union that merges vertices with equal names.
Graph graph_overlay(const Graph& g1, const Graph& g2);

} // namespace sccol
