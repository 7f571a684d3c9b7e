#include "sccol/graph.hpp"

#include <algorithm>

namespace sccol {

Graph Graph::from_vertices_edges(const std::vector<std::string>& vertices,
                                 const std::vector<std::pair<std::string, std::string>>& edges) {
    Graph g;
    for (const auto& v : vertices)
        g.add_vertex(v);
    for (const auto& [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

void Graph::add_vertex(const std::string& name) {
    if (name.empty())
        fail(Errc::BadLabel, "graph vertex name must be non-empty");
    vertices_.insert(name);
    adj_.try_emplace(name);
}

void Graph::add_edge(const std::string& u, const std::string& v) {
    if (!has_vertex(u) || !has_vertex(v))
        fail(Errc::MissingVertex, "edge endpoint not a vertex: " + (has_vertex(u) ? v : u));
    if (u == v)
        fail(Errc::InvalidInput, "loops are not allowed: " + u);
    edges_.insert(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
    adj_[u].insert(v);
    adj_[v].insert(u);
}

std::vector<std::string> Graph::vertices() const {
    return {vertices_.begin(), vertices_.end()};
}

std::vector<std::pair<std::string, std::string>> Graph::edges() const {
    return {edges_.begin(), edges_.end()};
}

bool Graph::has_vertex(const std::string& name) const {
    return vertices_.count(name) > 0;
}

bool Graph::has_edge(const std::string& u, const std::string& v) const {
    return edges_.count(u < v ? std::make_pair(u, v) : std::make_pair(v, u)) > 0;
}

const std::set<std::string>& Graph::neighbours(const std::string& v) const {
    auto it = adj_.find(v);
    if (it == adj_.end())
        fail(Errc::MissingVertex, "no such vertex: " + v);
    return it->second;
}

bool Graph::is_connected() const {
    if (vertices_.size() <= 1)
        return true;
    std::set<std::string> seen;
    std::vector<std::string> stack{*vertices_.begin()};
    seen.insert(stack.back());
    while (!stack.empty()) {
        auto cur = stack.back();
        stack.pop_back();
        for (const auto& n : adj_.at(cur))
            if (seen.insert(n).second)
                stack.push_back(n);
    }
    return seen.size() == vertices_.size();
}

bool verify_colouring(const Graph& g, const GraphColouring& c) {
    for (const auto& v : g.vertices()) {
        auto it = c.colours.find(v);
        if (it == c.colours.end())
            fail(Errc::MissingVertex, "colouring not total: missing " + v);
        if (it->second < 1 || it->second > c.k)
            fail(Errc::PaletteMismatch, "colour of " + v + " outside palette");
    }
    for (const auto& [u, v] : g.edges())
        if (c.colours.at(u) == c.colours.at(v))
            return false;
    return true;
}

namespace {

// DSATUR-style exact backtracking over vertex indices.
struct Solver {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> adj;
    std::vector<int> colour;                  // 0 = unassigned
    std::vector<std::vector<int>> sat_count;  // [v][c-1]: coloured neighbours with colour c
    int max_used = 0;

    bool solve(int assigned) {
        if (assigned == n)
            return true;
        // Pick the uncoloured vertex with the highest saturation; ties go to
        // the lowest index (canonical vertex order).
        int best = -1, best_sat = -1;
        for (int v = 0; v < n; ++v) {
            if (colour[v])
                continue;
            int sat = 0;
            for (int c = 0; c < k; ++c)
                if (sat_count[v][c])
                    ++sat;
            if (sat > best_sat) {
                best_sat = sat;
                best = v;
            }
        }
        const int limit = std::min(k, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (sat_count[best][c - 1])
                continue;
            colour[best] = c;
            const int prev_max = max_used;
            max_used = std::max(max_used, c);
            for (int u : adj[best])
                ++sat_count[u][c - 1];
            if (solve(assigned + 1))
                return true;
            for (int u : adj[best])
                --sat_count[u][c - 1];
            colour[best] = 0;
            max_used = prev_max;
        }
        return false;
    }
};

} // namespace

std::optional<GraphColouring> is_k_colourable(const Graph& g, int k) {
    if (k < 0)
        return std::nullopt;
    const auto names = g.vertices();
    if (names.empty())
        return GraphColouring{k, {}};
    if (k == 0)
        return std::nullopt;

    Solver s;
    s.n = static_cast<int>(names.size());
    s.k = k;
    std::map<std::string, int> index;
    for (int i = 0; i < s.n; ++i)
        index[names[i]] = i;
    s.adj.assign(s.n, {});
    for (const auto& [u, v] : g.edges()) {
        s.adj[index[u]].push_back(index[v]);
        s.adj[index[v]].push_back(index[u]);
    }
    s.colour.assign(s.n, 0);
    s.sat_count.assign(s.n, std::vector<int>(k, 0));
    if (!s.solve(0))
        return std::nullopt;

    GraphColouring out;
    out.k = k;
    for (int i = 0; i < s.n; ++i)
        out.colours[names[i]] = s.colour[i];
    return out;
}

int chromatic_number(const Graph& g) {
    if (g.empty())
        return 0;
    for (int k = 1;; ++k)
        if (is_k_colourable(g, k))
            return k;
}

namespace {

void require_disjoint(const Graph& g1, const Graph& g2) {
    for (const auto& v : g1.vertices())
        if (g2.has_vertex(v))
            fail(Errc::NameClash, "vertex name appears on both sides: " + v);
}

Graph copy_both(const Graph& g1, const Graph& g2) {
    Graph g;
    for (const auto& v : g1.vertices())
        g.add_vertex(v);
    for (const auto& v : g2.vertices())
        g.add_vertex(v);
    for (const auto& [u, v] : g1.edges())
        g.add_edge(u, v);
    for (const auto& [u, v] : g2.edges())
        g.add_edge(u, v);
    return g;
}

} // namespace

Graph graph_sum(const Graph& g1, const Graph& g2) {
    require_disjoint(g1, g2);
    Graph g = copy_both(g1, g2);
    for (const auto& u : g1.vertices())
        for (const auto& v : g2.vertices())
            g.add_edge(u, v);
    return g;
}

Graph graph_cartesian(const Graph& g1, const Graph& g2) {
    Graph g;
    const auto vs1 = g1.vertices();
    const auto vs2 = g2.vertices();
    for (const auto& u : vs1)
        for (const auto& v : vs2)
            g.add_vertex(u + "," + v);
    for (const auto& u : vs1)
        for (const auto& [v, w] : g2.edges())
            g.add_edge(u + "," + v, u + "," + w);
    for (const auto& [u, w] : g1.edges())
        for (const auto& v : vs2)
            g.add_edge(u + "," + v, w + "," + v);
    return g;
}

Graph graph_disjoint_union(const Graph& g1, const Graph& g2) {
    require_disjoint(g1, g2);
    return copy_both(g1, g2);
}

Graph graph_overlay(const Graph& g1, const Graph& g2) {
    return copy_both(g1, g2);
}

} // namespace sccol
