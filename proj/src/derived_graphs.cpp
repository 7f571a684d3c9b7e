#include "sccol/derived_graphs.hpp"

namespace sccol {

namespace {

Graph two_section(const SimplicialComplex& x) {
    Graph g;
    for (const auto& v : x.vertices())
        g.add_vertex(v);
    for (const auto& f : x.faces_of_dim(1))
        g.add_edge(f.labels()[0], f.labels()[1]);
    return g;
}

Graph line_graph_of_faces(const SimplicialComplex& x) {
    Graph g;
    const auto& faces = x.faces();
    for (const auto& f : faces)
        g.add_vertex(f.name());
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t j = i + 1; j < faces.size(); ++j)
            if (!faces[i].intersect(faces[j]).empty())
                g.add_edge(faces[i].name(), faces[j].name());
    return g;
}

Graph total_graph(const SimplicialComplex& x) {
    Graph g;
    for (const auto& v : x.vertices())
        g.add_vertex("v:" + v);
    const auto& faces = x.faces();
    for (const auto& f : faces)
        g.add_vertex("f:" + f.name());
    for (const auto& f : x.faces_of_dim(1))
        g.add_edge("v:" + f.labels()[0], "v:" + f.labels()[1]);
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t j = i + 1; j < faces.size(); ++j)
            if (!faces[i].intersect(faces[j]).empty())
                g.add_edge("f:" + faces[i].name(), "f:" + faces[j].name());
    for (const auto& v : x.vertices())
        for (const auto& f : faces)
            if (f.contains(v))
                g.add_edge("v:" + v, "f:" + f.name());
    return g;
}

Graph exchange_graph(const SimplicialComplex& x, int r) {
    Graph g;
    const auto level = x.faces_of_dim(r);
    for (const auto& f : level)
        g.add_vertex(f.name());
    for (std::size_t i = 0; i < level.size(); ++i)
        for (std::size_t j = i + 1; j < level.size(); ++j) {
            Face u = level[i].unite(level[j]);
            if (u.dim() == r + 1 && x.has_face(u))
                g.add_edge(level[i].name(), level[j].name());
        }
    return g;
}

Graph descending_graph(const SimplicialComplex& x, int s) {
    Graph g;
    const auto level = x.faces_of_dim(s);
    for (const auto& f : level)
        g.add_vertex(f.name());
    for (std::size_t i = 0; i < level.size(); ++i)
        for (std::size_t j = i + 1; j < level.size(); ++j) {
            Face m = level[i].intersect(level[j]);
            // X^{-1} is empty, so s = 0 yields no edges.
            if (m.dim() == s - 1 && !m.empty() && x.has_face(m))
                g.add_edge(level[i].name(), level[j].name());
        }
    return g;
}

Graph inclusion_graph(const SimplicialComplex& x) {
    Graph g;
    const auto& faces = x.faces();
    for (const auto& f : faces)
        g.add_vertex(f.name());
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t j = 0; j < faces.size(); ++j)
            if (faces[i].proper_subset_of(faces[j]))
                g.add_edge(faces[i].name(), faces[j].name());
    return g;
}

Graph full_graph(const SimplicialComplex& x) {
    // Inclusion edges, the 2-section on the 0-faces, and every descending
    // level from 1 up, all on the one face-name vertex set: a vertex is
    // identified with its 0-simplex here.
    Graph g = inclusion_graph(x);
    for (const auto& f : x.faces_of_dim(1))
        g.add_edge(f.labels()[0], f.labels()[1]);
    for (int s = 1; s <= x.dim(); ++s)
        for (const auto& [u, v] : descending_graph(x, s).edges())
            g.add_edge(u, v);
    return g;
}

Graph prefixed(const Graph& g, const std::string& prefix) {
    Graph out;
    for (const auto& v : g.vertices())
        out.add_vertex(prefix + v);
    for (const auto& [u, v] : g.edges())
        out.add_edge(prefix + u, prefix + v);
    return out;
}

} // namespace

Graph derive(const SimplicialComplex& x, const DerivedKind& kind) {
    const int n = x.dim();
    switch (kind.tag) {
    case DerivedKindTag::TwoSection:
        return two_section(x);
    case DerivedKindTag::Line:
        return line_graph_of_faces(x);
    case DerivedKindTag::Total:
        return total_graph(x);
    case DerivedKindTag::Exchange:
        if (kind.dim < 0 || kind.dim > n)
            fail(Errc::BadDimension, "exchange index out of range 0..dim");
        return exchange_graph(x, kind.dim);
    case DerivedKindTag::Descending:
        if (kind.dim < 0 || kind.dim > n)
            fail(Errc::BadDimension, "descending index out of range 0..dim");
        return descending_graph(x, kind.dim);
    case DerivedKindTag::Inclusion:
        return inclusion_graph(x);
    case DerivedKindTag::Full:
        return full_graph(x);
    case DerivedKindTag::CompleteAsc: {
        Graph acc = prefixed(exchange_graph(x, 0), "d0:");
        for (int r = 1; r <= n; ++r)
            acc = graph_sum(acc, prefixed(exchange_graph(x, r), "d" + std::to_string(r) + ":"));
        return acc;
    }
    case DerivedKindTag::CompleteDesc: {
        Graph acc = prefixed(descending_graph(x, 0), "d0:");
        for (int s = 1; s <= n; ++s)
            acc = graph_sum(acc, prefixed(descending_graph(x, s), "d" + std::to_string(s) + ":"));
        return acc;
    }
    case DerivedKindTag::CartAsc: {
        if (n < 1)
            fail(Errc::BadDimension, "Cartesian ascending model needs dim >= 1");
        Graph acc = exchange_graph(x, 0);
        for (int r = 1; r < n; ++r)
            acc = graph_cartesian(acc, exchange_graph(x, r));
        return acc;
    }
    case DerivedKindTag::CartDesc: {
        if (n < 1)
            fail(Errc::BadDimension, "Cartesian descending model needs dim >= 1");
        Graph acc = descending_graph(x, 1);
        for (int s = 2; s <= n; ++s)
            acc = graph_cartesian(acc, descending_graph(x, s));
        return acc;
    }
    }
    fail(Errc::InvalidInput, "unknown derived kind");
}

Graph partition_graph(const SimplicialComplex& x, const Partition& p) {
    validate_partition(x, p);
    Graph g;
    for (const auto& block : p.blocks)
        g.add_vertex(Partition::block_name(block));
    for (std::size_t i = 0; i < p.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < p.blocks.size(); ++j) {
            std::vector<std::string> joint = p.blocks[i];
            joint.insert(joint.end(), p.blocks[j].begin(), p.blocks[j].end());
            if (x.induced(joint).is_connected())
                g.add_edge(Partition::block_name(p.blocks[i]),
                           Partition::block_name(p.blocks[j]));
        }
    return g;
}

} // namespace sccol
