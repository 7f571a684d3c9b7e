#include "sccol/reductions.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace sccol {

std::string lemma_name(LemmaId id) {
    switch (id) {
    case LemmaId::C1: return "c1";
    case LemmaId::C4: return "c4";
    case LemmaId::C5: return "c5";
    case LemmaId::C6: return "c6";
    case LemmaId::C7: return "c7";
    case LemmaId::C8C10: return "c8c10";
    case LemmaId::C9C11: return "c9c11";
    }
    fail(Errc::InvalidInput, "unknown lemma id");
}

LemmaId parse_lemma(const std::string& text) {
    if (text == "c1") return LemmaId::C1;
    if (text == "c4") return LemmaId::C4;
    if (text == "c5") return LemmaId::C5;
    if (text == "c6") return LemmaId::C6;
    if (text == "c7") return LemmaId::C7;
    if (text == "c8c10") return LemmaId::C8C10;
    if (text == "c9c11") return LemmaId::C9C11;
    fail(Errc::ParseError, "unknown lemma '" + text + "'");
}

ColourScheme lemma_target_scheme(LemmaId id) {
    switch (id) {
    case LemmaId::C1: return ColourScheme::c1();
    case LemmaId::C4: return ColourScheme::c4();
    case LemmaId::C5: return ColourScheme::c5();
    case LemmaId::C6: return ColourScheme::c6();
    case LemmaId::C7: return ColourScheme::ps(1);
    case LemmaId::C8C10: return ColourScheme::c8();
    case LemmaId::C9C11: return ColourScheme::c9();
    }
    fail(Errc::InvalidInput, "unknown lemma id");
}

int lemma_target_k(LemmaId id, int k) {
    return (id == LemmaId::C4 || id == LemmaId::C5) ? k + 1 : k;
}

SimplicialComplex graph_to_complex(const Graph& g) {
    if (g.empty())
        fail(Errc::EmptyInput, "cannot turn the empty graph into a complex");
    std::vector<std::vector<std::string>> facets;
    for (const auto& v : g.vertices())
        facets.push_back({v});
    for (const auto& [u, v] : g.edges())
        facets.push_back({u, v});
    return SimplicialComplex::from_facets(facets);
}

namespace {

std::string edge_name(const std::string& u, const std::string& v) {
    return u < v ? u + "+" + v : v + "+" + u;
}

} // namespace

Graph line_graph(const Graph& g) {
    Graph out;
    const auto es = g.edges();
    for (const auto& [u, v] : es)
        out.add_vertex(edge_name(u, v));
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const auto& [a, b] = es[i];
            const auto& [c, d] = es[j];
            if (a == c || a == d || b == c || b == d)
                out.add_edge(edge_name(a, b), edge_name(c, d));
        }
    return out;
}

Graph total_graph(const Graph& g) {
    Graph out;
    for (const auto& v : g.vertices())
        out.add_vertex("v:" + v);
    const auto es = g.edges();
    for (const auto& [u, v] : es)
        out.add_vertex("e:" + edge_name(u, v));
    for (const auto& [u, v] : es)
        out.add_edge("v:" + u, "v:" + v);
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const auto& [a, b] = es[i];
            const auto& [c, d] = es[j];
            if (a == c || a == d || b == c || b == d)
                out.add_edge("e:" + edge_name(a, b), "e:" + edge_name(c, d));
        }
    for (const auto& [u, v] : es) {
        out.add_edge("v:" + u, "e:" + edge_name(u, v));
        out.add_edge("v:" + v, "e:" + edge_name(u, v));
    }
    return out;
}

bool is_edge_k_colourable(const Graph& g, int k) {
    return edge_colouring(g, k).has_value();
}

std::optional<GraphColouring> edge_colouring(const Graph& g, int k) {
    return is_k_colourable(line_graph(g), k);
}

bool is_total_k_colourable(const Graph& g, int k) {
    return total_colouring(g, k).has_value();
}

std::optional<GraphColouring> total_colouring(const Graph& g, int k) {
    return is_k_colourable(total_graph(g), k);
}

namespace {

void require_valid_source(LemmaId id, const Graph& g, const GraphColouring& input) {
    bool ok = false;
    switch (id) {
    case LemmaId::C1:
    case LemmaId::C4:
    case LemmaId::C7:
    case LemmaId::C8C10:
        ok = verify_colouring(g, input);
        break;
    case LemmaId::C5:
    case LemmaId::C9C11:
        ok = verify_colouring(line_graph(g), input);
        break;
    case LemmaId::C6:
        ok = verify_colouring(total_graph(g), input);
        break;
    }
    if (!ok)
        fail(Errc::InvalidInput, "input colouring is not valid on the source side");
}

} // namespace

Assignment translate_forward(LemmaId id, const Graph& g, const GraphColouring& input) {
    require_valid_source(id, g, input);
    const SimplicialComplex x = graph_to_complex(g);
    Assignment a;
    a.k = lemma_target_k(id, input.k);
    a.domain = scheme_domain(lemma_target_scheme(id));

    switch (id) {
    case LemmaId::C1:
    case LemmaId::C7:
        a.colours = input.colours;
        return a;
    case LemmaId::C4:
    case LemmaId::C8C10: {
        // Vertices keep their colours; every edge face gets the spare colour
        // (k+1 when the palette grows, k when it does not).
        const int filler = id == LemmaId::C4 ? a.k : input.k;
        for (const auto& f : x.faces())
            a.colours[f.name()] = f.dim() == 0 ? input.colours.at(f.labels()[0]) : filler;
        return a;
    }
    case LemmaId::C5:
    case LemmaId::C9C11: {
        const int filler = id == LemmaId::C5 ? a.k : input.k;
        for (const auto& f : x.faces())
            a.colours[f.name()] = f.dim() == 1 ? input.colours.at(f.name()) : filler;
        return a;
    }
    case LemmaId::C6: {
        for (const auto& f : x.faces())
            a.colours[f.name()] = f.dim() == 0 ? input.colours.at("v:" + f.labels()[0])
                                               : input.colours.at("e:" + f.name());
        return a;
    }
    }
    fail(Errc::InvalidInput, "unknown lemma id");
}

namespace {

// Moves the spare colour onto the discarded dimension: if `spare` is not
// already used there, swap it with the highest colour that is. Colour
// permutations keep scheme validity.
void swap_spare_onto_dim(const SimplicialComplex& x, Assignment& a, int dim, int spare) {
    std::set<int> used;
    for (const auto& f : x.faces_of_dim(dim))
        used.insert(a.colours.at(f.name()));
    if (used.empty() || used.count(spare))
        return;
    const int other = *used.rbegin();
    for (auto& [name, col] : a.colours) {
        if (col == spare)
            col = other;
        else if (col == other)
            col = spare;
    }
}

} // namespace

GraphColouring translate_backward(LemmaId id, const Graph& g, const Assignment& input) {
    const SimplicialComplex x = graph_to_complex(g);
    if (!check(x, lemma_target_scheme(id), input))
        fail(Errc::InvalidInput, "assignment is not valid for the target scheme");
    Assignment a = input; // local copy; c4/c5 rename before projecting

    GraphColouring out;
    switch (id) {
    case LemmaId::C1:
    case LemmaId::C7:
        out.k = a.k;
        out.colours = a.colours;
        return out;
    case LemmaId::C4: {
        if (a.k < 2)
            fail(Errc::InvalidInput, "palette too small to drop the spare colour");
        swap_spare_onto_dim(x, a, 1, a.k);
        out.k = a.k - 1;
        for (const auto& f : x.faces_of_dim(0)) {
            int col = a.colours.at(f.name());
            // Only reachable when the complex has no edges at all; then any
            // total map is a valid vertex colouring of g.
            if (col > out.k)
                col = 1;
            out.colours[f.labels()[0]] = col;
        }
        return out;
    }
    case LemmaId::C5: {
        if (a.k < 2)
            fail(Errc::InvalidInput, "palette too small to drop the spare colour");
        swap_spare_onto_dim(x, a, 0, a.k);
        out.k = a.k - 1;
        for (const auto& f : x.faces_of_dim(1))
            out.colours[f.name()] = a.colours.at(f.name());
        return out;
    }
    case LemmaId::C6: {
        out.k = a.k;
        for (const auto& f : x.faces())
            out.colours[(f.dim() == 0 ? "v:" + f.labels()[0] : "e:" + f.name())] =
                a.colours.at(f.name());
        return out;
    }
    case LemmaId::C8C10: {
        out.k = a.k;
        for (const auto& f : x.faces_of_dim(0))
            out.colours[f.labels()[0]] = a.colours.at(f.name());
        return out;
    }
    case LemmaId::C9C11: {
        out.k = a.k;
        for (const auto& f : x.faces_of_dim(1))
            out.colours[f.name()] = a.colours.at(f.name());
        return out;
    }
    }
    fail(Errc::InvalidInput, "unknown lemma id");
}

SizeReport reduction_size_report(LemmaId id, const Graph& g) {
    (void)id; // every lemma translates to the same one-dimensional complex
    const auto n = g.vertex_count();
    SizeReport r{};
    const long long log_part =
        n <= 1 ? 0 : static_cast<long long>(std::bit_width(n - 1));
    r.graph_bits = log_part + static_cast<long long>(n) * static_cast<long long>(n);
    r.complex_faces = static_cast<long long>(n + g.edge_count());
    r.ratio = r.graph_bits == 0 ? 0.0
                                : static_cast<double>(r.complex_faces) /
                                      static_cast<double>(r.graph_bits);
    return r;
}

} // namespace sccol
