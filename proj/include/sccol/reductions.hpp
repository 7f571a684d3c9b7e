#pragma once

#include <optional>
#include <string>

#include "sccol/colourings.hpp"
#include "sccol/complex.hpp"
#include "sccol/graph.hpp"

namespace sccol {

/// The executable instance translations behind the hardness results. Each
/// id fixes a source problem on graphs, a target scheme on the induced
/// one-dimensional complex, and a palette shift:
///   c1     vertex k-colouring  <-> c1-k
///   c4     vertex k-colouring  <-> c4-(k+1)
///   c5     edge k-colouring    <-> c5-(k+1)
///   c6     total k-colouring   <-> c6-k
///   c7     vertex k-colouring  <-> ps:1-k
///   c8c10  vertex k-colouring  <-> c8-k (= c10-k in dimension one)
///   c9c11  edge k-colouring    <-> c9-k (= c11-k in dimension one)
enum class LemmaId { C1, C4, C5, C6, C7, C8C10, C9C11 };

std::string lemma_name(LemmaId id);
LemmaId parse_lemma(const std::string& text);

/// The target scheme and palette for source palette k.
ColourScheme lemma_target_scheme(LemmaId id);
int lemma_target_k(LemmaId id, int k);

/// The graph as a one-dimensional complex: vertices and edges as faces.
SimplicialComplex graph_to_complex(const Graph& g);

/// Classical line graph: one vertex per edge, named "u+v", adjacent when
/// the edges share an endpoint.
Graph line_graph(const Graph& g);

/// Classical total graph: vertices "v:<u>" and "e:<u>+<v>", with vertex
/// adjacency, edge adjacency, and vertex-edge incidence.
Graph total_graph(const Graph& g);

/// Exact edge/total colourability, decided on the line/total graph. The
/// colouring variants return the witness (keys per the graphs above).
bool is_edge_k_colourable(const Graph& g, int k);
std::optional<GraphColouring> edge_colouring(const Graph& g, int k);
bool is_total_k_colourable(const Graph& g, int k);
std::optional<GraphColouring> total_colouring(const Graph& g, int k);

/// Source-side colouring -> scheme assignment on graph_to_complex(g).
/// Source keys: vertex names for c1/c4/c7/c8c10; "u+v" edge names for
/// c5/c9c11; "v:"/"e:"-prefixed names for c6. Throws InvalidInput when the
/// input is not valid on its own side.
Assignment translate_forward(LemmaId id, const Graph& g, const GraphColouring& input);

/// Scheme assignment -> source-side colouring. For c4/c5 the spare colour
/// k+1 is first moved onto the discarded dimension by a deterministic
/// palette swap. Throws InvalidInput when the assignment fails the target
/// check.
GraphColouring translate_backward(LemmaId id, const Graph& g, const Assignment& input);

struct SizeReport {
    long long graph_bits;    // ceil(log2 n) + n^2, the adjacency-matrix length
    long long complex_faces; // faces of the translated instance
    double ratio;            // complex_faces / graph_bits
};

SizeReport reduction_size_report(LemmaId id, const Graph& g);

} // namespace sccol
