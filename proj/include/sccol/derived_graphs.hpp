#pragma once

#include <string>

#include "sccol/complex.hpp"
#include "sccol/graph.hpp"
#include "sccol/partitions.hpp"

namespace sccol {

enum class DerivedKindTag {
    TwoSection,   // vertices V, edges the 1-faces
    Line,         // vertices all faces, adjacent when they intersect
    Total,        // vertices "v:<label>" and "f:<face>", all incidences
    Exchange,     // G_r: r-faces joined when the union is an (r+1)-face
    Descending,   // G'_s: s-faces joined when the intersection is an (s-1)-face
    Inclusion,    // faces joined by strict containment
    Full,         // Inclusion overlaid with G_0 and G'_1 .. G'_dim
    CompleteAsc,  // G_0 + G_1 + ... + G_dim (graph sum, "d<r>:" prefixes)
    CompleteDesc, // G'_0 + G'_1 + ... + G'_dim
    CartAsc,      // G_0 x G_1 x ... x G_{dim-1} (Cartesian)
    CartDesc,     // G'_1 x G'_2 x ... x G'_dim
};

struct DerivedKind {
    DerivedKindTag tag;
    int dim = -1; // Exchange / Descending index

    static DerivedKind two_section() { return {DerivedKindTag::TwoSection}; }
    static DerivedKind line() { return {DerivedKindTag::Line}; }
    static DerivedKind total() { return {DerivedKindTag::Total}; }
    static DerivedKind exchange(int r) { return {DerivedKindTag::Exchange, r}; }
    static DerivedKind descending(int s) { return {DerivedKindTag::Descending, s}; }
    static DerivedKind inclusion() { return {DerivedKindTag::Inclusion}; }
    static DerivedKind full() { return {DerivedKindTag::Full}; }
    static DerivedKind complete_asc() { return {DerivedKindTag::CompleteAsc}; }
    static DerivedKind complete_desc() { return {DerivedKindTag::CompleteDesc}; }
    static DerivedKind cart_asc() { return {DerivedKindTag::CartAsc}; }
    static DerivedKind cart_desc() { return {DerivedKindTag::CartDesc}; }
};

/// Builds the derived graph of the given kind. Exchange/Descending indices
/// must lie in 0..dim X; CartAsc/CartDesc additionally need dim X >= 1
/// (BadDimension otherwise). Exchange(dim X) and Descending(0) come out
/// edgeless, never as errors.
Graph derive(const SimplicialComplex& x, const DerivedKind& kind);

/// G_0(P): blocks as vertices, joined when the union of two blocks induces
/// a connected subcomplex.
Graph partition_graph(const SimplicialComplex& x, const Partition& p);

} // namespace sccol
