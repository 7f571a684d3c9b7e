#pragma once

#include <string>
#include <vector>

#include "sccol/errors.hpp"

namespace sccol {

/// Throws BadLabel unless `label` is a non-empty token without whitespace
/// or any of the reserved characters '+', ':', '#'.
void validate_label(const std::string& label);

/// A face of a simplicial complex: a finite set of vertex labels, kept
/// sorted. The empty face is representable (dim() == -1) but is never
/// stored in a complex; it shows up as the result of intersections.
class Face {
public:
    Face() = default;
    explicit Face(std::vector<std::string> labels);

    int dim() const { return static_cast<int>(labels_.size()) - 1; }
    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }

    const std::vector<std::string>& labels() const { return labels_; }

    /// Canonical name: labels sorted ascending, joined by "+".
    std::string name() const;

    bool contains(const std::string& label) const;
    bool subset_of(const Face& other) const;
    bool proper_subset_of(const Face& other) const;
    Face intersect(const Face& other) const;
    Face unite(const Face& other) const;

    bool operator==(const Face& other) const { return labels_ == other.labels_; }
    bool operator<(const Face& other) const { return labels_ < other.labels_; }

private:
    std::vector<std::string> labels_; // sorted, unique
};

struct Homogeneity {
    bool vertex_homogeneous; // every vertex lies in a face of maximal dimension
    bool pure;               // every face lies in a face of maximal dimension
};

/// Finite abstract simplicial complex, stored fully materialized: every
/// face is listed, in canonical order, so membership and enumeration are
/// deterministic. Downward closure and V = union of faces hold for every
/// instance by construction.
class SimplicialComplex {
public:
    /// Downward closure of the given facets. Errors: EmptyInput, EmptyFace,
    /// BadLabel.
    static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets);

    /// Builds a complex from an explicit face list, closing downward.
    /// Used internally for induced subcomplexes; faces must be non-empty.
    static SimplicialComplex from_faces(const std::vector<Face>& faces);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Face>& faces() const { return faces_; }
    int dim() const { return dim_; }

    bool has_face(const Face& f) const;

    /// X^r: the faces of dimension exactly r; empty for r < 0 or r > dim.
    std::vector<Face> faces_of_dim(int r) const;

    /// X^(s): the subcomplex of faces of dimension <= s. Requires s >= 0,
    /// which keeps the vertex set intact.
    SimplicialComplex skeleton(int s) const;

    /// Maximal faces under inclusion, in canonical order.
    std::vector<Face> facets() const;

    /// The induced subcomplex on a vertex subset: all faces contained in it.
    SimplicialComplex induced(const std::vector<std::string>& subset) const;

    /// Connectivity of the underlying graph (V, X^1).
    bool is_connected() const;

    /// True iff any two faces of maximum dimension are linked by a chain of
    /// maximum-dimension faces whose consecutive intersections have
    /// codimension one.
    bool is_strongly_connected() const;

    Homogeneity homogeneity() const;

private:
    SimplicialComplex() = default;

    std::vector<std::string> vertices_; // sorted
    std::vector<Face> faces_;           // sorted canonical, downward closed
    int dim_ = 0;
};

} // namespace sccol
