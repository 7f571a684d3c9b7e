#include "sccol/complex.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace sccol {

void validate_label(const std::string& label) {
    if (label.empty())
        fail(Errc::BadLabel, "vertex label must be non-empty");
    for (char ch : label) {
        if (std::isspace(static_cast<unsigned char>(ch)))
            fail(Errc::BadLabel, "vertex label '" + label + "' contains whitespace");
        if (ch == '+' || ch == ':' || ch == '#')
            fail(Errc::BadLabel, "vertex label '" + label + "' contains reserved character '" +
                                     std::string(1, ch) + "'");
    }
}

Face::Face(std::vector<std::string> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
}

std::string Face::name() const {
    std::string out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i)
            out += '+';
        out += labels_[i];
    }
    return out;
}

bool Face::contains(const std::string& label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

bool Face::subset_of(const Face& other) const {
    return std::includes(other.labels_.begin(), other.labels_.end(), labels_.begin(),
                         labels_.end());
}

bool Face::proper_subset_of(const Face& other) const {
    return labels_.size() < other.labels_.size() && subset_of(other);
}

Face Face::intersect(const Face& other) const {
    std::vector<std::string> out;
    std::set_intersection(labels_.begin(), labels_.end(), other.labels_.begin(),
                          other.labels_.end(), std::back_inserter(out));
    return Face(std::move(out));
}

Face Face::unite(const Face& other) const {
    std::vector<std::string> out;
    std::set_union(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end(),
                   std::back_inserter(out));
    return Face(std::move(out));
}

namespace {

// All non-empty subsets of a face, added to `out`.
void add_subsets(const Face& f, std::set<Face>& out) {
    const auto& labels = f.labels();
    const std::size_t n = labels.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::string> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i))
                sub.push_back(labels[i]);
        out.insert(Face(std::move(sub)));
    }
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<std::string>>& facets) {
    if (facets.empty())
        fail(Errc::EmptyInput, "a complex needs at least one facet");
    std::vector<Face> faces;
    faces.reserve(facets.size());
    for (const auto& facet : facets) {
        if (facet.empty())
            fail(Errc::EmptyFace, "facets must be non-empty");
        for (const auto& label : facet)
            validate_label(label);
        faces.emplace_back(facet);
    }
    return from_faces(faces);
}

SimplicialComplex SimplicialComplex::from_faces(const std::vector<Face>& faces) {
    if (faces.empty())
        fail(Errc::EmptyInput, "a complex needs at least one face");
    std::set<Face> closed;
    for (const auto& f : faces) {
        if (f.empty())
            fail(Errc::EmptyFace, "faces must be non-empty");
        add_subsets(f, closed);
    }
    SimplicialComplex x;
    x.faces_.assign(closed.begin(), closed.end());
    std::set<std::string> verts;
    int dim = 0;
    for (const auto& f : x.faces_) {
        dim = std::max(dim, f.dim());
        verts.insert(f.labels().begin(), f.labels().end());
    }
    x.vertices_.assign(verts.begin(), verts.end());
    x.dim_ = dim;
    return x;
}

bool SimplicialComplex::has_face(const Face& f) const {
    return std::binary_search(faces_.begin(), faces_.end(), f);
}

std::vector<Face> SimplicialComplex::faces_of_dim(int r) const {
    std::vector<Face> out;
    for (const auto& f : faces_)
        if (f.dim() == r)
            out.push_back(f);
    return out;
}

SimplicialComplex SimplicialComplex::skeleton(int s) const {
    if (s < 0)
        fail(Errc::BadDimension, "skeleton index must be >= 0");
    std::vector<Face> kept;
    for (const auto& f : faces_)
        if (f.dim() <= s)
            kept.push_back(f);
    return from_faces(kept);
}

std::vector<Face> SimplicialComplex::facets() const {
    std::vector<Face> out;
    for (const auto& f : faces_) {
        bool maximal = true;
        for (const auto& g : faces_) {
            if (f.proper_subset_of(g)) {
                maximal = false;
                break;
            }
        }
        if (maximal)
            out.push_back(f);
    }
    return out;
}

SimplicialComplex SimplicialComplex::induced(const std::vector<std::string>& subset) const {
    Face carrier{subset};
    std::vector<Face> kept;
    for (const auto& f : faces_)
        if (f.subset_of(carrier))
            kept.push_back(f);
    if (kept.empty())
        fail(Errc::EmptyInput, "induced subcomplex is empty");
    return from_faces(kept);
}

bool SimplicialComplex::is_connected() const {
    if (vertices_.size() <= 1)
        return true;
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        idx[vertices_[i]] = i;
    // Union-find over the 1-skeleton.
    std::vector<std::size_t> parent(vertices_.size());
    for (std::size_t i = 0; i < parent.size(); ++i)
        parent[i] = i;
    auto find = [&](std::size_t a) {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& f : faces_) {
        if (f.dim() != 1)
            continue;
        auto a = find(idx.at(f.labels()[0]));
        auto b = find(idx.at(f.labels()[1]));
        parent[a] = b;
    }
    auto root = find(0);
    for (std::size_t i = 1; i < parent.size(); ++i)
        if (find(i) != root)
            return false;
    return true;
}

bool SimplicialComplex::is_strongly_connected() const {
    const auto top = faces_of_dim(dim_);
    if (top.size() <= 1)
        return true;
    // BFS over maximal faces; adjacent iff the intersection is a face of
    // codimension one. There are no (-1)-faces, so distinct vertices of a
    // 0-dimensional complex are never chained.
    std::vector<bool> seen(top.size(), false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        auto cur = queue.back();
        queue.pop_back();
        for (std::size_t j = 0; j < top.size(); ++j) {
            if (seen[j])
                continue;
            const Face common = top[cur].intersect(top[j]);
            if (!common.empty() && common.dim() == dim_ - 1) {
                seen[j] = true;
                ++reached;
                queue.push_back(j);
            }
        }
    }
    return reached == top.size();
}

Homogeneity SimplicialComplex::homogeneity() const {
    const auto top = faces_of_dim(dim_);
    Homogeneity h{true, true};
    for (const auto& v : vertices_) {
        bool covered = false;
        for (const auto& t : top)
            if (t.contains(v)) {
                covered = true;
                break;
            }
        if (!covered) {
            h.vertex_homogeneous = false;
            break;
        }
    }
    for (const auto& f : faces_) {
        bool covered = false;
        for (const auto& t : top)
            if (f.subset_of(t)) {
                covered = true;
                break;
            }
        if (!covered) {
            h.pure = false;
            break;
        }
    }
    return h;
}

} // namespace sccol
