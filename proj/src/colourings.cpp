#include "sccol/colourings.hpp"

#include <algorithm>
#include <functional>

#include "sccol/derived_graphs.hpp"

namespace sccol {

std::string ColourScheme::name() const {
    switch (tag) {
    case SchemeTag::C1: return "c1";
    case SchemeTag::C2: return "c2";
    case SchemeTag::C3: return "c3";
    case SchemeTag::C4: return "c4";
    case SchemeTag::C5: return "c5";
    case SchemeTag::C6: return "c6";
    case SchemeTag::PS: return "ps:" + std::to_string(index);
    case SchemeTag::C8: return "c8";
    case SchemeTag::C9: return "c9";
    case SchemeTag::C10: return "c10";
    case SchemeTag::C11: return "c11";
    case SchemeTag::Asc: return "asc:" + std::to_string(index);
    case SchemeTag::Desc: return "desc:" + std::to_string(index);
    }
    fail(Errc::InvalidInput, "unknown scheme tag");
}

ColourScheme ColourScheme::parse(const std::string& text) {
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::optional<int> idx;
    if (colon != std::string::npos) {
        try {
            idx = std::stoi(text.substr(colon + 1));
        } catch (const std::exception&) {
            fail(Errc::ParseError, "bad scheme index in '" + text + "'");
        }
    }
    auto plain = [&](ColourScheme s) {
        if (idx)
            fail(Errc::ParseError, "scheme '" + head + "' takes no index");
        return s;
    };
    auto indexed = [&](SchemeTag t) {
        if (!idx)
            fail(Errc::ParseError, "scheme '" + head + "' needs an index, e.g. '" + head + ":1'");
        return ColourScheme{t, *idx};
    };
    if (head == "c1") return plain(c1());
    if (head == "c2") return plain(c2());
    if (head == "c3") return plain(c3());
    if (head == "c4") return plain(c4());
    if (head == "c5") return plain(c5());
    if (head == "c6") return plain(c6());
    if (head == "ps" || head == "c7") return indexed(SchemeTag::PS);
    if (head == "c8") return plain(c8());
    if (head == "c9") return plain(c9());
    if (head == "c10") return plain(c10());
    if (head == "c11") return plain(c11());
    if (head == "asc") return indexed(SchemeTag::Asc);
    if (head == "desc") return indexed(SchemeTag::Desc);
    fail(Errc::ParseError, "unknown scheme '" + text + "'");
}

AssignmentDomain scheme_domain(const ColourScheme& scheme) {
    switch (scheme.tag) {
    case SchemeTag::C1:
    case SchemeTag::PS:
        return AssignmentDomain::Vertices;
    case SchemeTag::C3:
        return AssignmentDomain::Both;
    case SchemeTag::Asc:
    case SchemeTag::Desc:
        return AssignmentDomain::Dim;
    default:
        return AssignmentDomain::Faces;
    }
}

namespace {

void validate_scheme_indices(const SimplicialComplex& x, const ColourScheme& scheme) {
    switch (scheme.tag) {
    case SchemeTag::PS:
        if (scheme.index < 1)
            fail(Errc::OutOfRange, "ps index must be >= 1");
        break;
    case SchemeTag::Asc:
    case SchemeTag::Desc:
        if (scheme.index < 0 || scheme.index > x.dim())
            fail(Errc::BadDimension, "colouring dimension out of range 0..dim");
        break;
    default:
        break;
    }
}

std::vector<std::string> domain_names(const SimplicialComplex& x, const ColourScheme& scheme) {
    std::vector<std::string> out;
    switch (scheme_domain(scheme)) {
    case AssignmentDomain::Vertices:
        out = x.vertices();
        break;
    case AssignmentDomain::Faces:
        for (const auto& f : x.faces())
            out.push_back(f.name());
        break;
    case AssignmentDomain::Both:
        for (const auto& v : x.vertices())
            out.push_back("v:" + v);
        for (const auto& f : x.faces())
            out.push_back("f:" + f.name());
        break;
    case AssignmentDomain::Dim:
        for (const auto& f : x.faces_of_dim(scheme.index))
            out.push_back(f.name());
        break;
    }
    return out;
}

void validate_assignment(const SimplicialComplex& x, const ColourScheme& scheme,
                         const Assignment& a) {
    if (a.domain != scheme_domain(scheme))
        fail(Errc::DomainMismatch, "assignment domain does not match scheme " + scheme.name());
    if (a.domain == AssignmentDomain::Dim && a.dim != scheme.index)
        fail(Errc::DomainMismatch, "assignment is for dimension " + std::to_string(a.dim) +
                                       ", scheme wants " + std::to_string(scheme.index));
    const auto names = domain_names(x, scheme);
    if (a.colours.size() != names.size())
        fail(Errc::DomainMismatch, "assignment is not total on its domain");
    for (const auto& name : names) {
        auto it = a.colours.find(name);
        if (it == a.colours.end())
            fail(Errc::DomainMismatch, "assignment missing " + name);
        if (it->second < 1 || it->second > a.k)
            fail(Errc::DomainMismatch, "colour of " + name + " outside palette 1.." +
                                           std::to_string(a.k));
    }
}

using Lookup = std::function<int(const Face&)>;

// sigma, tau in X^r joining in an (r+1)-face get different colours.
bool ascending_ok(const SimplicialComplex& x, int r, const Lookup& col) {
    const auto level = x.faces_of_dim(r);
    for (std::size_t i = 0; i < level.size(); ++i)
        for (std::size_t j = i + 1; j < level.size(); ++j) {
            Face u = level[i].unite(level[j]);
            if (u.dim() == r + 1 && x.has_face(u) && col(level[i]) == col(level[j]))
                return false;
        }
    return true;
}

// sigma, tau in X^s meeting in an (s-1)-face get different colours.
bool descending_ok(const SimplicialComplex& x, int s, const Lookup& col) {
    const auto level = x.faces_of_dim(s);
    for (std::size_t i = 0; i < level.size(); ++i)
        for (std::size_t j = i + 1; j < level.size(); ++j) {
            Face m = level[i].intersect(level[j]);
            if (m.dim() == s - 1 && !m.empty() && col(level[i]) == col(level[j]))
                return false;
        }
    return true;
}

bool dims_separated(const SimplicialComplex& x, const Lookup& col) {
    // Colour sets of different dimensions must be disjoint.
    std::vector<std::vector<int>> used(static_cast<std::size_t>(x.dim()) + 1);
    for (const auto& f : x.faces())
        used[static_cast<std::size_t>(f.dim())].push_back(col(f));
    for (auto& u : used) {
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
    }
    for (std::size_t r = 0; r < used.size(); ++r)
        for (std::size_t s = r + 1; s < used.size(); ++s)
            for (int c : used[r])
                if (std::binary_search(used[s].begin(), used[s].end(), c))
                    return false;
    return true;
}

} // namespace

bool check(const SimplicialComplex& x, const ColourScheme& scheme, const Assignment& a,
           TotalRule total_rule) {
    validate_scheme_indices(x, scheme);
    validate_assignment(x, scheme, a);

    Lookup face_col = [&](const Face& f) { return a.colours.at(f.name()); };

    switch (scheme.tag) {
    case SchemeTag::C1: {
        // No monochromatic face with two or more vertices.
        for (const auto& f : x.faces()) {
            if (f.dim() < 1)
                continue;
            const int first = a.colours.at(f.labels()[0]);
            bool mono = true;
            for (const auto& v : f.labels())
                if (a.colours.at(v) != first) {
                    mono = false;
                    break;
                }
            if (mono)
                return false;
        }
        return true;
    }
    case SchemeTag::C2: {
        const auto& faces = x.faces();
        for (std::size_t i = 0; i < faces.size(); ++i)
            for (std::size_t j = i + 1; j < faces.size(); ++j)
                if (!faces[i].intersect(faces[j]).empty() &&
                    face_col(faces[i]) == face_col(faces[j]))
                    return false;
        return true;
    }
    case SchemeTag::C3: {
        auto vcol = [&](const std::string& v) { return a.colours.at("v:" + v); };
        auto fcol = [&](const Face& f) { return a.colours.at("f:" + f.name()); };
        for (const auto& f : x.faces_of_dim(1))
            if (vcol(f.labels()[0]) == vcol(f.labels()[1]))
                return false;
        const auto& faces = x.faces();
        for (std::size_t i = 0; i < faces.size(); ++i)
            for (std::size_t j = i + 1; j < faces.size(); ++j)
                if (!faces[i].intersect(faces[j]).empty() && fcol(faces[i]) == fcol(faces[j]))
                    return false;
        for (const auto& v : x.vertices())
            for (const auto& f : faces) {
                const bool constrained =
                    total_rule == TotalRule::AllPairs || f.contains(v);
                if (constrained && vcol(v) == fcol(f))
                    return false;
            }
        return true;
    }
    case SchemeTag::C4: {
        for (int r = 0; r <= x.dim(); ++r)
            if (!ascending_ok(x, r, face_col))
                return false;
        return dims_separated(x, face_col);
    }
    case SchemeTag::C5: {
        for (int s = 0; s <= x.dim(); ++s)
            if (!descending_ok(x, s, face_col))
                return false;
        return dims_separated(x, face_col);
    }
    case SchemeTag::C6: {
        const auto& faces = x.faces();
        for (std::size_t i = 0; i < faces.size(); ++i)
            for (std::size_t j = 0; j < faces.size(); ++j)
                if (faces[i].proper_subset_of(faces[j]) &&
                    face_col(faces[i]) == face_col(faces[j]))
                    return false;
        if (!ascending_ok(x, 0, face_col))
            return false;
        for (int s = 1; s <= x.dim(); ++s)
            if (!descending_ok(x, s, face_col))
                return false;
        return true;
    }
    case SchemeTag::PS: {
        const int s = scheme.index;
        for (const auto& f : x.faces()) {
            std::map<int, int> count;
            for (const auto& v : f.labels())
                if (++count[a.colours.at(v)] > s)
                    return false;
        }
        return true;
    }
    case SchemeTag::C8: {
        for (int r = 0; r <= x.dim(); ++r)
            if (!ascending_ok(x, r, face_col))
                return false;
        return true;
    }
    case SchemeTag::C9: {
        for (int s = 0; s <= x.dim(); ++s)
            if (!descending_ok(x, s, face_col))
                return false;
        return true;
    }
    case SchemeTag::C10: {
        for (int r = 0; r < x.dim(); ++r)
            if (ascending_ok(x, r, face_col))
                return true;
        return false;
    }
    case SchemeTag::C11: {
        for (int s = 1; s <= x.dim(); ++s)
            if (descending_ok(x, s, face_col))
                return true;
        return false;
    }
    case SchemeTag::Asc:
        return ascending_ok(x, scheme.index, face_col);
    case SchemeTag::Desc:
        return descending_ok(x, scheme.index, face_col);
    }
    fail(Errc::InvalidInput, "unknown scheme tag");
}

namespace {

Assignment assignment_shell(const ColourScheme& scheme, int k) {
    Assignment a;
    a.domain = scheme_domain(scheme);
    a.dim = a.domain == AssignmentDomain::Dim ? scheme.index : -1;
    a.k = k;
    return a;
}

// Witness from a derived-graph colouring whose vertex names are the domain
// keys themselves (two-section, line, total, full, exchange, descending).
Assignment from_graph_witness(const ColourScheme& scheme, int k,
                              const GraphColouring& c) {
    Assignment a = assignment_shell(scheme, k);
    a.colours = c.colours;
    return a;
}

// Witness from a sum graph with "d<r>:" prefixes: strip the prefix.
Assignment from_sum_witness(const ColourScheme& scheme, int k,
                            const GraphColouring& c) {
    Assignment a = assignment_shell(scheme, k);
    for (const auto& [name, col] : c.colours)
        a.colours[name.substr(name.find(':') + 1)] = col;
    return a;
}

// Witness from a Cartesian-product colouring: fixing every other coordinate
// at its first vertex induces a proper colouring of each factor. The level
// not covered by the product (top for ascending, bottom for descending) is
// unconstrained and gets colour 1.
Assignment from_product_witness(const SimplicialComplex& x, const ColourScheme& scheme, int k,
                                const std::vector<Graph>& factors, const GraphColouring& c,
                                int trivial_dim) {
    Assignment a = assignment_shell(scheme, k);
    std::vector<std::vector<std::string>> names;
    for (const auto& f : factors)
        names.push_back(f.vertices());
    for (std::size_t r = 0; r < factors.size(); ++r) {
        for (const auto& v : names[r]) {
            std::string key;
            for (std::size_t j = 0; j < factors.size(); ++j) {
                if (j)
                    key += ',';
                key += (j == r) ? v : names[j][0];
            }
            a.colours[v] = c.colours.at(key);
        }
    }
    for (const auto& f : x.faces_of_dim(trivial_dim))
        a.colours[f.name()] = 1;
    return a;
}

std::optional<Assignment> colour_ps(const SimplicialComplex& x, int s, int k) {
    const auto& verts = x.vertices();
    if (k <= 0)
        return verts.empty() ? std::optional<Assignment>(Assignment{}) : std::nullopt;

    // Faces touching each vertex, by index, for incremental violation checks.
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < verts.size(); ++i)
        index[verts[i]] = static_cast<int>(i);
    std::vector<std::vector<std::vector<int>>> faces_at(verts.size());
    for (const auto& f : x.faces()) {
        std::vector<int> members;
        for (const auto& v : f.labels())
            members.push_back(index[v]);
        for (int m : members)
            faces_at[static_cast<std::size_t>(m)].push_back(members);
    }

    std::vector<int> colour(verts.size(), 0);
    int max_used = 0;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == verts.size())
            return true;
        const int limit = std::min(k, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            colour[i] = c;
            bool ok = true;
            // Unassigned vertices sit at 0, so counting colour c scans only
            // the assigned prefix.
            for (const auto& members : faces_at[i]) {
                int same = 0;
                for (int m : members)
                    if (colour[static_cast<std::size_t>(m)] == c)
                        ++same;
                if (same > s) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                const int prev = max_used;
                max_used = std::max(max_used, c);
                if (self(self, i + 1))
                    return true;
                max_used = prev;
            }
        }
        colour[i] = 0;
        return false;
    };
    if (!rec(rec, 0))
        return std::nullopt;

    Assignment a;
    a.domain = AssignmentDomain::Vertices;
    a.k = k;
    for (std::size_t i = 0; i < verts.size(); ++i)
        a.colours[verts[i]] = colour[i];
    return a;
}

// All faces outside the fixed dimension get colour 1; the minimal schemes
// only constrain one dimension at a time.
Assignment padded_level_witness(const SimplicialComplex& x, const ColourScheme& scheme, int k,
                                int level, const GraphColouring& c) {
    Assignment a = assignment_shell(scheme, k);
    for (const auto& f : x.faces())
        a.colours[f.name()] = f.dim() == level ? c.colours.at(f.name()) : 1;
    return a;
}

} // namespace

std::optional<Assignment> colour(const SimplicialComplex& x, const ColourScheme& scheme, int k,
                                 SolveMode mode) {
    validate_scheme_indices(x, scheme);
    if (k < 0)
        fail(Errc::OutOfRange, "palette size must be >= 0");
    if (mode == SolveMode::TheoremBacked) {
        switch (scheme.tag) {
        case SchemeTag::C8:
        case SchemeTag::C9:
        case SchemeTag::C10:
        case SchemeTag::C11:
        case SchemeTag::Asc:
        case SchemeTag::Desc: {
            const auto h = x.homogeneity();
            if (!x.is_strongly_connected() || !h.pure)
                fail(Errc::HypothesisViolated,
                     "scheme " + scheme.name() + " needs a strongly connected pure complex");
            break;
        }
        default:
            break;
        }
    }

    auto solve_named = [&](DerivedKind kind) -> std::optional<GraphColouring> {
        return is_k_colourable(derive(x, kind), k);
    };

    switch (scheme.tag) {
    case SchemeTag::C1:
        if (auto c = solve_named(DerivedKind::two_section()))
            return from_graph_witness(scheme, k, *c);
        return std::nullopt;
    case SchemeTag::C2:
        if (auto c = solve_named(DerivedKind::line()))
            return from_graph_witness(scheme, k, *c);
        return std::nullopt;
    case SchemeTag::C3:
        if (auto c = solve_named(DerivedKind::total()))
            return from_graph_witness(scheme, k, *c);
        return std::nullopt;
    case SchemeTag::C4:
        if (auto c = solve_named(DerivedKind::complete_asc()))
            return from_sum_witness(scheme, k, *c);
        return std::nullopt;
    case SchemeTag::C5:
        if (auto c = solve_named(DerivedKind::complete_desc()))
            return from_sum_witness(scheme, k, *c);
        return std::nullopt;
    case SchemeTag::C6:
        if (auto c = solve_named(DerivedKind::full()))
            return from_graph_witness(scheme, k, *c);
        return std::nullopt;
    case SchemeTag::Asc:
        if (auto c = solve_named(DerivedKind::exchange(scheme.index)))
            return from_graph_witness(scheme, k, *c);
        return std::nullopt;
    case SchemeTag::Desc:
        if (auto c = solve_named(DerivedKind::descending(scheme.index)))
            return from_graph_witness(scheme, k, *c);
        return std::nullopt;
    case SchemeTag::PS:
        return colour_ps(x, scheme.index, k);
    case SchemeTag::C8: {
        if (x.dim() == 0) {
            // Any map on X^0 is ascending in the top dimension.
            if (k < 1)
                return std::nullopt;
            Assignment a = assignment_shell(scheme, k);
            for (const auto& f : x.faces())
                a.colours[f.name()] = 1;
            return a;
        }
        std::vector<Graph> factors;
        for (int r = 0; r < x.dim(); ++r)
            factors.push_back(derive(x, DerivedKind::exchange(r)));
        if (auto c = solve_named(DerivedKind::cart_asc()))
            return from_product_witness(x, scheme, k, factors, *c, x.dim());
        return std::nullopt;
    }
    case SchemeTag::C9: {
        if (x.dim() == 0) {
            if (k < 1)
                return std::nullopt;
            Assignment a = assignment_shell(scheme, k);
            for (const auto& f : x.faces())
                a.colours[f.name()] = 1;
            return a;
        }
        std::vector<Graph> factors;
        for (int s = 1; s <= x.dim(); ++s)
            factors.push_back(derive(x, DerivedKind::descending(s)));
        if (auto c = solve_named(DerivedKind::cart_desc()))
            return from_product_witness(x, scheme, k, factors, *c, 0);
        return std::nullopt;
    }
    case SchemeTag::C10: {
        for (int r = 0; r < x.dim(); ++r)
            if (auto c = is_k_colourable(derive(x, DerivedKind::exchange(r)), k))
                return padded_level_witness(x, scheme, k, r, *c);
        return std::nullopt;
    }
    case SchemeTag::C11: {
        for (int s = 1; s <= x.dim(); ++s)
            if (auto c = is_k_colourable(derive(x, DerivedKind::descending(s)), k))
                return padded_level_witness(x, scheme, k, s, *c);
        return std::nullopt;
    }
    }
    fail(Errc::InvalidInput, "unknown scheme tag");
}

int chromatic(const SimplicialComplex& x, const ColourScheme& scheme, SolveMode mode) {
    validate_scheme_indices(x, scheme);
    if ((scheme.tag == SchemeTag::C10 || scheme.tag == SchemeTag::C11) && x.dim() == 0)
        fail(Errc::BadDimension,
             "minimal colourings have no admissible dimension on a 0-dimensional complex");
    const auto bound = domain_names(x, scheme).size();
    for (int k = 0; k <= static_cast<int>(bound); ++k)
        if (colour(x, scheme, k, mode))
            return k;
    fail(Errc::InvalidInput, "no colouring up to the domain size; invariant broken");
}

} // namespace sccol
