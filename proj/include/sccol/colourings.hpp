#pragma once

#include <map>
#include <optional>
#include <string>

#include "sccol/complex.hpp"
#include "sccol/graph.hpp"

namespace sccol {

enum class SchemeTag {
    C1,   // vertex colouring: no monochromatic face with two or more vertices
    C2,   // face colouring: intersecting faces differ
    C3,   // total colouring on V and X together
    C4,   // complete ascending: ascending per dimension, dimensions separated
    C5,   // complete descending
    C6,   // full colouring: inclusions, 2-section on X^0, descending above
    PS,   // (P,s)-colouring: no face meets a colour class in more than s vertices
    C8,   // maximal ascending: ascending in every dimension
    C9,   // maximal descending
    C10,  // minimal ascending: ascending in some dimension r < dim X
    C11,  // minimal descending: descending in some dimension 0 < s <= dim X
    Asc,  // ascending in one fixed dimension
    Desc, // descending in one fixed dimension
};

struct ColourScheme {
    SchemeTag tag;
    int index = -1; // s for PS, r for Asc, s for Desc

    static ColourScheme c1() { return {SchemeTag::C1}; }
    static ColourScheme c2() { return {SchemeTag::C2}; }
    static ColourScheme c3() { return {SchemeTag::C3}; }
    static ColourScheme c4() { return {SchemeTag::C4}; }
    static ColourScheme c5() { return {SchemeTag::C5}; }
    static ColourScheme c6() { return {SchemeTag::C6}; }
    static ColourScheme ps(int s) { return {SchemeTag::PS, s}; }
    static ColourScheme c8() { return {SchemeTag::C8}; }
    static ColourScheme c9() { return {SchemeTag::C9}; }
    static ColourScheme c10() { return {SchemeTag::C10}; }
    static ColourScheme c11() { return {SchemeTag::C11}; }
    static ColourScheme asc(int r) { return {SchemeTag::Asc, r}; }
    static ColourScheme desc(int s) { return {SchemeTag::Desc, s}; }

    /// CLI spelling: "c1".."c11", "ps:s", "asc:r", "desc:s".
    std::string name() const;
    static ColourScheme parse(const std::string& text);
};

enum class AssignmentDomain { Vertices, Faces, Both, Dim };

/// A total colour map over a scheme's domain. Keys are vertex labels for
/// Vertices, canonical face names for Faces and Dim, and "v:"/"f:"-prefixed
/// names for Both.
struct Assignment {
    AssignmentDomain domain = AssignmentDomain::Vertices;
    int dim = -1; // for Dim
    int k = 0;
    std::map<std::string, int> colours;
};

/// Domain the scheme's assignments live on. Asc/Desc use Dim with their
/// index.
AssignmentDomain scheme_domain(const ColourScheme& scheme);

/// Reading of the vertex-vs-face clause of the total colouring: Incidence
/// constrains a vertex against the faces containing it; AllPairs constrains
/// every vertex against every face.
enum class TotalRule { Incidence, AllPairs };

/// Definition-level validity of `a` for `scheme` on `x`. Checks the
/// quantified conditions directly, without building any derived graph.
/// Throws DomainMismatch when the assignment's domain, totality, or palette
/// does not fit.
bool check(const SimplicialComplex& x, const ColourScheme& scheme, const Assignment& a,
           TotalRule total_rule = TotalRule::Incidence);

enum class SolveMode {
    Plain,         // no hypothesis checks
    TheoremBacked, // demand strongly connected + pure for C8-C11 and Asc/Desc
};

/// Searches for a valid assignment with palette {1..k}. Routes through the
/// scheme's derived graph where one encodes it; PS searches vertex maps
/// directly; C10/C11 try each dimension in turn. The result, when present,
/// always satisfies check().
std::optional<Assignment> colour(const SimplicialComplex& x, const ColourScheme& scheme, int k,
                                 SolveMode mode = SolveMode::Plain);

/// Least k for which colour() succeeds.
int chromatic(const SimplicialComplex& x, const ColourScheme& scheme,
              SolveMode mode = SolveMode::Plain);

} // namespace sccol
