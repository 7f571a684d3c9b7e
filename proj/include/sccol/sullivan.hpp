#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sccol/colourings.hpp"
#include "sccol/complex.hpp"
#include "sccol/graph.hpp"

namespace sccol {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial with exact integer coefficients;
/// coefficient i belongs to x^i, no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly x_power_minus_one(int n); // x^n - 1

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    IntPoly operator*(const IntPoly& other) const;
    IntPoly operator-(const IntPoly& other) const;

    /// Exact division; throws InvalidInput if the divisor is not monic or
    /// the remainder is non-zero.
    IntPoly divide_exact(const IntPoly& divisor) const;

    bool operator==(const IntPoly& other) const { return coeffs_ == other.coeffs_; }

private:
    std::vector<BigInt> coeffs_;
    void trim();
};

/// The k-th cyclotomic polynomial, by exact division of x^k - 1 by the
/// product of the lower cyclotomics. Supported for 1 <= k <= 64.
IntPoly cyclotomic_poly(int k);

/// Residue in Z[zeta_k] = Z[x]/Phi_k(x): an integer coefficient vector of
/// length deg Phi_k. Arithmetic is exact; zero-testing is exact.
class CyclotomicInt {
public:
    explicit CyclotomicInt(int k); // zero

    static CyclotomicInt zeta_power(int k, long long e);

    int k() const { return k_; }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    bool is_zero() const;

    CyclotomicInt& operator+=(const CyclotomicInt& other);
    CyclotomicInt operator*(const CyclotomicInt& other) const;
    CyclotomicInt& scale(const BigInt& factor);

    bool operator==(const CyclotomicInt& other) const;

private:
    int k_;
    std::vector<BigInt> modulus_; // Phi_k, monic
    std::vector<BigInt> coeffs_;  // length = deg Phi_k

    void reduce(std::vector<BigInt>& raw);
};

/// Formal polynomial in named commuting generators: an ordered list of
/// integer-coefficient monomials.
struct Monomial {
    std::map<std::string, int> powers; // generator name -> exponent >= 1
};

struct Term {
    BigInt coeff;
    Monomial mono;
};

using FormalPoly = std::vector<Term>;

/// Evaluates a formal polynomial at cyclotomic values for its variables.
CyclotomicInt evaluate_poly(const FormalPoly& poly,
                            const std::map<std::string, CyclotomicInt>& values, int k);

struct Generator {
    std::string name;
    int degree;
};

/// Pure Sullivan presentation of a graph at level k: one degree-2 generator
/// per vertex, one degree-(2k-3) generator per edge, with the edge
/// differential summing the k split monomials of word degree k-1.
class SullivanPresentation {
public:
    /// Errors: BadK for k < 2, EmptyInput for the empty graph.
    static SullivanPresentation build(const Graph& g, int k);

    int k() const { return k_; }
    const Graph& graph() const { return graph_; }
    const std::vector<Generator>& even_generators() const { return even_; }
    const std::vector<Generator>& odd_generators() const { return odd_; }
    const std::vector<std::pair<std::string, FormalPoly>>& differentials() const {
        return diffs_;
    }
    /// Graph vertex behind an even generator name.
    const std::string& vertex_of(const std::string& even_name) const;

    /// Copy with every generator name prefixed; the underlying graph is
    /// unchanged. Used to keep tensor factor namespaces disjoint.
    SullivanPresentation with_prefix(const std::string& prefix) const;

private:
    SullivanPresentation() = default;
    int k_ = 0;
    Graph graph_;
    std::vector<Generator> even_, odd_;
    std::vector<std::pair<std::string, FormalPoly>> diffs_;
    std::map<std::string, std::string> vertex_of_even_;
};

struct TensorPresentation {
    std::vector<SullivanPresentation> factors;
};

/// Validates namespace disjointness across factors. Errors: EmptyInput,
/// NameClash.
TensorPresentation make_tensor(std::vector<SullivanPresentation> factors);

using SchemeModel = std::variant<SullivanPresentation, TensorPresentation>;

/// The pure Sullivan model whose ellipticity encodes the scheme's
/// k-colourability: a single presentation over the scheme's derived graph
/// for c1-c6, c8, c9 and asc/desc, a tensor over partition graphs for ps,
/// and a tensor over the per-dimension graphs for c10/c11.
/// Errors: BadK, HypothesisViolated, TooLarge, BadDimension.
SchemeModel model_for_scheme(const SimplicialComplex& x, const ColourScheme& scheme, int k);

/// Substitutes zeta^{c(v)} for each vertex generator and tests that every
/// edge differential vanishes in Z[zeta_k]. True exactly when c is a proper
/// colouring of the presentation's graph.
bool witness_check(const SullivanPresentation& s, const GraphColouring& c);

enum class Verdict { Elliptic, NonElliptic };

struct EllipticityVerdict {
    Verdict verdict;
    std::optional<Assignment> witness;
    std::string justification;
};

/// Decides ellipticity of the scheme's model through the colourability
/// equivalence: NonElliptic iff a colouring exists, with the witness
/// additionally validated by witness_check on every relevant factor. No
/// cohomology is computed.
EllipticityVerdict ellipticity_verdict(const SimplicialComplex& x, const ColourScheme& scheme,
                                       int k);

} // namespace sccol
