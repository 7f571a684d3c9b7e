#include "sccol/sullivan.hpp"

#include <algorithm>
#include <set>

#include "sccol/derived_graphs.hpp"
#include "sccol/partitions.hpp"

namespace sccol {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPoly IntPoly::x_power_minus_one(int n) {
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = -1;
    c[static_cast<std::size_t>(n)] = 1;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& other) const {
    if (is_zero() || other.is_zero())
        return IntPoly();
    std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& other) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        out[i] -= other.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero() || divisor.coeffs_.back() != 1)
        fail(Errc::InvalidInput, "divisor must be monic");
    std::vector<BigInt> rem = coeffs_;
    const int dd = divisor.degree();
    if (degree() < dd)
        fail(Errc::InvalidInput, "division is not exact");
    std::vector<BigInt> quot(static_cast<std::size_t>(degree() - dd) + 1, 0);
    for (int i = degree(); i >= dd; --i) {
        BigInt f = rem[static_cast<std::size_t>(i)];
        if (f == 0)
            continue;
        quot[static_cast<std::size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] -= f * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    for (const auto& c : rem)
        if (c != 0)
            fail(Errc::InvalidInput, "division is not exact");
    return IntPoly(std::move(quot));
}

IntPoly cyclotomic_poly(int k) {
    if (k < 1 || k > 64)
        fail(Errc::OutOfRange, "cyclotomic index supported for 1..64");
    std::vector<IntPoly> phi(static_cast<std::size_t>(k) + 1);
    for (int d = 1; d <= k; ++d) {
        IntPoly num = IntPoly::x_power_minus_one(d);
        for (int e = 1; e < d; ++e)
            if (d % e == 0)
                num = num.divide_exact(phi[static_cast<std::size_t>(e)]);
        phi[static_cast<std::size_t>(d)] = num;
    }
    return phi[static_cast<std::size_t>(k)];
}

CyclotomicInt::CyclotomicInt(int k) : k_(k) {
    modulus_ = cyclotomic_poly(k).coeffs();
    coeffs_.assign(modulus_.size() - 1, 0);
}

CyclotomicInt CyclotomicInt::zeta_power(int k, long long e) {
    CyclotomicInt out(k);
    long long r = e % k; // zeta^k = 1
    if (r < 0)
        r += k;
    std::vector<BigInt> raw(static_cast<std::size_t>(r) + 1, 0);
    raw[static_cast<std::size_t>(r)] = 1;
    out.reduce(raw);
    out.coeffs_ = std::move(raw);
    return out;
}

void CyclotomicInt::reduce(std::vector<BigInt>& raw) {
    const std::size_t deg = modulus_.size() - 1;
    for (std::size_t i = raw.size(); i-- > deg;) {
        BigInt f = raw[i];
        if (f == 0)
            continue;
        for (std::size_t j = 0; j < modulus_.size(); ++j)
            raw[i - deg + j] -= f * modulus_[j];
    }
    raw.resize(deg);
}

bool CyclotomicInt::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& other) {
    if (k_ != other.k_)
        fail(Errc::InvalidInput, "mixing cyclotomic orders");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    return *this;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& other) const {
    if (k_ != other.k_)
        fail(Errc::InvalidInput, "mixing cyclotomic orders");
    CyclotomicInt out(k_);
    if (coeffs_.empty() || other.coeffs_.empty())
        return out;
    std::vector<BigInt> raw(coeffs_.size() + other.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            raw[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    out.reduce(raw);
    out.coeffs_ = std::move(raw);
    return out;
}

CyclotomicInt& CyclotomicInt::scale(const BigInt& factor) {
    for (auto& c : coeffs_)
        c *= factor;
    return *this;
}

bool CyclotomicInt::operator==(const CyclotomicInt& other) const {
    return k_ == other.k_ && coeffs_ == other.coeffs_;
}

CyclotomicInt evaluate_poly(const FormalPoly& poly,
                            const std::map<std::string, CyclotomicInt>& values, int k) {
    CyclotomicInt acc(k);
    for (const auto& term : poly) {
        CyclotomicInt prod = CyclotomicInt::zeta_power(k, 0); // one
        for (const auto& [name, exp] : term.mono.powers) {
            auto it = values.find(name);
            if (it == values.end())
                fail(Errc::InvalidInput, "no value bound for generator " + name);
            for (int e = 0; e < exp; ++e)
                prod = prod * it->second;
        }
        prod.scale(term.coeff);
        acc += prod;
    }
    return acc;
}

SullivanPresentation SullivanPresentation::build(const Graph& g, int k) {
    if (k < 2)
        fail(Errc::BadK, "the pure Sullivan model needs k >= 2");
    if (g.empty())
        fail(Errc::EmptyInput, "the model needs a non-empty graph");
    SullivanPresentation s;
    s.k_ = k;
    s.graph_ = g;
    for (const auto& v : g.vertices()) {
        s.even_.push_back({"x_" + v, 2});
        s.vertex_of_even_["x_" + v] = v;
    }
    for (const auto& [u, v] : g.edges()) {
        const std::string yname = "y_" + u + "+" + v;
        s.odd_.push_back({yname, 2 * k - 3});
        // d(y_uv) = sum over l = 1..k of x_u^(k-l) x_v^(l-1).
        FormalPoly d;
        for (int l = 1; l <= k; ++l) {
            Term t;
            t.coeff = 1;
            if (k - l > 0)
                t.mono.powers["x_" + u] = k - l;
            if (l - 1 > 0)
                t.mono.powers["x_" + v] = l - 1;
            d.push_back(std::move(t));
        }
        s.diffs_.emplace_back(yname, std::move(d));
    }
    return s;
}

const std::string& SullivanPresentation::vertex_of(const std::string& even_name) const {
    auto it = vertex_of_even_.find(even_name);
    if (it == vertex_of_even_.end())
        fail(Errc::InvalidInput, "no such even generator: " + even_name);
    return it->second;
}

SullivanPresentation SullivanPresentation::with_prefix(const std::string& prefix) const {
    SullivanPresentation out;
    out.k_ = k_;
    out.graph_ = graph_;
    for (const auto& g : even_)
        out.even_.push_back({prefix + g.name, g.degree});
    for (const auto& g : odd_)
        out.odd_.push_back({prefix + g.name, g.degree});
    for (const auto& [name, poly] : diffs_) {
        FormalPoly renamed;
        for (const auto& term : poly) {
            Term t;
            t.coeff = term.coeff;
            for (const auto& [var, exp] : term.mono.powers)
                t.mono.powers[prefix + var] = exp;
            renamed.push_back(std::move(t));
        }
        out.diffs_.emplace_back(prefix + name, std::move(renamed));
    }
    for (const auto& [name, vertex] : vertex_of_even_)
        out.vertex_of_even_[prefix + name] = vertex;
    return out;
}

TensorPresentation make_tensor(std::vector<SullivanPresentation> factors) {
    if (factors.empty())
        fail(Errc::EmptyInput, "a tensor needs at least one factor");
    std::set<std::string> names;
    for (const auto& f : factors) {
        for (const auto& g : f.even_generators())
            if (!names.insert(g.name).second)
                fail(Errc::NameClash, "generator in two factors: " + g.name);
        for (const auto& g : f.odd_generators())
            if (!names.insert(g.name).second)
                fail(Errc::NameClash, "generator in two factors: " + g.name);
    }
    return TensorPresentation{std::move(factors)};
}

namespace {

void require_connected(const SimplicialComplex& x, const ColourScheme& scheme) {
    if (!x.is_connected())
        fail(Errc::HypothesisViolated,
             "scheme " + scheme.name() + " needs a connected complex");
}

void require_strong(const SimplicialComplex& x, const ColourScheme& scheme) {
    if (!x.is_strongly_connected() || !x.homogeneity().pure)
        fail(Errc::HypothesisViolated,
             "scheme " + scheme.name() + " needs a strongly connected pure complex");
}

} // namespace

SchemeModel model_for_scheme(const SimplicialComplex& x, const ColourScheme& scheme, int k) {
    if (k < 2)
        fail(Errc::BadK, "models are defined for k >= 2");
    auto single = [&](DerivedKind kind) {
        return SchemeModel(SullivanPresentation::build(derive(x, kind), k));
    };
    switch (scheme.tag) {
    case SchemeTag::C1:
        require_connected(x, scheme);
        return single(DerivedKind::two_section());
    case SchemeTag::C2:
        require_connected(x, scheme);
        return single(DerivedKind::line());
    case SchemeTag::C3:
        require_connected(x, scheme);
        return single(DerivedKind::total());
    case SchemeTag::C4:
        require_connected(x, scheme);
        return single(DerivedKind::complete_asc());
    case SchemeTag::C5:
        require_connected(x, scheme);
        return single(DerivedKind::complete_desc());
    case SchemeTag::C6:
        require_connected(x, scheme);
        return single(DerivedKind::full());
    case SchemeTag::PS: {
        require_connected(x, scheme);
        const auto partitions = bcp(x, scheme.index);
        std::vector<SullivanPresentation> factors;
        for (std::size_t i = 0; i < partitions.size(); ++i) {
            auto base = SullivanPresentation::build(partition_graph(x, partitions[i]), k);
            factors.push_back(base.with_prefix("f" + std::to_string(i) + ":"));
        }
        return make_tensor(std::move(factors));
    }
    case SchemeTag::C8:
        require_strong(x, scheme);
        return single(DerivedKind::cart_asc());
    case SchemeTag::C9:
        require_strong(x, scheme);
        return single(DerivedKind::cart_desc());
    case SchemeTag::C10: {
        require_strong(x, scheme);
        if (x.dim() < 1)
            fail(Errc::BadDimension, "minimal ascending model needs dim >= 1");
        std::vector<SullivanPresentation> factors;
        for (int r = 0; r < x.dim(); ++r) {
            auto base = SullivanPresentation::build(derive(x, DerivedKind::exchange(r)), k);
            factors.push_back(base.with_prefix("f" + std::to_string(r) + ":"));
        }
        return make_tensor(std::move(factors));
    }
    case SchemeTag::C11: {
        require_strong(x, scheme);
        if (x.dim() < 1)
            fail(Errc::BadDimension, "minimal descending model needs dim >= 1");
        std::vector<SullivanPresentation> factors;
        for (int s = 1; s <= x.dim(); ++s) {
            auto base = SullivanPresentation::build(derive(x, DerivedKind::descending(s)), k);
            factors.push_back(base.with_prefix("f" + std::to_string(s - 1) + ":"));
        }
        return make_tensor(std::move(factors));
    }
    case SchemeTag::Asc:
        require_strong(x, scheme);
        return single(DerivedKind::exchange(scheme.index));
    case SchemeTag::Desc:
        require_strong(x, scheme);
        return single(DerivedKind::descending(scheme.index));
    }
    fail(Errc::InvalidInput, "unknown scheme tag");
}

bool witness_check(const SullivanPresentation& s, const GraphColouring& c) {
    if (c.k != s.k())
        fail(Errc::PaletteMismatch, "colouring palette differs from the model's k");
    std::map<std::string, CyclotomicInt> values;
    for (const auto& g : s.even_generators()) {
        const auto& vertex = s.vertex_of(g.name);
        auto it = c.colours.find(vertex);
        if (it == c.colours.end())
            fail(Errc::PaletteMismatch, "colouring misses vertex " + vertex);
        if (it->second < 1 || it->second > c.k)
            fail(Errc::PaletteMismatch, "colour of " + vertex + " outside palette");
        values.emplace(g.name, CyclotomicInt::zeta_power(s.k(), it->second));
    }
    for (const auto& [name, poly] : s.differentials())
        if (!evaluate_poly(poly, values, s.k()).is_zero())
            return false;
    return true;
}

namespace {

// The graph colourings that a scheme assignment induces on the model's
// graph(s); each must pass witness_check for the verdict to stand.
std::vector<std::pair<const SullivanPresentation*, GraphColouring>>
witness_obligations(const SimplicialComplex& x, const ColourScheme& scheme,
                    const SchemeModel& model, const Assignment& a) {
    std::vector<std::pair<const SullivanPresentation*, GraphColouring>> out;

    auto direct = [&](const SullivanPresentation& s) {
        GraphColouring c;
        c.k = a.k;
        c.colours = a.colours;
        out.emplace_back(&s, std::move(c));
    };

    switch (scheme.tag) {
    case SchemeTag::C1:
    case SchemeTag::C2:
    case SchemeTag::C3:
    case SchemeTag::C6:
    case SchemeTag::Asc:
    case SchemeTag::Desc:
        direct(std::get<SullivanPresentation>(model));
        break;
    case SchemeTag::C4:
    case SchemeTag::C5: {
        const auto& s = std::get<SullivanPresentation>(model);
        GraphColouring c;
        c.k = a.k;
        for (const auto& v : s.graph().vertices())
            c.colours[v] = a.colours.at(v.substr(v.find(':') + 1));
        out.emplace_back(&s, std::move(c));
        break;
    }
    case SchemeTag::C8:
    case SchemeTag::C9: {
        // Sum the per-level colours modulo k: the standard proper colouring
        // of a Cartesian product from proper colourings of its factors.
        // Product names are rebuilt level by level rather than parsed, since
        // labels may themselves contain the separator.
        const auto& s = std::get<SullivanPresentation>(model);
        const int lo = scheme.tag == SchemeTag::C8 ? 0 : 1;
        const int hi = scheme.tag == SchemeTag::C8 ? x.dim() - 1 : x.dim();
        std::vector<std::pair<std::string, long long>> tuples{{"", 0}};
        for (int level = lo; level <= hi; ++level) {
            std::vector<std::pair<std::string, long long>> expanded;
            for (const auto& [name, sum] : tuples)
                for (const auto& f : x.faces_of_dim(level))
                    expanded.emplace_back(name.empty() ? f.name() : name + "," + f.name(),
                                          sum + a.colours.at(f.name()));
            tuples = std::move(expanded);
        }
        GraphColouring c;
        c.k = a.k;
        for (const auto& [name, sum] : tuples)
            c.colours[name] = static_cast<int>(sum % a.k) + 1;
        out.emplace_back(&s, std::move(c));
        break;
    }
    case SchemeTag::C10:
    case SchemeTag::C11: {
        const auto& tensor = std::get<TensorPresentation>(model);
        const bool asc = scheme.tag == SchemeTag::C10;
        for (int i = 0; i < static_cast<int>(tensor.factors.size()); ++i) {
            const int level = asc ? i : i + 1;
            Assignment sub;
            sub.domain = AssignmentDomain::Dim;
            sub.dim = level;
            sub.k = a.k;
            for (const auto& f : x.faces_of_dim(level))
                sub.colours[f.name()] = a.colours.at(f.name());
            const auto level_scheme =
                asc ? ColourScheme::asc(level) : ColourScheme::desc(level);
            if (!check(x, level_scheme, sub))
                continue;
            GraphColouring c;
            c.k = a.k;
            c.colours = sub.colours;
            out.emplace_back(&tensor.factors[static_cast<std::size_t>(i)], std::move(c));
        }
        break;
    }
    case SchemeTag::PS: {
        // Split each colour class into connected pieces: that partition is
        // block-connected and s-independent, and colouring its blocks by
        // their class colour is proper on the partition graph.
        const auto& tensor = std::get<TensorPresentation>(model);
        std::map<int, std::vector<std::string>> classes;
        for (const auto& [v, col] : a.colours)
            classes[col].push_back(v);
        std::vector<std::vector<std::string>> blocks;
        std::map<std::string, int> block_colour;
        for (const auto& [col, members] : classes) {
            auto piece = x.induced(members);
            // Component split via repeated reachability over the piece.
            std::set<std::string> left(members.begin(), members.end());
            while (!left.empty()) {
                std::vector<std::string> comp{*left.begin()};
                std::set<std::string> seen{comp[0]};
                for (std::size_t i = 0; i < comp.size(); ++i)
                    for (const auto& f : piece.faces_of_dim(1)) {
                        if (!f.contains(comp[i]))
                            continue;
                        const auto& other =
                            f.labels()[0] == comp[i] ? f.labels()[1] : f.labels()[0];
                        if (seen.insert(other).second)
                            comp.push_back(other);
                    }
                for (const auto& v : comp)
                    left.erase(v);
                std::sort(comp.begin(), comp.end());
                block_colour[Partition::block_name(comp)] = col;
                blocks.push_back(std::move(comp));
            }
        }
        const Partition p = Partition::of(blocks);
        const auto all = bcp(x, scheme.index);
        std::size_t found = all.size();
        for (std::size_t i = 0; i < all.size(); ++i)
            if (all[i].blocks == p.blocks) {
                found = i;
                break;
            }
        if (found == all.size())
            fail(Errc::InvalidInput, "witness partition missing from the enumeration");
        GraphColouring c;
        c.k = a.k;
        for (const auto& [name, col] : block_colour)
            c.colours[name] = col;
        out.emplace_back(&tensor.factors[found], std::move(c));
        break;
    }
    }
    if (out.empty())
        fail(Errc::InvalidInput, "witness induces no factor colouring");
    return out;
}

std::string scheme_model_label(const ColourScheme& scheme) {
    switch (scheme.tag) {
    case SchemeTag::C1: return "two-section graph";
    case SchemeTag::C2: return "line graph";
    case SchemeTag::C3: return "total graph";
    case SchemeTag::C4: return "complete ascending sum graph";
    case SchemeTag::C5: return "complete descending sum graph";
    case SchemeTag::C6: return "full graph";
    case SchemeTag::PS: return "partition-graph tensor";
    case SchemeTag::C8: return "ascending Cartesian product graph";
    case SchemeTag::C9: return "descending Cartesian product graph";
    case SchemeTag::C10: return "exchange-graph tensor";
    case SchemeTag::C11: return "descending-graph tensor";
    case SchemeTag::Asc: return "exchange graph";
    case SchemeTag::Desc: return "descending graph";
    }
    return "derived graph";
}

bool is_tensor_scheme(const ColourScheme& scheme) {
    return scheme.tag == SchemeTag::PS || scheme.tag == SchemeTag::C10 ||
           scheme.tag == SchemeTag::C11;
}

} // namespace

EllipticityVerdict ellipticity_verdict(const SimplicialComplex& x, const ColourScheme& scheme,
                                       int k) {
    SchemeModel model = model_for_scheme(x, scheme, k);
    auto attempt = colour(x, scheme, k);

    EllipticityVerdict v;
    const std::string label = scheme_model_label(scheme);
    if (!attempt) {
        v.verdict = Verdict::Elliptic;
        v.justification =
            is_tensor_scheme(scheme)
                ? "no factor of the " + label + " is " + std::to_string(k) +
                      "-colourable, and a tensor of pure models is elliptic iff every factor is"
                : "the " + label + " admits no " + std::to_string(k) +
                      "-colouring, so its pure model is elliptic";
        return v;
    }
    for (const auto& [factor, colouring] : witness_obligations(x, scheme, model, *attempt))
        if (!witness_check(*factor, colouring))
            fail(Errc::InvalidInput, "witness failed the root-of-unity check; invariant broken");
    v.verdict = Verdict::NonElliptic;
    v.witness = std::move(*attempt);
    v.justification =
        is_tensor_scheme(scheme)
            ? "some factor of the " + label + " is " + std::to_string(k) +
                  "-colourable, and a tensor of pure models is non-elliptic iff some factor is"
            : "the " + label + " is " + std::to_string(k) +
                  "-colourable; the root-of-unity substitution vanishes on every differential";
    return v;
}

} // namespace sccol
