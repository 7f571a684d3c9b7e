#include <doctest.h>

#include "oracle.hpp"
#include "sccol/derived_graphs.hpp"
#include "sccol/sullivan.hpp"

using namespace sccol;

namespace {

SimplicialComplex closure(std::vector<std::vector<std::string>> facets) {
    return SimplicialComplex::from_facets(facets);
}

Graph k2() {
    Graph g;
    g.add_vertex("u");
    g.add_vertex("v");
    g.add_edge("u", "v");
    return g;
}

Graph k3() {
    Graph g;
    for (const std::string v : {"a", "b", "c"})
        g.add_vertex(v);
    g.add_edge("a", "b");
    g.add_edge("a", "c");
    g.add_edge("b", "c");
    return g;
}

IntPoly poly(std::vector<BigInt> coeffs) {
    return IntPoly(std::move(coeffs));
}

} // namespace

TEST_CASE("small cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == poly({-1, 1}));
    CHECK(cyclotomic_poly(2) == poly({1, 1}));
    CHECK(cyclotomic_poly(3) == poly({1, 1, 1}));
    CHECK(cyclotomic_poly(4) == poly({1, 0, 1}));
    CHECK(cyclotomic_poly(6) == poly({1, -1, 1}));
    CHECK_THROWS_AS(cyclotomic_poly(0), Error);
    CHECK_THROWS_AS(cyclotomic_poly(65), Error);
}

TEST_CASE("cyclotomic product reconstructs x^k - 1") {
    for (int k = 1; k <= 64; ++k) {
        IntPoly prod = poly({1});
        for (int d = 1; d <= k; ++d)
            if (k % d == 0)
                prod = prod * cyclotomic_poly(d);
        CHECK(prod == IntPoly::x_power_minus_one(k));
    }
}

TEST_CASE("cyclotomic residue arithmetic") {
    // zeta_4^2 = -1
    const auto m1 = CyclotomicInt::zeta_power(4, 1) * CyclotomicInt::zeta_power(4, 1);
    auto minus_one = CyclotomicInt::zeta_power(4, 0);
    minus_one.scale(-1);
    CHECK(m1 == minus_one);

    // all k-th roots sum to zero, k >= 2
    for (int k = 2; k <= 12; ++k) {
        CyclotomicInt sum(k);
        for (int c = 1; c <= k; ++c)
            sum += CyclotomicInt::zeta_power(k, c);
        CHECK(sum.is_zero());
    }
    CHECK_FALSE(CyclotomicInt::zeta_power(5, 3).is_zero());
}

TEST_CASE("build_model lays out generators and differentials") {
    const auto s2 = SullivanPresentation::build(k2(), 2);
    REQUIRE(s2.even_generators().size() == 2);
    CHECK(s2.even_generators()[0].name == "x_u");
    CHECK(s2.even_generators()[0].degree == 2);
    REQUIRE(s2.odd_generators().size() == 1);
    CHECK(s2.odd_generators()[0].name == "y_u+v");
    CHECK(s2.odd_generators()[0].degree == 1);
    const auto& d2 = s2.differentials()[0].second;
    REQUIRE(d2.size() == 2); // x_u + x_v
    CHECK(d2[0].mono.powers == std::map<std::string, int>{{"x_u", 1}});
    CHECK(d2[1].mono.powers == std::map<std::string, int>{{"x_v", 1}});

    const auto s3 = SullivanPresentation::build(k2(), 3);
    CHECK(s3.odd_generators()[0].degree == 3);
    const auto& d3 = s3.differentials()[0].second;
    REQUIRE(d3.size() == 3); // x_u^2 + x_u x_v + x_v^2
    CHECK(d3[0].mono.powers == std::map<std::string, int>{{"x_u", 2}});
    CHECK(d3[1].mono.powers == std::map<std::string, int>{{"x_u", 1}, {"x_v", 1}});
    CHECK(d3[2].mono.powers == std::map<std::string, int>{{"x_v", 2}});

    const auto t3 = SullivanPresentation::build(k3(), 3);
    CHECK(t3.even_generators().size() == 3);
    CHECK(t3.odd_generators().size() == 3);
    for (const auto& g : t3.odd_generators())
        CHECK(g.degree == 3);

    CHECK_THROWS_AS(SullivanPresentation::build(k2(), 1), Error);
    CHECK_THROWS_AS(SullivanPresentation::build(Graph{}, 2), Error);
}

TEST_CASE("differentials are homogeneous of word degree k-1") {
    oracle::Rng rng(61);
    for (int t = 0; t < 20; ++t) {
        const auto g = oracle::random_graph(rng, rng.uniform(2, 5));
        for (int k = 2; k <= 5; ++k) {
            const auto s = SullivanPresentation::build(g, k);
            for (const auto& [name, d] : s.differentials()) {
                CHECK(static_cast<int>(d.size()) == k);
                for (const auto& term : d) {
                    int word = 0;
                    for (const auto& [var, exp] : term.mono.powers)
                        word += exp;
                    CHECK(word == k - 1);
                    CHECK(term.coeff == 1);
                }
            }
        }
    }
}

TEST_CASE("witness_check evaluates differentials at roots of unity") {
    const auto s2 = SullivanPresentation::build(k2(), 2);
    CHECK(witness_check(s2, {2, {{"u", 1}, {"v", 2}}}));
    CHECK_FALSE(witness_check(s2, {2, {{"u", 1}, {"v", 1}}}));

    const auto s3 = SullivanPresentation::build(k3(), 3);
    CHECK(witness_check(s3, {3, {{"a", 1}, {"b", 2}, {"c", 3}}}));
    CHECK_FALSE(witness_check(s3, {3, {{"a", 1}, {"b", 1}, {"c", 2}}}));

    CHECK_THROWS_AS(witness_check(s2, {3, {{"u", 1}, {"v", 2}}}), Error);
    CHECK_THROWS_AS(witness_check(s2, {2, {{"u", 1}}}), Error);
}

TEST_CASE("model_for_scheme picks the right graphs") {
    const auto tri = closure({{"a", "b", "c"}});

    const auto m1 = model_for_scheme(tri, ColourScheme::c1(), 3);
    const auto& s1 = std::get<SullivanPresentation>(m1);
    CHECK(s1.even_generators().size() == 3);
    CHECK(s1.odd_generators().size() == 3);

    const auto m10 = model_for_scheme(tri, ColourScheme::c10(), 3);
    CHECK(std::get<TensorPresentation>(m10).factors.size() == 2);

    const auto mps = model_for_scheme(tri, ColourScheme::ps(2), 2);
    CHECK(std::get<TensorPresentation>(mps).factors.size() == 4);

    CHECK_THROWS_AS(model_for_scheme(tri, ColourScheme::c1(), 1), Error);
    const auto split = closure({{"a", "b"}, {"c", "d"}});
    CHECK_THROWS_AS(model_for_scheme(split, ColourScheme::c1(), 3), Error);
    const auto lopsided = closure({{"a", "b", "c"}, {"c", "d"}});
    CHECK_THROWS_AS(model_for_scheme(lopsided, ColourScheme::c8(), 3), Error);
}

TEST_CASE("tensor factors keep disjoint namespaces") {
    const auto tri = closure({{"a", "b", "c"}});
    const auto m = model_for_scheme(tri, ColourScheme::ps(2), 2);
    const auto& tensor = std::get<TensorPresentation>(m);
    std::set<std::string> names;
    for (const auto& f : tensor.factors) {
        for (const auto& g : f.even_generators())
            CHECK(names.insert(g.name).second);
        for (const auto& g : f.odd_generators())
            CHECK(names.insert(g.name).second);
    }
    auto clash = tensor.factors[0];
    CHECK_THROWS_AS(make_tensor({clash, clash}), Error);
}

TEST_CASE("ellipticity verdicts follow colourability") {
    const auto tri = closure({{"a", "b", "c"}});

    const auto e = ellipticity_verdict(tri, ColourScheme::c1(), 2);
    CHECK(e.verdict == Verdict::Elliptic);
    CHECK_FALSE(e.witness.has_value());

    const auto n = ellipticity_verdict(tri, ColourScheme::c1(), 3);
    CHECK(n.verdict == Verdict::NonElliptic);
    REQUIRE(n.witness.has_value());
    CHECK(check(tri, ColourScheme::c1(), *n.witness));

    const auto t = ellipticity_verdict(tri, ColourScheme::c10(), 3);
    CHECK(t.verdict == Verdict::NonElliptic);

    const auto p = ellipticity_verdict(tri, ColourScheme::ps(2), 2);
    CHECK(p.verdict == Verdict::NonElliptic);

    for (const auto scheme : {ColourScheme::c2(), ColourScheme::c4(), ColourScheme::c5(),
                              ColourScheme::c6(), ColourScheme::c8(), ColourScheme::c9(),
                              ColourScheme::c11(), ColourScheme::asc(0),
                              ColourScheme::desc(1)}) {
        const int chi = chromatic(tri, scheme);
        if (chi >= 2) {
            CHECK(ellipticity_verdict(tri, scheme, chi).verdict == Verdict::NonElliptic);
            if (chi > 2)
                CHECK(ellipticity_verdict(tri, scheme, chi - 1).verdict == Verdict::Elliptic);
        }
    }
}

TEST_CASE("witness_check agrees with properness on every map") {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& g : oracle::all_graphs(n)) {
            const auto names = g.vertices();
            for (int k = 2; k <= 4; ++k) {
                const auto model = SullivanPresentation::build(g, k);
                std::vector<int> stamp(names.size(), 1);
                for (;;) {
                    GraphColouring c;
                    c.k = k;
                    for (std::size_t i = 0; i < names.size(); ++i)
                        c.colours[names[i]] = stamp[i];
                    CHECK(witness_check(model, c) == verify_colouring(g, c));
                    std::size_t pos = 0;
                    while (pos < stamp.size() && ++stamp[pos] > k) {
                        stamp[pos] = 1;
                        ++pos;
                    }
                    if (pos == stamp.size())
                        break;
                }
            }
        }
    }
}

TEST_CASE("verdicts stay consistent across a corpus") {
    oracle::Rng rng(62);
    for (int t = 0; t < 12; ++t) {
        const auto x = oracle::random_complex(rng, true);
        for (const auto scheme : {ColourScheme::c1(), ColourScheme::c2(), ColourScheme::c3(),
                                  ColourScheme::c4(), ColourScheme::c5(), ColourScheme::c6(),
                                  ColourScheme::ps(1), ColourScheme::ps(2)}) {
            for (int k = 2; k <= 3; ++k) {
                const auto v = ellipticity_verdict(x, scheme, k);
                CHECK((v.verdict == Verdict::NonElliptic) ==
                      colour(x, scheme, k).has_value());
                if (v.witness)
                    CHECK(check(x, scheme, *v.witness));
            }
        }
    }
    for (int t = 0; t < 12; ++t) {
        const auto x = oracle::random_pure_strongly_connected(rng, 1 + (t % 2));
        std::vector<ColourScheme> schemes{ColourScheme::c8(), ColourScheme::c9(),
                                          ColourScheme::c10(), ColourScheme::c11()};
        for (int r = 0; r <= x.dim(); ++r) {
            schemes.push_back(ColourScheme::asc(r));
            schemes.push_back(ColourScheme::desc(r));
        }
        for (const auto& scheme : schemes)
            for (int k = 2; k <= 3; ++k) {
                const auto v = ellipticity_verdict(x, scheme, k);
                CHECK((v.verdict == Verdict::NonElliptic) ==
                      colour(x, scheme, k).has_value());
                if (v.witness)
                    CHECK(check(x, scheme, *v.witness));
            }
    }
}

TEST_CASE("a tensor is non-elliptic exactly when some factor graph colours") {
    oracle::Rng rng(63);
    for (int t = 0; t < 10; ++t) {
        const auto x = oracle::random_pure_strongly_connected(rng, 2);
        for (int k = 2; k <= 3; ++k) {
            bool some_factor = false;
            for (int r = 0; r < x.dim(); ++r)
                if (is_k_colourable(derive(x, DerivedKind::exchange(r)), k))
                    some_factor = true;
            CHECK((ellipticity_verdict(x, ColourScheme::c10(), k).verdict ==
                   Verdict::NonElliptic) == some_factor);
        }
    }
}
