#include <doctest.h>

#include "oracle.hpp"
#include "sccol/derived_graphs.hpp"

using namespace sccol;

namespace {

SimplicialComplex closure(std::vector<std::vector<std::string>> facets) {
    return SimplicialComplex::from_facets(facets);
}

const SimplicialComplex tri = closure({{"a", "b", "c"}});

} // namespace

TEST_CASE("two-section of the full triangle is K3") {
    const auto g = derive(tri, DerivedKind::two_section());
    CHECK(g.vertices() == std::vector<std::string>{"a", "b", "c"});
    CHECK(g.edge_count() == 3);
}

TEST_CASE("exchange graphs") {
    const auto g1 = derive(tri, DerivedKind::exchange(1));
    CHECK(g1.vertices() == std::vector<std::string>{"a+b", "a+c", "b+c"});
    CHECK(g1.edge_count() == 3);

    const auto g2 = derive(tri, DerivedKind::exchange(2));
    CHECK(g2.vertex_count() == 1);
    CHECK(g2.edge_count() == 0);

    CHECK_THROWS_AS(derive(tri, DerivedKind::exchange(3)), Error);
}

TEST_CASE("descending graphs") {
    const auto two = closure({{"a", "b", "c"}, {"b", "c", "d"}});
    const auto g = derive(two, DerivedKind::descending(2));
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);

    // No faces of dimension -1, so level zero is edgeless.
    const auto g0 = derive(tri, DerivedKind::descending(0));
    CHECK(g0.vertex_count() == 3);
    CHECK(g0.edge_count() == 0);
}

TEST_CASE("line graph of a path complex") {
    const auto path = closure({{"a", "b"}, {"b", "c"}});
    const auto g = derive(path, DerivedKind::line());
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 5);
    CHECK(g.has_edge("a", "a+b"));
    CHECK(g.has_edge("a+b", "b"));
    CHECK(g.has_edge("b", "b+c"));
    CHECK(g.has_edge("b+c", "c"));
    CHECK(g.has_edge("a+b", "b+c"));
}

TEST_CASE("total graph of a single edge") {
    const auto g = derive(closure({{"a", "b"}}), DerivedKind::total());
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 7);
    CHECK(chromatic_number(g) == 3);
    CHECK(g.has_edge("v:a", "f:a")); // a vertex and its 0-simplex stay distinct
}

TEST_CASE("complete ascending graph of the triangle is K7") {
    const auto g = derive(tri, DerivedKind::complete_asc());
    CHECK(g.vertex_count() == 7);
    CHECK(g.edge_count() == 21);
    CHECK(chromatic_number(g) == 7);
}

TEST_CASE("inclusion and full graphs") {
    const auto incl = derive(tri, DerivedKind::inclusion());
    CHECK(incl.vertex_count() == 7);
    CHECK(incl.edge_count() == 12); // 9 vertex-in-face plus 3 edge-in-face
    CHECK(incl.has_edge("a", "a+b+c"));
    CHECK_FALSE(incl.has_edge("a", "b+c"));

    // The full graph adds the two-section and the descending levels on the
    // same face vertices.
    const auto full = derive(tri, DerivedKind::full());
    CHECK(full.vertex_count() == 7);
    CHECK(full.edge_count() == 12 + 3 + 3);
    CHECK(full.has_edge("a", "b"));
    CHECK(full.has_edge("a+b", "a+c"));
    CHECK(chromatic_number(full) == 4);
}

TEST_CASE("cartesian kinds need dimension at least one") {
    const auto point = closure({{"a"}});
    CHECK_THROWS_AS(derive(point, DerivedKind::cart_asc()), Error);
    CHECK_THROWS_AS(derive(point, DerivedKind::cart_desc()), Error);
    const auto g = derive(tri, DerivedKind::cart_asc());
    CHECK(g.vertex_count() == 9); // K3 x K3
    CHECK(chromatic_number(g) == 3);
}

TEST_CASE("partition graphs") {
    const auto k3 = partition_graph(tri, Partition::of({{"a"}, {"b"}, {"c"}}));
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);

    const auto k2 = partition_graph(tri, Partition::of({{"a", "b"}, {"c"}}));
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.has_edge("a+b", "c"));

    const auto split = closure({{"a", "b"}, {"c", "d"}});
    const auto none = partition_graph(split, Partition::of({{"a", "b"}, {"c", "d"}}));
    CHECK(none.vertex_count() == 2);
    CHECK(none.edge_count() == 0);

    CHECK_THROWS_AS(partition_graph(tri, Partition::of({{"a"}, {"b"}})), Error);
}

TEST_CASE("exchange edges sit inside descending edges above level zero") {
    oracle::Rng rng(31);
    for (int t = 0; t < 40; ++t) {
        const auto x = oracle::random_complex(rng, false);
        for (int r = 1; r <= x.dim(); ++r) {
            const auto asc = derive(x, DerivedKind::exchange(r));
            const auto desc = derive(x, DerivedKind::descending(r));
            for (const auto& [u, v] : asc.edges())
                CHECK(desc.has_edge(u, v));
        }
    }
    // Level zero is the exception: the two-section has edges, descending
    // never does.
    const auto asc0 = derive(tri, DerivedKind::exchange(0));
    const auto desc0 = derive(tri, DerivedKind::descending(0));
    CHECK(asc0.edge_count() == 3);
    CHECK(desc0.edge_count() == 0);
}

TEST_CASE("connected complexes derive connected graphs") {
    oracle::Rng rng(32);
    const std::vector<DerivedKind> kinds{
        DerivedKind::two_section(),  DerivedKind::line(),
        DerivedKind::total(),        DerivedKind::full(),
        DerivedKind::complete_asc(), DerivedKind::complete_desc()};
    for (int t = 0; t < 40; ++t) {
        const auto x = oracle::random_complex(rng, true);
        for (const auto& kind : kinds)
            CHECK(derive(x, kind).is_connected());
    }
}

TEST_CASE("strongly connected pure complexes derive connected level graphs") {
    oracle::Rng rng(33);
    for (int t = 0; t < 30; ++t) {
        const auto x = oracle::random_pure_strongly_connected(rng, 1 + (t % 2));
        for (int r = 0; r < x.dim(); ++r)
            CHECK(derive(x, DerivedKind::exchange(r)).is_connected());
        for (int s = 1; s <= x.dim(); ++s)
            CHECK(derive(x, DerivedKind::descending(s)).is_connected());
        CHECK(derive(x, DerivedKind::cart_asc()).is_connected());
        CHECK(derive(x, DerivedKind::cart_desc()).is_connected());
    }
}
