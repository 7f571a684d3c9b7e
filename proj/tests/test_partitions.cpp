#include <doctest.h>

#include "oracle.hpp"
#include "sccol/derived_graphs.hpp"
#include "sccol/partitions.hpp"

using namespace sccol;

namespace {

SimplicialComplex closure(std::vector<std::vector<std::string>> facets) {
    return SimplicialComplex::from_facets(facets);
}

const SimplicialComplex tri = closure({{"a", "b", "c"}});

} // namespace

TEST_CASE("s-independence") {
    CHECK_FALSE(is_s_independent(tri, Partition::of({{"a", "b"}, {"c"}}), 1));
    CHECK(is_s_independent(tri, Partition::of({{"a", "b"}, {"c"}}), 2));
    CHECK(is_s_independent(tri, Partition::of({{"a"}, {"b"}, {"c"}}), 1));
}

TEST_CASE("block connectivity") {
    CHECK(is_block_connected(tri, Partition::of({{"a", "b"}, {"c"}})));
    const auto split = closure({{"a", "b"}, {"c", "d"}});
    CHECK_FALSE(is_block_connected(split, Partition::of({{"a", "c"}, {"b"}, {"d"}})));
    CHECK(is_block_connected(split, Partition::of({{"a"}, {"b"}, {"c"}, {"d"}})));
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(is_block_connected(tri, Partition::of({{"a"}, {"b"}})), Error);
    CHECK_THROWS_AS(is_block_connected(tri, Partition::of({{"a", "b"}, {"b", "c"}})), Error);
    CHECK_THROWS_AS(is_block_connected(tri, Partition::of({{"a", "b", "c", "d"}})), Error);
}

TEST_CASE("bcp enumerations") {
    const auto only = bcp(tri, 1);
    REQUIRE(only.size() == 1);
    CHECK(only[0].blocks == std::vector<std::vector<std::string>>{{"a"}, {"b"}, {"c"}});

    const auto four = bcp(tri, 2);
    CHECK(four.size() == 4);
    for (const auto& p : four) {
        CHECK(is_s_independent(tri, p, 2));
        CHECK(is_block_connected(tri, p));
    }

    const auto point = closure({{"a"}});
    const auto single = bcp(point, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].blocks == std::vector<std::vector<std::string>>{{"a"}});
}

TEST_CASE("bcp rejects oversized inputs") {
    std::vector<std::vector<std::string>> facets;
    for (int i = 0; i < 13; ++i)
        facets.push_back({"v" + std::to_string(i)});
    const auto big = closure(facets);
    CHECK_THROWS_AS(bcp(big, 1), Error);
}

TEST_CASE("chr^s by minimum over partition graphs") {
    CHECK(chr_s_via_bcp(tri, 1) == 3);
    CHECK(chr_s_via_bcp(tri, 2) == 2);
    CHECK(chr_s_via_bcp(closure({{"a"}}), 1) == 1);
}

TEST_CASE("singleton partition always qualifies") {
    oracle::Rng rng(41);
    for (int t = 0; t < 40; ++t) {
        const auto x = oracle::random_complex(rng, false);
        std::vector<std::vector<std::string>> singletons;
        for (const auto& v : x.vertices())
            singletons.push_back({v});
        const auto p = Partition::of(singletons);
        for (int s = 1; s <= 3; ++s) {
            CHECK(is_s_independent(x, p, s));
            const auto all = bcp(x, s);
            CHECK_FALSE(all.empty());
            bool found = false;
            for (const auto& q : all)
                if (q.blocks == p.blocks)
                    found = true;
            CHECK(found);
        }
        CHECK(is_block_connected(x, p));
    }
}

TEST_CASE("partition graphs of block-connected partitions stay connected") {
    oracle::Rng rng(42);
    for (int t = 0; t < 25; ++t) {
        const auto x = oracle::random_complex(rng, true);
        for (int s = 1; s <= 2; ++s)
            for (const auto& p : bcp(x, s))
                CHECK(partition_graph(x, p).is_connected());
    }
}
