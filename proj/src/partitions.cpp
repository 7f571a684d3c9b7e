#include "sccol/partitions.hpp"

#include <algorithm>
#include <set>

#include "sccol/derived_graphs.hpp"

namespace sccol {

Partition Partition::of(std::vector<std::vector<std::string>> blocks) {
    for (auto& b : blocks)
        std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    return Partition{std::move(blocks)};
}

std::string Partition::block_name(const std::vector<std::string>& block) {
    std::string out;
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (i)
            out += '+';
        out += block[i];
    }
    return out;
}

void validate_partition(const SimplicialComplex& x, const Partition& p) {
    std::set<std::string> seen;
    for (const auto& block : p.blocks) {
        if (block.empty())
            fail(Errc::NotAPartition, "blocks must be non-empty");
        for (const auto& v : block) {
            if (!std::binary_search(x.vertices().begin(), x.vertices().end(), v))
                fail(Errc::NotAPartition, "block member is not a vertex: " + v);
            if (!seen.insert(v).second)
                fail(Errc::NotAPartition, "vertex in two blocks: " + v);
        }
    }
    if (seen.size() != x.vertices().size())
        fail(Errc::NotAPartition, "blocks do not cover the vertex set");
}

namespace {

bool block_contains_s_face(const SimplicialComplex& x, const std::vector<std::string>& block,
                           int s) {
    Face carrier{block};
    for (const auto& f : x.faces_of_dim(s))
        if (f.subset_of(carrier))
            return true;
    return false;
}

} // namespace

bool is_s_independent(const SimplicialComplex& x, const Partition& p, int s) {
    if (s < 1)
        fail(Errc::OutOfRange, "independence index must be >= 1");
    validate_partition(x, p);
    for (const auto& block : p.blocks)
        if (block_contains_s_face(x, block, s))
            return false;
    return true;
}

bool is_block_connected(const SimplicialComplex& x, const Partition& p) {
    validate_partition(x, p);
    for (const auto& block : p.blocks)
        if (!x.induced(block).is_connected())
            return false;
    return true;
}

std::vector<Partition> bcp(const SimplicialComplex& x, int s, std::size_t cap) {
    if (s < 1)
        fail(Errc::OutOfRange, "independence index must be >= 1");
    const auto& verts = x.vertices();
    if (verts.size() > cap)
        fail(Errc::TooLarge, "partition enumeration capped at " + std::to_string(cap) +
                                 " vertices");

    std::vector<Partition> out;
    const std::size_t n = verts.size();
    std::vector<std::vector<std::string>> blocks;

    // Depth-first over restricted-growth strings in canonical vertex order.
    // s-independence is monotone under block growth, so violating prefixes
    // are cut immediately; block connectivity is not monotone and is checked
    // on complete partitions only.
    auto rec = [&](auto&& self, std::size_t i, int max_block) -> void {
        if (i == n) {
            Partition p{blocks};
            if (is_block_connected(x, p))
                out.push_back(Partition::of(blocks));
            return;
        }
        for (int b = 0; b <= max_block + 1; ++b) {
            if (static_cast<std::size_t>(b) == blocks.size())
                blocks.emplace_back();
            blocks[b].push_back(verts[i]);
            if (!block_contains_s_face(x, blocks[b], s))
                self(self, i + 1, std::max(max_block, b));
            blocks[b].pop_back();
            if (blocks[b].empty())
                blocks.pop_back();
        }
    };
    rec(rec, 0, -1);
    return out;
}

int chr_s_via_bcp(const SimplicialComplex& x, int s, std::size_t cap) {
    const auto partitions = bcp(x, s, cap);
    if (partitions.empty())
        fail(Errc::EmptyBcp, "no block-connected s-independent partition found");
    int best = -1;
    for (const auto& p : partitions) {
        const int chi = chromatic_number(partition_graph(x, p));
        if (best < 0 || chi < best)
            best = chi;
    }
    return best;
}

} // namespace sccol
