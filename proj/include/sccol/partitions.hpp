#pragma once

#include <string>
#include <vector>

#include "sccol/complex.hpp"

namespace sccol {

/// A partition of a vertex set: disjoint non-empty blocks covering V.
/// Canonical form keeps block members sorted and orders blocks by their
/// smallest member.
struct Partition {
    std::vector<std::vector<std::string>> blocks;

    static Partition of(std::vector<std::vector<std::string>> blocks);

    /// Sorted member labels joined by "+", the block's vertex name in G_0(P).
    static std::string block_name(const std::vector<std::string>& block);
};

/// Throws NotAPartition unless `p` partitions V(x) exactly.
void validate_partition(const SimplicialComplex& x, const Partition& p);

/// True iff no block contains all vertices of some s-face of x. s >= 1.
bool is_s_independent(const SimplicialComplex& x, const Partition& p, int s);

/// True iff every block induces a connected subcomplex of x.
bool is_block_connected(const SimplicialComplex& x, const Partition& p);

inline constexpr std::size_t kBcpVertexCap = 12;

/// All block-connected s-independent partitions of V(x), in restricted-growth
/// enumeration order. Throws TooLarge past the vertex cap.
std::vector<Partition> bcp(const SimplicialComplex& x, int s,
                           std::size_t cap = kBcpVertexCap);

/// min over P in BCP^s(x) of the chromatic number of the partition graph
/// G_0(P). Intended for connected x.
int chr_s_via_bcp(const SimplicialComplex& x, int s, std::size_t cap = kBcpVertexCap);

} // namespace sccol
