#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "primegraph/tree.hpp"

namespace primegraph {

/// Two subtrees covering the tree and sharing exactly one vertex, each with
/// at least a third of the vertices.
struct SplitResult {
    std::vector<Vertex> u1;  // sorted
    std::vector<Vertex> u2;  // sorted
    Vertex shared = 0;
};

/// Balanced split of a tree with at least three vertices. Walks from the
/// smallest-labeled leaf toward the largest remaining component until the
/// component sizes stop shrinking, then cuts around the vertex reached.
/// Throws InputError for m < 3.
SplitResult split_tree(const Tree& t);

/// Same split restricted to the subtree induced by `vertices` (must be
/// connected, at least three vertices, sorted).
SplitResult split_subtree(const Tree& t, std::span<const Vertex> vertices);

using Code = std::vector<std::int8_t>;

/// Per-vertex codes over {-1, 1, 2}: two vertices are adjacent exactly when
/// the coordinate-wise sum of their codes has no zero entry.
struct Encoding {
    int d = 0;
    std::vector<Code> codes;  // codes[v - 1] for vertex v

    const Code& code(Vertex v) const { return codes.at(static_cast<std::size_t>(v) - 1); }
    int size() const noexcept { return static_cast<int>(codes.size()); }
};

Encoding encode_tree(const Tree& t);

/// True when no coordinate of a + b is zero.
bool codes_compatible(const Code& a, const Code& b);

/// Appends (-1, 1, 2) blocks to every code until the dimension reaches `d`.
void pad_encoding(Encoding& enc, int d);

/// Reorders coordinates of every code: new coordinate p takes old coordinate source[p].
void permute_encoding(Encoding& enc, std::span<const int> source);

/// Coordinate map sending code `from` onto code `to`; both must hold the
/// same multiset of entries. Matches the -1 positions in order, then the 1s,
/// then the 2s.
std::vector<int> matching_permutation(const Code& from, const Code& to);

/// 10 ln(m) / ln(3/2), the dimension ceiling for a tree on m >= 2 vertices.
double dimension_bound(int m);

}  // namespace primegraph
