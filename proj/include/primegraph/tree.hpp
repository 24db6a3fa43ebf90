#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "primegraph/error.hpp"

namespace primegraph {

/// Vertices are 1-indexed everywhere: a tree on m vertices uses names 1..m.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class TreeError : public InputError {
public:
    enum class Kind { Malformed, OutOfRange, SelfLoop, DuplicateEdge, Cycle, WrongEdgeCount, Disconnected };

    TreeError(Kind kind, int line, const std::string& message);

    Kind kind() const noexcept { return kind_; }
    /// 1-based input line the problem was found on, 0 when not tied to a line.
    int line() const noexcept { return line_; }

private:
    Kind kind_;
    int line_;
};

/// An undirected tree on vertices 1..m. Always valid once constructed.
class Tree {
public:
    /// Validates and builds; throws TreeError on any violation.
    Tree(int m, std::vector<Edge> edges);

    static Tree single_vertex() { return Tree(1, {}); }
    static Tree path(int m);
    /// Star with center 1 and leaves 2..m.
    static Tree star(int m);

    int size() const noexcept { return m_; }
    /// Edges with u < v, sorted lexicographically.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    /// Sorted neighbor list of v.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Same tree with vertex v renamed to relabel[v - 1].
    Tree relabeled(const std::vector<Vertex>& relabel) const;

    friend bool operator==(const Tree& a, const Tree& b) { return a.m_ == b.m_ && a.edges_ == b.edges_; }

private:
    int m_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;  // index 0 unused
};

/// Edge-list text: first non-comment line m, then one "u v" per edge.
/// Blank lines and '#' comments are ignored.
Tree parse_tree(std::string_view text);
std::string serialize_tree(const Tree& t);

struct BfsOrder {
    std::vector<Vertex> order;   // order[0] is the root
    std::vector<Vertex> parent;  // parent[v], 0 for the root; index 0 unused
};

/// Breadth-first order from root, neighbors visited in increasing label order.
/// Every non-root vertex has exactly one neighbor earlier in the order.
BfsOrder bfs_order(const Tree& t, Vertex root = 1);

/// Uniform random labeled tree (Pruefer decode), deterministic in seed.
Tree random_tree(int m, std::uint64_t seed);

/// Tree whose Pruefer sequence is `code` (length m - 2, entries in 1..m).
Tree tree_from_pruefer(int m, const std::vector<Vertex>& code);

/// Isomorphism-invariant key (AHU encoding rooted at the center).
std::string canonical_form(const Tree& t);

inline constexpr int kDefaultEnumerationCap = 14;

/// One representative per isomorphism class of trees on m vertices, sorted by
/// canonical key. Throws CapExceeded when m > cap.
std::vector<Tree> enumerate_free_trees(int m, int cap = kDefaultEnumerationCap);

}  // namespace primegraph
