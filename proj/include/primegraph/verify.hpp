#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "primegraph/graphs.hpp"
#include "primegraph/numtheory.hpp"
#include "primegraph/tree.hpp"

namespace primegraph {

struct Violation {
    enum class Kind { OutOfRange, DuplicateLabel, MissingEdge, UnexpectedEdge };

    Kind kind = Kind::MissingEdge;
    Vertex x = 0;
    Vertex y = 0;  // 0 for single-vertex violations
    bool expected_edge = false;
    bool observed_edge = false;
    std::string sum;      // j_x + j_y in decimal, empty when not applicable
    std::string witness;  // why the host graph has (or lacks) the edge
};

std::string to_string(Violation::Kind kind);

struct VerificationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

/// Checks that labels (labels[v - 1] for tree vertex v) are distinct vertices
/// of g and that every pair is adjacent in g exactly when adjacent in t.
/// Problems are reported as violations; throws InputError only when the
/// label count differs from m.
VerificationReport verify_induced(const Tree& t, std::span<const BigInt> labels, const AmbientGraph& g);

struct OracleCaps {
    int max_tree_size = kDefaultEnumerationCap;
    std::uint64_t max_host_order = 4096;
};

/// Lexicographically least (in BFS order from vertex 1, labels ascending)
/// induced embedding of t into g, or nullopt when none exists. Exhaustive.
std::optional<std::vector<std::uint64_t>> find_induced(const Tree& t, const AmbientGraph& g,
                                                       const OracleCaps& caps = {});

struct OracleEntry {
    int m = 0;
    std::string key;
    Tree tree = Tree::single_vertex();
    std::optional<std::vector<std::uint64_t>> labels;
};

struct OracleTable {
    std::uint64_t n = 0;
    int max_m = 0;
    std::vector<OracleEntry> entries;
    // Largest M with every tree on <= M vertices embedded, limited to max_m.
    int universal_m = 0;
    // True when every tree up to max_m embeds and max_m < n, so the true
    // M(n) may be larger.
    bool lower_bound = false;
};

/// Runs find_induced on every free tree with 1..max_m vertices in the
/// prime-sum graph on 1..n. With stop_after_failure, sizes beyond the first
/// one containing a tree without an induced copy are skipped.
OracleTable oracle_table(std::uint64_t n, int max_m, const OracleCaps& caps = {}, bool stop_after_failure = false);

/// Largest M such that every tree on at most M vertices has an induced copy
/// in the prime-sum graph on 1..n. Throws CapExceeded if the answer would
/// need trees beyond caps.max_tree_size.
int max_universal_m(std::uint64_t n, const OracleCaps& caps = {});

struct PathCountExpectation {
    double exact = 0.0;        // n(n-1)...(n-m+1)/2 * p^(m-1) * (1-p)^((m-1)(m-2)/2)
    double coarse_bound = 0.0;  // n^m * p^(m-1) * (1-p)^((m-1)(m-2)/2)
};

/// Expected number of induced m-vertex paths (up to reversal) in G(n, p).
PathCountExpectation expected_induced_path_count(std::uint64_t n, double p, int m);

/// Erdos-Renyi sample: each pair independently with probability p.
AmbientGraph sample_gnp(int n, double p, std::uint64_t seed);

/// Induced paths on m vertices in g, each counted once (not per direction).
std::uint64_t count_induced_paths(const AmbientGraph& g, int m);

}  // namespace primegraph
