#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "primegraph/numtheory.hpp"
#include "primegraph/tree.hpp"

namespace primegraph {

/// Vertices 1..n, i ~ j iff i + j is prime.
struct PrimeSumGraph {
    BigInt n;
};

/// Vertices 1..n, i ~ j iff gcd(i + j, q) = 1.
struct CoprimeSumGraph {
    BigInt n;
    BigInt q;
};

/// Vertices 1..n with a stored edge set.
struct ExplicitGraph {
    int n = 0;
    std::vector<std::vector<int>> adjacency;  // sorted; index 0 unused
};

class AmbientGraph {
public:
    using Kind = std::variant<PrimeSumGraph, CoprimeSumGraph, ExplicitGraph>;

    static AmbientGraph prime_sum(const BigInt& n, const PrimalityConfig& cfg = {});
    static AmbientGraph coprime_sum(const BigInt& n, const BigInt& q);
    static AmbientGraph explicit_graph(int n, std::span<const Edge> edges);

    const Kind& kind() const noexcept { return kind_; }
    const BigInt& order() const noexcept { return n_; }
    const PrimalityConfig& primality() const noexcept { return primality_; }
    bool contains(const BigInt& v) const { return v >= 1 && v <= n_; }
    std::string describe() const;

private:
    explicit AmbientGraph(Kind kind, BigInt n, PrimalityConfig cfg)
        : kind_(std::move(kind)), n_(std::move(n)), primality_(std::move(cfg)) {}

    Kind kind_;
    BigInt n_;
    PrimalityConfig primality_;
};

/// Adjacency of i and j; false for i == j. Throws InputError when either
/// vertex lies outside 1..n.
bool is_edge(const AmbientGraph& g, const BigInt& i, const BigInt& j);

inline constexpr std::uint64_t kDefaultDegreeCap = 200'000;

struct DegreeStats {
    std::uint64_t n = 0;
    std::uint64_t edge_count = 0;
    mpq_class average_degree;  // 2 * edge_count / n, reduced

    double average() const { return average_degree.get_d(); }
};

/// Exact edge count and average degree. Throws CapExceeded when n > cap;
/// use estimate_average_degree beyond that.
DegreeStats average_degree(const AmbientGraph& g, std::uint64_t cap = kDefaultDegreeCap);

struct DegreeEstimate {
    double average_degree = 0.0;
    double standard_error = 0.0;
    std::uint64_t samples = 0;
};

/// Unbiased estimate from uniformly sampled vertex pairs: (n - 1) times the
/// fraction of sampled pairs that are adjacent.
DegreeEstimate estimate_average_degree(const AmbientGraph& g, std::uint64_t samples, std::uint64_t seed);

/// Edges of the prime-sum graph on 1..n joining vertices of equal parity,
/// counted exactly by grouping all pairs by their (even) sum.
std::uint64_t same_parity_edge_count(std::uint64_t n);

/// True iff no edge of the prime-sum graph on 1..n joins two vertices of
/// equal parity.
bool check_bipartite_parity(std::uint64_t n);

/// Pair-by-pair scan: the first same-parity pair (i, j), i < j <= n_max,
/// with i + j prime, scanning j upward. The graph on 1..n is
/// parity-bipartite for every n below the returned j.
std::optional<std::pair<std::uint64_t, std::uint64_t>> first_parity_violation(std::uint64_t n_max);

/// Graphviz rendering of g restricted to `vertices`, node k shown as names[k].
std::string to_dot(const AmbientGraph& g, std::span<const BigInt> vertices, std::span<const std::string> names);

}  // namespace primegraph
