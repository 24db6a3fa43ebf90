#include "primegraph/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <variant>

namespace primegraph {

namespace {

std::uint64_t to_u64(const BigInt& v) { return mpz_get_ui(v.get_mpz_t()); }

// Dense adjacency of a small host graph, one bit row per vertex (bit v for vertex v).
class HostMatrix {
public:
    explicit HostMatrix(const AmbientGraph& g) : n_(to_u64(g.order())), words_((n_ + 1 + 63) / 64) {
        rows_.assign((n_ + 1) * words_, 0);
        degree_.assign(n_ + 1, 0);
        if (std::holds_alternative<PrimeSumGraph>(g.kind())) {
            const auto sieve = prime_sieve(2 * n_);
            for (std::uint64_t i = 1; i <= n_; ++i) {
                for (std::uint64_t j = i + 1; j <= n_; ++j) {
                    if (sieve[i + j]) add(i, j);
                }
            }
        } else {
            for (std::uint64_t i = 1; i <= n_; ++i) {
                for (std::uint64_t j = i + 1; j <= n_; ++j) {
                    if (is_edge(g, to_big(i), to_big(j))) add(i, j);
                }
            }
        }
    }

    std::uint64_t order() const { return n_; }
    std::size_t words() const { return words_; }
    const std::uint64_t* row(std::uint64_t v) const { return rows_.data() + v * words_; }
    bool adjacent(std::uint64_t a, std::uint64_t b) const { return (row(a)[b / 64] >> (b % 64)) & 1U; }
    std::uint64_t degree(std::uint64_t v) const { return degree_[v]; }

private:
    void add(std::uint64_t a, std::uint64_t b) {
        rows_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
        rows_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
        ++degree_[a];
        ++degree_[b];
    }

    std::uint64_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> rows_;
    std::vector<std::uint64_t> degree_;
};

class InducedSearch {
public:
    InducedSearch(const Tree& t, const HostMatrix& host)
        : tree_(t), host_(host), bfs_(bfs_order(t, 1)), labels_(static_cast<std::size_t>(t.size()) + 1, 0) {
        find_twins();
    }

    std::optional<std::vector<std::uint64_t>> run() {
        if (static_cast<std::uint64_t>(tree_.size()) > host_.order()) return std::nullopt;
        if (!place(0)) return std::nullopt;
        return std::vector<std::uint64_t>(labels_.begin() + 1, labels_.end());
    }

private:
    // twin_[v]: the nearest earlier sibling whose rooted subtree is isomorphic
    // to v's. Swapping the two subtrees maps solutions to solutions, so
    // requiring label(twin) < label(v) loses nothing, and keeps the
    // lexicographically least solution since the twin comes first in BFS order.
    void find_twins() {
        const auto m = static_cast<std::size_t>(tree_.size());
        std::vector<int> shape(m + 1, 0);
        std::map<std::vector<int>, int> ids;
        for (auto it = bfs_.order.rbegin(); it != bfs_.order.rend(); ++it) {
            std::vector<int> children;
            for (Vertex w : tree_.neighbors(*it)) {
                if (w != bfs_.parent[*it]) children.push_back(shape[w]);
            }
            std::sort(children.begin(), children.end());
            shape[*it] = ids.emplace(std::move(children), static_cast<int>(ids.size())).first->second;
        }
        twin_.assign(m + 1, 0);
        std::map<std::pair<Vertex, int>, Vertex> last_seen;
        for (std::size_t k = 1; k < bfs_.order.size(); ++k) {
            const Vertex v = bfs_.order[k];
            auto [it, fresh] = last_seen.try_emplace({bfs_.parent[v], shape[v]}, v);
            if (!fresh) {
                twin_[v] = it->second;
                it->second = v;
            }
        }
    }

    bool place(std::size_t k) {
        if (k == bfs_.order.size()) return true;
        const Vertex v = bfs_.order[k];
        const Vertex parent = bfs_.parent[v];
        const std::size_t words = host_.words();

        // Candidates: neighbors of the parent's label, minus used labels and
        // minus neighbors of every other placed vertex (all non-adjacent to v).
        std::vector<std::uint64_t> allowed(words, ~std::uint64_t{0});
        if (parent != 0) {
            const auto* row = host_.row(labels_[parent]);
            std::copy(row, row + words, allowed.begin());
        }
        allowed[0] &= ~std::uint64_t{1};  // vertex 0 does not exist
        if (twin_[v] != 0) {
            const std::uint64_t floor = labels_[twin_[v]];  // labels must exceed this
            for (std::size_t w = 0; w < floor / 64; ++w) allowed[w] = 0;
            const std::uint64_t bit = floor % 64;
            allowed[floor / 64] &= bit == 63 ? 0 : ~std::uint64_t{0} << (bit + 1);
        }
        for (std::size_t earlier = 0; earlier < k; ++earlier) {
            const Vertex x = bfs_.order[earlier];
            const std::uint64_t label = labels_[x];
            allowed[label / 64] &= ~(std::uint64_t{1} << (label % 64));
            if (x == parent) continue;
            const auto* row = host_.row(label);
            for (std::size_t w = 0; w < words; ++w) allowed[w] &= ~row[w];
        }

        const auto needed = static_cast<std::uint64_t>(tree_.degree(v));
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t bits = allowed[w];
            while (bits != 0) {
                const std::uint64_t label = w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits));
                bits &= bits - 1;
                if (label > host_.order()) return false;
                if (host_.degree(label) < needed) continue;
                labels_[v] = label;
                if (place(k + 1)) return true;
            }
        }
        labels_[v] = 0;
        return false;
    }

    const Tree& tree_;
    const HostMatrix& host_;
    BfsOrder bfs_;
    std::vector<std::uint64_t> labels_;  // by tree vertex
    std::vector<Vertex> twin_;
};

void check_caps(int m, const BigInt& n, const OracleCaps& caps) {
    if (m > caps.max_tree_size) {
        throw CapExceeded("induced-subgraph oracle capped at trees of " + std::to_string(caps.max_tree_size) +
                          " vertices, got " + std::to_string(m));
    }
    if (n > to_big(caps.max_host_order)) {
        throw CapExceeded("induced-subgraph oracle capped at host order " + std::to_string(caps.max_host_order) +
                          ", got " + n.get_str());
    }
}

std::string edge_witness(const AmbientGraph& g, const BigInt& sum, bool observed) {
    return std::visit(
        [&](const auto& kind) -> std::string {
            using K = std::decay_t<decltype(kind)>;
            if constexpr (std::is_same_v<K, PrimeSumGraph>) {
                if (observed) return "sum is prime";
                if (auto f = small_factor(sum, 100'000)) return "sum divisible by " + std::to_string(*f);
                return sum < 2 ? "sum below 2" : "sum composite";
            } else if constexpr (std::is_same_v<K, CoprimeSumGraph>) {
                return "gcd(sum, q) = " + gcd(sum, kind.q).get_str();
            } else {
                return observed ? "edge present" : "edge absent";
            }
        },
        g.kind());
}

}  // namespace

std::string to_string(Violation::Kind kind) {
    switch (kind) {
        case Violation::Kind::OutOfRange: return "out_of_range";
        case Violation::Kind::DuplicateLabel: return "duplicate";
        case Violation::Kind::MissingEdge: return "missing_edge";
        case Violation::Kind::UnexpectedEdge: return "unexpected_edge";
    }
    return "unknown";
}

VerificationReport verify_induced(const Tree& t, std::span<const BigInt> labels, const AmbientGraph& g) {
    const int m = t.size();
    if (static_cast<int>(labels.size()) != m) {
        throw InputError("expected " + std::to_string(m) + " labels, got " + std::to_string(labels.size()));
    }
    VerificationReport report;
    auto label = [&](Vertex v) -> const BigInt& { return labels[static_cast<std::size_t>(v) - 1]; };

    std::vector<char> usable(static_cast<std::size_t>(m) + 1, 1);
    for (Vertex x = 1; x <= m; ++x) {
        if (!g.contains(label(x))) {
            usable[x] = 0;
            report.violations.push_back(Violation{Violation::Kind::OutOfRange, x, 0, false, false, "",
                                                  "label " + label(x).get_str() + " outside 1.." +
                                                      g.order().get_str()});
        }
    }
    for (Vertex x = 1; x <= m; ++x) {
        for (Vertex y = x + 1; y <= m; ++y) {
            if (label(x) == label(y)) {
                report.violations.push_back(Violation{Violation::Kind::DuplicateLabel, x, y, false, false, "",
                                                      "both labeled " + label(x).get_str()});
                continue;
            }
            if (!usable[x] || !usable[y]) continue;
            const bool expected = t.adjacent(x, y);
            const bool observed = is_edge(g, label(x), label(y));
            if (expected == observed) continue;
            const BigInt sum = label(x) + label(y);
            report.violations.push_back(Violation{
                expected ? Violation::Kind::MissingEdge : Violation::Kind::UnexpectedEdge, x, y, expected, observed,
                sum.get_str(), edge_witness(g, sum, observed)});
        }
    }
    report.ok = report.violations.empty();
    return report;
}

std::optional<std::vector<std::uint64_t>> find_induced(const Tree& t, const AmbientGraph& g, const OracleCaps& caps) {
    check_caps(t.size(), g.order(), caps);
    const HostMatrix host(g);
    return InducedSearch(t, host).run();
}

OracleTable oracle_table(std::uint64_t n, int max_m, const OracleCaps& caps, bool stop_after_failure) {
    if (n < 1) throw InputError("oracle needs n >= 1");
    if (max_m < 1) throw InputError("oracle needs max_m >= 1");
    check_caps(max_m, to_big(n), caps);
    const HostMatrix host(AmbientGraph::prime_sum(to_big(n)));

    OracleTable table;
    table.n = n;
    table.max_m = max_m;
    bool all_so_far = true;
    for (int m = 1; m <= max_m; ++m) {
        bool all_at_m = true;
        for (auto& tree : enumerate_free_trees(m, caps.max_tree_size)) {
            OracleEntry entry{m, canonical_form(tree), tree, InducedSearch(tree, host).run()};
            all_at_m = all_at_m && entry.labels.has_value();
            table.entries.push_back(std::move(entry));
        }
        if (all_so_far && all_at_m) table.universal_m = m;
        all_so_far = all_so_far && all_at_m;
        if (stop_after_failure && !all_at_m) {
            table.max_m = m;
            break;
        }
    }
    table.lower_bound = all_so_far && static_cast<std::uint64_t>(table.max_m) < n;
    return table;
}

int max_universal_m(std::uint64_t n, const OracleCaps& caps) {
    if (n < 1) throw InputError("max_universal_m needs n >= 1");
    check_caps(1, to_big(n), caps);
    const HostMatrix host(AmbientGraph::prime_sum(to_big(n)));
    for (int m = 1;; ++m) {
        if (static_cast<std::uint64_t>(m) > n) return m - 1;
        if (m > caps.max_tree_size) {
            throw CapExceeded("every tree on up to " + std::to_string(caps.max_tree_size) +
                              " vertices embeds; M(n) exceeds the enumeration cap");
        }
        for (const auto& tree : enumerate_free_trees(m, caps.max_tree_size)) {
            if (!InducedSearch(tree, host).run()) return m - 1;
        }
    }
}

PathCountExpectation expected_induced_path_count(std::uint64_t n, double p, int m) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("probability must lie in [0, 1]");
    if (m < 2 || static_cast<std::uint64_t>(m) > n) throw InputError("need 2 <= m <= n");
    const int non_edges = (m - 1) * (m - 2) / 2;
    const long double shape = std::pow(static_cast<long double>(p), m - 1) *
                              std::pow(1.0L - static_cast<long double>(p), non_edges);
    long double falling = 1.0L;
    for (int k = 0; k < m; ++k) falling *= static_cast<long double>(n - static_cast<std::uint64_t>(k));
    PathCountExpectation out;
    out.exact = static_cast<double>(falling / 2.0L * shape);
    out.coarse_bound = static_cast<double>(std::pow(static_cast<long double>(n), m) * shape);
    return out;
}

AmbientGraph sample_gnp(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= n; ++i) {
        for (Vertex j = i + 1; j <= n; ++j) {
            if (coin(rng)) edges.emplace_back(i, j);
        }
    }
    return AmbientGraph::explicit_graph(n, edges);
}

std::uint64_t count_induced_paths(const AmbientGraph& g, int m) {
    if (m < 1) throw InputError("path length must be positive");
    check_caps(1, g.order(), OracleCaps{});
    const HostMatrix host(g);
    const std::uint64_t n = host.order();
    if (m == 1) return n;

    std::vector<std::uint64_t> path;
    std::uint64_t sequences = 0;
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(path.size()) == m) {
            ++sequences;
            return;
        }
        const std::uint64_t last = path.back();
        for (std::uint64_t w = 1; w <= n; ++w) {
            if (!host.adjacent(last, w)) continue;
            bool fits = true;
            for (std::size_t k = 0; k + 1 < path.size() && fits; ++k) {
                fits = path[k] != w && !host.adjacent(path[k], w);
            }
            if (!fits) continue;
            path.push_back(w);
            self(self);
            path.pop_back();
        }
    };
    for (std::uint64_t start = 1; start <= n; ++start) {
        path.assign(1, start);
        extend(extend);
    }
    return sequences / 2;
}

}  // namespace primegraph
