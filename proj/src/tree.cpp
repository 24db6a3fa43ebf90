#include "primegraph/tree.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace primegraph {

namespace {

std::string at_line(int line) { return line > 0 ? "line " + std::to_string(line) + ": " : std::string{}; }

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n) + 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[b] = a;
        return true;
    }

private:
    std::vector<int> parent_;
};

// Checks every tree invariant; `lines` (possibly empty) maps edge index to input line.
void validate(int m, std::vector<Edge>& edges, const std::vector<int>& lines) {
    auto line_of = [&](std::size_t i) { return i < lines.size() ? lines[i] : 0; };
    if (m < 1) throw TreeError(TreeError::Kind::Malformed, 0, "vertex count must be positive, got " + std::to_string(m));

    std::set<Edge> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto& [u, v] = edges[i];
        if (u < 1 || u > m || v < 1 || v > m) {
            throw TreeError(TreeError::Kind::OutOfRange, line_of(i),
                            "edge " + std::to_string(u) + "-" + std::to_string(v) + " uses a vertex outside 1.." +
                                std::to_string(m));
        }
        if (u == v) {
            throw TreeError(TreeError::Kind::SelfLoop, line_of(i), "self-loop at vertex " + std::to_string(u));
        }
        if (u > v) std::swap(u, v);
        if (!seen.insert(edges[i]).second) {
            throw TreeError(TreeError::Kind::DuplicateEdge, line_of(i),
                            "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        }
    }
    if (static_cast<int>(edges.size()) > m - 1) {
        throw TreeError(TreeError::Kind::WrongEdgeCount, 0,
                        std::to_string(edges.size()) + " edges given, a tree on " + std::to_string(m) +
                            " vertices has " + std::to_string(m - 1));
    }
    DisjointSets components(m);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!components.unite(edges[i].first, edges[i].second)) {
            throw TreeError(TreeError::Kind::Cycle, line_of(i),
                            "edge " + std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second) +
                                " closes a cycle");
        }
    }
    for (int v = 2; v <= m; ++v) {
        if (components.find(v) != components.find(1)) {
            throw TreeError(TreeError::Kind::Disconnected, 0,
                            "vertex " + std::to_string(v) + " is not connected to vertex 1 (" +
                                std::to_string(edges.size()) + " edges for " + std::to_string(m) + " vertices)");
        }
    }
    std::sort(edges.begin(), edges.end());
}

Tree build_tree(int m, std::vector<Edge> edges, const std::vector<int>& lines) {
    validate(m, edges, lines);
    return Tree(m, std::move(edges));
}

std::vector<std::string_view> tokens_of(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_int(std::string_view token, int& value) {
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    return ec == std::errc{} && ptr == end;
}

std::vector<Vertex> tree_centers(const Tree& t) {
    const int m = t.size();
    if (m <= 2) {
        std::vector<Vertex> all(static_cast<std::size_t>(m));
        std::iota(all.begin(), all.end(), 1);
        return all;
    }
    std::vector<int> degree(static_cast<std::size_t>(m) + 1);
    std::vector<Vertex> layer;
    for (Vertex v = 1; v <= m; ++v) {
        degree[v] = t.degree(v);
        if (degree[v] == 1) layer.push_back(v);
    }
    int remaining = m;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<Vertex> next;
        for (Vertex leaf : layer) {
            for (Vertex w : t.neighbors(leaf)) {
                if (--degree[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string rooted_encoding(const Tree& t, Vertex v, Vertex parent) {
    std::vector<std::string> children;
    for (Vertex w : t.neighbors(v)) {
        if (w != parent) children.push_back(rooted_encoding(t, w, v));
    }
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children) out += c;
    out += ")";
    return out;
}

// Relabels t so the root is 1 and labels follow BFS with children in canonical order.
Tree canonically_labeled(const Tree& t, Vertex root) {
    std::vector<Vertex> relabel(static_cast<std::size_t>(t.size()));
    std::queue<std::pair<Vertex, Vertex>> pending;
    pending.push({root, 0});
    int next_label = 1;
    while (!pending.empty()) {
        auto [v, parent] = pending.front();
        pending.pop();
        relabel[v - 1] = next_label++;
        std::vector<std::pair<std::string, Vertex>> children;
        for (Vertex w : t.neighbors(v)) {
            if (w != parent) children.emplace_back(rooted_encoding(t, w, v), w);
        }
        std::sort(children.begin(), children.end());
        for (const auto& [key, w] : children) pending.push({w, v});
    }
    return t.relabeled(relabel);
}

}  // namespace

TreeError::TreeError(Kind kind, int line, const std::string& message)
    : InputError(at_line(line) + message), kind_(kind), line_(line) {}

Tree::Tree(int m, std::vector<Edge> edges) : m_(m) {
    validate(m, edges, {});
    edges_ = std::move(edges);
    adjacency_.resize(static_cast<std::size_t>(m) + 1);
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

Tree Tree::path(int m) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < m; ++v) edges.emplace_back(v, v + 1);
    return Tree(m, std::move(edges));
}

Tree Tree::star(int m) {
    std::vector<Edge> edges;
    for (Vertex v = 2; v <= m; ++v) edges.emplace_back(1, v);
    return Tree(m, std::move(edges));
}

bool Tree::adjacent(Vertex u, Vertex v) const {
    const auto& list = neighbors(u);
    return std::binary_search(list.begin(), list.end(), v);
}

Tree Tree::relabeled(const std::vector<Vertex>& relabel) const {
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (const auto& [u, v] : edges_) edges.emplace_back(relabel.at(u - 1), relabel.at(v - 1));
    return Tree(m_, std::move(edges));
}

Tree parse_tree(std::string_view text) {
    std::optional<int> m;
    std::vector<Edge> edges;
    std::vector<int> lines;
    int line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_number;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tokens = tokens_of(line);
        if (tokens.empty()) continue;

        if (!m) {
            int value = 0;
            if (tokens.size() != 1 || !parse_int(tokens[0], value) || value < 1) {
                throw TreeError(TreeError::Kind::Malformed, line_number,
                                "expected the vertex count as a single positive integer");
            }
            m = value;
            continue;
        }
        int u = 0;
        int v = 0;
        if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v)) {
            throw TreeError(TreeError::Kind::Malformed, line_number, "expected an edge as two integers \"u v\"");
        }
        edges.emplace_back(u, v);
        lines.push_back(line_number);
    }
    if (!m) throw TreeError(TreeError::Kind::Malformed, 0, "empty tree description, expected the vertex count");
    return build_tree(*m, std::move(edges), lines);
}

std::string serialize_tree(const Tree& t) {
    std::ostringstream out;
    out << t.size() << '\n';
    for (const auto& [u, v] : t.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

BfsOrder bfs_order(const Tree& t, Vertex root) {
    const int m = t.size();
    if (root < 1 || root > m) {
        throw InputError("bfs root " + std::to_string(root) + " outside 1.." + std::to_string(m));
    }
    BfsOrder result;
    result.order.reserve(static_cast<std::size_t>(m));
    result.parent.assign(static_cast<std::size_t>(m) + 1, 0);
    std::vector<int> position(static_cast<std::size_t>(m) + 1, -1);

    std::queue<Vertex> pending;
    pending.push(root);
    position[root] = 0;
    while (!pending.empty()) {
        const Vertex v = pending.front();
        pending.pop();
        result.order.push_back(v);
        for (Vertex w : t.neighbors(v)) {
            if (position[w] >= 0) continue;
            position[w] = static_cast<int>(result.order.size() + pending.size());
            result.parent[w] = v;
            pending.push(w);
        }
    }

    for (std::size_t k = 1; k < result.order.size(); ++k) {
        const Vertex v = result.order[k];
        const auto earlier = std::count_if(t.neighbors(v).begin(), t.neighbors(v).end(),
                                           [&](Vertex w) { return position[w] < static_cast<int>(k); });
        if (earlier != 1) throw std::logic_error("bfs_order: vertex without a unique earlier neighbor");
    }
    return result;
}

Tree tree_from_pruefer(int m, const std::vector<Vertex>& code) {
    if (m < 2) return Tree::single_vertex();
    if (static_cast<int>(code.size()) != m - 2) throw InputError("Pruefer sequence must have length m - 2");
    std::vector<int> degree(static_cast<std::size_t>(m) + 1, 1);
    for (Vertex v : code) {
        if (v < 1 || v > m) throw InputError("Pruefer entry outside 1..m");
        ++degree[v];
    }
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 1; v <= m; ++v) {
        if (degree[v] == 1) leaves.push(v);
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m) - 1);
    for (Vertex v : code) {
        const Vertex leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, v);
        if (--degree[v] == 1) leaves.push(v);
    }
    const Vertex a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
    return Tree(m, std::move(edges));
}

Tree random_tree(int m, std::uint64_t seed) {
    if (m < 1) throw InputError("random_tree needs m >= 1");
    if (m == 1) return Tree::single_vertex();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Vertex> pick(1, m);
    std::vector<Vertex> code(static_cast<std::size_t>(m) - 2);
    for (auto& entry : code) entry = pick(rng);
    return tree_from_pruefer(m, code);
}

std::string canonical_form(const Tree& t) {
    std::string best;
    for (Vertex center : tree_centers(t)) {
        auto key = rooted_encoding(t, center, 0);
        if (best.empty() || key < best) best = std::move(key);
    }
    return best;
}

std::vector<Tree> enumerate_free_trees(int m, int cap) {
    if (m < 1) throw InputError("enumerate_free_trees needs m >= 1");
    if (m > cap) {
        throw CapExceeded("free-tree enumeration capped at m = " + std::to_string(cap) + ", asked for " +
                          std::to_string(m));
    }
    // Grow level by level: every tree on k + 1 vertices is a tree on k vertices plus a leaf.
    std::map<std::string, Tree> level;
    level.emplace(canonical_form(Tree::single_vertex()), Tree::single_vertex());
    for (int k = 1; k < m; ++k) {
        std::map<std::string, Tree> next;
        for (const auto& [key, t] : level) {
            for (Vertex attach = 1; attach <= k; ++attach) {
                auto edges = t.edges();
                edges.emplace_back(attach, k + 1);
                Tree grown(k + 1, std::move(edges));
                auto grown_key = canonical_form(grown);
                if (!next.contains(grown_key)) next.emplace(std::move(grown_key), std::move(grown));
            }
        }
        level = std::move(next);
    }

    std::vector<Tree> out;
    out.reserve(level.size());
    for (const auto& [key, t] : level) {
        // Root the representative at the center whose rooted encoding is the key.
        Vertex root = 1;
        for (Vertex c : tree_centers(t)) {
            if (rooted_encoding(t, c, 0) == key) {
                root = c;
                break;
            }
        }
        out.push_back(canonically_labeled(t, root));
    }
    return out;
}

}  // namespace primegraph
