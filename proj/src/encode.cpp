#include "primegraph/encode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace primegraph {

namespace {

const Code kFirstBlock{-1, 1, 2};   // U_1 side suffix and padding pattern
const Code kSharedBlock{2, 1, -1};  // shared vertex suffix
const Code kSecondBlock{1, 2, -1};  // U_2 side suffix

using Component = std::vector<Vertex>;

// View of the subtree of t induced by a vertex subset.
class Subtree {
public:
    Subtree(const Tree& t, std::span<const Vertex> vertices)
        : tree_(t), vertices_(vertices.begin(), vertices.end()), member_(static_cast<std::size_t>(t.size()) + 1) {
        for (Vertex v : vertices_) member_[v] = 1;
    }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    int size() const { return static_cast<int>(vertices_.size()); }
    bool contains(Vertex v) const { return member_[v] != 0; }

    std::vector<Vertex> neighbors(Vertex v) const {
        std::vector<Vertex> out;
        for (Vertex w : tree_.neighbors(v)) {
            if (contains(w)) out.push_back(w);
        }
        return out;
    }

    // Components left after deleting `removed`, each sorted.
    std::vector<Component> components_without(Vertex removed) const {
        std::vector<char> seen(member_.size());
        seen[removed] = 1;
        std::vector<Component> out;
        for (Vertex start : vertices_) {
            if (seen[start]) continue;
            Component comp;
            std::vector<Vertex> stack{start};
            seen[start] = 1;
            while (!stack.empty()) {
                const Vertex v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (Vertex w : tree_.neighbors(v)) {
                    if (contains(w) && !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
        return out;
    }

    bool is_connected(const std::vector<Vertex>& subset) const {
        if (subset.empty()) return false;
        std::vector<char> in(member_.size());
        for (Vertex v : subset) in[v] = 1;
        std::vector<char> seen(member_.size());
        std::vector<Vertex> stack{subset.front()};
        seen[subset.front()] = 1;
        std::size_t reached = 0;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            ++reached;
            for (Vertex w : tree_.neighbors(v)) {
                if (in[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return reached == subset.size();
    }

private:
    const Tree& tree_;
    std::vector<Vertex> vertices_;
    std::vector<char> member_;
};

// Larger first; ties go to the component holding the smaller label.
bool larger_component(const Component& a, const Component& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
}

std::vector<Vertex> with_vertex(std::vector<Vertex> set, Vertex v) {
    set.insert(std::lower_bound(set.begin(), set.end(), v), v);
    return set;
}

void check_split(const Subtree& sub, const SplitResult& split) {
    const int n = sub.size();
    auto fail = [](const char* what) { throw std::logic_error(std::string("split_tree: ") + what); };
    if (3 * static_cast<int>(split.u1.size()) < n || 3 * static_cast<int>(split.u2.size()) < n) {
        fail("side smaller than a third");
    }
    std::vector<Vertex> both;
    std::set_intersection(split.u1.begin(), split.u1.end(), split.u2.begin(), split.u2.end(),
                          std::back_inserter(both));
    if (both != std::vector<Vertex>{split.shared}) fail("sides must share exactly the shared vertex");
    std::vector<Vertex> all;
    std::set_union(split.u1.begin(), split.u1.end(), split.u2.begin(), split.u2.end(), std::back_inserter(all));
    if (all != sub.vertices()) fail("sides do not cover the tree");
    if (!sub.is_connected(split.u1) || !sub.is_connected(split.u2)) fail("side is not a subtree");
}

Code concat(const Code& head, const Code& tail) {
    Code out = head;
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

void pad_codes(std::vector<Code>& codes, int d) {
    for (auto& code : codes) {
        while (static_cast<int>(code.size()) < d) code.insert(code.end(), kFirstBlock.begin(), kFirstBlock.end());
    }
}

Code permuted(const Code& code, std::span<const int> source) {
    Code out(code.size());
    for (std::size_t p = 0; p < source.size(); ++p) out[p] = code[static_cast<std::size_t>(source[p])];
    return out;
}

std::size_t index_of(const std::vector<Vertex>& sorted, Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

// Codes aligned with the sorted vertex list of the subtree.
std::vector<Code> encode_subtree(const Tree& t, const std::vector<Vertex>& vertices) {
    const Subtree sub(t, vertices);
    const auto n = vertices.size();
    if (n == 1) return {kFirstBlock};
    if (n == 2) return {kFirstBlock, kSharedBlock};
    if (n == 3) {
        // Path x - y - z: y is the middle vertex, x the smaller end.
        std::vector<Code> codes(3);
        std::size_t middle = 0;
        while (sub.neighbors(vertices[middle]).size() != 2) ++middle;
        bool first_end = true;
        for (std::size_t k = 0; k < 3; ++k) {
            if (k == middle) {
                codes[k] = kSharedBlock;
            } else {
                codes[k] = first_end ? kFirstBlock : kSecondBlock;
                first_end = false;
            }
        }
        return codes;
    }

    const SplitResult split = split_subtree(t, vertices);
    auto first = encode_subtree(t, split.u1);
    auto second = encode_subtree(t, split.u2);
    const int d1 = static_cast<int>(first.front().size());
    const int d2 = static_cast<int>(second.front().size());
    const int inner = std::max(d1, d2);
    pad_codes(first, inner);
    pad_codes(second, inner);

    const Code& shared_second = second[index_of(split.u2, split.shared)];
    const auto source = matching_permutation(first[index_of(split.u1, split.shared)], shared_second);
    for (auto& code : first) code = permuted(code, source);

    std::vector<Code> codes(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Vertex v = vertices[k];
        if (v == split.shared) {
            codes[k] = concat(shared_second, kSharedBlock);
        } else if (std::binary_search(split.u1.begin(), split.u1.end(), v)) {
            codes[k] = concat(first[index_of(split.u1, v)], kFirstBlock);
        } else {
            codes[k] = concat(second[index_of(split.u2, v)], kSecondBlock);
        }
    }
    if (static_cast<int>(codes.front().size()) != inner + 3) {
        throw std::logic_error("encode_tree: dimension recurrence violated");
    }
    return codes;
}

}  // namespace

SplitResult split_subtree(const Tree& t, std::span<const Vertex> vertices) {
    const Subtree sub(t, vertices);
    const int n = sub.size();
    if (n < 3) throw InputError("split_tree needs at least 3 vertices, got " + std::to_string(n));

    Vertex leaf = 0;
    for (Vertex v : sub.vertices()) {
        if (sub.neighbors(v).size() == 1) {
            leaf = v;
            break;
        }
    }

    // walk[k] and pieces[k] hold v_{k+1} and T_{k+1}.
    std::vector<Vertex> walk{leaf};
    std::vector<Component> pieces{sub.vertices()};
    std::size_t i = 0;  // 1-based index of the stopping step
    for (;;) {
        const Vertex current = walk.back();
        auto comps = sub.components_without(current);
        const auto largest = std::min_element(comps.begin(), comps.end(), larger_component);
        Vertex next = 0;
        for (Vertex w : sub.neighbors(current)) {
            if (std::binary_search(largest->begin(), largest->end(), w)) next = w;
        }
        pieces.push_back(std::move(*largest));
        walk.push_back(next);
        const std::size_t k = walk.size() - 1;  // T_k is pieces[k - 1], T_{k+1} is pieces[k]
        if (k >= 2 && pieces[k - 1].size() <= pieces[k].size()) {
            i = k;
            break;
        }
        if (walk.size() > static_cast<std::size_t>(2 * n + 2)) throw std::logic_error("split_tree: walk did not settle");
    }

    const Vertex pivot = walk[i - 2];  // v_{i-1}
    const Component& small_side = pieces[i - 1];  // T_i
    const Component& large_side = pieces[i];      // T_{i+1}, contains v_{i-1}

    SplitResult split;
    split.shared = pivot;
    if (3 * static_cast<int>(small_side.size()) >= n) {
        split.u1 = large_side;
        split.u2 = with_vertex(small_side, pivot);
    } else {
        auto comps = sub.components_without(pivot);
        std::sort(comps.begin(), comps.end(), larger_component);
        std::vector<Vertex> gathered;
        std::vector<Vertex> rest;
        for (const auto& comp : comps) {
            auto& target = 3 * static_cast<int>(gathered.size()) >= n ? rest : gathered;
            target.insert(target.end(), comp.begin(), comp.end());
        }
        if (3 * static_cast<int>(gathered.size()) >= 2 * n) throw std::logic_error("split_tree: union overshot");
        std::sort(gathered.begin(), gathered.end());
        std::sort(rest.begin(), rest.end());
        split.u1 = with_vertex(std::move(gathered), pivot);
        split.u2 = with_vertex(std::move(rest), pivot);
    }
    check_split(sub, split);
    return split;
}

SplitResult split_tree(const Tree& t) {
    std::vector<Vertex> all(static_cast<std::size_t>(t.size()));
    for (int k = 0; k < t.size(); ++k) all[static_cast<std::size_t>(k)] = k + 1;
    return split_subtree(t, all);
}

bool codes_compatible(const Code& a, const Code& b) {
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] + b[k] == 0) return false;
    }
    return true;
}

void pad_encoding(Encoding& enc, int d) {
    if (d % 3 != 0 || d < enc.d) throw InputError("pad_encoding: target dimension must be a multiple of 3 >= d");
    pad_codes(enc.codes, d);
    enc.d = d;
}

void permute_encoding(Encoding& enc, std::span<const int> source) {
    if (static_cast<int>(source.size()) != enc.d) throw InputError("permute_encoding: permutation has wrong length");
    for (auto& code : enc.codes) code = permuted(code, source);
}

std::vector<int> matching_permutation(const Code& from, const Code& to) {
    if (from.size() != to.size()) throw InputError("matching_permutation: codes differ in length");
    std::vector<int> source(to.size(), -1);
    for (std::int8_t value : {std::int8_t{-1}, std::int8_t{1}, std::int8_t{2}}) {
        std::size_t next_from = 0;
        for (std::size_t p = 0; p < to.size(); ++p) {
            if (to[p] != value) continue;
            while (next_from < from.size() && from[next_from] != value) ++next_from;
            if (next_from == from.size()) throw InputError("matching_permutation: codes hold different entries");
            source[p] = static_cast<int>(next_from++);
        }
    }
    return source;
}

double dimension_bound(int m) { return 10.0 * std::log(static_cast<double>(m)) / std::log(1.5); }

Encoding encode_tree(const Tree& t) {
    std::vector<Vertex> all(static_cast<std::size_t>(t.size()));
    for (int k = 0; k < t.size(); ++k) all[static_cast<std::size_t>(k)] = k + 1;
    Encoding enc;
    enc.codes = encode_subtree(t, all);
    enc.d = static_cast<int>(enc.codes.front().size());

    for (Vertex x = 1; x <= t.size(); ++x) {
        for (Vertex y = x + 1; y <= t.size(); ++y) {
            if (codes_compatible(enc.code(x), enc.code(y)) != t.adjacent(x, y)) {
                throw std::logic_error("encode_tree: adjacency characterization failed for " + std::to_string(x) +
                                       "-" + std::to_string(y));
            }
        }
    }
    return enc;
}

}  // namespace primegraph
