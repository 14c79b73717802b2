#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace turan {

// Set of vertex ids in [0, 256), backed by four 64-bit words.
// Word 0 covers ids 0..63, which is the hot path for search-sized graphs.
class VertexSet {
public:
    static constexpr int max_vertices = 256;

    constexpr VertexSet() = default;

    void add(int v) { w_[v >> 6] |= bit(v); }
    void remove(int v) { w_[v >> 6] &= ~bit(v); }
    bool contains(int v) const { return (w_[v >> 6] & bit(v)) != 0; }
    void clear() { w_ = {}; }

    bool empty() const { return (w_[0] | w_[1] | w_[2] | w_[3]) == 0; }

    int count() const {
        return __builtin_popcountll(w_[0]) + __builtin_popcountll(w_[1]) +
               __builtin_popcountll(w_[2]) + __builtin_popcountll(w_[3]);
    }

    bool intersects(const VertexSet& o) const {
        return ((w_[0] & o.w_[0]) | (w_[1] & o.w_[1]) | (w_[2] & o.w_[2]) |
                (w_[3] & o.w_[3])) != 0;
    }

    bool subset_of(const VertexSet& o) const {
        return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0 &&
               (w_[2] & ~o.w_[2]) == 0 && (w_[3] & ~o.w_[3]) == 0;
    }

    // Smallest member, or -1 when empty.
    int first() const {
        for (int k = 0; k < 4; ++k)
            if (w_[k]) return 64 * k + __builtin_ctzll(w_[k]);
        return -1;
    }

    // Smallest member strictly greater than v, or -1.
    int next_after(int v) const {
        int k = (v + 1) >> 6;
        if (k >= 4) return -1;
        std::uint64_t rest = w_[k] & (~std::uint64_t{0} << ((v + 1) & 63));
        if (rest) return 64 * k + __builtin_ctzll(rest);
        for (++k; k < 4; ++k)
            if (w_[k]) return 64 * k + __builtin_ctzll(w_[k]);
        return -1;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { a &= b; return a; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { a |= b; return a; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) {
        for (int k = 0; k < 4; ++k) a.w_[k] &= ~b.w_[k];
        return a;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int k = 0; k < 4; ++k) w_[k] &= o.w_[k];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (int k = 0; k < 4; ++k) w_[k] |= o.w_[k];
        return *this;
    }

    bool operator==(const VertexSet&) const = default;

    class iterator {
    public:
        iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++() { v_ = s_->next_after(v_); return *this; }
        bool operator!=(const iterator& o) const { return v_ != o.v_; }
    private:
        const VertexSet* s_;
        int v_;
    };
    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

private:
    static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }
    std::array<std::uint64_t, 4> w_{};
};

// Simple undirected graph on vertex ids 0..n-1. No loops, no multi-edges.
// Value type; copies are independent. Reads are safe to share across threads
// as long as nobody mutates the shared instance.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const { return adj_[u].contains(v); }
    void add_edge(int u, int v);     // throws std::invalid_argument on loop/dup/range
    void remove_edge(int u, int v);  // throws std::invalid_argument if absent
    int add_vertex();                // appends an isolated vertex, returns its id

    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

// Text edge-list format: first non-comment line "n m", then m lines "u v".
// '#' starts a comment anywhere on a line; blank lines are skipped.
// Malformed input throws std::runtime_error with a 1-based line number.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// graph6 codec, short form only (n <= 62).
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view s);

// Join: disjoint union of a and b plus every edge between them.
// Vertices of a keep their ids; vertices of b are shifted by a.vertex_count().
Graph join(const Graph& a, const Graph& b);

// Subgraph induced by vs, vertex ids compacted in ascending order.
Graph induced_subgraph(const Graph& g, const VertexSet& vs);

// Canonical byte string: equal iff the graphs are isomorphic. Branch-and-bound
// over vertex orderings minimizing the adjacency row string; requires n <= 12.
std::vector<std::uint8_t> canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace turan
