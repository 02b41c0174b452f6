#pragma once

#include <cassert>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace rlis {

// input that cannot be parsed / malformed structure
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// structurally fine input outside the supported domain (b < 3, oracle size cap, ...)
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// fixed-capacity dense bitset over vertex ids 0..n-1
class vertex_set {
    int n_ = 0;
    std::vector<uint64_t> w_;

    static int word(int v) { return v >> 6; }
    static uint64_t bit(int v) { return uint64_t(1) << (v & 63); }

  public:
    vertex_set() = default;
    explicit vertex_set(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int capacity() const { return n_; }
    bool test(int v) const { return v >= 0 && v < n_ && (w_[word(v)] & bit(v)); }
    void set(int v) { assert(v >= 0 && v < n_); w_[word(v)] |= bit(v); }
    void reset(int v) { assert(v >= 0 && v < n_); w_[word(v)] &= ~bit(v); }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += __builtin_popcountll(x);
        return c;
    }
    bool empty() const {
        for (uint64_t x : w_) if (x) return false;
        return true;
    }
    bool subset_of(const vertex_set& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const vertex_set& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    int count_and(const vertex_set& o) const {
        assert(n_ == o.n_);
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += __builtin_popcountll(w_[i] & o.w_[i]);
        return c;
    }
    vertex_set& operator|=(const vertex_set& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    vertex_set& operator&=(const vertex_set& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    vertex_set& operator-=(const vertex_set& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    bool operator==(const vertex_set& o) const { return n_ == o.n_ && w_ == o.w_; }

    template <class F> void for_each(F f) const {
        for (size_t i = 0; i < w_.size(); ++i)
            for (uint64_t x = w_[i]; x; x &= x - 1)
                f(int(i * 64 + __builtin_ctzll(x)));
    }
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }
    static vertex_set of(int n, const std::vector<int>& vs) {
        vertex_set s(n);
        for (int v : vs) s.set(v);
        return s;
    }
};

// simple undirected graph, vertices 0..n-1; parallel edges and self loops are dropped
class graph {
    int n_ = 0;
    long m_ = 0;
    std::vector<std::vector<int>> adj_;   // unsorted until freeze, see add_edge
    std::vector<vertex_set> row_;         // adjacency rows

  public:
    graph() = default;
    explicit graph(int n) : n_(n), adj_(n), row_(n, vertex_set(n)) {}

    int n() const { return n_; }
    long m() const { return m_; }
    bool has_edge(int u, int v) const { return row_[u].test(v); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const vertex_set& row(int v) const { return row_[v]; }
    int degree(int v) const { return int(adj_[v].size()); }

    bool add_edge(int u, int v) {
        assert(u >= 0 && u < n_ && v >= 0 && v < n_);
        if (u == v || row_[u].test(v)) return false;
        row_[u].set(v);
        row_[v].set(u);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++m_;
        return true;
    }

    std::vector<std::pair<int, int>> edges() const;

    // component id per vertex, ids dense from 0 in order of first vertex seen
    std::vector<int> components() const;
    vertex_set component_of(int v) const;
};

// PACE-style header "p tw n m", 1-based edge lines, 'c' comment lines
graph read_gr(std::istream& in);
void write_gr(std::ostream& out, const graph& g);
graph read_gr_file(const std::string& path);

// plain edge list, 1-based endpoints; an optional leading "n m" header is
// recognized when m matches the number of edge lines that follow
graph read_edge_list(std::istream& in);

enum class graph_format { pace_gr, edge_list };
graph parse_graph(std::istream& in, graph_format fmt);

// relabels S to 0..|S|-1 in increasing vertex order; map[i] = original id
struct induced_graph {
    graph g;
    std::vector<int> map;
};
induced_graph induced_subgraph(const graph& g, const vertex_set& s);

// does S induce a tree in g; leaves = degree 1 within S, internals = degree >= 2.
// the empty set does not count as a tree; a singleton does (0 leaves).
struct tree_check {
    bool is_tree = false;
    vertex_set leaves;
    vertex_set internals;
};
tree_check classify_tree(const graph& g, const vertex_set& s);

} // namespace rlis
