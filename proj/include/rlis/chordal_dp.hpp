#pragma once

#include "rlis/graph.hpp"
#include "rlis/treedec.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace rlis {

struct chordal_answer {
    bool yes = false;
    std::vector<int> witness;   // sorted; filled only when requested and yes
};

// Decision and witness for: does the graph contain an induced subtree with
// exactly `a` vertices, at least `b` leaves, and `v0` internal?
//
// Works on chordal inputs only (the constructor throws not_chordal_error with
// a hole otherwise). The solver builds a clique tree once, turns it into a
// nice decomposition, and answers queries with a table-per-node dynamic
// program. Every bag of that decomposition induces a clique, so a valid
// subtree meets each bag in at most two vertices; a table key is therefore
//
//   (S, d, i): S = subtree ∩ bag (|S| <= 2), d = degree of each S vertex so
//   far capped at 2, i = subtree vertices seen below this node,
//
// and the stored value is the best number of leaves already finalized (a
// vertex's leaf status is decided when its bag membership ends). v0's
// treatment is concentrated at the single node where v0 leaves the bags: only
// states where v0 is present with capped degree 2 survive it, which at the
// same time forces v0 into the subtree and forces it to be internal.
class chordal_solver {
  public:
    explicit chordal_solver(graph g);

    const graph& input() const { return g_; }
    const tree_decomposition& clique_tree() const { return ct_; }
    const nice_decomposition& nice() const { return nice_; }

    // result[k] = best leaf count among induced subtrees with exactly k
    // vertices and v0 internal, for k in [0, a_cap]; nullopt where none exists
    std::vector<std::optional<int>> max_leaves(int v0, int a_cap);

    chordal_answer solve(int v0, int a, int b, bool want_witness = false);

    // --- introspection (used by tests) ---------------------------------------

    // key layout: (s1+1) | (s2+1)<<13 | d1<<26 | d2<<28 | i<<30, slots sorted
    // so s1 < s2, absent slot = 0. pack_key normalizes argument order; absent
    // vertices are passed as -1.
    static uint64_t pack_key(int s1, int s2, int d1, int d2, int i);
    struct key_parts {
        int s1 = -1, s2 = -1;   // vertex ids, -1 = absent
        int d1 = 0, d2 = 0;
        int i = 0;
    };
    static key_parts unpack_key(uint64_t key);

    struct entry {
        uint64_t key = 0;
        int leaves = 0;
    };
    // table of one node from the most recent retained run, sorted by key.
    // Runs drop inner tables as soon as their parent is computed unless
    // retention is on (witness extraction turns it on for its own run).
    std::vector<entry> table_of(int node) const;
    void set_retain_tables(bool keep) { want_retain_ = keep; }

    // all graph vertices appearing in bags at or below `node`
    std::vector<int> cone_vertices(int node) const;

  private:
    struct cell {
        int32_t leaves = -1;
        uint8_t rule = 0;
        uint64_t k1 = 0, k2 = 0;   // child key(s) behind the best value
    };
    using table = std::unordered_map<uint64_t, cell>;

    void ensure_run(int v0, int a_cap, bool need_tables);
    void run(int v0, int a_cap, bool retain);
    std::vector<int> walk_witness(uint64_t root_key) const;

    graph g_;
    tree_decomposition ct_;
    nice_decomposition nice_;

    // most recent run, reused when v0 matches and the cached cap suffices
    int run_v0_ = -1;
    int run_cap_ = -1;
    bool run_retained_ = false;
    bool want_retain_ = false;
    std::vector<table> tables_;
};

inline chordal_answer solve_chordal(const graph& g, int v0, int a, int b,
                                    bool want_witness = false) {
    chordal_solver s(g);
    return s.solve(v0, a, b, want_witness);
}

}   // namespace rlis
