#pragma once

#include "rlis/graph.hpp"
#include "rlis/treedec.hpp"

#include <optional>
#include <vector>

namespace rlis {

struct tw_options {
    // compress every per-state partition set after each node; never changes
    // the verdict, only the table sizes
    bool use_reduce = true;
};

// Decision for: does g contain an induced subtree with exactly a vertices, at
// least b leaves, and v0 internal? Works on arbitrary graphs. Requires a
// valid bag-complete nice decomposition pinned at v0 (make_nice with pin=v0);
// anything else raises domain_error. Decision only — no witness is produced.
bool solve_treewidth(const graph& g, const nice_decomposition& nd, int v0, int a,
                     int b, const tw_options& opt = {});

// result[k] = best leaf count among induced subtrees with exactly k vertices
// and v0 internal, for k in [0, a_cap]; nullopt where none exists
std::vector<std::optional<int>> tw_max_leaves(const graph& g,
                                              const nice_decomposition& nd,
                                              int v0, int a_cap,
                                              const tw_options& opt = {});

} // namespace rlis
