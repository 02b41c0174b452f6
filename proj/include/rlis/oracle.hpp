#pragma once

#include "rlis/graph.hpp"

#include <functional>
#include <map>
#include <vector>

namespace rlis {

// exhaustive search is the ground truth for everything else in this project;
// it refuses graphs past this size
inline constexpr int oracle_max_n = 20;

struct subtree_record {
    vertex_set vertices;
    vertex_set internals;  // degree >= 2 within the subtree
    int leaf_count = 0;
};

// calls f once for every vertex set of size 1..max_size that induces a tree.
// connected-set enumeration rooted at each minimum vertex, with exclusive-neighbor
// extension so no set appears twice; branches whose induced edge count already
// exceeds |S|-1 are cut (supersets of an induced cycle stay cyclic).
void enumerate_induced_subtrees(const graph& g, int max_size,
                                const std::function<void(const subtree_record&)>& f);

// best[v][k] = max leaf count over induced subtrees with k vertices and v internal,
// -1 when there is none. best[v] has max_size+1 slots.
std::vector<std::vector<int>> oracle_internal_table(const graph& g, int max_size);

// does g contain an induced subtree with exactly a vertices, at least b leaves,
// and v0 internal
bool oracle_rlis(const graph& g, int v0, int a, int b);

// size -> max leaf count over induced subtrees of that size; sizes with no
// subtree are absent. restrict_internal >= 0 keeps only subtrees with that
// vertex internal (which drops sizes 1 and 2).
std::map<int, int> leaf_function(const graph& g, int restrict_internal = -1);

} // namespace rlis
