#pragma once

#include "rlis/graph.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rlis {

struct tree_decomposition {
    int n = 0;                                // size of the decomposed graph
    std::vector<std::vector<int>> bags;       // each sorted, unique entries
    std::vector<std::pair<int, int>> edges;   // tree edges between bag indices
    int width() const {
        int w = -1;
        for (auto& b : bags) w = std::max(w, int(b.size()) - 1);
        return w;
    }
};

// first violated requirement, with a witness
struct td_violation {
    enum kind_t {
        malformed,            // bag ids / vertex ids out of range
        not_a_tree,           // bag graph disconnected or cyclic
        vertex_uncovered,     // a = the vertex
        edge_uncovered,       // (a,b) = the edge
        not_connected,        // bags holding vertex a: b,c in separate pieces
    } kind = malformed;
    int a = -1, b = -1, c = -1;
    std::string detail;
};
std::optional<td_violation> validate_decomposition(const graph& g, const tree_decomposition& d);

// maximum-cardinality search; either every bag of the result induces a clique,
// or the graph is not chordal and `hole` is a chordless cycle with >= 4 vertices
struct chordal_result {
    bool chordal = false;
    tree_decomposition clique_tree;
    std::vector<int> hole;
};
chordal_result chordal_clique_tree(const graph& g);

// raised when a chordal-only path is handed a graph with a hole
struct not_chordal_error : domain_error {
    std::vector<int> hole;
    explicit not_chordal_error(std::vector<int> h);
};

enum class elim_rule { min_degree, min_fill };

// valid decomposition from any elimination order (fill edges simulated)
tree_decomposition decomposition_from_order(const graph& g, const std::vector<int>& order);
// greedy order by rule, ties to the smallest vertex id
tree_decomposition heuristic_decomposition(const graph& g, elim_rule rule);

// --- nice decompositions ----------------------------------------------------

enum class nice_kind { leaf, introduce, forget, join, introduce_edge };

// children always have smaller indices than their parent, so a forward scan of
// `nodes` is a valid bottom-up order
struct nice_node {
    nice_kind kind = nice_kind::leaf;
    std::vector<int> bag;   // sorted
    int child = -1;
    int child2 = -1;        // join only
    int v = -1;             // introduce/forget vertex; introduce_edge endpoint
    int u = -1;             // introduce_edge second endpoint, u < v
};

// bag_complete: no edge nodes, a node sees every graph edge among vertices below it.
// explicit_edges: each graph edge gets exactly one introduce_edge node.
enum class edge_convention { bag_complete, explicit_edges };

struct nice_decomposition {
    int n = 0;
    edge_convention convention = edge_convention::bag_complete;
    int pinned = -1;        // vertex kept in every nonempty bag, -1 when unpinned
    std::vector<nice_node> nodes;
    int root = -1;
    int width() const {
        int w = -1;
        for (auto& t : nodes) w = std::max(w, int(t.bag.size()) - 1);
        return w;
    }
};

// root and leaf bags are empty. deterministic shape: introduces ascend (pinned
// vertex first), forgets ascend (pinned vertex last), joins fold children left
// to right. pinning inserts `pin` into every bag before nicifying, which is what
// keeps the pinned vertex's forget at the root.
nice_decomposition make_nice(const graph& g, const tree_decomposition& d,
                             edge_convention conv, int pin = -1);

// full structural audit; nullopt when sound, else a description of the first problem
std::optional<std::string> check_nice(const graph& g, const nice_decomposition& nd);

// PACE .td: "s td <#bags> <width+1> <n>", "b <id> <vertices...>", tree edge lines
tree_decomposition read_td(std::istream& in, int expect_n = -1);
tree_decomposition read_td_file(const std::string& path, int expect_n = -1);
void write_td(std::ostream& out, const tree_decomposition& d);

std::string nice_to_json(const nice_decomposition& nd);

} // namespace rlis
