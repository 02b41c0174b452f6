#include "rlis/oracle.hpp"

#include <algorithm>

namespace rlis {

namespace {

struct enum_state {
    const graph& g;
    int max_size;
    const std::function<void(const subtree_record&)>& f;
    int root = 0;
    std::vector<int> members;
    vertex_set in_set;
    long edges = 0;
};

void emit(enum_state& c) {
    subtree_record r;
    r.vertices = c.in_set;
    r.internals = vertex_set(c.g.n());
    for (int v : c.members) {
        int d = c.g.row(v).count_and(c.in_set);
        if (d == 1) ++r.leaf_count;
        else if (d >= 2) r.internals.set(v);
    }
    c.f(r);
}

// ext: candidates still open at this level; offered: every vertex ever put in ext,
// so a candidate popped below never re-enters (each connected set is built along
// exactly one insertion order)
void extend(enum_state& c, std::vector<int> ext, vertex_set offered) {
    if (c.edges == long(c.members.size()) - 1) emit(c);
    if (int(c.members.size()) >= c.max_size) return;
    while (!ext.empty()) {
        int w = ext.back();
        ext.pop_back();
        int dw = c.g.row(w).count_and(c.in_set);
        if (c.edges + dw > long(c.members.size())) continue;  // induced cycle
        std::vector<int> ext2 = ext;
        vertex_set offered2 = offered;
        for (int u : c.g.neighbors(w))
            if (u > c.root && !c.in_set.test(u) && !offered2.test(u)) {
                offered2.set(u);
                ext2.push_back(u);
            }
        c.members.push_back(w);
        c.in_set.set(w);
        c.edges += dw;
        extend(c, std::move(ext2), std::move(offered2));
        c.edges -= dw;
        c.in_set.reset(w);
        c.members.pop_back();
    }
}

} // namespace

void enumerate_induced_subtrees(const graph& g, int max_size,
                                const std::function<void(const subtree_record&)>& f) {
    if (g.n() > oracle_max_n)
        throw domain_error("exhaustive enumeration capped at n <= " +
                           std::to_string(oracle_max_n) + ", got n = " + std::to_string(g.n()));
    if (max_size < 1) return;
    max_size = std::min(max_size, g.n());
    for (int r = 0; r < g.n(); ++r) {
        enum_state c{g, max_size, f, {}, {}, {}};
        c.root = r;
        c.members = {r};
        c.in_set = vertex_set(g.n());
        c.in_set.set(r);
        std::vector<int> ext;
        vertex_set offered(g.n());
        for (int u : g.neighbors(r))
            if (u > r) {
                offered.set(u);
                ext.push_back(u);
            }
        extend(c, std::move(ext), std::move(offered));
    }
}

std::vector<std::vector<int>> oracle_internal_table(const graph& g, int max_size) {
    max_size = std::max(0, std::min(max_size, g.n()));
    std::vector<std::vector<int>> best(g.n(), std::vector<int>(max_size + 1, -1));
    enumerate_induced_subtrees(g, max_size, [&](const subtree_record& r) {
        int k = r.vertices.count();
        r.internals.for_each([&](int v) {
            best[v][k] = std::max(best[v][k], r.leaf_count);
        });
    });
    return best;
}

bool oracle_rlis(const graph& g, int v0, int a, int b) {
    if (v0 < 0 || v0 >= g.n() || a < 1 || a > g.n()) return false;
    auto best = oracle_internal_table(g, a);
    return best[v0][a] >= b;
}

std::map<int, int> leaf_function(const graph& g, int restrict_internal) {
    std::map<int, int> out;
    enumerate_induced_subtrees(g, g.n(), [&](const subtree_record& r) {
        if (restrict_internal >= 0 && !r.internals.test(restrict_internal)) return;
        int k = r.vertices.count();
        auto it = out.find(k);
        if (it == out.end()) out[k] = r.leaf_count;
        else it->second = std::max(it->second, r.leaf_count);
    });
    return out;
}

} // namespace rlis
