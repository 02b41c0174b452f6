#include "rlis/treedec.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace rlis {

namespace {

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}
std::vector<int> sorted_diff(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}
bool sorted_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// contract bags that are subsets of a tree neighbor; keeps validity, and on the
// clique-tree path leaves exactly the maximal cliques
tree_decomposition prune_subset_bags(tree_decomposition d) {
    int k = int(d.bags.size());
    std::vector<std::vector<int>> nbr(k);
    for (auto [x, y] : d.edges) {
        nbr[x].push_back(y);
        nbr[y].push_back(x);
    }
    std::vector<char> alive(k, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < k && !changed; ++x) {
            if (!alive[x]) continue;
            for (int y : nbr[x]) {
                if (!alive[y] || !sorted_subset(d.bags[x], d.bags[y])) continue;
                for (int z : nbr[x])
                    if (z != y) {
                        std::replace(nbr[z].begin(), nbr[z].end(), x, y);
                        nbr[y].push_back(z);
                    }
                nbr[x].clear();
                nbr[y].erase(std::remove(nbr[y].begin(), nbr[y].end(), x), nbr[y].end());
                alive[x] = 0;
                changed = true;
                break;
            }
        }
    }
    tree_decomposition out;
    out.n = d.n;
    std::vector<int> id(k, -1);
    for (int x = 0; x < k; ++x)
        if (alive[x]) {
            id[x] = int(out.bags.size());
            out.bags.push_back(std::move(d.bags[x]));
        }
    for (int x = 0; x < k; ++x)
        if (alive[x])
            for (int y : nbr[x])
                if (x < y) out.edges.emplace_back(id[x], id[y]);
    return out;
}

} // namespace

std::optional<td_violation> validate_decomposition(const graph& g, const tree_decomposition& d) {
    td_violation bad;
    int k = int(d.bags.size());
    if (d.n != g.n()) {
        bad.kind = td_violation::malformed;
        bad.detail = "decomposition is for a graph of different size";
        return bad;
    }
    for (int x = 0; x < k; ++x) {
        auto& b = d.bags[x];
        for (size_t i = 0; i < b.size(); ++i) {
            if (b[i] < 0 || b[i] >= g.n() || (i > 0 && b[i] <= b[i - 1])) {
                bad.kind = td_violation::malformed;
                bad.a = x;
                bad.detail = "bag " + std::to_string(x) + " is not a sorted set of vertices";
                return bad;
            }
        }
    }
    for (auto [x, y] : d.edges)
        if (x < 0 || x >= k || y < 0 || y >= k || x == y) {
            bad.kind = td_violation::malformed;
            bad.detail = "tree edge endpoint out of range";
            return bad;
        }
    if (k == 0) {
        if (g.n() == 0) return std::nullopt;
        bad.kind = td_violation::vertex_uncovered;
        bad.a = 0;
        bad.detail = "no bags";
        return bad;
    }

    std::vector<std::vector<int>> nbr(k);
    for (auto [x, y] : d.edges) {
        nbr[x].push_back(y);
        nbr[y].push_back(x);
    }
    {
        std::vector<char> seen(k, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : nbr[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    stack.push_back(y);
                }
        }
        if (reached != k || int(d.edges.size()) != k - 1) {
            bad.kind = td_violation::not_a_tree;
            bad.detail = "bag graph has " + std::to_string(d.edges.size()) + " edges over " +
                         std::to_string(k) + " bags, reaches " + std::to_string(reached);
            return bad;
        }
    }

    std::vector<vertex_set> bagset;
    bagset.reserve(k);
    std::vector<std::vector<int>> holding(g.n());
    for (int x = 0; x < k; ++x) {
        bagset.push_back(vertex_set::of(g.n(), d.bags[x]));
        for (int v : d.bags[x]) holding[v].push_back(x);
    }
    for (int v = 0; v < g.n(); ++v)
        if (holding[v].empty()) {
            bad.kind = td_violation::vertex_uncovered;
            bad.a = v;
            bad.detail = "vertex " + std::to_string(v) + " is in no bag";
            return bad;
        }
    for (auto [u, v] : g.edges()) {
        bool ok = false;
        for (int x : holding[u])
            if (bagset[x].test(v)) {
                ok = true;
                break;
            }
        if (!ok) {
            bad.kind = td_violation::edge_uncovered;
            bad.a = u;
            bad.b = v;
            bad.detail = "edge {" + std::to_string(u) + "," + std::to_string(v) + "} is in no bag";
            return bad;
        }
    }
    // bags holding v must induce a connected piece of the tree
    for (int v = 0; v < g.n(); ++v) {
        auto& h = holding[v];
        std::vector<char> inh(k, 0), seen(k, 0);
        for (int x : h) inh[x] = 1;
        std::vector<int> stack{h[0]};
        seen[h[0]] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : nbr[x])
                if (inh[y] && !seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    stack.push_back(y);
                }
        }
        if (reached == int(h.size())) continue;
        int other = -1;
        for (int x : h)
            if (!seen[x]) {
                other = x;
                break;
            }
        // walk the tree path h[0] -> other, find a bag on it missing v
        std::vector<int> par(k, -1);
        std::deque<int> q{h[0]};
        std::vector<char> vis(k, 0);
        vis[h[0]] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y : nbr[x])
                if (!vis[y]) {
                    vis[y] = 1;
                    par[y] = x;
                    q.push_back(y);
                }
        }
        int z = -1;
        for (int x = other; x != -1; x = par[x])
            if (!inh[x]) {
                z = x;
                break;
            }
        bad.kind = td_violation::not_connected;
        bad.a = v;
        bad.b = other;
        bad.c = z;
        bad.detail = "vertex " + std::to_string(v) + " appears in bags " + std::to_string(h[0]) +
                     " and " + std::to_string(other) + " but not in bag " + std::to_string(z) +
                     " between them";
        return bad;
    }
    return std::nullopt;
}

not_chordal_error::not_chordal_error(std::vector<int> h)
    : domain_error("graph is not chordal (hole on " + std::to_string(h.size()) + " vertices)"),
      hole(std::move(h)) {}

namespace {

// shortest p..w path whose interior avoids N[u]; closing it through u gives a hole
std::vector<int> hole_through(const graph& g, int u, int p, int w) {
    std::vector<int> par(g.n(), -2);
    std::deque<int> q{p};
    par[p] = -1;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        if (x == w) break;
        for (int y : g.neighbors(x)) {
            if (par[y] != -2) continue;
            if (y != w && (y == u || g.has_edge(u, y))) continue;
            par[y] = x;
            q.push_back(y);
        }
    }
    if (par[w] == -2) return {};
    std::vector<int> path;
    for (int x = w; x != -1; x = par[x]) path.push_back(x);
    path.push_back(u);  // cycle u, w, ..., p
    return path;
}

} // namespace

chordal_result chordal_clique_tree(const graph& g) {
    chordal_result res;
    int n = g.n();
    if (n == 0) {
        res.chordal = true;
        res.clique_tree.bags.push_back({});
        return res;
    }

    std::vector<int> wt(n, 0), order;
    order.reserve(n);
    std::vector<char> vis(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!vis[v] && (best == -1 || wt[v] > wt[best])) best = v;
        vis[best] = 1;
        order.push_back(best);
        for (int u : g.neighbors(best))
            if (!vis[u]) ++wt[u];
    }
    // elimination order = reversed visit order
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[n - 1 - i]] = i;

    std::vector<std::vector<int>> madj(n);  // neighbors later in elimination order
    for (int v = 0; v < n; ++v) {
        for (int u : g.neighbors(v))
            if (pos[u] > pos[v]) madj[v].push_back(u);
        std::sort(madj[v].begin(), madj[v].end());
    }
    for (int i = 0; i < n; ++i) {
        int v = order[n - 1 - i];
        if (madj[v].empty()) continue;
        int p = madj[v][0];
        for (int u : madj[v])
            if (pos[u] < pos[p]) p = u;
        for (int w : madj[v]) {
            if (w == p || g.has_edge(p, w)) continue;
            res.hole = hole_through(g, v, p, w);
            if (res.hole.empty()) {
                // the local certificate had no closing path; scan for any hole
                for (int x = 0; x < n && res.hole.empty(); ++x)
                    for (int y : g.neighbors(x)) {
                        if (!res.hole.empty()) break;
                        for (int z : g.neighbors(x)) {
                            if (y >= z || g.has_edge(y, z)) continue;
                            res.hole = hole_through(g, x, y, z);
                            if (!res.hole.empty()) break;
                        }
                    }
            }
            return res;
        }
    }

    res.chordal = true;
    auto& ct = res.clique_tree;
    ct.n = n;
    ct.bags.resize(n);
    std::vector<int> comp_roots;
    for (int v = 0; v < n; ++v) {
        ct.bags[v] = sorted_union({v}, madj[v]);
        if (madj[v].empty()) {
            comp_roots.push_back(v);
            continue;
        }
        int p = madj[v][0];
        for (int u : madj[v])
            if (pos[u] < pos[p]) p = u;
        ct.edges.emplace_back(v, p);
    }
    for (size_t i = 1; i < comp_roots.size(); ++i)
        ct.edges.emplace_back(comp_roots[i - 1], comp_roots[i]);
    ct = prune_subset_bags(std::move(ct));
    return res;
}

tree_decomposition decomposition_from_order(const graph& g, const std::vector<int>& order) {
    int n = g.n();
    {
        std::vector<char> seen(n, 0);
        if (int(order.size()) != n) throw domain_error("elimination order has wrong length");
        for (int v : order) {
            if (v < 0 || v >= n || seen[v]) throw domain_error("elimination order is not a permutation");
            seen[v] = 1;
        }
    }
    tree_decomposition d;
    d.n = n;
    if (n == 0) {
        d.bags.push_back({});
        return d;
    }
    std::vector<vertex_set> row;
    row.reserve(n);
    for (int v = 0; v < n; ++v) row.push_back(g.row(v));
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<char> gone(n, 0);
    d.bags.resize(n);
    std::vector<int> comp_roots;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::vector<int> nbrs;
        row[v].for_each([&](int u) {
            if (!gone[u] && u != v) nbrs.push_back(u);
        });
        d.bags[v] = sorted_union({v}, nbrs);
        for (size_t a = 0; a < nbrs.size(); ++a)
            for (size_t b = a + 1; b < nbrs.size(); ++b) {
                row[nbrs[a]].set(nbrs[b]);
                row[nbrs[b]].set(nbrs[a]);
            }
        if (nbrs.empty()) {
            comp_roots.push_back(v);
        } else {
            int p = nbrs[0];
            for (int u : nbrs)
                if (pos[u] < pos[p]) p = u;
            d.edges.emplace_back(v, p);
        }
        gone[v] = 1;
    }
    for (size_t i = 1; i < comp_roots.size(); ++i)
        d.edges.emplace_back(comp_roots[i - 1], comp_roots[i]);
    return prune_subset_bags(std::move(d));
}

tree_decomposition heuristic_decomposition(const graph& g, elim_rule rule) {
    int n = g.n();
    std::vector<vertex_set> row;
    row.reserve(n);
    for (int v = 0; v < n; ++v) row.push_back(g.row(v));
    vertex_set alive(n);
    for (int v = 0; v < n; ++v) alive.set(v);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long best_score = -1;
        for (int v = 0; v < n; ++v) {
            if (!alive.test(v)) continue;
            long score;
            if (rule == elim_rule::min_degree) {
                score = row[v].count_and(alive);
            } else {
                std::vector<int> nb;
                row[v].for_each([&](int u) {
                    if (alive.test(u) && u != v) nb.push_back(u);
                });
                score = 0;
                for (size_t a = 0; a < nb.size(); ++a)
                    for (size_t b = a + 1; b < nb.size(); ++b)
                        if (!row[nb[a]].test(nb[b])) ++score;
            }
            if (best == -1 || score < best_score) {
                best = v;
                best_score = score;
            }
        }
        std::vector<int> nb;
        row[best].for_each([&](int u) {
            if (alive.test(u) && u != best) nb.push_back(u);
        });
        for (size_t a = 0; a < nb.size(); ++a)
            for (size_t b = a + 1; b < nb.size(); ++b) {
                row[nb[a]].set(nb[b]);
                row[nb[b]].set(nb[a]);
            }
        alive.reset(best);
        order.push_back(best);
    }
    return decomposition_from_order(g, order);
}

// --- nicification ------------------------------------------------------------

namespace {

struct nice_builder {
    std::vector<nice_node> nodes;
    int pin = -1;

    int add(nice_kind k, std::vector<int> bag, int child = -1, int child2 = -1, int v = -1,
            int u = -1) {
        nice_node t;
        t.kind = k;
        t.bag = std::move(bag);
        t.child = child;
        t.child2 = child2;
        t.v = v;
        t.u = u;
        nodes.push_back(std::move(t));
        return int(nodes.size()) - 1;
    }
    // pinned vertex enters first and leaves last, everything else ascends
    std::vector<int> intro_order(std::vector<int> vs) const {
        auto it = std::find(vs.begin(), vs.end(), pin);
        if (it != vs.end()) {
            vs.erase(it);
            vs.insert(vs.begin(), pin);
        }
        return vs;
    }
    std::vector<int> forget_order(std::vector<int> vs) const {
        auto it = std::find(vs.begin(), vs.end(), pin);
        if (it != vs.end()) {
            vs.erase(it);
            vs.push_back(pin);
        }
        return vs;
    }
    int grow(int idx, const std::vector<int>& target) {
        auto need = intro_order(sorted_diff(target, nodes[idx].bag));
        for (int v : need) {
            auto bag = sorted_union(nodes[idx].bag, {v});
            idx = add(nice_kind::introduce, std::move(bag), idx, -1, v);
        }
        return idx;
    }
    int shrink(int idx, const std::vector<int>& target) {
        auto drop = forget_order(sorted_diff(nodes[idx].bag, target));
        for (int v : drop) {
            auto bag = sorted_diff(nodes[idx].bag, {v});
            idx = add(nice_kind::forget, std::move(bag), idx, -1, v);
        }
        return idx;
    }
    int transition(int idx, const std::vector<int>& target) { return grow(shrink(idx, target), target); }
};

} // namespace

nice_decomposition make_nice(const graph& g, const tree_decomposition& d0, edge_convention conv,
                             int pin) {
    tree_decomposition d = d0;
    if (d.bags.empty()) d.bags.push_back({});
    if (pin >= 0) {
        if (pin >= g.n()) throw domain_error("pinned vertex out of range");
        for (auto& b : d.bags)
            if (!std::binary_search(b.begin(), b.end(), pin)) b = sorted_union(b, {pin});
    }
    std::vector<char> covered(size_t(g.n()), 0);
    for (const auto& bag : d.bags)
        for (int v : bag)
            if (v >= 0 && v < g.n()) covered[size_t(v)] = 1;
    for (int v = 0; v < g.n(); ++v)
        if (!covered[size_t(v)]) throw domain_error("decomposition misses a vertex");

    int k = int(d.bags.size());
    std::vector<std::vector<int>> nbr(k);
    for (auto [x, y] : d.edges) {
        if (x < 0 || x >= k || y < 0 || y >= k) throw domain_error("bad decomposition edge");
        nbr[x].push_back(y);
        nbr[y].push_back(x);
    }

    // root the bag tree at 0
    std::vector<int> par(k, -2), dfs;
    dfs.push_back(0);
    par[0] = -1;
    std::vector<int> topo;
    while (!dfs.empty()) {
        int x = dfs.back();
        dfs.pop_back();
        topo.push_back(x);
        for (int y : nbr[x])
            if (par[y] == -2) {
                par[y] = x;
                dfs.push_back(y);
            }
    }
    if (int(topo.size()) != k || int(d.edges.size()) != k - 1)
        throw domain_error("decomposition is not a tree");
    std::vector<std::vector<int>> kids(k);
    for (int x : topo)
        if (par[x] >= 0) kids[par[x]].push_back(x);

    nice_builder b;
    b.pin = pin;
    std::vector<int> anchor(k, -1);
    for (int ti = k - 1; ti >= 0; --ti) {  // reverse DFS preorder = children first
        int t = topo[ti];
        if (kids[t].empty()) {
            int leaf = b.add(nice_kind::leaf, {});
            anchor[t] = b.grow(leaf, d.bags[t]);
            continue;
        }
        std::vector<int> adapted;
        for (int c : kids[t]) adapted.push_back(b.transition(anchor[c], d.bags[t]));
        int cur = adapted[0];
        for (size_t i = 1; i < adapted.size(); ++i)
            cur = b.add(nice_kind::join, d.bags[t], cur, adapted[i]);
        anchor[t] = cur;
    }
    int top = b.shrink(anchor[0], {});

    if (conv == edge_convention::explicit_edges) {
        // locate each vertex's forget node; an edge is introduced just below the
        // deeper of its endpoints' forgets, where both endpoints are still in the bag
        std::vector<int> depth(b.nodes.size(), 0), forget_at(g.n(), -1);
        {
            std::vector<int> stack{top};
            std::vector<char> seen(b.nodes.size(), 0);
            seen[top] = 1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                auto& nd = b.nodes[x];
                if (nd.kind == nice_kind::forget) forget_at[nd.v] = x;
                for (int c : {nd.child, nd.child2})
                    if (c >= 0 && !seen[c]) {
                        seen[c] = 1;
                        depth[c] = depth[x] + 1;
                        stack.push_back(c);
                    }
            }
        }
        for (auto [u, v] : g.edges()) {
            int fu = forget_at[u], fv = forget_at[v];
            if (fu < 0 || fv < 0) throw domain_error("decomposition misses a vertex");
            int f = depth[fu] >= depth[fv] ? fu : fv;
            int below = b.nodes[f].child;
            int e = b.add(nice_kind::introduce_edge, b.nodes[below].bag, below, -1, v, u);
            depth.push_back(depth[f] + 1);
            b.nodes[f].child = e;
        }
    }

    // renumber so children precede parents
    nice_decomposition out;
    out.n = g.n();
    out.convention = conv;
    out.pinned = pin < 0 ? -1 : pin;
    std::vector<int> remap(b.nodes.size(), -1);
    {
        std::vector<std::pair<int, int>> stack{{top, 0}};
        while (!stack.empty()) {
            auto& [x, phase] = stack.back();
            if (phase == 0) {
                phase = 1;
                for (int c : {b.nodes[x].child2, b.nodes[x].child})
                    if (c >= 0) stack.push_back({c, 0});
            } else {
                int self = x;
                stack.pop_back();
                if (remap[self] != -1) continue;
                remap[self] = int(out.nodes.size());
                nice_node t = b.nodes[self];
                if (t.child >= 0) t.child = remap[t.child];
                if (t.child2 >= 0) t.child2 = remap[t.child2];
                out.nodes.push_back(std::move(t));
            }
        }
    }
    out.root = remap[top];
    return out;
}

std::optional<std::string> check_nice(const graph& g, const nice_decomposition& nd) {
    int m = int(nd.nodes.size());
    if (m == 0 || nd.root < 0 || nd.root >= m) return "missing nodes or root";
    std::vector<int> refs(m, 0);
    std::map<std::pair<int, int>, int> edge_intro;
    for (int x = 0; x < m; ++x) {
        auto& t = nd.nodes[x];
        for (size_t i = 0; i < t.bag.size(); ++i) {
            if (t.bag[i] < 0 || t.bag[i] >= g.n()) return "bag vertex out of range";
            if (i > 0 && t.bag[i] <= t.bag[i - 1]) return "bag not sorted";
        }
        for (int c : {t.child, t.child2}) {
            if (c < 0) continue;
            if (c >= x) return "child does not precede parent";
            ++refs[c];
        }
        switch (t.kind) {
            case nice_kind::leaf:
                if (t.child != -1 || !t.bag.empty()) return "leaf with child or nonempty bag";
                break;
            case nice_kind::introduce: {
                if (t.child < 0 || t.child2 != -1) return "introduce child arity";
                if (!std::binary_search(t.bag.begin(), t.bag.end(), t.v)) return "introduced vertex not in bag";
                if (sorted_diff(t.bag, {t.v}) != nd.nodes[t.child].bag) return "introduce bag mismatch";
                break;
            }
            case nice_kind::forget: {
                if (t.child < 0 || t.child2 != -1) return "forget child arity";
                if (std::binary_search(t.bag.begin(), t.bag.end(), t.v)) return "forgotten vertex still in bag";
                if (sorted_union(t.bag, {t.v}) != nd.nodes[t.child].bag) return "forget bag mismatch";
                break;
            }
            case nice_kind::join:
                if (t.child < 0 || t.child2 < 0) return "join child arity";
                if (nd.nodes[t.child].bag != t.bag || nd.nodes[t.child2].bag != t.bag)
                    return "join bags differ";
                break;
            case nice_kind::introduce_edge: {
                if (nd.convention != edge_convention::explicit_edges) return "edge node under bag_complete";
                if (t.child < 0 || t.child2 != -1) return "edge node child arity";
                if (t.bag != nd.nodes[t.child].bag) return "edge node changes bag";
                if (t.u < 0 || t.v < 0 || t.u >= t.v) return "edge node endpoints unordered";
                if (!std::binary_search(t.bag.begin(), t.bag.end(), t.u) ||
                    !std::binary_search(t.bag.begin(), t.bag.end(), t.v))
                    return "edge node endpoints not in bag";
                if (!g.has_edge(t.u, t.v)) return "edge node for a non-edge";
                ++edge_intro[{t.u, t.v}];
                break;
            }
        }
    }
    for (int x = 0; x < m; ++x) {
        if (x == nd.root && refs[x] != 0) return "root is referenced";
        if (x != nd.root && refs[x] != 1) return "node referenced " + std::to_string(refs[x]) + " times";
    }
    if (!nd.nodes[nd.root].bag.empty()) return "root bag not empty";
    if (nd.convention == edge_convention::explicit_edges) {
        for (auto [u, v] : g.edges())
            if (edge_intro[{u, v}] != 1)
                return "edge {" + std::to_string(u) + "," + std::to_string(v) + "} introduced " +
                       std::to_string(edge_intro[{u, v}]) + " times";
    }
    if (nd.pinned >= 0) {
        for (int x = 0; x < m; ++x) {
            auto& t = nd.nodes[x];
            if (!t.bag.empty() && !std::binary_search(t.bag.begin(), t.bag.end(), nd.pinned))
                return "nonempty bag without the pinned vertex";
            if (t.bag.empty() && x != nd.root && t.kind != nice_kind::leaf)
                return "inner empty bag under pinning";
        }
        auto& r = nd.nodes[nd.root];
        if (m > 1 && (r.kind != nice_kind::forget || r.v != nd.pinned))
            return "pinned root must forget the pinned vertex";
    }
    // the underlying (bags, tree) must be a decomposition of g
    tree_decomposition td;
    td.n = g.n();
    for (int x = 0; x < m; ++x) {
        td.bags.push_back(nd.nodes[x].bag);
        for (int c : {nd.nodes[x].child, nd.nodes[x].child2})
            if (c >= 0) td.edges.emplace_back(c, x);
    }
    if (auto bad = validate_decomposition(g, td)) return "underlying decomposition invalid: " + bad->detail;
    return std::nullopt;
}

tree_decomposition read_td(std::istream& in, int expect_n) {
    std::string line;
    tree_decomposition d;
    int declared_bags = -1;
    long declared_n = -1;
    std::vector<char> seen_bag;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        if (line[0] == 's') {
            std::string s, td;
            int bags, w1;
            if (declared_bags != -1 || !(ss >> s >> td >> bags >> w1 >> declared_n) || td != "td" ||
                bags < 0)
                throw parse_error("bad solution line " + std::to_string(lineno) + ": " + line);
            declared_bags = bags;
            d.n = int(declared_n);
            d.bags.assign(bags, {});
            seen_bag.assign(bags, 0);
            continue;
        }
        if (declared_bags == -1) throw parse_error("content before 's td' header");
        if (line[0] == 'b') {
            char bch;
            int id;
            if (!(ss >> bch >> id) || id < 1 || id > declared_bags)
                throw parse_error("bad bag line " + std::to_string(lineno) + ": " + line);
            if (seen_bag[id - 1]) throw parse_error("duplicate bag " + std::to_string(id));
            seen_bag[id - 1] = 1;
            int v;
            while (ss >> v) {
                if (v < 1 || v > d.n)
                    throw parse_error("bag vertex out of range at line " + std::to_string(lineno));
                d.bags[id - 1].push_back(v - 1);
            }
            std::sort(d.bags[id - 1].begin(), d.bags[id - 1].end());
            d.bags[id - 1].erase(std::unique(d.bags[id - 1].begin(), d.bags[id - 1].end()),
                                 d.bags[id - 1].end());
            continue;
        }
        int x, y;
        if (!(ss >> x >> y) || x < 1 || y < 1 || x > declared_bags || y > declared_bags)
            throw parse_error("bad tree edge at line " + std::to_string(lineno) + ": " + line);
        d.edges.emplace_back(x - 1, y - 1);
    }
    if (declared_bags == -1) throw parse_error("missing 's td' line");
    if (expect_n >= 0 && d.n != expect_n)
        throw parse_error("decomposition is for n = " + std::to_string(d.n) + ", graph has n = " +
                          std::to_string(expect_n));
    return d;
}

tree_decomposition read_td_file(const std::string& path, int expect_n) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return read_td(in, expect_n);
}

void write_td(std::ostream& out, const tree_decomposition& d) {
    out << "s td " << d.bags.size() << " " << d.width() + 1 << " " << d.n << "\n";
    for (size_t i = 0; i < d.bags.size(); ++i) {
        out << "b " << i + 1;
        for (int v : d.bags[i]) out << " " << v + 1;
        out << "\n";
    }
    for (auto [x, y] : d.edges) out << x + 1 << " " << y + 1 << "\n";
}

std::string nice_to_json(const nice_decomposition& nd) {
    nlohmann::ordered_json j;
    j["n"] = nd.n;
    j["convention"] = nd.convention == edge_convention::bag_complete ? "bag_complete" : "explicit_edges";
    j["pinned"] = nd.pinned;
    j["root"] = nd.root;
    j["width"] = nd.width();
    auto arr = nlohmann::ordered_json::array();
    for (size_t x = 0; x < nd.nodes.size(); ++x) {
        auto& t = nd.nodes[x];
        nlohmann::ordered_json e;
        e["id"] = x;
        static const char* names[] = {"leaf", "introduce", "forget", "join", "introduce_edge"};
        e["kind"] = names[int(t.kind)];
        e["bag"] = t.bag;
        if (t.child >= 0) e["child"] = t.child;
        if (t.child2 >= 0) e["child2"] = t.child2;
        if (t.kind == nice_kind::introduce || t.kind == nice_kind::forget) e["vertex"] = t.v;
        if (t.kind == nice_kind::introduce_edge) e["edge"] = {t.u, t.v};
        arr.push_back(std::move(e));
    }
    j["nodes"] = std::move(arr);
    return j.dump(2);
}

} // namespace rlis
