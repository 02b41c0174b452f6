#include "rlis/chordal_dp.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace rlis {

namespace {

enum rule_id : uint8_t {
    r_leaf = 0,
    r_copy,       // introduce: vertex stays outside the subtree
    r_fresh,      // introduce: vertex opens a new one-vertex subtree
    r_attach,     // introduce: vertex links to the bag's subtree vertex
    r_skip,       // forget: vertex was never picked
    r_internal,   // forget: vertex ends with capped degree 2
    r_drop_leaf,  // forget: vertex ends with degree 1, counted as a leaf
    r_join,
    r_pass,       // structural no-op
};

constexpr uint64_t k_slot_mask = (1ull << 13) - 1;
constexpr uint64_t k_sset_mask = (1ull << 26) - 1;   // both vertex slots

} // namespace

uint64_t chordal_solver::pack_key(int s1, int s2, int d1, int d2, int i) {
    if (s1 == -1 && s2 != -1) {
        std::swap(s1, s2);
        std::swap(d1, d2);
    }
    if (s2 != -1 && s1 > s2) {
        std::swap(s1, s2);
        std::swap(d1, d2);
    }
    if (s1 == -1) d1 = 0;
    if (s2 == -1) d2 = 0;
    return uint64_t(s1 + 1) | uint64_t(s2 + 1) << 13 | uint64_t(d1) << 26 |
           uint64_t(d2) << 28 | uint64_t(i) << 30;
}

chordal_solver::key_parts chordal_solver::unpack_key(uint64_t key) {
    key_parts p;
    p.s1 = int(key & k_slot_mask) - 1;
    p.s2 = int((key >> 13) & k_slot_mask) - 1;
    p.d1 = int((key >> 26) & 3);
    p.d2 = int((key >> 28) & 3);
    p.i = int(key >> 30);
    return p;
}

chordal_solver::chordal_solver(graph g) : g_(std::move(g)) {
    if (g_.n() + 1 >= (1 << 13))
        throw domain_error("graph too large for this solver (at most 8190 vertices)");
    chordal_result cr = chordal_clique_tree(g_);
    if (!cr.chordal) throw not_chordal_error(std::move(cr.hole));
    ct_ = std::move(cr.clique_tree);
    nice_ = make_nice(g_, ct_, edge_convention::bag_complete);
}

void chordal_solver::run(int v0, int a_cap, bool retain) {
    const int nn = int(nice_.nodes.size());
    tables_.assign(nn, table{});

    auto upd = [](table& t, uint64_t key, int leaves, uint8_t rule, uint64_t k1,
                  uint64_t k2) {
        cell& c = t[key];
        if (c.leaves < leaves) c = cell{leaves, rule, k1, k2};
    };

    for (int t = 0; t < nn; ++t) {
        const nice_node& nd = nice_.nodes[t];
        table& out = tables_[t];
        switch (nd.kind) {
        case nice_kind::leaf:
            upd(out, pack_key(-1, -1, 0, 0, 0), 0, r_leaf, 0, 0);
            break;

        case nice_kind::introduce: {
            const int v = nd.v;
            for (const auto& [ck, cc] : tables_[nd.child]) {
                const key_parts p = unpack_key(ck);
                // v stays outside the subtree
                upd(out, ck, cc.leaves, r_copy, ck, 0);
                if (p.s1 == -1 && p.i == 0) {
                    // v opens a new subtree; only the all-empty state can seed
                    // one, since a finished piece must not regrow
                    if (a_cap >= 1) upd(out, pack_key(v, -1, 0, 0, 1), 0, r_fresh, ck, 0);
                } else if (p.s1 != -1 && p.s2 == -1 && p.i < a_cap) {
                    // the bag is a clique, so v is adjacent to the one subtree
                    // vertex still in the bag and can extend the subtree there
                    assert(g_.has_edge(p.s1, v));
                    upd(out, pack_key(p.s1, v, std::min(2, p.d1 + 1), 1, p.i + 1),
                        cc.leaves, r_attach, ck, 0);
                }
                // two subtree vertices in the bag leave no room for a third:
                // the bag is a clique and three picks would close a triangle
            }
            break;
        }

        case nice_kind::forget: {
            const int v = nd.v;
            for (const auto& [ck, cc] : tables_[nd.child]) {
                const key_parts p = unpack_key(ck);
                if (p.s1 != v && p.s2 != v) {
                    // states that never picked v carry over — except at v0's
                    // forget, where dropping them pins v0 into every survivor
                    if (v != v0) upd(out, ck, cc.leaves, r_skip, ck, 0);
                    continue;
                }
                const int keep_s = (p.s1 == v) ? p.s2 : p.s1;
                const int keep_d = (p.s1 == v) ? p.d2 : p.d1;
                const int dv = (p.s1 == v) ? p.d1 : p.d2;
                const uint64_t nk = pack_key(keep_s, -1, keep_d, 0, p.i);
                if (dv == 2) {
                    upd(out, nk, cc.leaves, r_internal, ck, 0);
                } else if (dv == 1 && v != v0) {
                    upd(out, nk, cc.leaves + 1, r_drop_leaf, ck, 0);
                }
                // dv == 0 has no branch: an isolated pick cannot be part of
                // any tree that still satisfies the leaf requirement
            }
            break;
        }

        case nice_kind::join: {
            // combine child states sharing the same bag intersection S; the
            // shared vertices and (for |S| = 2) their shared edge are counted
            // on both sides, so sizes and degrees subtract the overlap
            std::unordered_map<uint64_t, std::vector<std::pair<uint64_t, int>>> right;
            for (const auto& [rk, rc] : tables_[nd.child2])
                right[rk & k_sset_mask].push_back({rk, rc.leaves});
            for (const auto& [lk, lc] : tables_[nd.child]) {
                auto bucket = right.find(lk & k_sset_mask);
                if (bucket == right.end()) continue;
                const key_parts lp = unpack_key(lk);
                const int s_size = (lp.s1 != -1) + (lp.s2 != -1);
                for (const auto& [rk, rleaves] : bucket->second) {
                    const key_parts rp = unpack_key(rk);
                    // two finished pieces form a disconnected union
                    if (s_size == 0 && lp.i != 0 && rp.i != 0) continue;
                    const int i = lp.i + rp.i - s_size;
                    if (i > a_cap) continue;
                    int d1 = 0, d2 = 0;
                    if (s_size >= 1) d1 = std::min(2, lp.d1 + rp.d1 - (s_size - 1));
                    if (s_size == 2) d2 = std::min(2, lp.d2 + rp.d2 - 1);
                    upd(out, pack_key(lp.s1, lp.s2, d1, d2, i), lc.leaves + rleaves,
                        r_join, lk, rk);
                }
            }
            break;
        }

        case nice_kind::introduce_edge:
            // not produced under the bag-complete convention; harmless no-op
            for (const auto& [ck, cc] : tables_[nd.child])
                upd(out, ck, cc.leaves, r_pass, ck, 0);
            break;
        }

        if (!retain) {
            if (nd.child >= 0) table{}.swap(tables_[nd.child]);
            if (nd.child2 >= 0) table{}.swap(tables_[nd.child2]);
        }
    }

    run_v0_ = v0;
    run_cap_ = a_cap;
    run_retained_ = retain;
}

void chordal_solver::ensure_run(int v0, int a_cap, bool need_tables) {
    need_tables = need_tables || want_retain_;
    const bool reusable =
        run_v0_ == v0 && run_cap_ >= a_cap && (!need_tables || run_retained_);
    if (!reusable) run(v0, a_cap, need_tables);
}

std::vector<std::optional<int>> chordal_solver::max_leaves(int v0, int a_cap) {
    if (v0 < 0 || v0 >= g_.n()) throw domain_error("v0 out of range");
    if (a_cap < 0) throw domain_error("size cap must be nonnegative");
    a_cap = std::min(a_cap, g_.n());
    ensure_run(v0, a_cap, false);
    std::vector<std::optional<int>> out(size_t(a_cap) + 1);
    const table& rt = tables_[nice_.root];
    for (int k = 0; k <= a_cap; ++k) {
        auto it = rt.find(pack_key(-1, -1, 0, 0, k));
        if (it != rt.end()) out[size_t(k)] = it->second.leaves;
    }
    return out;
}

chordal_answer chordal_solver::solve(int v0, int a, int b, bool want_witness) {
    if (v0 < 0 || v0 >= g_.n()) throw domain_error("v0 out of range");
    if (a < 1 || a > g_.n()) throw domain_error("a out of range");
    if (b < 3) throw domain_error("b must be at least 3");
    // a tree with at least three leaves has at least four vertices, and a
    // tree with a vertices has at most a-1 leaves
    if (a < 4 || b > a - 1) return {};
    ensure_run(v0, a, want_witness);
    const table& rt = tables_[nice_.root];
    auto it = rt.find(pack_key(-1, -1, 0, 0, a));
    if (it == rt.end() || it->second.leaves < b) return {};
    chordal_answer ans;
    ans.yes = true;
    if (want_witness) {
        ans.witness = walk_witness(pack_key(-1, -1, 0, 0, a));
        assert(int(ans.witness.size()) == a);
    }
    return ans;
}

std::vector<int> chordal_solver::walk_witness(uint64_t root_key) const {
    std::vector<int> picked;
    std::vector<std::pair<int, uint64_t>> stack{{nice_.root, root_key}};
    while (!stack.empty()) {
        auto [t, key] = stack.back();
        stack.pop_back();
        const nice_node& nd = nice_.nodes[size_t(t)];
        const cell& c = tables_[size_t(t)].at(key);
        switch (c.rule) {
        case r_leaf:
            break;
        case r_fresh:
        case r_attach:
            picked.push_back(nd.v);
            stack.push_back({nd.child, c.k1});
            break;
        case r_join:
            stack.push_back({nd.child, c.k1});
            stack.push_back({nd.child2, c.k2});
            break;
        default:
            stack.push_back({nd.child, c.k1});
            break;
        }
    }
    std::sort(picked.begin(), picked.end());
    // vertices shared by both sides of a join are recorded twice
    picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
    return picked;
}

std::vector<chordal_solver::entry> chordal_solver::table_of(int node) const {
    std::vector<entry> out;
    if (node < 0 || node >= int(tables_.size())) return out;
    for (const auto& [k, c] : tables_[size_t(node)]) out.push_back({k, c.leaves});
    std::sort(out.begin(), out.end(),
              [](const entry& a, const entry& b) { return a.key < b.key; });
    return out;
}

std::vector<int> chordal_solver::cone_vertices(int node) const {
    if (node < 0 || node >= int(nice_.nodes.size()))
        throw domain_error("node out of range");
    // children always come before parents, so one forward pass suffices
    std::vector<vertex_set> below(size_t(node) + 1);
    for (int t = 0; t <= node; ++t) {
        const nice_node& nd = nice_.nodes[size_t(t)];
        vertex_set vs(g_.n());
        if (nd.child >= 0) vs |= below[size_t(nd.child)];
        if (nd.child2 >= 0) vs |= below[size_t(nd.child2)];
        for (int v : nd.bag) vs.set(v);
        below[size_t(t)] = std::move(vs);
    }
    return below[size_t(node)].to_vector();
}

} // namespace rlis
