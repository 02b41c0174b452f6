#include "rlis/tw_dp.hpp"

#include "rlis/partition.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <utility>
#include <vector>

// Table-per-node dynamic program over a pinned nice decomposition. A state at
// a node is (s, i, j, l, f) where s labels every bag vertex as one of
//
//   0   not picked, and no picked vertex below the node is adjacent to it
//   0b  not picked, but some already-forgotten picked vertex is adjacent
//   1   picked as a branch vertex (the part of the subtree meant to be
//       internal; v0 always carries this label)
//   2_0 picked as a leaf that still waits for its single branch neighbor
//   2_1 picked as a leaf whose single branch neighbor has been seen
//
// and i counts picked branch vertices, j the edges among them, l the picked
// leaves, f the number of picked neighbors of v0 capped at two. The payload
// of a state is a set of partitions of the 1-labeled bag vertices whose
// blocks mirror the connectivity classes of the picked subgraph; keeping a
// set of candidate partitions (compressed by reduce) instead of full
// realizations is what keeps the table single-exponential in the bag size.
//
// The blocked flavor 0b exists for joins: a vertex may be picked as a leaf on
// one side of a join only while the other side has not tucked away a picked
// neighbor for it, otherwise the combined pick would contain an edge (or a
// leaf-leaf contact) that no side accounted for. Similarly f exists because
// the 1-label alone does not force v0 to end up with degree >= 2: the root
// only accepts states with f = 2.

namespace rlis {

namespace {

enum : uint64_t {
    lab_0 = 0,    // unused, clean
    lab_1 = 1,    // picked branch vertex
    lab_20 = 2,   // picked leaf, neighbor missing
    lab_21 = 3,   // picked leaf, neighbor present
    lab_0b = 4,   // unused, adjacent to a forgotten picked vertex
};

constexpr int max_bag = 21;   // 3 bits per slot in a 64-bit label code

struct tw_key {
    uint64_t s = 0;      // 3 bits per bag slot, slots in sorted bag order
    uint64_t ijlf = 0;   // i<<48 | j<<32 | l<<16 | f
    bool operator<(const tw_key& o) const {
        return s != o.s ? s < o.s : ijlf < o.ijlf;
    }
};

uint64_t pack_ijlf(int i, int j, int l, int f) {
    return uint64_t(i) << 48 | uint64_t(j) << 32 | uint64_t(l) << 16 | uint64_t(f);
}
int get_i(uint64_t x) { return int(x >> 48); }
int get_j(uint64_t x) { return int((x >> 32) & 0xffff); }
int get_l(uint64_t x) { return int((x >> 16) & 0xffff); }
int get_f(uint64_t x) { return int(x & 0xffff); }

uint64_t get_lab(uint64_t s, int k) { return (s >> (3 * k)) & 7; }
uint64_t put_lab(uint64_t s, int k, uint64_t lab) {
    return (s & ~(uint64_t(7) << (3 * k))) | lab << (3 * k);
}
bool is_leaf_lab(uint64_t lab) { return lab == lab_20 || lab == lab_21; }

using table = std::map<tw_key, wp_set>;

struct engine {
    const graph& g;
    const nice_decomposition& nd;
    const int v0;
    const int a_cap;
    const bool use_reduce;
    std::vector<table> tabs;

    engine(const graph& gg, const nice_decomposition& d, int v, int cap, bool red)
        : g(gg), nd(d), v0(v), a_cap(cap), use_reduce(red) {}

    static void add_state(table& t, const tw_key& key, wp_set&& a) {
        if (a.entries.empty()) return;
        auto it = t.find(key);
        if (it == t.end())
            t.emplace(key, std::move(a));
        else
            it->second = union_keepmin(it->second, a);
    }

    void do_leaf(table& out) {
        wp_set a;
        a.u = 0;
        a.entries.push_back({partition::singletons(0), 0});
        add_state(out, tw_key{0, pack_ijlf(0, 0, 0, 0)}, std::move(a));
    }

    void do_introduce(const nice_node& node, const table& child, table& out) {
        const std::vector<int>& bag = node.bag;
        const int m = int(bag.size());
        const int pv =
            int(std::lower_bound(bag.begin(), bag.end(), node.v) - bag.begin());
        const uint64_t low = (uint64_t(1) << (3 * pv)) - 1;

        if (node.v == v0) {
            // the pinned vertex enters directly above an empty leaf bag and is
            // always picked as a branch vertex
            for (const auto& [ck, ca] : child) {
                if (ck.s != 0 || ck.ijlf != 0) continue;
                add_state(out, tw_key{put_lab(0, pv, lab_1), pack_ijlf(1, 0, 0, 0)},
                          insert_elems({0}, ca));
            }
            return;
        }

        std::vector<int> nbr;   // v's neighbors, as parent bag slots
        for (int k = 0; k < m; ++k)
            if (k != pv && g.has_edge(bag[k], node.v)) nbr.push_back(k);
        const int f_bump = g.has_edge(node.v, v0) ? 1 : 0;

        for (const auto& [ck, ca] : child) {
            // child slots reindexed into the parent slot space (gap at pv)
            const uint64_t base = (ck.s & low) | (ck.s & ~low) << 3;
            const int ci = get_i(ck.ijlf), cj = get_j(ck.ijlf);
            const int cl = get_l(ck.ijlf), cf = get_f(ck.ijlf);

            // v stays unused. A vertex new to the bags has no forgotten
            // neighbor (any such edge would have no bag containing both
            // endpoints), so its unused flavor starts clean.
            {
                wp_set a = ca;
                add_state(out, tw_key{put_lab(base, pv, lab_0), ck.ijlf},
                          std::move(a));
            }

            // v picked as a leaf: no bag neighbor may be a leaf (adjacent
            // picks cannot both be leaves) and at most one bag neighbor may be
            // a branch vertex (a leaf has exactly one neighbor in the end)
            if (ci + cl + 1 <= a_cap) {
                int z = 0;
                bool ok = true;
                for (int k : nbr) {
                    const uint64_t lab = get_lab(base, k);
                    if (is_leaf_lab(lab)) {
                        ok = false;
                        break;
                    }
                    if (lab == lab_1) ++z;
                }
                if (ok && z <= 1) {
                    wp_set a = ca;
                    add_state(out,
                              tw_key{put_lab(base, pv, z ? lab_21 : lab_20),
                                     pack_ijlf(ci, cj, cl + 1, std::min(2, cf + f_bump))},
                              std::move(a));
                }
            }

            // v picked as a branch vertex
            if (ci + 1 + cl <= a_cap) {
                uint64_t s2 = put_lab(base, pv, lab_1);
                bool ok = true;
                std::vector<int> nh;   // v's branch neighbors, parent slots
                for (int k : nbr) {
                    const uint64_t lab = get_lab(base, k);
                    if (lab == lab_21) {
                        // that leaf already has its one neighbor
                        ok = false;
                        break;
                    }
                    if (lab == lab_20) s2 = put_lab(s2, k, lab_21);   // v is its neighbor
                    if (lab == lab_1) nh.push_back(k);
                }
                const int i2 = ci + 1, j2 = cj + int(nh.size());
                // branch vertices must stay a forest: j <= i-1 throughout
                if (ok && j2 < i2) {
                    int rank[max_bag];   // slot -> position among 1-labels of s2
                    for (int k = 0, c = 0; k < m; ++k) {
                        rank[k] = c;
                        if (get_lab(s2, k) == lab_1) ++c;
                    }
                    std::vector<int> merged{rank[pv]};
                    for (int k : nh) merged.push_back(rank[k]);
                    add_state(out,
                              tw_key{s2, pack_ijlf(i2, j2, cl, std::min(2, cf + f_bump))},
                              glue(merged, insert_elems({rank[pv]}, ca)));
                }
            }
        }
    }

    void do_forget(const nice_node& node, const table& child, table& out) {
        const std::vector<int>& bag = node.bag;   // parent bag, v removed
        const int m = int(bag.size());
        std::vector<int> cbag = bag;
        cbag.insert(std::upper_bound(cbag.begin(), cbag.end(), node.v), node.v);
        const int pv =
            int(std::lower_bound(cbag.begin(), cbag.end(), node.v) - cbag.begin());
        const uint64_t low = (uint64_t(1) << (3 * pv)) - 1;

        std::vector<int> nbr;   // v's neighbors among the remaining bag slots
        for (int k = 0; k < m; ++k)
            if (g.has_edge(bag[k], node.v)) nbr.push_back(k);
        auto mark_blocked = [&](uint64_t s) {
            // v leaves the bag as a picked vertex: unused bag neighbors now
            // have a forgotten picked neighbor and may no longer be handed to
            // the other side of a join as a leaf
            for (int k : nbr)
                if (get_lab(s, k) == lab_0) s = put_lab(s, k, lab_0b);
            return s;
        };

        for (const auto& [ck, ca] : child) {
            const uint64_t vlab = get_lab(ck.s, pv);
            const uint64_t base = (ck.s & low) | ((ck.s >> 3) & ~low);
            switch (vlab) {
            case lab_0:
            case lab_0b: {
                wp_set a = ca;
                add_state(out, tw_key{base, ck.ijlf}, std::move(a));
                break;
            }
            case lab_21: {
                wp_set a = ca;
                add_state(out, tw_key{mark_blocked(base), ck.ijlf}, std::move(a));
                break;
            }
            case lab_20:
                // a leaf that never found its neighbor cannot get one later
                break;
            case lab_1: {
                int usz = 0, upos = 0;
                for (int k = 0; k < int(cbag.size()); ++k)
                    if (get_lab(ck.s, k) == lab_1) {
                        if (k < pv) ++upos;
                        ++usz;
                    }
                wp_set a;
                if (usz == 1) {
                    // v is the last branch vertex in any bag, which under
                    // pinning happens exactly when v0 is forgotten at the
                    // root: the pick must be one connected piece, and every
                    // partition of a one-element universe is a single block
                    assert(node.v == v0);
                    a.u = 0;
                    if (!ca.entries.empty())
                        a.entries.push_back({partition::singletons(0), 0});
                } else {
                    // realizations whose block for v holds no other bag
                    // branch vertex can never reconnect to the rest: dropped
                    a = project(upos, ca);
                }
                add_state(out, tw_key{mark_blocked(base), ck.ijlf}, std::move(a));
                break;
            }
            }
        }
    }

    void do_join(const nice_node& node, const table& left, const table& right,
                 table& out) {
        const std::vector<int>& bag = node.bag;
        const int m = int(bag.size());
        uint32_t adj[max_bag] = {};
        for (int x = 0; x < m; ++x)
            for (int y = x + 1; y < m; ++y)
                if (g.has_edge(bag[x], bag[y])) {
                    adj[x] |= 1u << y;
                    adj[y] |= 1u << x;
                }
        int p0 = -1;
        {
            auto it = std::lower_bound(bag.begin(), bag.end(), v0);
            if (it != bag.end() && *it == v0) p0 = int(it - bag.begin());
        }
        auto mask1 = [&](uint64_t s) {
            uint32_t msk = 0;
            for (int k = 0; k < m; ++k)
                if (get_lab(s, k) == lab_1) msk |= 1u << k;
            return msk;
        };

        // only states agreeing on the branch vertices can combine
        std::map<uint32_t, std::vector<const table::value_type*>> rb;
        for (const auto& e : right) rb[mask1(e.first.s)].push_back(&e);

        for (const auto& le : left) {
            const uint32_t msk = mask1(le.first.s);
            auto bucket = rb.find(msk);
            if (bucket == rb.end()) continue;
            // the shared branch structure is counted by both sides
            const int vh = __builtin_popcount(msk);
            int eh = 0;
            for (int k = 0; k < m; ++k)
                if (msk >> k & 1)
                    eh += __builtin_popcount(adj[k] & msk & ~((2u << k) - 1));
            // v0's branch neighbors in the bag are also seen by both sides
            const int c = (p0 >= 0) ? __builtin_popcount(adj[p0] & msk) : 0;

            for (const table::value_type* rp : bucket->second) {
                const table::value_type& re = *rp;
                uint64_t s2 = 0;
                uint32_t lleaf = 0, rleaf = 0;
                bool ok = true;
                for (int k = 0; k < m && ok; ++k) {
                    const uint64_t la = get_lab(le.first.s, k);
                    const uint64_t ra = get_lab(re.first.s, k);
                    if (la == lab_1) {
                        s2 = put_lab(s2, k, lab_1);
                    } else if (is_leaf_lab(la)) {
                        // a leaf belongs to one side; the other side must be
                        // clean there, or the pick gains an unaccounted edge
                        if (ra != lab_0) ok = false;
                        s2 = put_lab(s2, k, la);
                        lleaf |= 1u << k;
                    } else if (is_leaf_lab(ra)) {
                        if (la != lab_0) ok = false;
                        s2 = put_lab(s2, k, ra);
                        rleaf |= 1u << k;
                    } else {
                        // unused on both sides; blockedness accumulates
                        s2 = put_lab(s2, k,
                                     (la == lab_0b || ra == lab_0b) ? lab_0b : lab_0);
                    }
                }
                if (!ok) continue;
                // leaves assembled from opposite sides must not be adjacent
                bool clash = false;
                for (int k = 0; k < m && !clash; ++k)
                    if (lleaf >> k & 1 && (adj[k] & rleaf)) clash = true;
                if (clash) continue;

                const int i2 = get_i(le.first.ijlf) + get_i(re.first.ijlf) - vh;
                const int j2 = get_j(le.first.ijlf) + get_j(re.first.ijlf) - eh;
                const int l2 = get_l(le.first.ijlf) + get_l(re.first.ijlf);
                if (i2 + l2 > a_cap || j2 >= i2) continue;
                const int f2 =
                    c >= 2 ? 2
                           : std::min(2, get_f(le.first.ijlf) + get_f(re.first.ijlf) - c);
                add_state(out, tw_key{s2, pack_ijlf(i2, j2, l2, f2)},
                          join_sets(le.second, re.second));
            }
        }
    }

    void run() {
        const int nn = int(nd.nodes.size());
        tabs.assign(size_t(nn), table{});
        for (int t = 0; t < nn; ++t) {
            const nice_node& node = nd.nodes[size_t(t)];
            table out;
            switch (node.kind) {
            case nice_kind::leaf:
                do_leaf(out);
                break;
            case nice_kind::introduce:
                do_introduce(node, tabs[size_t(node.child)], out);
                break;
            case nice_kind::forget:
                do_forget(node, tabs[size_t(node.child)], out);
                break;
            case nice_kind::join:
                do_join(node, tabs[size_t(node.child)], tabs[size_t(node.child2)], out);
                break;
            case nice_kind::introduce_edge:
                // ruled out by the upfront bag-complete validation
                assert(false);
                out = tabs[size_t(node.child)];
                break;
            }
            if (use_reduce)
                for (auto& [key, a] : out) a = reduce(a);
            tabs[size_t(t)] = std::move(out);
            // children feed exactly one parent each; release them eagerly
            if (node.child >= 0) table{}.swap(tabs[size_t(node.child)]);
            if (node.child2 >= 0) table{}.swap(tabs[size_t(node.child2)]);
        }
    }
};

void validate_inputs(const graph& g, const nice_decomposition& nd, int v0) {
    if (g.n() >= (1 << 16))
        throw domain_error("graph too large for this solver (at most 65535 vertices)");
    if (v0 < 0 || v0 >= g.n()) throw domain_error("v0 out of range");
    if (nd.convention != edge_convention::bag_complete)
        throw domain_error("the treewidth solver expects the bag-complete convention");
    if (nd.pinned != v0)
        throw domain_error("the treewidth solver expects a decomposition pinned at v0");
    for (const nice_node& t : nd.nodes)
        if (int(t.bag.size()) > max_bag)
            throw domain_error("bag too wide: at most 21 vertices per bag are supported");
    if (auto why = check_nice(g, nd))
        throw domain_error("invalid nice decomposition: " + *why);
}

} // namespace

bool solve_treewidth(const graph& g, const nice_decomposition& nd, int v0, int a,
                     int b, const tw_options& opt) {
    validate_inputs(g, nd, v0);
    if (b < 3) throw domain_error("b must be at least 3");
    // a tree with at least three leaves has at least four vertices, and a
    // tree with a vertices has at most a-1 leaves
    if (a < 4 || a > g.n() || b > a - 1) return false;
    engine e(g, nd, v0, a, opt.use_reduce);
    e.run();
    for (const auto& [key, set] : e.tabs[size_t(nd.root)]) {
        if (key.s != 0 || set.entries.empty()) continue;
        const int i = get_i(key.ijlf), j = get_j(key.ijlf);
        const int l = get_l(key.ijlf), f = get_f(key.ijlf);
        if (i + l == a && j == i - 1 && l >= b && f == 2) return true;
    }
    return false;
}

std::vector<std::optional<int>> tw_max_leaves(const graph& g,
                                              const nice_decomposition& nd,
                                              int v0, int a_cap,
                                              const tw_options& opt) {
    validate_inputs(g, nd, v0);
    if (a_cap < 0) throw domain_error("size cap must be nonnegative");
    a_cap = std::min(a_cap, g.n());
    std::vector<std::optional<int>> best(size_t(a_cap) + 1);
    engine e(g, nd, v0, a_cap, opt.use_reduce);
    e.run();
    for (const auto& [key, set] : e.tabs[size_t(nd.root)]) {
        if (key.s != 0 || set.entries.empty()) continue;
        const int i = get_i(key.ijlf), j = get_j(key.ijlf);
        const int l = get_l(key.ijlf), f = get_f(key.ijlf);
        if (j != i - 1 || f != 2) continue;
        const int sz = i + l;
        if (sz <= a_cap && (!best[size_t(sz)] || *best[size_t(sz)] < l))
            best[size_t(sz)] = l;
    }
    return best;
}

} // namespace rlis
