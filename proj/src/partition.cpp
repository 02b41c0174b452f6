#include "rlis/partition.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace rlis {

partition partition::singletons(int u) {
    partition p;
    p.lead.resize(u);
    std::iota(p.lead.begin(), p.lead.end(), uint8_t(0));
    return p;
}

partition partition::of_blocks(int u, const std::vector<std::vector<int>>& blocks) {
    partition p;
    p.lead.assign(u, 255);
    for (auto& b : blocks) {
        assert(!b.empty());
        int lo = *std::min_element(b.begin(), b.end());
        for (int e : b) {
            assert(e >= 0 && e < u && p.lead[e] == 255);
            p.lead[e] = uint8_t(lo);
        }
    }
    for (int i = 0; i < u; ++i) assert(p.lead[i] != 255);
    return p;
}

int partition::block_count() const {
    int c = 0;
    for (int i = 0; i < size(); ++i)
        if (lead[i] == i) ++c;
    return c;
}

std::vector<std::vector<int>> partition::blocks() const {
    std::vector<std::vector<int>> out;
    std::vector<int> at(size(), -1);
    for (int i = 0; i < size(); ++i) {
        int l = lead[i];
        if (at[l] == -1) {
            at[l] = int(out.size());
            out.push_back({});
        }
        out[at[l]].push_back(i);
    }
    return out;
}

bool partition::all_singletons() const {
    for (int i = 0; i < size(); ++i)
        if (lead[i] != i) return false;
    return true;
}

partition partition::merged(int a, int b) const {
    partition p = *this;
    uint8_t la = lead[a], lb = lead[b];
    if (la == lb) return p;
    uint8_t lo = std::min(la, lb), hi = std::max(la, lb);
    for (auto& l : p.lead)
        if (l == hi) l = lo;
    return p;
}

partition partition::meet_with(const partition& o) const {
    assert(size() == o.size());
    std::vector<int> root(size());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        root[b] = a;  // keep the smaller element as representative
    };
    for (int i = 0; i < size(); ++i) {
        unite(i, lead[i]);
        unite(i, o.lead[i]);
    }
    partition p;
    p.lead.resize(size());
    for (int i = 0; i < size(); ++i) p.lead[i] = uint8_t(find(i));
    return p;
}

partition partition::insert_singleton(int pos) const {
    assert(pos >= 0 && pos <= size());
    partition p;
    p.lead.resize(size() + 1);
    for (int i = 0; i < size(); ++i) {
        int j = i + (i >= pos);
        p.lead[j] = uint8_t(lead[i] + (lead[i] >= pos));
    }
    p.lead[pos] = uint8_t(pos);
    return p;
}

partition partition::erase_at(int pos) const {
    assert(pos >= 0 && pos < size());
    auto bs = blocks();
    std::vector<std::vector<int>> kept;
    for (auto& b : bs) {
        std::vector<int> nb;
        for (int e : b)
            if (e != pos) nb.push_back(e - (e > pos));
        if (!nb.empty()) kept.push_back(std::move(nb));
    }
    return of_blocks(size() - 1, kept);
}

partition partition::restrict_to(const std::vector<int>& keep) const {
    std::vector<int> newpos(size(), -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        assert(keep[i] >= 0 && keep[i] < size() && (i == 0 || keep[i] > keep[i - 1]));
        newpos[keep[i]] = int(i);
    }
    std::vector<std::vector<int>> kept;
    for (auto& b : blocks()) {
        std::vector<int> nb;
        for (int e : b)
            if (newpos[e] != -1) nb.push_back(newpos[e]);
        if (!nb.empty()) kept.push_back(std::move(nb));
    }
    return of_blocks(int(keep.size()), kept);
}

bool is_coarsening(const partition& p, const partition& q) {
    assert(p.size() == q.size());
    // every block of q must sit inside one block of p: leads map consistently
    for (int i = 0; i < q.size(); ++i)
        if (p.lead[i] != p.lead[q.lead[i]]) return false;
    return true;
}

partition lift_up(const partition& p, const std::vector<int>& new_positions) {
    partition out = p;
    for (int pos : new_positions) out = out.insert_singleton(pos);  // ascending positions
    return out;
}

wp_set rmc(const wp_set& a) {
    std::map<partition, long> best;
    for (auto& e : a.entries) {
        auto [it, fresh] = best.emplace(e.p, e.w);
        if (!fresh && e.w < it->second) it->second = e.w;
    }
    wp_set out;
    out.u = a.u;
    out.entries.reserve(best.size());
    for (auto& [p, w] : best) out.entries.push_back({p, w});
    return out;
}

wp_set union_keepmin(const wp_set& a, const wp_set& b) {
    assert(a.u == b.u);
    wp_set all;
    all.u = a.u;
    all.entries = a.entries;
    all.entries.insert(all.entries.end(), b.entries.begin(), b.entries.end());
    return rmc(all);
}

wp_set shift(long delta, wp_set a) {
    for (auto& e : a.entries) e.w += delta;
    return a;
}

wp_set insert_elems(const std::vector<int>& positions, const wp_set& a) {
    wp_set out;
    out.u = a.u + int(positions.size());
    out.entries.reserve(a.entries.size());
    for (auto& e : a.entries) {
        partition p = e.p;
        for (int pos : positions) p = p.insert_singleton(pos);  // ascending positions
        out.entries.push_back({std::move(p), e.w});
    }
    return out;
}

wp_set glue(const std::vector<int>& elems, const wp_set& a) {
    wp_set out;
    out.u = a.u;
    out.entries.reserve(a.entries.size());
    for (auto& e : a.entries) {
        partition p = e.p;
        for (size_t i = 1; i < elems.size(); ++i) p = p.merged(elems[0], elems[i]);
        out.entries.push_back({std::move(p), e.w});
    }
    return rmc(out);
}

wp_set glue_w(const std::vector<int>& elems, long delta, const wp_set& a) {
    return shift(delta, glue(elems, a));
}

wp_set project(const std::vector<int>& positions, const wp_set& a) {
    std::vector<char> removed(a.u, 0);
    std::vector<int> keep;
    for (int pos : positions) {
        assert(pos >= 0 && pos < a.u);
        removed[pos] = 1;
    }
    for (int i = 0; i < a.u; ++i)
        if (!removed[i]) keep.push_back(i);
    wp_set out;
    out.u = int(keep.size());
    for (auto& e : a.entries) {
        bool dead = false;
        for (auto& b : e.p.blocks()) {
            bool hit = false, survivor = false;
            for (int x : b) (removed[x] ? hit : survivor) = true;
            if (hit && !survivor) {
                dead = true;  // a removed element's block loses all its elements
                break;
            }
        }
        if (!dead) out.entries.push_back({e.p.restrict_to(keep), e.w});
    }
    return rmc(out);
}

wp_set project(int pos, const wp_set& a) { return project(std::vector<int>{pos}, a); }

wp_set join_sets(const wp_set& a, const wp_set& b) {
    assert(a.u == b.u);
    wp_set out;
    out.u = a.u;
    out.entries.reserve(a.entries.size() * b.entries.size());
    for (auto& ea : a.entries)
        for (auto& eb : b.entries) out.entries.push_back({ea.p.meet_with(eb.p), ea.w + eb.w});
    return rmc(out);
}

std::optional<long> opt(const partition& q, const wp_set& a) {
    std::optional<long> best;
    for (auto& e : a.entries)
        if (e.p.meet_with(q).is_single_block() && (!best || e.w < *best)) best = e.w;
    return best;
}

namespace {

// row of the cut matrix for p: bit s is set when s (a subset of {1,..,u-1},
// shifted down by one) is a union of blocks of p not holding element 0
std::vector<uint64_t> cut_row(const partition& p, int words) {
    std::vector<uint32_t> masks;
    for (auto& b : p.blocks()) {
        if (b[0] == 0) continue;
        uint32_t m = 0;
        for (int e : b) m |= uint32_t(1) << (e - 1);
        masks.push_back(m);
    }
    std::vector<uint32_t> span{0};
    span.reserve(size_t(1) << masks.size());
    for (uint32_t m : masks) {
        size_t sz = span.size();
        for (size_t i = 0; i < sz; ++i) span.push_back(span[i] ^ m);
    }
    std::vector<uint64_t> row(words, 0);
    for (uint32_t s : span) row[s >> 6] |= uint64_t(1) << (s & 63);
    return row;
}

} // namespace

wp_set reduce(const wp_set& a) {
    wp_set r = rmc(a);
    if (r.u <= 1) {  // at most one partition exists; rmc already kept the cheapest
        return r;
    }
    if (r.u > 20) return r;  // cut matrix would not fit; keep the deduplicated set
    if (r.entries.size() <= (size_t(1) << (r.u - 1))) return r;  // cannot shrink below the bound
    std::sort(r.entries.begin(), r.entries.end(), [](const wp_entry& x, const wp_entry& y) {
        return x.w != y.w ? x.w < y.w : x.p < y.p;
    });
    int cols = 1 << (r.u - 1);
    int words = (cols + 63) / 64;
    std::vector<std::vector<uint64_t>> basis;
    std::vector<int> pivot;
    wp_set out;
    out.u = r.u;
    for (auto& e : r.entries) {
        auto row = cut_row(e.p, words);
        for (size_t b = 0; b < basis.size(); ++b)
            if (row[pivot[b] >> 6] >> (pivot[b] & 63) & 1)
                for (int w = 0; w < words; ++w) row[w] ^= basis[b][w];
        int pv = -1;
        for (int w = 0; w < words && pv < 0; ++w)
            if (row[w]) pv = w * 64 + __builtin_ctzll(row[w]);
        if (pv < 0) continue;  // dominated by cheaper entries
        basis.push_back(std::move(row));
        pivot.push_back(pv);
        out.entries.push_back(e);
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const wp_entry& x, const wp_entry& y) { return x.p < y.p; });
    return out;
}

} // namespace rlis
