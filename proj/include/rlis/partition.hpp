#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace rlis {

// partition of {0,...,u-1}; lead[i] = smallest element of i's block, so two
// elements are in the same block exactly when their leads agree
struct partition {
    std::vector<uint8_t> lead;

    partition() = default;
    static partition singletons(int u);
    static partition of_blocks(int u, const std::vector<std::vector<int>>& blocks);

    int size() const { return int(lead.size()); }
    bool operator==(const partition& o) const { return lead == o.lead; }
    bool operator!=(const partition& o) const { return lead != o.lead; }
    bool operator<(const partition& o) const { return lead < o.lead; }

    bool same_block(int a, int b) const { return lead[a] == lead[b]; }
    int block_count() const;
    std::vector<std::vector<int>> blocks() const;
    bool is_single_block() const { return block_count() <= 1; }
    bool all_singletons() const;

    partition merged(int a, int b) const;           // merge the blocks holding a and b
    partition meet_with(const partition& o) const;  // finest common coarsening, same universe
    partition insert_singleton(int pos) const;      // universe grows by one element at pos
    partition erase_at(int pos) const;              // universe loses the element at pos
    partition restrict_to(const std::vector<int>& keep) const;  // keep, sorted; renumbered
};

// p is coarser than or equal to q: every block of q lies inside a block of p
bool is_coarsening(const partition& p, const partition& q);
// blocks are the connected components of the union of the two block relations;
// the single-block partition is the minimum of this order and absorbs
inline partition lattice_meet(const partition& p, const partition& q) { return p.meet_with(q); }
// restriction to a sub-universe / extension by singletons, by position
inline partition project_down(const partition& p, const std::vector<int>& keep) {
    return p.restrict_to(keep);
}
partition lift_up(const partition& p, const std::vector<int>& new_positions);

struct wp_entry {
    partition p;
    long w = 0;
};

// weighted set of partitions over a common universe of size u; operators keep
// entries deduplicated at minimum weight and sorted, so results are canonical
struct wp_set {
    int u = 0;
    std::vector<wp_entry> entries;
};

wp_set rmc(const wp_set& a);  // keep the minimum weight per distinct partition
wp_set union_keepmin(const wp_set& a, const wp_set& b);
wp_set shift(long delta, wp_set a);
// insert fresh singleton elements; positions are indices in the grown universe
wp_set insert_elems(const std::vector<int>& positions, const wp_set& a);
// merge the blocks of the given elements (all within the universe; extending
// the universe is spelled as an explicit insert_elems first)
wp_set glue(const std::vector<int>& elems, const wp_set& a);
wp_set glue_w(const std::vector<int>& elems, long delta, const wp_set& a);
// remove the given elements; entries where a removed element's block retains no
// surviving element are dropped
wp_set project(const std::vector<int>& positions, const wp_set& a);
wp_set project(int pos, const wp_set& a);
wp_set join_sets(const wp_set& a, const wp_set& b);  // pairwise meet, weights add
// minimum weight among entries whose meet with q is the single-block partition
std::optional<long> opt(const partition& q, const wp_set& a);

// representative subset of a: opt(q, .) is preserved for every q, and the
// output has at most 2^(u-1) entries
wp_set reduce(const wp_set& a);

} // namespace rlis
