#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hypertriplet/hypergraph.hpp"

namespace hypertriplet {

// All non-empty pairwise hyperedge intersections, built by one wedge scan
// (each edge's nodes, each node's higher-id incident edges). Adjacency is
// stored symmetrically and sorted by the other edge's id; node lists, when
// requested, are stored once per unordered pair.
class PairIndex {
public:
    struct Entry {
        EdgeId other = 0;
        std::int64_t size = 0;
        std::int32_t list = -1;  // index into the list pool, -1 if not stored
    };

    // degree_floor 2 skips degree-1 nodes during the scan (they cannot occur
    // in any pairwise intersection, so results are unchanged).
    static PairIndex build(const CanonicalHypergraph& h, bool with_lists, int degree_floor = 1);

    std::span<const Entry> neighbors(EdgeId e) const {
        return {nbrs_[static_cast<std::size_t>(e)]};
    }
    // nullptr when the two edges are disjoint.
    const Entry* find(EdgeId a, EdgeId b) const;
    std::int64_t size_of(EdgeId a, EdgeId b) const {
        const Entry* e = find(a, b);
        return e ? e->size : 0;
    }
    std::span<const NodeId> list(std::int32_t id) const { return {lists_[static_cast<std::size_t>(id)]}; }

    std::uint64_t pair_count() const { return pair_count_; }
    std::uint64_t total_intersection_size() const { return total_size_; }

private:
    std::vector<std::vector<Entry>> nbrs_;
    std::vector<std::vector<NodeId>> lists_;
    std::uint64_t pair_count_ = 0;
    std::uint64_t total_size_ = 0;
};

}  // namespace hypertriplet
