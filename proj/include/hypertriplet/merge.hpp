#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hypertriplet/hypergraph.hpp"
#include "hypertriplet/search.hpp"

namespace hypertriplet {

// Weighted co-occurrence graph over hyperedges: vertices are edges appearing
// in at least one qualifying triplet, edge weights count shared triplets.
struct MergeGraph {
    std::vector<EdgeId> vertices;  // canonical ranks, ascending
    struct WeightedEdge {
        EdgeId lo = 0;
        EdgeId hi = 0;
        std::int64_t weight = 0;
        bool operator==(const WeightedEdge&) const = default;
    };
    std::vector<WeightedEdge> edges;  // sorted by (lo, hi)
};

// Every triplet contributes exactly three weight increments. Invariant to
// input order. Throws std::invalid_argument on empty input.
MergeGraph build_merge_graph(std::span<const TripletResult> triplets);

// Connected components, size-descending, ties by smallest member rank;
// members ascending.
struct ComponentSet {
    std::vector<std::vector<EdgeId>> components;
};

ComponentSet components(const MergeGraph& g);

// Undirected DOT output; vertex labels are original hyperedge labels and edge
// penwidth is proportional to weight (weight 1 -> penwidth 1).
std::string export_dot(const MergeGraph& g, const CanonicalHypergraph& h);

}  // namespace hypertriplet
