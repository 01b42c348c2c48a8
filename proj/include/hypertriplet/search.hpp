#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypertriplet/hypergraph.hpp"
#include "hypertriplet/regions.hpp"
#include "hypertriplet/weight.hpp"

namespace hypertriplet {

// Canonical-rank triple, x < y < z.
struct Triple {
    EdgeId x = 0;
    EdgeId y = 0;
    EdgeId z = 0;

    bool operator==(const Triple&) const = default;
};

inline bool lex_less(const Triple& a, const Triple& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
}

struct TripletResult {
    Triple ranks;
    std::array<std::string, 3> labels;  // original labels, in rank order
    RegionSizes regions;
    Weight weight;
    Variant variant = Variant::independent;
};

// Total order used everywhere results are ranked or ties broken:
// higher weight first, then lexicographically smaller rank triple.
inline bool result_better(const Weight& wa, const Triple& ta, const Weight& wb, const Triple& tb) {
    const auto c = wa <=> wb;
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::greater;
    return lex_less(ta, tb);
}

// ---- upper bounds ----------------------------------------------------------

// True iff an edge of this cardinality can still occur in a triplet beating
// `best`: floor(size/2) > best for disjoint, size > best otherwise.
bool edge_bound(Variant v, std::int64_t size, const Weight& best);

// Upper bound on the weight of any triplet containing a pair with edge sizes
// (sy, sz) and intersection size d.
Weight pair_bound(Variant v, std::int64_t sy, std::int64_t sz, std::int64_t d);

// Upper bound from all three pairwise sizes; partial.xyz is ignored (the
// triple intersection is pinned at min(xy, xz, yz), its weight-maximizing
// value).
Weight triplet_bound(Variant v, const RegionSizes& partial);

// ---- searches --------------------------------------------------------------

enum class SearchMode { max, topk, threshold, local };

struct SearchConfig {
    Variant variant = Variant::independent;
    SearchMode mode = SearchMode::max;
    int k = 1;                  // topk / local
    Weight tau{0, 1};           // threshold
    std::string query_label;    // local
    int threads = 1;
    int degree_floor = 1;       // 1 = off, 2 = skip degree-1 nodes in intersection scans
    std::function<void(const Weight&)> on_improve;  // instrumentation: running best updates
};

// Exhaustive baseline: scans the candidate set (all triples for independent,
// closed triples otherwise) in lexicographic rank order with the
// cardinality-bound break at every loop level. Returns std::nullopt when no
// candidate exists (disjoint/common with no closed triplet).
// Throws std::invalid_argument when |E| < 3.
std::optional<TripletResult> basic_search(const CanonicalHypergraph& h, Variant v);

// Same enumeration, streaming into an arbitrary mode (used by the CLI's
// --algo basic for topk/threshold/local).
std::vector<TripletResult> basic_search_all(const CanonicalHypergraph& h, const SearchConfig& cfg);

// Complete candidate list with exact weights, no pruning; the test oracle.
// Region sizes are recomputed per triple straight from the edge lists.
// Throws std::invalid_argument when C(|E|,3) exceeds `cap`.
std::vector<TripletResult> brute_force_all(const CanonicalHypergraph& h, Variant v,
                                           std::uint64_t cap = 5'000'000);

// Pruned search with edge/pair/triplet upper bounds and an incrementally
// built pair-intersection cache. Output is sorted best-first and identical
// for any thread count.
std::vector<TripletResult> max_search(const CanonicalHypergraph& h, const SearchConfig& cfg);

}  // namespace hypertriplet
