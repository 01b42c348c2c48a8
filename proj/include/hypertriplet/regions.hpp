#pragma once

#include <cstdint>

#include "hypertriplet/hypergraph.hpp"
#include "hypertriplet/weight.hpp"

namespace hypertriplet {

enum class Variant : int {
    independent = 1,
    disjoint = 2,
    common = 3,
};

const char* variant_name(Variant v);

// Inclusive intersection sizes of a triplet: x, y, z are the three hyperedge
// cardinalities; xy, xz, yz the pairwise intersection sizes (each includes the
// triple intersection); xyz the three-way intersection size.
struct RegionSizes {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t z = 0;
    std::int64_t xy = 0;
    std::int64_t xz = 0;
    std::int64_t yz = 0;
    std::int64_t xyz = 0;

    bool valid() const;
};

// Sizes of the seven exclusive regions of a triplet (a node is counted in the
// cell matching exactly the set of hyperedges containing it).
struct RegionPartition {
    std::int64_t a = 0;    // in the first hyperedge only
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t ab = 0;   // in the first two, not the third
    std::int64_t ac = 0;
    std::int64_t bc = 0;
    std::int64_t abc = 0;  // in all three

    bool operator==(const RegionPartition&) const = default;
};

// Inclusion-exclusion; throws std::domain_error if the input violates the
// RegionSizes invariants (some exclusive cell would be negative).
RegionPartition to_partition(const RegionSizes& r);

// The three triplet weights computed from inclusive sizes.
Weight weight(const RegionSizes& r, Variant v);

// Same weights from the exclusive partition: numerator is the minimum of the
// level-j cells, denominator one plus the total size of all deeper cells.
Weight weight_general(const RegionPartition& p, int level);

// Inclusive sizes of the triplet (ea, eb, ec), fields in argument order.
// Pairwise sizes by sorted-list merge, the triple size by three-way merge.
// Throws std::invalid_argument on duplicate or out-of-range ids.
RegionSizes region_sizes(const CanonicalHypergraph& h, EdgeId ea, EdgeId eb, EdgeId ec);

}  // namespace hypertriplet
