#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "hypertriplet/hypergraph.hpp"
#include "hypertriplet/regions.hpp"

namespace hypertriplet {

// Emptiness pattern of the seven exclusive regions. Bit order:
//   0:a 1:b 2:c 3:ab 4:ac 5:bc 6:abc
struct Pattern {
    std::uint8_t bits = 0;

    static Pattern of(const RegionPartition& p);
    bool operator==(const Pattern&) const = default;
};

std::string pattern_string(Pattern p);  // 7 chars, bit 0 first

// Image of a pattern under a permutation of the three hyperedge roles
// (perm[i] = role that new role i takes from).
Pattern permute_pattern(Pattern p, const std::array<int, 3>& perm);

// One equivalence class of connected patterns under the 6 role permutations.
// There are exactly 30; 24 are closed (all three pairwise intersections
// non-empty) and 4 force at least two hyperedges to be equal as sets. Class
// ids are assigned by ascending canonical word; any alignment with external
// motif numberings has to go through `canonical` (numberings elsewhere are
// arbitrary).
struct MotifClass {
    int id = 0;
    std::uint8_t canonical = 0;  // minimal 7-bit word over the 6 permutations
    bool closed = false;
    bool duplicate_forced = false;
};

// The 30 classes, ascending by canonical word.
std::span<const MotifClass> motif_classes();

enum class PatternKind {
    motif,         // one of the 30 classes, realizable with distinct edge sets
    degenerate,    // one of the 30, but only realizable with set-duplicate edges
    disconnected,  // fewer than two intersecting pairs (includes empty-edge patterns)
};

struct Classification {
    PatternKind kind = PatternKind::disconnected;
    const MotifClass* cls = nullptr;  // null iff disconnected
};

Classification classify(Pattern p);

struct CensusReport {
    std::array<std::uint64_t, 30> class_counts{};
    std::uint64_t connected_triplets = 0;  // == sum of class_counts
    std::uint64_t degenerate_triplets = 0; // subtotal landing in duplicate-forced classes
    std::optional<std::size_t> max_edge_size;  // filter applied, if any
    std::uint64_t edges_filtered = 0;
};

// Counts every connected triplet (one edge adjacent to the other two) by
// motif class, optionally after dropping hyperedges larger than
// max_edge_size. Wedge enumeration over the pairwise-intersection index.
CensusReport census(const CanonicalHypergraph& h,
                    std::optional<std::size_t> max_edge_size = std::nullopt);

}  // namespace hypertriplet
