#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hypertriplet/regions.hpp"
#include "hypertriplet/search.hpp"

namespace hypertriplet {

struct EntropyValue {
    double bits = 0.0;        // H = -sum p_i log2 p_i, p_i = size_i / total
    double normalized = 0.0;  // H / log2(category count)
};

// 0*log(0) = 0; throws std::invalid_argument when all entries are zero (or
// the list is empty). Categories with zero mass still count toward the
// normalization denominator.
EntropyValue shannon_entropy(std::span<const std::int64_t> sizes);

// One row per triplet: the weight, entropy over the variant's own regions
// (the three independent cells for independent, the three disjoint cells for
// disjoint), and entropy over the grouped masses (independent:
// (sum R1, sum R2, 3*R3); disjoint: (sum R2, 3*R3)).
struct EntropyRow {
    Triple ranks;
    std::array<std::string, 3> labels;
    Weight weight;
    EntropyValue target;
    EntropyValue grouped;
};

// Defined for independent and disjoint only; throws std::invalid_argument for
// common.
std::vector<EntropyRow> entropy_report(std::span<const TripletResult> results, Variant v);

}  // namespace hypertriplet
