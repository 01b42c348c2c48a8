#include "hypertriplet/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace hypertriplet {

EntropyValue shannon_entropy(std::span<const std::int64_t> sizes) {
    std::int64_t total = 0;
    for (auto s : sizes) {
        if (s < 0) throw std::invalid_argument("shannon_entropy: negative size");
        total += s;
    }
    if (sizes.empty() || total == 0)
        throw std::invalid_argument("shannon_entropy: needs at least one positive entry");
    double bits = 0.0;
    for (auto s : sizes) {
        if (s == 0) continue;  // 0*log(0) = 0
        const double p = static_cast<double>(s) / static_cast<double>(total);
        bits -= p * std::log2(p);
    }
    if (bits < 0.0) bits = 0.0;  // -0.0 from a single nonzero category
    const double denom = std::log2(static_cast<double>(sizes.size()));
    return {bits, denom > 0.0 ? bits / denom : 0.0};
}

namespace {

// Report rows for triplets whose target regions are all empty (possible when
// every edge is fully covered by overlaps) get zero entropy instead of an
// error.
EntropyValue entropy_or_zero(std::span<const std::int64_t> sizes) {
    for (auto s : sizes)
        if (s > 0) return shannon_entropy(sizes);
    return {0.0, 0.0};
}

}  // namespace

std::vector<EntropyRow> entropy_report(std::span<const TripletResult> results, Variant v) {
    if (v != Variant::independent && v != Variant::disjoint)
        throw std::invalid_argument("entropy_report: defined for independent and disjoint only");
    std::vector<EntropyRow> rows;
    rows.reserve(results.size());
    for (const auto& res : results) {
        const RegionPartition p = to_partition(res.regions);
        EntropyRow row;
        row.ranks = res.ranks;
        row.labels = res.labels;
        row.weight = res.weight;
        const std::int64_t r1 = p.a + p.b + p.c;
        const std::int64_t r2 = p.ab + p.ac + p.bc;
        const std::int64_t r3 = 3 * p.abc;
        if (v == Variant::independent) {
            const std::int64_t target[] = {p.a, p.b, p.c};
            const std::int64_t grouped[] = {r1, r2, r3};
            row.target = entropy_or_zero(target);
            row.grouped = entropy_or_zero(grouped);
        } else {
            const std::int64_t target[] = {p.ab, p.ac, p.bc};
            const std::int64_t grouped[] = {r2, r3};
            row.target = entropy_or_zero(target);
            row.grouped = entropy_or_zero(grouped);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace hypertriplet
