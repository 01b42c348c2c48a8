#include "hypertriplet/regions.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "hypertriplet/intersect.hpp"

namespace hypertriplet {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::independent: return "independent";
        case Variant::disjoint: return "disjoint";
        case Variant::common: return "common";
    }
    return "?";
}

bool RegionSizes::valid() const {
    if (x < 0 || y < 0 || z < 0 || xy < 0 || xz < 0 || yz < 0 || xyz < 0) return false;
    if (xyz > std::min({xy, xz, yz})) return false;
    if (xy > std::min(x, y) || xz > std::min(x, z) || yz > std::min(y, z)) return false;
    if (x - xy - xz + xyz < 0) return false;
    if (y - xy - yz + xyz < 0) return false;
    if (z - xz - yz + xyz < 0) return false;
    return true;
}

RegionPartition to_partition(const RegionSizes& r) {
    if (!r.valid()) throw std::domain_error("to_partition: invalid region sizes");
    RegionPartition p;
    p.a = r.x - r.xy - r.xz + r.xyz;
    p.b = r.y - r.xy - r.yz + r.xyz;
    p.c = r.z - r.xz - r.yz + r.xyz;
    p.ab = r.xy - r.xyz;
    p.ac = r.xz - r.xyz;
    p.bc = r.yz - r.xyz;
    p.abc = r.xyz;
    return p;
}

Weight weight(const RegionSizes& r, Variant v) {
    assert(r.valid());
    switch (v) {
        case Variant::independent: {
            const std::int64_t num =
                std::min({r.x - r.xy - r.xz, r.y - r.xy - r.yz, r.z - r.xz - r.yz}) + r.xyz;
            return {num, r.xy + r.xz + r.yz - 2 * r.xyz + 1};
        }
        case Variant::disjoint:
            return {std::min({r.xy, r.xz, r.yz}) - r.xyz, r.xyz + 1};
        case Variant::common:
            return {r.xyz, 1};
    }
    throw std::invalid_argument("weight: bad variant");
}

Weight weight_general(const RegionPartition& p, int level) {
    switch (level) {
        case 1:
            return {std::min({p.a, p.b, p.c}), 1 + p.ab + p.ac + p.bc + p.abc};
        case 2:
            return {std::min({p.ab, p.ac, p.bc}), 1 + p.abc};
        case 3:
            return {p.abc, 1};
    }
    throw std::invalid_argument("weight_general: level must be 1..3");
}

RegionSizes region_sizes(const CanonicalHypergraph& h, EdgeId ea, EdgeId eb, EdgeId ec) {
    const auto n = static_cast<EdgeId>(h.g.edge_count());
    if (ea < 0 || eb < 0 || ec < 0 || ea >= n || eb >= n || ec >= n)
        throw std::invalid_argument("region_sizes: edge id out of range");
    if (ea == eb || ea == ec || eb == ec)
        throw std::invalid_argument("region_sizes: duplicate edge id in triple");

    const auto& A = h.g.edges[static_cast<std::size_t>(ea)];
    const auto& B = h.g.edges[static_cast<std::size_t>(eb)];
    const auto& C = h.g.edges[static_cast<std::size_t>(ec)];
    RegionSizes r;
    r.x = static_cast<std::int64_t>(A.size());
    r.y = static_cast<std::int64_t>(B.size());
    r.z = static_cast<std::int64_t>(C.size());
    r.xy = intersection_size(A, B);
    r.xz = intersection_size(A, C);
    r.yz = intersection_size(B, C);
    r.xyz = intersection_size3(A, B, C);
    return r;
}

}  // namespace hypertriplet
