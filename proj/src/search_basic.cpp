#include <algorithm>
#include <stdexcept>

#include "hypertriplet/intersect.hpp"
#include "hypertriplet/pair_index.hpp"
#include "hypertriplet/search.hpp"
#include "search_detail.hpp"

namespace hypertriplet {

namespace {

using detail::Candidate;
using detail::Collector;
using detail::edge_bound_value;
using detail::Floor;

std::int64_t edge_size(const CanonicalHypergraph& h, EdgeId e) {
    return static_cast<std::int64_t>(h.g.edges[static_cast<std::size_t>(e)].size());
}

// Triple intersection via the smallest stored pair list against the third
// edge.
std::int64_t triple_size_from_lists(const CanonicalHypergraph& h, const PairIndex& idx,
                                    const PairIndex::Entry& exy, const PairIndex::Entry& exz,
                                    const PairIndex::Entry& eyz, EdgeId x, EdgeId y, EdgeId z) {
    const PairIndex::Entry* best = &exy;
    EdgeId opposite = z;
    if (exz.size < best->size) {
        best = &exz;
        opposite = y;
    }
    if (eyz.size < best->size) {
        best = &eyz;
        opposite = x;
    }
    return intersection_size(idx.list(best->list), h.g.edges[static_cast<std::size_t>(opposite)]);
}

// Algorithm-1 style scan: lexicographic rank order, cardinality-bound break
// at every loop level, no pair or triplet bounds.
void basic_collect(const CanonicalHypergraph& h, const SearchConfig& cfg, Collector& col) {
    const auto n = static_cast<EdgeId>(h.g.edge_count());
    const Variant v = cfg.variant;
    const bool closed_only = v != Variant::independent;
    const PairIndex idx = PairIndex::build(h, closed_only, cfg.degree_floor);

    EdgeId q = -1;
    if (cfg.mode == SearchMode::local) {
        for (EdgeId e = 0; e < n; ++e)
            if (h.g.edge_labels[static_cast<std::size_t>(e)] == cfg.query_label) q = e;
        if (q < 0) throw std::invalid_argument("local search: unknown hyperedge label");
    }
    const auto wanted = [&](EdgeId x, EdgeId y, EdgeId z) {
        return q < 0 || x == q || y == q || z == q;
    };

    if (!closed_only) {
        for (EdgeId x = 0; x + 2 < n; ++x) {
            if (detail::skip(col.floor(), edge_bound_value(v, edge_size(h, x)),
                             {x, static_cast<EdgeId>(x + 1), static_cast<EdgeId>(x + 2)}))
                break;
            for (EdgeId y = x + 1; y + 1 < n; ++y) {
                if (detail::skip(col.floor(), edge_bound_value(v, edge_size(h, y)),
                                 {x, y, static_cast<EdgeId>(y + 1)}))
                    break;
                const std::int64_t d_xy = idx.size_of(x, y);
                for (EdgeId z = y + 1; z < n; ++z) {
                    if (detail::skip(col.floor(), edge_bound_value(v, edge_size(h, z)), {x, y, z}))
                        break;
                    if (!wanted(x, y, z)) continue;
                    RegionSizes r;
                    r.x = edge_size(h, x);
                    r.y = edge_size(h, y);
                    r.z = edge_size(h, z);
                    r.xy = d_xy;
                    r.xz = idx.size_of(x, z);
                    r.yz = idx.size_of(y, z);
                    r.xyz = intersection_size3(h.g.edges[static_cast<std::size_t>(x)],
                                               h.g.edges[static_cast<std::size_t>(y)],
                                               h.g.edges[static_cast<std::size_t>(z)]);
                    col.offer({weight(r, v), {x, y, z}, r});
                }
            }
        }
        return;
    }

    for (EdgeId x = 0; x + 2 < n; ++x) {
        if (detail::skip(col.floor(), edge_bound_value(v, edge_size(h, x)),
                         {x, static_cast<EdgeId>(x + 1), static_cast<EdgeId>(x + 2)}))
            break;
        const auto nbx = idx.neighbors(x);
        const auto upper_x =
            std::lower_bound(nbx.begin(), nbx.end(), x,
                             [](const PairIndex::Entry& e, EdgeId v_) { return e.other <= v_; });
        for (auto iy = upper_x; iy != nbx.end(); ++iy) {
            const EdgeId y = iy->other;
            if (detail::skip(col.floor(), edge_bound_value(v, edge_size(h, y)),
                             {x, y, static_cast<EdgeId>(y + 1)}))
                break;
            // closed z: common neighbors of x and y above y
            const auto nby = idx.neighbors(y);
            auto ix = iy + 1;
            auto jz = std::lower_bound(nby.begin(), nby.end(), y,
                                       [](const PairIndex::Entry& e, EdgeId v_) { return e.other <= v_; });
            while (ix != nbx.end() && jz != nby.end()) {
                if (ix->other < jz->other) {
                    ++ix;
                    continue;
                }
                if (jz->other < ix->other) {
                    ++jz;
                    continue;
                }
                const EdgeId z = ix->other;
                if (detail::skip(col.floor(), edge_bound_value(v, edge_size(h, z)), {x, y, z}))
                    break;
                if (!wanted(x, y, z)) {
                    ++ix;
                    ++jz;
                    continue;
                }
                RegionSizes r;
                r.x = edge_size(h, x);
                r.y = edge_size(h, y);
                r.z = edge_size(h, z);
                r.xy = iy->size;
                r.xz = ix->size;
                r.yz = jz->size;
                r.xyz = triple_size_from_lists(h, idx, *iy, *ix, *jz, x, y, z);
                col.offer({weight(r, v), {x, y, z}, r});
                ++ix;
                ++jz;
            }
        }
    }
}

}  // namespace

std::optional<TripletResult> basic_search(const CanonicalHypergraph& h, Variant v) {
    detail::require_searchable(h);
    SearchConfig cfg;
    cfg.variant = v;
    cfg.mode = SearchMode::max;
    Collector col(SearchMode::max, 1, Weight{0, 1}, nullptr);
    basic_collect(h, cfg, col);
    auto cands = col.sorted_take();
    if (cands.empty()) return std::nullopt;
    auto results = detail::materialize(std::move(cands), h, v);
    return results.front();
}

std::vector<TripletResult> basic_search_all(const CanonicalHypergraph& h, const SearchConfig& cfg) {
    detail::require_searchable(h);
    if (cfg.k < 1) throw std::invalid_argument("k must be >= 1");
    Collector col(cfg.mode, cfg.k, cfg.tau, cfg.on_improve);
    basic_collect(h, cfg, col);
    return detail::materialize(col.sorted_take(), h, cfg.variant);
}

std::vector<TripletResult> brute_force_all(const CanonicalHypergraph& h, Variant v,
                                           std::uint64_t cap) {
    detail::require_searchable(h);
    const auto n = static_cast<std::uint64_t>(h.g.edge_count());
    if (n > 2'000'000) throw std::invalid_argument("brute_force_all: candidate count exceeds cap");
    const std::uint64_t total = n * (n - 1) / 2 * (n - 2) / 3;
    if (total > cap) throw std::invalid_argument("brute_force_all: candidate count exceeds cap");

    std::vector<TripletResult> out;
    const auto ne = static_cast<EdgeId>(n);
    for (EdgeId x = 0; x < ne; ++x)
        for (EdgeId y = x + 1; y < ne; ++y)
            for (EdgeId z = y + 1; z < ne; ++z) {
                RegionSizes r = region_sizes(h, x, y, z);
                if (v != Variant::independent && (r.xy == 0 || r.xz == 0 || r.yz == 0)) continue;
                TripletResult t;
                t.ranks = {x, y, z};
                t.labels = {h.g.edge_labels[static_cast<std::size_t>(x)],
                            h.g.edge_labels[static_cast<std::size_t>(y)],
                            h.g.edge_labels[static_cast<std::size_t>(z)]};
                t.regions = r;
                t.weight = weight(r, v);
                t.variant = v;
                out.push_back(std::move(t));
            }
    return out;
}

}  // namespace hypertriplet
