#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "hypertriplet/intersect.hpp"
#include "hypertriplet/pair_index.hpp"
#include "hypertriplet/search.hpp"
#include "search_detail.hpp"

namespace hypertriplet {

bool edge_bound(Variant v, std::int64_t size, const Weight& best) {
    return (detail::edge_bound_value(v, size) <=> best) == std::strong_ordering::greater;
}

Weight pair_bound(Variant v, std::int64_t sy, std::int64_t sz, std::int64_t d) {
    if (v == Variant::independent) return {std::min(sy, sz) - d, d + 1};
    return {d, 1};
}

Weight triplet_bound(Variant v, const RegionSizes& partial) {
    const std::int64_t m = std::min({partial.xy, partial.xz, partial.yz});
    if (v == Variant::independent) {
        RegionSizes r = partial;
        r.xyz = m;  // weight-maximizing completion
        return weight(r, Variant::independent);
    }
    return {m, 1};
}

namespace {

using detail::Candidate;
using detail::Collector;
using detail::edge_bound_value;
using detail::Floor;

struct Ctx {
    const CanonicalHypergraph& h;
    Variant v;
    int degree_floor;

    std::int64_t size(EdgeId e) const {
        return static_cast<std::int64_t>(h.g.edges[static_cast<std::size_t>(e)].size());
    }
    std::span<const NodeId> edge(EdgeId e) const { return {h.g.edges[static_cast<std::size_t>(e)]}; }
};

// ---- sequential independent: incremental pair-size cache -------------------

struct SizeEntry {
    EdgeId lo;
    std::int64_t size;
};

void seq_independent(const Ctx& c, Collector& col) {
    const auto n = static_cast<EdgeId>(c.h.g.edge_count());
    std::vector<std::vector<SizeEntry>> cache(static_cast<std::size_t>(n));
    std::vector<std::int64_t> tally(static_cast<std::size_t>(n), 0);
    std::vector<EdgeId> touched;

    for (EdgeId mid = 0; mid < n; ++mid) {
        if (!detail::admit(col.floor(), edge_bound_value(c.v, c.size(mid)))) break;

        // pair tallies with all higher ranks sharing a node
        touched.clear();
        for (NodeId u : c.edge(mid)) {
            const auto& adj = c.h.g.node_adj[static_cast<std::size_t>(u)];
            if (adj.size() < static_cast<std::size_t>(c.degree_floor)) continue;
            auto it = std::upper_bound(adj.begin(), adj.end(), mid);
            for (; it != adj.end(); ++it) {
                if (!detail::admit(col.floor(), edge_bound_value(c.v, c.size(*it)))) break;
                auto& t = tally[static_cast<std::size_t>(*it)];
                if (t == 0) touched.push_back(*it);
                ++t;
            }
        }
        std::sort(touched.begin(), touched.end());

        const bool has_triples = mid > 0 && mid + 1 < n;
        if (has_triples &&
            !detail::skip(col.floor(), edge_bound_value(c.v, c.size(mid)),
                          {0, mid, static_cast<EdgeId>(mid + 1)})) {
            auto tc = touched.begin();
            for (EdgeId hi = mid + 1; hi < n; ++hi) {
                if (detail::skip(col.floor(), edge_bound_value(c.v, c.size(hi)), {0, mid, hi}))
                    break;
                while (tc != touched.end() && *tc < hi) ++tc;
                const std::int64_t d_mh =
                    (tc != touched.end() && *tc == hi) ? tally[static_cast<std::size_t>(hi)] : 0;
                if (detail::skip(col.floor(), pair_bound(c.v, c.size(mid), c.size(hi), d_mh),
                                 {0, mid, hi}))
                    continue;

                const auto& lows_mid = cache[static_cast<std::size_t>(mid)];
                const auto& lows_hi = cache[static_cast<std::size_t>(hi)];
                auto im = lows_mid.begin();
                auto ih = lows_hi.begin();
                for (EdgeId lo = 0; lo < mid; ++lo) {
                    if (detail::skip(col.floor(), edge_bound_value(c.v, c.size(lo)), {lo, mid, hi}))
                        break;
                    while (im != lows_mid.end() && im->lo < lo) ++im;
                    while (ih != lows_hi.end() && ih->lo < lo) ++ih;
                    RegionSizes r;
                    r.x = c.size(lo);
                    r.y = c.size(mid);
                    r.z = c.size(hi);
                    r.xy = (im != lows_mid.end() && im->lo == lo) ? im->size : 0;
                    r.xz = (ih != lows_hi.end() && ih->lo == lo) ? ih->size : 0;
                    r.yz = d_mh;
                    if (detail::skip(col.floor(), triplet_bound(c.v, r), {lo, mid, hi})) continue;
                    r.xyz = intersection_size3(c.edge(lo), c.edge(mid), c.edge(hi));
                    col.offer({weight(r, c.v), {lo, mid, hi}, r});
                }
            }
        }

        for (EdgeId hi : touched) {
            if (detail::admit(col.floor(), edge_bound_value(c.v, c.size(hi))))
                cache[static_cast<std::size_t>(hi)].push_back({mid, tally[static_cast<std::size_t>(hi)]});
            tally[static_cast<std::size_t>(hi)] = 0;
        }
    }
}

// ---- sequential disjoint/common: incremental pair-list cache ---------------

struct ListEntry {
    EdgeId lo;
    std::vector<NodeId> nodes;
};

std::int64_t closed_triple_size(const Ctx& c, std::span<const NodeId> n_xy,
                                std::span<const NodeId> n_xz, std::span<const NodeId> n_yz,
                                EdgeId x, EdgeId y, EdgeId z) {
    // smallest pair list against the opposite edge
    if (n_xy.size() <= n_xz.size() && n_xy.size() <= n_yz.size())
        return intersection_size(n_xy, c.edge(z));
    if (n_xz.size() <= n_yz.size()) return intersection_size(n_xz, c.edge(y));
    return intersection_size(n_yz, c.edge(x));
}

Weight closed_weight(Variant v, const RegionSizes& r) { return weight(r, v); }

void seq_closed(const Ctx& c, Collector& col) {
    const auto n = static_cast<EdgeId>(c.h.g.edge_count());
    std::vector<std::vector<ListEntry>> cache(static_cast<std::size_t>(n));
    std::vector<std::vector<NodeId>> tally(static_cast<std::size_t>(n));
    std::vector<EdgeId> touched;

    for (EdgeId mid = 0; mid < n; ++mid) {
        if (!detail::admit(col.floor(), edge_bound_value(c.v, c.size(mid)))) break;

        touched.clear();
        for (NodeId u : c.edge(mid)) {
            const auto& adj = c.h.g.node_adj[static_cast<std::size_t>(u)];
            if (adj.size() < static_cast<std::size_t>(c.degree_floor)) continue;
            auto it = std::upper_bound(adj.begin(), adj.end(), mid);
            for (; it != adj.end(); ++it) {
                if (!detail::admit(col.floor(), edge_bound_value(c.v, c.size(*it)))) break;
                auto& t = tally[static_cast<std::size_t>(*it)];
                if (t.empty()) touched.push_back(*it);
                t.push_back(u);  // nodes arrive in ascending order per edge
            }
        }
        std::sort(touched.begin(), touched.end());

        const bool has_triples = mid > 0 && mid + 1 < n;
        if (has_triples &&
            !detail::skip(col.floor(), edge_bound_value(c.v, c.size(mid)),
                          {0, mid, static_cast<EdgeId>(mid + 1)})) {
            for (EdgeId hi : touched) {
                if (detail::skip(col.floor(), edge_bound_value(c.v, c.size(hi)), {0, mid, hi}))
                    break;
                const auto& n_mh = tally[static_cast<std::size_t>(hi)];
                const auto d_mh = static_cast<std::int64_t>(n_mh.size());
                if (detail::skip(col.floor(), pair_bound(c.v, c.size(mid), c.size(hi), d_mh),
                                 {0, mid, hi}))
                    continue;

                const auto& lows_mid = cache[static_cast<std::size_t>(mid)];
                const auto& lows_hi = cache[static_cast<std::size_t>(hi)];
                auto im = lows_mid.begin();
                auto ih = lows_hi.begin();
                while (im != lows_mid.end() && ih != lows_hi.end()) {
                    if (im->lo < ih->lo) {
                        ++im;
                        continue;
                    }
                    if (ih->lo < im->lo) {
                        ++ih;
                        continue;
                    }
                    const EdgeId lo = im->lo;
                    RegionSizes r;
                    r.x = c.size(lo);
                    r.y = c.size(mid);
                    r.z = c.size(hi);
                    r.xy = static_cast<std::int64_t>(im->nodes.size());
                    r.xz = static_cast<std::int64_t>(ih->nodes.size());
                    r.yz = d_mh;
                    if (!detail::skip(col.floor(),
                                      Weight{std::min({r.xy, r.xz, r.yz}), 1}, {lo, mid, hi})) {
                        r.xyz = closed_triple_size(c, im->nodes, ih->nodes, n_mh, lo, mid, hi);
                        col.offer({closed_weight(c.v, r), {lo, mid, hi}, r});
                    }
                    ++im;
                    ++ih;
                }
            }
        }

        for (EdgeId hi : touched) {
            auto& t = tally[static_cast<std::size_t>(hi)];
            if (detail::admit(col.floor(), edge_bound_value(c.v, c.size(hi))))
                cache[static_cast<std::size_t>(hi)].push_back({mid, std::move(t)});
            t.clear();
        }
    }
}

// ---- parallel: prebuilt pair index, outer loop partitioned -----------------

struct FloorPublisher {
    Collector& col;
    detail::SharedFloor& shared;
    std::optional<Weight> last;

    void maybe_publish() {
        const Floor f = col.floor();
        if (!f.active) return;
        if (last && (f.w <=> *last) != std::strong_ordering::greater) return;
        last = f.w;
        shared.publish(f.w);
    }
};

void par_independent_worker(const Ctx& c, const PairIndex& idx, Collector& col,
                            detail::SharedFloor& shared, std::atomic<EdgeId>& next) {
    const auto n = static_cast<EdgeId>(c.h.g.edge_count());
    FloorPublisher pub{col, shared, std::nullopt};
    for (;;) {
        const EdgeId mid = next.fetch_add(1);
        if (mid >= n - 1) return;
        if (mid == 0) continue;
        const auto sw = shared.snapshot();
        const Weight mid_bound = edge_bound_value(c.v, c.size(mid));
        if (detail::skip(col.floor(), mid_bound, {0, mid, static_cast<EdgeId>(mid + 1)}) ||
            detail::skip_shared(sw, mid_bound))
            continue;

        const auto nb_mid = idx.neighbors(mid);
        const auto upper_mid = std::lower_bound(
            nb_mid.begin(), nb_mid.end(), mid,
            [](const PairIndex::Entry& e, EdgeId v_) { return e.other <= v_; });
        auto tc = upper_mid;
        for (EdgeId hi = mid + 1; hi < n; ++hi) {
            const Weight hi_bound = edge_bound_value(c.v, c.size(hi));
            if (detail::skip(col.floor(), hi_bound, {0, mid, hi}) ||
                detail::skip_shared(sw, hi_bound))
                break;
            while (tc != nb_mid.end() && tc->other < hi) ++tc;
            const std::int64_t d_mh = (tc != nb_mid.end() && tc->other == hi) ? tc->size : 0;
            const Weight pb = pair_bound(c.v, c.size(mid), c.size(hi), d_mh);
            if (detail::skip(col.floor(), pb, {0, mid, hi}) || detail::skip_shared(sw, pb))
                continue;

            const auto nb_hi = idx.neighbors(hi);
            auto im = nb_mid.begin();
            auto ih = nb_hi.begin();
            for (EdgeId lo = 0; lo < mid; ++lo) {
                if (detail::skip(col.floor(), edge_bound_value(c.v, c.size(lo)), {lo, mid, hi}))
                    break;
                while (im != upper_mid && im->other < lo) ++im;
                while (ih != nb_hi.end() && ih->other < lo) ++ih;
                RegionSizes r;
                r.x = c.size(lo);
                r.y = c.size(mid);
                r.z = c.size(hi);
                r.xy = (im != upper_mid && im->other == lo) ? im->size : 0;
                r.xz = (ih != nb_hi.end() && ih->other == lo) ? ih->size : 0;
                r.yz = d_mh;
                if (detail::skip(col.floor(), triplet_bound(c.v, r), {lo, mid, hi})) continue;
                r.xyz = intersection_size3(c.edge(lo), c.edge(mid), c.edge(hi));
                col.offer({weight(r, c.v), {lo, mid, hi}, r});
                pub.maybe_publish();
            }
        }
    }
}

void par_closed_worker(const Ctx& c, const PairIndex& idx, Collector& col,
                       detail::SharedFloor& shared, std::atomic<EdgeId>& next) {
    const auto n = static_cast<EdgeId>(c.h.g.edge_count());
    FloorPublisher pub{col, shared, std::nullopt};
    for (;;) {
        const EdgeId mid = next.fetch_add(1);
        if (mid >= n - 1) return;
        if (mid == 0) continue;
        const auto sw = shared.snapshot();
        const Weight mid_bound = edge_bound_value(c.v, c.size(mid));
        if (detail::skip(col.floor(), mid_bound, {0, mid, static_cast<EdgeId>(mid + 1)}) ||
            detail::skip_shared(sw, mid_bound))
            continue;

        const auto nb_mid = idx.neighbors(mid);
        const auto upper_mid = std::lower_bound(
            nb_mid.begin(), nb_mid.end(), mid,
            [](const PairIndex::Entry& e, EdgeId v_) { return e.other <= v_; });
        for (auto ihi = upper_mid; ihi != nb_mid.end(); ++ihi) {
            const EdgeId hi = ihi->other;
            const Weight hi_bound = edge_bound_value(c.v, c.size(hi));
            if (detail::skip(col.floor(), hi_bound, {0, mid, hi}) ||
                detail::skip_shared(sw, hi_bound))
                break;
            const std::int64_t d_mh = ihi->size;
            const Weight pb = pair_bound(c.v, c.size(mid), c.size(hi), d_mh);
            if (detail::skip(col.floor(), pb, {0, mid, hi}) || detail::skip_shared(sw, pb))
                continue;

            const auto nb_hi = idx.neighbors(hi);
            auto im = nb_mid.begin();
            auto ih = nb_hi.begin();
            while (im != upper_mid && ih != nb_hi.end() && ih->other < mid) {
                if (im->other < ih->other) {
                    ++im;
                    continue;
                }
                if (ih->other < im->other) {
                    ++ih;
                    continue;
                }
                const EdgeId lo = im->other;
                RegionSizes r;
                r.x = c.size(lo);
                r.y = c.size(mid);
                r.z = c.size(hi);
                r.xy = im->size;
                r.xz = ih->size;
                r.yz = d_mh;
                if (!detail::skip(col.floor(), Weight{std::min({r.xy, r.xz, r.yz}), 1},
                                  {lo, mid, hi})) {
                    r.xyz = closed_triple_size(c, idx.list(im->list), idx.list(ih->list),
                                               idx.list(ihi->list), lo, mid, hi);
                    col.offer({closed_weight(c.v, r), {lo, mid, hi}, r});
                    pub.maybe_publish();
                }
                ++im;
                ++ih;
            }
        }
    }
}

// ---- local search ----------------------------------------------------------

EdgeId smallest_excluding(EdgeId a, EdgeId b) {
    EdgeId t = 0;
    while (t == a || t == b) ++t;
    return t;
}

Triple sorted_triple(EdgeId a, EdgeId b, EdgeId c) {
    EdgeId v[3] = {a, b, c};
    std::sort(v, v + 3);
    return {v[0], v[1], v[2]};
}

void local_search(const Ctx& c, EdgeId q, Collector& col) {
    const auto n = static_cast<EdgeId>(c.h.g.edge_count());

    // q's intersection with every other edge
    std::vector<std::vector<NodeId>> qlist(static_cast<std::size_t>(n));
    std::vector<EdgeId> qnbrs;
    for (NodeId u : c.edge(q)) {
        const auto& adj = c.h.g.node_adj[static_cast<std::size_t>(u)];
        if (adj.size() < static_cast<std::size_t>(c.degree_floor)) continue;
        for (EdgeId e : adj) {
            if (e == q) continue;
            auto& l = qlist[static_cast<std::size_t>(e)];
            if (l.empty()) qnbrs.push_back(e);
            l.push_back(u);
        }
    }
    std::sort(qnbrs.begin(), qnbrs.end());
    const std::int64_t sq = c.size(q);

    const bool closed_only = c.v != Variant::independent;
    const std::vector<EdgeId>* universe = nullptr;
    std::vector<EdgeId> all;
    if (closed_only) {
        universe = &qnbrs;
    } else {
        all.reserve(static_cast<std::size_t>(n) - 1);
        for (EdgeId e = 0; e < n; ++e)
            if (e != q) all.push_back(e);
        universe = &all;
    }

    std::vector<NodeId> scratch;
    for (std::size_t i = 0; i < universe->size(); ++i) {
        const EdgeId a = (*universe)[i];
        const auto d_qa = static_cast<std::int64_t>(qlist[static_cast<std::size_t>(a)].size());
        const Triple ta = sorted_triple(q, a, smallest_excluding(q, a));
        if (detail::skip(col.floor(), edge_bound_value(c.v, c.size(a)), ta)) continue;
        if (detail::skip(col.floor(), pair_bound(c.v, sq, c.size(a), d_qa), ta)) continue;
        for (std::size_t j = i + 1; j < universe->size(); ++j) {
            const EdgeId b = (*universe)[j];
            const Triple t = sorted_triple(q, a, b);
            if (detail::skip(col.floor(), edge_bound_value(c.v, c.size(b)), t)) continue;
            const auto d_qb = static_cast<std::int64_t>(qlist[static_cast<std::size_t>(b)].size());
            if (detail::skip(col.floor(), pair_bound(c.v, sq, c.size(b), d_qb), t)) continue;
            const std::int64_t d_ab = intersection_size(c.edge(a), c.edge(b));
            if (closed_only && d_ab == 0) continue;

            // region sizes in rank order of (q, a, b)
            EdgeId ids[3] = {q, a, b};
            std::int64_t pair_with[3];  // intersection size of the pair omitting ids[k]
            pair_with[0] = d_ab;
            pair_with[1] = d_qb;
            pair_with[2] = d_qa;
            // sort ids, permuting the opposite-pair sizes alongside
            for (int s = 0; s < 2; ++s)
                for (int k = 0; k < 2 - s; ++k)
                    if (ids[k] > ids[k + 1]) {
                        std::swap(ids[k], ids[k + 1]);
                        std::swap(pair_with[k], pair_with[k + 1]);
                    }
            RegionSizes r;
            r.x = c.size(ids[0]);
            r.y = c.size(ids[1]);
            r.z = c.size(ids[2]);
            r.yz = pair_with[0];
            r.xz = pair_with[1];
            r.xy = pair_with[2];
            if (detail::skip(col.floor(), triplet_bound(c.v, r), t)) continue;
            intersection(qlist[static_cast<std::size_t>(a)], qlist[static_cast<std::size_t>(b)],
                         scratch);
            r.xyz = static_cast<std::int64_t>(scratch.size());
            col.offer({weight(r, c.v), t, r});
        }
    }
}

}  // namespace

std::vector<TripletResult> max_search(const CanonicalHypergraph& h, const SearchConfig& cfg) {
    detail::require_searchable(h);
    if (cfg.k < 1) throw std::invalid_argument("k must be >= 1");
    if (cfg.degree_floor != 1 && cfg.degree_floor != 2)
        throw std::invalid_argument("degree_floor must be 1 or 2");
    if (cfg.tau.den <= 0 || cfg.tau.num < 0)
        throw std::invalid_argument("threshold must be a nonnegative rational");

    const Ctx ctx{h, cfg.variant, cfg.degree_floor};
    Collector col(cfg.mode, cfg.k, cfg.tau, cfg.on_improve);

    if (cfg.mode == SearchMode::local) {
        const auto n = static_cast<EdgeId>(h.g.edge_count());
        EdgeId q = -1;
        for (EdgeId e = 0; e < n; ++e)
            if (h.g.edge_labels[static_cast<std::size_t>(e)] == cfg.query_label) q = e;
        if (q < 0) throw std::invalid_argument("local search: unknown hyperedge label");
        local_search(ctx, q, col);
        return detail::materialize(col.sorted_take(), h, cfg.variant);
    }

    if (cfg.threads <= 1) {
        if (cfg.variant == Variant::independent)
            seq_independent(ctx, col);
        else
            seq_closed(ctx, col);
        return detail::materialize(col.sorted_take(), h, cfg.variant);
    }

    const PairIndex idx =
        PairIndex::build(h, cfg.variant != Variant::independent, cfg.degree_floor);
    const int workers = std::min<int>(cfg.threads, static_cast<int>(h.g.edge_count()));
    std::vector<Collector> cols(static_cast<std::size_t>(workers),
                                Collector(cfg.mode, cfg.k, cfg.tau, nullptr));
    detail::SharedFloor shared;
    std::atomic<EdgeId> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            if (cfg.variant == Variant::independent)
                par_independent_worker(ctx, idx, cols[static_cast<std::size_t>(w)], shared, next);
            else
                par_closed_worker(ctx, idx, cols[static_cast<std::size_t>(w)], shared, next);
        });
    }
    for (auto& t : pool) t.join();
    for (auto& c : cols) col.merge_from(c);
    return detail::materialize(col.sorted_take(), h, cfg.variant);
}

}  // namespace hypertriplet
