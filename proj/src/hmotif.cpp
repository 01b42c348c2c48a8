#include "hypertriplet/hmotif.hpp"

#include <algorithm>
#include <array>

#include "hypertriplet/intersect.hpp"
#include "hypertriplet/pair_index.hpp"

namespace hypertriplet {

namespace {

constexpr std::array<std::array<int, 2>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};

constexpr std::array<std::array<int, 3>, 6> kPerms{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

int pair_slot(int i, int j) {
    if (i > j) std::swap(i, j);
    for (int s = 0; s < 3; ++s)
        if (kPairs[static_cast<std::size_t>(s)][0] == i && kPairs[static_cast<std::size_t>(s)][1] == j)
            return s;
    return -1;
}

bool bit(std::uint8_t w, int i) { return (w >> i) & 1; }

bool pair_intersects(std::uint8_t w, int slot) { return bit(w, 3 + slot) || bit(w, 6); }

int intersecting_pairs(std::uint8_t w) {
    int n = 0;
    for (int s = 0; s < 3; ++s) n += pair_intersects(w, s);
    return n;
}

bool closed_word(std::uint8_t w) { return intersecting_pairs(w) == 3; }

bool pairwise_with(std::uint8_t w, int i, int other) { return bit(w, 3 + pair_slot(i, other)); }

// Two hyperedges are forced equal as sets when every cell belonging to
// exactly one of them is empty.
bool duplicate_forced_word(std::uint8_t w) {
    for (int s = 0; s < 3; ++s) {
        const int i = kPairs[static_cast<std::size_t>(s)][0];
        const int j = kPairs[static_cast<std::size_t>(s)][1];
        const int other = 3 - i - j;
        if (!bit(w, i) && !bit(w, j) && !pairwise_with(w, i, other) && !pairwise_with(w, j, other))
            return true;
    }
    return false;
}

std::uint8_t permute_word(std::uint8_t w, const std::array<int, 3>& p) {
    std::uint8_t out = 0;
    for (int i = 0; i < 3; ++i)
        if (bit(w, p[static_cast<std::size_t>(i)])) out |= static_cast<std::uint8_t>(1u << i);
    for (int s = 0; s < 3; ++s) {
        const int i = kPairs[static_cast<std::size_t>(s)][0];
        const int j = kPairs[static_cast<std::size_t>(s)][1];
        const int src = pair_slot(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
        if (bit(w, 3 + src)) out |= static_cast<std::uint8_t>(1u << (3 + s));
    }
    if (bit(w, 6)) out |= 1u << 6;
    return out;
}

std::uint8_t canonical_word(std::uint8_t w) {
    std::uint8_t best = permute_word(w, kPerms[0]);
    for (std::size_t i = 1; i < kPerms.size(); ++i)
        best = std::min(best, permute_word(w, kPerms[i]));
    return best;
}

struct Tables {
    std::vector<MotifClass> classes;      // the 30, ascending canonical word
    std::array<std::int16_t, 128> class_of;  // word -> class id, -1 if disconnected
    std::array<std::uint8_t, 128> canon_of;

    Tables() {
        class_of.fill(-1);
        for (int w = 0; w < 128; ++w) canon_of[static_cast<std::size_t>(w)] = canonical_word(static_cast<std::uint8_t>(w));
        std::vector<std::uint8_t> canon_words;
        for (int w = 0; w < 128; ++w) {
            const auto u = static_cast<std::uint8_t>(w);
            if (intersecting_pairs(u) < 2) continue;
            canon_words.push_back(canon_of[static_cast<std::size_t>(w)]);
        }
        std::sort(canon_words.begin(), canon_words.end());
        canon_words.erase(std::unique(canon_words.begin(), canon_words.end()), canon_words.end());
        for (std::size_t i = 0; i < canon_words.size(); ++i) {
            MotifClass m;
            m.id = static_cast<int>(i);
            m.canonical = canon_words[i];
            m.closed = closed_word(m.canonical);
            m.duplicate_forced = duplicate_forced_word(m.canonical);
            classes.push_back(m);
        }
        for (int w = 0; w < 128; ++w) {
            const auto u = static_cast<std::uint8_t>(w);
            if (intersecting_pairs(u) < 2) continue;
            const auto c = canon_of[static_cast<std::size_t>(w)];
            const auto it = std::lower_bound(canon_words.begin(), canon_words.end(), c);
            class_of[static_cast<std::size_t>(w)] = static_cast<std::int16_t>(it - canon_words.begin());
        }
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

}  // namespace

Pattern Pattern::of(const RegionPartition& p) {
    std::uint8_t w = 0;
    if (p.a > 0) w |= 1u << 0;
    if (p.b > 0) w |= 1u << 1;
    if (p.c > 0) w |= 1u << 2;
    if (p.ab > 0) w |= 1u << 3;
    if (p.ac > 0) w |= 1u << 4;
    if (p.bc > 0) w |= 1u << 5;
    if (p.abc > 0) w |= 1u << 6;
    return Pattern{w};
}

std::string pattern_string(Pattern p) {
    std::string s(7, '0');
    for (int i = 0; i < 7; ++i)
        if (bit(p.bits, i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

Pattern permute_pattern(Pattern p, const std::array<int, 3>& perm) {
    return Pattern{permute_word(p.bits, perm)};
}

std::span<const MotifClass> motif_classes() { return {tables().classes}; }

Classification classify(Pattern p) {
    const auto& t = tables();
    const auto id = t.class_of[p.bits];
    if (id < 0) return {PatternKind::disconnected, nullptr};
    const MotifClass* cls = &t.classes[static_cast<std::size_t>(id)];
    return {cls->duplicate_forced ? PatternKind::degenerate : PatternKind::motif, cls};
}

CensusReport census(const CanonicalHypergraph& h, std::optional<std::size_t> max_edge_size) {
    CensusReport rep;
    rep.max_edge_size = max_edge_size;

    const CanonicalHypergraph* use = &h;
    CanonicalHypergraph filtered;
    if (max_edge_size) {
        Hypergraph sub;
        sub.node_labels = h.g.node_labels;
        for (std::size_t e = 0; e < h.g.edge_count(); ++e) {
            if (h.g.edges[e].size() > *max_edge_size) {
                ++rep.edges_filtered;
                continue;
            }
            sub.edges.push_back(h.g.edges[e]);
            sub.edge_labels.push_back(h.g.edge_labels[e]);
        }
        sub.node_adj.assign(h.g.node_count(), {});
        for (std::size_t e = 0; e < sub.edges.size(); ++e)
            for (NodeId v : sub.edges[e])
                sub.node_adj[static_cast<std::size_t>(v)].push_back(static_cast<EdgeId>(e));
        filtered = canonicalize(sub);
        use = &filtered;
    }

    const auto& g = *use;
    const auto n = static_cast<EdgeId>(g.g.edge_count());
    if (n < 3) return rep;
    const PairIndex idx = PairIndex::build(g, /*with_lists=*/true);

    const auto tally = [&](EdgeId a, EdgeId b, EdgeId c, const PairIndex::Entry& eab,
                           const PairIndex::Entry& ebc, const PairIndex::Entry* eac) {
        RegionSizes r;
        r.x = static_cast<std::int64_t>(g.g.edges[static_cast<std::size_t>(a)].size());
        r.y = static_cast<std::int64_t>(g.g.edges[static_cast<std::size_t>(b)].size());
        r.z = static_cast<std::int64_t>(g.g.edges[static_cast<std::size_t>(c)].size());
        r.xy = eab.size;
        r.yz = ebc.size;
        r.xz = eac ? eac->size : 0;
        // triple intersection from the smallest available pair list
        const PairIndex::Entry* smallest = &eab;
        EdgeId opposite = c;
        if (ebc.size < smallest->size) {
            smallest = &ebc;
            opposite = a;
        }
        if (eac && eac->size < smallest->size) {
            smallest = eac;
            opposite = b;
        }
        r.xyz = intersection_size(idx.list(smallest->list),
                                  g.g.edges[static_cast<std::size_t>(opposite)]);
        const Classification cl = classify(Pattern::of(to_partition(r)));
        ++rep.class_counts[static_cast<std::size_t>(cl.cls->id)];
        ++rep.connected_triplets;
        if (cl.kind == PatternKind::degenerate) ++rep.degenerate_triplets;
    };

    // wedge enumeration: every connected triplet has a center edge
    // intersecting the other two; open triples have exactly one center,
    // closed ones three (counted at the smallest-rank center).
    for (EdgeId b = 0; b < n; ++b) {
        const auto nb = idx.neighbors(b);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const EdgeId a = nb[i].other;
                const EdgeId c = nb[j].other;
                const PairIndex::Entry* eac = idx.find(a, c);
                if (eac) {
                    if (b < a) tally(a, b, c, nb[i], nb[j], eac);
                } else {
                    tally(a, b, c, nb[i], nb[j], nullptr);
                }
            }
        }
    }
    return rep;
}

}  // namespace hypertriplet
