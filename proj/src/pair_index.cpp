#include "hypertriplet/pair_index.hpp"

#include <algorithm>

namespace hypertriplet {

PairIndex PairIndex::build(const CanonicalHypergraph& h, bool with_lists, int degree_floor) {
    PairIndex idx;
    const std::size_t n_edges = h.g.edge_count();
    idx.nbrs_.assign(n_edges, {});

    // per-pass scratch, reset via the touched list
    std::vector<std::int64_t> count(n_edges, 0);
    std::vector<std::vector<NodeId>> shared(with_lists ? n_edges : 0);
    std::vector<EdgeId> touched;

    for (std::size_t x = 0; x < n_edges; ++x) {
        touched.clear();
        for (NodeId u : h.g.edges[x]) {
            const auto& adj = h.g.node_adj[static_cast<std::size_t>(u)];
            if (adj.size() < static_cast<std::size_t>(degree_floor)) continue;
            auto it = std::upper_bound(adj.begin(), adj.end(), static_cast<EdgeId>(x));
            for (; it != adj.end(); ++it) {
                const auto y = static_cast<std::size_t>(*it);
                if (count[y] == 0) touched.push_back(*it);
                ++count[y];
                if (with_lists) shared[y].push_back(u);  // u ascending per y
            }
        }
        std::sort(touched.begin(), touched.end());
        for (EdgeId y : touched) {
            const auto ys = static_cast<std::size_t>(y);
            Entry e;
            e.other = y;
            e.size = count[ys];
            if (with_lists) {
                e.list = static_cast<std::int32_t>(idx.lists_.size());
                idx.lists_.push_back(std::move(shared[ys]));
                shared[ys].clear();
            }
            idx.nbrs_[x].push_back(e);
            idx.nbrs_[ys].push_back({static_cast<EdgeId>(x), e.size, e.list});
            ++idx.pair_count_;
            idx.total_size_ += static_cast<std::uint64_t>(e.size);
            count[ys] = 0;
        }
    }
    // each nbrs_[a] is already sorted: mirrored entries (other < a) arrive in
    // ascending pass order, all before pass a appends the forward entries
    // (other > a) in ascending order
    return idx;
}

const PairIndex::Entry* PairIndex::find(EdgeId a, EdgeId b) const {
    const auto& nb = nbrs_[static_cast<std::size_t>(a)];
    auto it = std::lower_bound(nb.begin(), nb.end(), b,
                               [](const Entry& e, EdgeId v) { return e.other < v; });
    if (it == nb.end() || it->other != b) return nullptr;
    return &*it;
}

}  // namespace hypertriplet
