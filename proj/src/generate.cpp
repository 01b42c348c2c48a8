#include "hypertriplet/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hypertriplet {

namespace {

Hypergraph assemble(std::size_t n_nodes, std::vector<std::vector<NodeId>> raw_edges,
                    GenReport* report) {
    Hypergraph h;
    h.node_labels.reserve(n_nodes);
    for (std::size_t v = 0; v < n_nodes; ++v) h.node_labels.push_back(std::to_string(v));
    h.node_adj.assign(n_nodes, {});
    GenReport rep;
    for (std::size_t e = 0; e < raw_edges.size(); ++e) {
        if (raw_edges[e].empty()) {
            ++rep.empty_edges_dropped;
            continue;
        }
        rep.memberships += raw_edges[e].size();
        const auto id = static_cast<EdgeId>(h.edges.size());
        for (NodeId v : raw_edges[e]) h.node_adj[static_cast<std::size_t>(v)].push_back(id);
        h.edge_labels.push_back(std::to_string(e));
        h.edges.push_back(std::move(raw_edges[e]));
    }
    if (report) *report = rep;
    return h;
}

}  // namespace

Hypergraph gen_er(std::size_t n_nodes, std::size_t n_edges, double p, std::uint64_t seed,
                  GenReport* report) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_er: p must be in [0, 1]");
    SplitMix64 rng(seed);
    std::vector<std::vector<NodeId>> raw(n_edges);
    for (std::size_t e = 0; e < n_edges; ++e)
        for (std::size_t v = 0; v < n_nodes; ++v)
            if (rng.next_unit() < p) raw[e].push_back(static_cast<NodeId>(v));
    return assemble(n_nodes, std::move(raw), report);
}

Hypergraph gen_chung_lu(std::span<const std::int64_t> node_degrees,
                        std::span<const std::int64_t> edge_sizes, std::uint64_t seed,
                        GenReport* report) {
    for (auto d : node_degrees)
        if (d < 0) throw std::invalid_argument("gen_chung_lu: negative node degree");
    for (auto s : edge_sizes)
        if (s < 0) throw std::invalid_argument("gen_chung_lu: negative edge size");
    const std::int64_t dm = std::accumulate(node_degrees.begin(), node_degrees.end(),
                                            std::int64_t{0});
    const std::int64_t sm = std::accumulate(edge_sizes.begin(), edge_sizes.end(), std::int64_t{0});
    if (dm != sm)
        throw std::invalid_argument("gen_chung_lu: degree and size sequences must have equal sums");
    SplitMix64 rng(seed);
    std::vector<std::vector<NodeId>> raw(edge_sizes.size());
    if (dm > 0) {
        const double m = static_cast<double>(dm);
        for (std::size_t e = 0; e < edge_sizes.size(); ++e)
            for (std::size_t v = 0; v < node_degrees.size(); ++v) {
                const double p = std::min(
                    1.0, static_cast<double>(node_degrees[v]) *
                             static_cast<double>(edge_sizes[e]) / m);
                if (rng.next_unit() < p) raw[e].push_back(static_cast<NodeId>(v));
            }
    }
    return assemble(node_degrees.size(), std::move(raw), report);
}

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> degree_sequence(
    const Hypergraph& h) {
    std::vector<std::int64_t> degrees;
    degrees.reserve(h.node_count());
    for (const auto& adj : h.node_adj) degrees.push_back(static_cast<std::int64_t>(adj.size()));
    std::vector<std::int64_t> sizes;
    sizes.reserve(h.edge_count());
    for (const auto& e : h.edges) sizes.push_back(static_cast<std::int64_t>(e.size()));
    return {std::move(degrees), std::move(sizes)};
}

std::vector<std::int64_t> zipf_sequence(std::size_t count, double exponent, std::int64_t scale) {
    std::vector<std::int64_t> seq;
    seq.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double v = static_cast<double>(scale) / std::pow(static_cast<double>(i + 1), exponent);
        seq.push_back(std::max<std::int64_t>(1, static_cast<std::int64_t>(v)));
    }
    return seq;
}

void pad_to_sum(std::vector<std::int64_t>& seq, std::int64_t target) {
    if (seq.empty()) throw std::invalid_argument("pad_to_sum: empty sequence");
    std::int64_t sum = std::accumulate(seq.begin(), seq.end(), std::int64_t{0});
    if (sum > target) throw std::invalid_argument("pad_to_sum: sum already exceeds target");
    std::size_t i = 0;
    while (sum < target) {
        ++seq[i];
        ++sum;
        i = (i + 1) % seq.size();
    }
}

}  // namespace hypertriplet
