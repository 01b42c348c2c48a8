#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hypertriplet {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;

// Bipartite incidence structure. Hyperedges are strictly ascending node-id
// lists; node_adj mirrors them (strictly ascending edge ids per node).
// Immutable after construction; safe for concurrent reads.
struct Hypergraph {
    std::vector<std::vector<NodeId>> edges;
    std::vector<std::vector<EdgeId>> node_adj;
    std::vector<std::string> node_labels;
    std::vector<std::string> edge_labels;

    std::size_t node_count() const { return node_adj.size(); }
    std::size_t edge_count() const { return edges.size(); }
    std::uint64_t degree_sum() const;
};

struct LoadReport {
    std::uint64_t duplicate_members = 0;  // duplicate node tokens / membership pairs dropped
    std::uint64_t empty_edges = 0;        // empty hyperedges dropped
};

// One hyperedge per line, whitespace-separated node tokens. '#' starts a
// comment, blank lines are skipped, both \n and \r\n are accepted. Edge labels
// are the 0-based index of the hyperedge in input order.
Hypergraph load_hyperlist(std::istream& in, LoadReport* report = nullptr);

// "edge_label node_label" per line; duplicate membership pairs are dropped.
Hypergraph load_bipartite(std::istream& in, LoadReport* report = nullptr);

// Exports mirror the import formats; node tokens are emitted in internal
// sorted order.
void write_hyperlist(const Hypergraph& h, std::ostream& out);
void write_bipartite(const Hypergraph& h, std::ostream& out);

struct HypergraphStats {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    std::uint64_t degree_sum = 0;
    std::size_t max_edge_size = 0;

    bool operator==(const HypergraphStats&) const = default;
};

HypergraphStats stats(const Hypergraph& h);

// Full-scan incidence-symmetry check (every membership present in both
// directions, lists strictly ascending, no empty edges).
bool check_incidence(const Hypergraph& h);

// Hypergraph with edge ids permuted into ranks: cardinalities non-increasing
// along ranks, ties broken by ascending original id.
struct CanonicalHypergraph {
    Hypergraph g;
    std::vector<EdgeId> rank_to_orig;
    std::vector<EdgeId> orig_to_rank;
};

CanonicalHypergraph canonicalize(const Hypergraph& h);

}  // namespace hypertriplet
