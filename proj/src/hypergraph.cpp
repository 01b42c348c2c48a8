#include "hypertriplet/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hypertriplet {

namespace {

// Strips '#' comments and a trailing '\r'; returns whitespace-split tokens.
std::vector<std::string> tokenize(std::string line) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) tokens.push_back(std::move(t));
    return tokens;
}

void build_adjacency(Hypergraph& h, std::size_t n_nodes) {
    h.node_adj.assign(n_nodes, {});
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        auto& edge = h.edges[e];
        std::sort(edge.begin(), edge.end());
        for (NodeId v : edge) h.node_adj[static_cast<std::size_t>(v)].push_back(static_cast<EdgeId>(e));
    }
    // adjacency entries are appended in ascending edge order already
}

}  // namespace

std::uint64_t Hypergraph::degree_sum() const {
    std::uint64_t m = 0;
    for (const auto& e : edges) m += e.size();
    return m;
}

Hypergraph load_hyperlist(std::istream& in, LoadReport* report) {
    if (!in) throw std::runtime_error("load_hyperlist: unreadable stream");
    Hypergraph h;
    LoadReport rep;
    std::unordered_map<std::string, NodeId> intern;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(std::move(line));
        if (tokens.empty()) continue;
        std::vector<NodeId> edge;
        edge.reserve(tokens.size());
        for (auto& t : tokens) {
            auto [it, inserted] = intern.try_emplace(std::move(t), static_cast<NodeId>(intern.size()));
            if (inserted) h.node_labels.push_back(it->first);
            edge.push_back(it->second);
        }
        std::sort(edge.begin(), edge.end());
        auto last = std::unique(edge.begin(), edge.end());
        rep.duplicate_members += static_cast<std::uint64_t>(edge.end() - last);
        edge.erase(last, edge.end());
        h.edge_labels.push_back(std::to_string(h.edges.size()));
        h.edges.push_back(std::move(edge));
    }
    if (h.edges.empty()) throw std::runtime_error("load_hyperlist: no hyperedges in input");
    build_adjacency(h, intern.size());
    if (report) *report = rep;
    return h;
}

Hypergraph load_bipartite(std::istream& in, LoadReport* report) {
    if (!in) throw std::runtime_error("load_bipartite: unreadable stream");
    Hypergraph h;
    LoadReport rep;
    std::unordered_map<std::string, NodeId> node_intern;
    std::unordered_map<std::string, EdgeId> edge_intern;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(std::move(line));
        if (tokens.empty()) continue;
        if (tokens.size() != 2)
            throw std::runtime_error("load_bipartite: line " + std::to_string(line_no) +
                                     ": expected \"edge_label node_label\"");
        auto [eit, enew] = edge_intern.try_emplace(std::move(tokens[0]),
                                                   static_cast<EdgeId>(edge_intern.size()));
        if (enew) {
            h.edge_labels.push_back(eit->first);
            h.edges.emplace_back();
        }
        auto [nit, nnew] = node_intern.try_emplace(std::move(tokens[1]),
                                                   static_cast<NodeId>(node_intern.size()));
        if (nnew) h.node_labels.push_back(nit->first);
        h.edges[static_cast<std::size_t>(eit->second)].push_back(nit->second);
    }
    if (h.edges.empty()) throw std::runtime_error("load_bipartite: no hyperedges in input");
    for (auto& edge : h.edges) {
        std::sort(edge.begin(), edge.end());
        auto last = std::unique(edge.begin(), edge.end());
        rep.duplicate_members += static_cast<std::uint64_t>(edge.end() - last);
        edge.erase(last, edge.end());
    }
    build_adjacency(h, node_intern.size());
    if (report) *report = rep;
    return h;
}

void write_hyperlist(const Hypergraph& h, std::ostream& out) {
    for (const auto& edge : h.edges) {
        for (std::size_t i = 0; i < edge.size(); ++i) {
            if (i) out << ' ';
            out << h.node_labels[static_cast<std::size_t>(edge[i])];
        }
        out << '\n';
    }
}

void write_bipartite(const Hypergraph& h, std::ostream& out) {
    for (std::size_t e = 0; e < h.edges.size(); ++e)
        for (NodeId v : h.edges[e])
            out << h.edge_labels[e] << ' ' << h.node_labels[static_cast<std::size_t>(v)] << '\n';
}

HypergraphStats stats(const Hypergraph& h) {
    HypergraphStats s;
    s.node_count = h.node_count();
    s.edge_count = h.edge_count();
    s.degree_sum = h.degree_sum();
    for (const auto& e : h.edges) s.max_edge_size = std::max(s.max_edge_size, e.size());
    return s;
}

bool check_incidence(const Hypergraph& h) {
    std::uint64_t memberships = 0;
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        const auto& edge = h.edges[e];
        if (edge.empty()) return false;
        if (!std::is_sorted(edge.begin(), edge.end())) return false;
        if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) return false;
        for (NodeId v : edge) {
            if (v < 0 || static_cast<std::size_t>(v) >= h.node_adj.size()) return false;
            const auto& adj = h.node_adj[static_cast<std::size_t>(v)];
            if (!std::binary_search(adj.begin(), adj.end(), static_cast<EdgeId>(e))) return false;
        }
        memberships += edge.size();
    }
    std::uint64_t adj_total = 0;
    for (std::size_t v = 0; v < h.node_adj.size(); ++v) {
        const auto& adj = h.node_adj[v];
        if (!std::is_sorted(adj.begin(), adj.end())) return false;
        if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) return false;
        for (EdgeId e : adj) {
            if (e < 0 || static_cast<std::size_t>(e) >= h.edges.size()) return false;
            const auto& edge = h.edges[static_cast<std::size_t>(e)];
            if (!std::binary_search(edge.begin(), edge.end(), static_cast<NodeId>(v))) return false;
        }
        adj_total += adj.size();
    }
    return memberships == adj_total;
}

CanonicalHypergraph canonicalize(const Hypergraph& h) {
    CanonicalHypergraph c;
    const std::size_t n_edges = h.edge_count();
    c.rank_to_orig.resize(n_edges);
    std::iota(c.rank_to_orig.begin(), c.rank_to_orig.end(), 0);
    std::stable_sort(c.rank_to_orig.begin(), c.rank_to_orig.end(), [&](EdgeId a, EdgeId b) {
        return h.edges[static_cast<std::size_t>(a)].size() > h.edges[static_cast<std::size_t>(b)].size();
    });
    c.orig_to_rank.resize(n_edges);
    for (std::size_t rank = 0; rank < n_edges; ++rank)
        c.orig_to_rank[static_cast<std::size_t>(c.rank_to_orig[rank])] = static_cast<EdgeId>(rank);

    c.g.node_labels = h.node_labels;
    c.g.edges.reserve(n_edges);
    c.g.edge_labels.reserve(n_edges);
    for (std::size_t rank = 0; rank < n_edges; ++rank) {
        const auto orig = static_cast<std::size_t>(c.rank_to_orig[rank]);
        c.g.edges.push_back(h.edges[orig]);
        c.g.edge_labels.push_back(h.edge_labels[orig]);
    }
    c.g.node_adj.assign(h.node_count(), {});
    for (std::size_t v = 0; v < h.node_count(); ++v) {
        auto& adj = c.g.node_adj[v];
        adj.reserve(h.node_adj[v].size());
        for (EdgeId e : h.node_adj[v]) adj.push_back(c.orig_to_rank[static_cast<std::size_t>(e)]);
        std::sort(adj.begin(), adj.end());
    }
    return c;
}

}  // namespace hypertriplet
