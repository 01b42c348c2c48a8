#include "hypertriplet/merge.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hypertriplet {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

std::string dot_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

MergeGraph build_merge_graph(std::span<const TripletResult> triplets) {
    if (triplets.empty()) throw std::invalid_argument("build_merge_graph: no triplets");
    std::map<std::pair<EdgeId, EdgeId>, std::int64_t> weights;
    for (const auto& t : triplets) {
        const EdgeId x = t.ranks.x, y = t.ranks.y, z = t.ranks.z;
        ++weights[{x, y}];
        ++weights[{x, z}];
        ++weights[{y, z}];
    }
    MergeGraph g;
    g.edges.reserve(weights.size());
    std::vector<EdgeId> verts;
    for (const auto& [pair, w] : weights) {
        g.edges.push_back({pair.first, pair.second, w});
        verts.push_back(pair.first);
        verts.push_back(pair.second);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    g.vertices = std::move(verts);
    return g;
}

ComponentSet components(const MergeGraph& g) {
    ComponentSet out;
    if (g.vertices.empty()) return out;
    // compact vertex indices
    const auto index_of = [&](EdgeId v) {
        return static_cast<std::size_t>(
            std::lower_bound(g.vertices.begin(), g.vertices.end(), v) - g.vertices.begin());
    };
    UnionFind uf(g.vertices.size());
    for (const auto& e : g.edges) uf.unite(index_of(e.lo), index_of(e.hi));

    std::map<std::size_t, std::vector<EdgeId>> groups;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        groups[uf.find(i)].push_back(g.vertices[i]);
    for (auto& [root, members] : groups) out.components.push_back(std::move(members));
    std::sort(out.components.begin(), out.components.end(),
              [](const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a.front() < b.front();
              });
    return out;
}

std::string export_dot(const MergeGraph& g, const CanonicalHypergraph& h) {
    std::ostringstream out;
    out << "graph triplet_merge {\n";
    for (EdgeId v : g.vertices)
        out << "  n" << v << " [label=\"" << dot_escape(h.g.edge_labels[static_cast<std::size_t>(v)])
            << "\"];\n";
    for (const auto& e : g.edges)
        out << "  n" << e.lo << " -- n" << e.hi << " [weight=" << e.weight
            << ", penwidth=" << e.weight << "];\n";
    out << "}\n";
    return out.str();
}

}  // namespace hypertriplet
