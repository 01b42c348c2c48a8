#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hypertriplet/hypergraph.hpp"

namespace hypertriplet {

// SplitMix64 (Steele, Lea, Flood 2014). Fixed here by algorithm, not by
// library, so generated fixtures reproduce across platforms and languages.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1), 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

struct GenReport {
    std::uint64_t memberships = 0;         // successful Bernoulli trials
    std::uint64_t empty_edges_dropped = 0;
};

// Erdos-Renyi bipartite model: every (edge, node) membership is an
// independent Bernoulli(p) draw. Draw order is edge-major then node-ascending,
// one draw per pair. Node labels are "0".."n-1"; edge labels keep the
// pre-drop edge index.
Hypergraph gen_er(std::size_t n_nodes, std::size_t n_edges, double p, std::uint64_t seed,
                  GenReport* report = nullptr);

// Chung-Lu bipartite model: membership (v, e) with probability
// min(1, d_v * s_e / M) where M is the common sequence sum. Same draw order
// and labeling as gen_er. Throws std::invalid_argument on negative entries or
// mismatched sums.
Hypergraph gen_chung_lu(std::span<const std::int64_t> node_degrees,
                        std::span<const std::int64_t> edge_sizes, std::uint64_t seed,
                        GenReport* report = nullptr);

// Exact sequences of the hypergraph, suitable as gen_chung_lu input.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> degree_sequence(
    const Hypergraph& h);

// Zipf-like sequence s_i = max(1, floor(scale / (i+1)^exponent)); handy for
// heavy-tailed synthetic inputs.
std::vector<std::int64_t> zipf_sequence(std::size_t count, double exponent, std::int64_t scale);

// Pads entries round-robin until the sequence sums to `target` (requires
// sum <= target). Used to satisfy the Chung-Lu equal-sums precondition.
void pad_to_sum(std::vector<std::int64_t>& seq, std::int64_t target);

}  // namespace hypertriplet
