#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "hypertriplet/hypergraph.hpp"

namespace hypertriplet {

// Set operations on strictly ascending id lists. When one side is much
// shorter, the size routines gallop (binary search per element) instead of
// merging.

inline std::int64_t intersection_size(std::span<const NodeId> a, std::span<const NodeId> b) {
    if (a.size() > b.size()) std::swap(a, b);
    if (a.empty()) return 0;
    std::int64_t n = 0;
    if (a.size() * 16 < b.size()) {
        auto lo = b.begin();
        for (NodeId v : a) {
            lo = std::lower_bound(lo, b.end(), v);
            if (lo == b.end()) break;
            if (*lo == v) {
                ++n;
                ++lo;
            }
        }
        return n;
    }
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

inline void intersection(std::span<const NodeId> a, std::span<const NodeId> b,
                         std::vector<NodeId>& out) {
    out.clear();
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            out.push_back(*i);
            ++i;
            ++j;
        }
    }
}

inline std::int64_t intersection_size3(std::span<const NodeId> a, std::span<const NodeId> b,
                                       std::span<const NodeId> c) {
    std::int64_t n = 0;
    auto i = a.begin();
    auto j = b.begin();
    auto k = c.begin();
    while (i != a.end() && j != b.end() && k != c.end()) {
        const NodeId m = std::max({*i, *j, *k});
        if (*i == *j && *j == *k) {
            ++n;
            ++i;
            ++j;
            ++k;
            continue;
        }
        while (i != a.end() && *i < m) ++i;
        while (j != b.end() && *j < m) ++j;
        while (k != c.end() && *k < m) ++k;
    }
    return n;
}

}  // namespace hypertriplet
