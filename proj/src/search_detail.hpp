#pragma once

#include <algorithm>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hypertriplet/search.hpp"

namespace hypertriplet::detail {

// Edge-cardinality upper bound as a weight: floor(size/2) for disjoint,
// size otherwise.
inline Weight edge_bound_value(Variant v, std::int64_t size) {
    return v == Variant::disjoint ? Weight{size / 2, 1} : Weight{size, 1};
}

// Current pruning threshold. `tie` is the rank triple holding the threshold
// weight; a subtree tied on weight is kept only if it could contain a
// lexicographically smaller triple (inclusive thresholds keep all ties).
struct Floor {
    bool active = false;
    Weight w{0, 1};
    Triple tie{};
    bool inclusive = false;
};

// True when a subtree with weight upper bound `ub` whose lexicographically
// least triple is `tmin` cannot contribute an acceptable result.
inline bool skip(const Floor& f, const Weight& ub, const Triple& tmin) {
    if (!f.active) return false;
    const auto c = ub <=> f.w;
    if (c == std::strong_ordering::greater) return false;
    if (c == std::strong_ordering::less) return true;
    if (f.inclusive) return false;
    return !lex_less(tmin, f.tie);
}

// Cache-admission test for the global pair store: non-strict on the weight
// part only, so exact ties found later can still read every pair they need.
inline bool admit(const Floor& f, const Weight& size_bound) {
    return !f.active || (size_bound <=> f.w) != std::strong_ordering::less;
}

struct Candidate {
    Weight w;
    Triple t;
    RegionSizes r;
};

inline bool candidate_better(const Candidate& a, const Candidate& b) {
    return result_better(a.w, a.t, b.w, b.t);
}

// Accumulates results for one search mode. offer() is authoritative (it
// re-tests acceptance), so callers may gate with skip() purely as an
// optimization.
class Collector {
public:
    Collector(SearchMode mode, int k, Weight tau, std::function<void(const Weight&)> hook)
        : mode_(mode), k_(static_cast<std::size_t>(k)), tau_(tau), hook_(std::move(hook)) {
        if (mode_ == SearchMode::local) mode_ = SearchMode::topk;  // same collection semantics
    }

    Floor floor() const {
        Floor f;
        if (mode_ == SearchMode::threshold) {
            f.active = true;
            f.w = tau_;
            f.inclusive = true;
            return f;
        }
        if (mode_ == SearchMode::max) {
            if (best_) {
                f.active = true;
                f.w = best_->w;
                f.tie = best_->t;
            }
            return f;
        }
        if (heap_.size() == k_) {
            f.active = true;
            f.w = heap_.front().w;
            f.tie = heap_.front().t;
        }
        return f;
    }

    void offer(const Candidate& c) {
        switch (mode_) {
            case SearchMode::max:
                if (!best_ || candidate_better(c, *best_)) {
                    best_ = c;
                    notify();
                }
                return;
            case SearchMode::threshold:
                if ((c.w <=> tau_) != std::strong_ordering::less) all_.push_back(c);
                return;
            default:
                if (heap_.size() < k_) {
                    heap_.push_back(c);
                    std::push_heap(heap_.begin(), heap_.end(), candidate_better);
                    if (heap_.size() == k_) notify();
                } else if (candidate_better(c, heap_.front())) {
                    std::pop_heap(heap_.begin(), heap_.end(), candidate_better);
                    heap_.back() = c;
                    std::push_heap(heap_.begin(), heap_.end(), candidate_better);
                    notify();
                }
                return;
        }
    }

    void merge_from(const Collector& other) {
        if (mode_ == SearchMode::threshold) {
            all_.insert(all_.end(), other.all_.begin(), other.all_.end());
            return;
        }
        if (other.best_) offer(*other.best_);
        for (const auto& c : other.heap_) offer(c);
    }

    std::vector<Candidate> sorted_take() {
        std::vector<Candidate> out;
        if (mode_ == SearchMode::max) {
            if (best_) out.push_back(*best_);
        } else if (mode_ == SearchMode::threshold) {
            out = std::move(all_);
        } else {
            out = std::move(heap_);
        }
        std::sort(out.begin(), out.end(), candidate_better);
        return out;
    }

private:
    void notify() {
        if (!hook_) return;
        const Floor f = floor();
        if (f.active) hook_(f.w);
    }

    SearchMode mode_;
    std::size_t k_;
    Weight tau_;
    std::optional<Candidate> best_;
    std::vector<Candidate> heap_;  // worst of the kept k at front
    std::vector<Candidate> all_;
    std::function<void(const Weight&)> hook_;
};

// Weight-only floor shared between workers. Stale reads just weaken pruning;
// equality never prunes (another worker's tie triple is unknown here).
class SharedFloor {
public:
    void publish(const Weight& w) {
        std::lock_guard lock(m_);
        if (!active_ || (w <=> w_) == std::strong_ordering::greater) {
            active_ = true;
            w_ = w;
        }
    }
    std::optional<Weight> snapshot() const {
        std::lock_guard lock(m_);
        if (!active_) return std::nullopt;
        return w_;
    }

private:
    mutable std::mutex m_;
    bool active_ = false;
    Weight w_{0, 1};
};

inline bool skip_shared(const std::optional<Weight>& shared, const Weight& ub) {
    return shared && (ub <=> *shared) == std::strong_ordering::less;
}

inline void require_searchable(const CanonicalHypergraph& h) {
    if (h.g.edge_count() < 3)
        throw std::invalid_argument("search requires at least three hyperedges");
}

inline std::vector<TripletResult> materialize(std::vector<Candidate> cands,
                                              const CanonicalHypergraph& h, Variant v) {
    std::vector<TripletResult> out;
    out.reserve(cands.size());
    for (auto& c : cands) {
        TripletResult r;
        r.ranks = c.t;
        r.labels = {h.g.edge_labels[static_cast<std::size_t>(c.t.x)],
                    h.g.edge_labels[static_cast<std::size_t>(c.t.y)],
                    h.g.edge_labels[static_cast<std::size_t>(c.t.z)]};
        r.regions = c.r;
        r.weight = c.w;
        r.variant = v;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace hypertriplet::detail
