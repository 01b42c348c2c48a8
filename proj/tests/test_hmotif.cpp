#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <map>
#include <set>

#include "hypertriplet/hmotif.hpp"
#include "hypertriplet/search.hpp"
#include "testutil.hpp"

using namespace hypertriplet;

namespace {

// Oracle census: direct triple enumeration with std::set region computation.
std::map<int, std::uint64_t> oracle_census(const CanonicalHypergraph& h,
                                           std::optional<std::size_t> max_edge_size) {
    std::map<int, std::uint64_t> counts;
    std::vector<EdgeId> keep;
    for (EdgeId e = 0; e < static_cast<EdgeId>(h.g.edge_count()); ++e)
        if (!max_edge_size || h.g.edges[static_cast<std::size_t>(e)].size() <= *max_edge_size)
            keep.push_back(e);
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            for (std::size_t k = j + 1; k < keep.size(); ++k) {
                const RegionSizes r = testutil::set_region_sizes(h, keep[i], keep[j], keep[k]);
                const int touching = (r.xy > 0) + (r.xz > 0) + (r.yz > 0);
                if (touching < 2) continue;  // disconnected
                const Classification c = classify(Pattern::of(to_partition(r)));
                REQUIRE(c.cls != nullptr);
                ++counts[c.cls->id];
            }
    return counts;
}

}  // namespace

TEST_CASE("pattern extraction") {
    CHECK(Pattern::of({7, 5, 6, 2, 2, 3, 1}).bits == 0b1111111);
    CHECK(Pattern::of({2, 2, 2, 0, 0, 0, 0}).bits == 0b0000111);
    CHECK(Pattern::of({0, 0, 0, 0, 0, 0, 4}).bits == 0b1000000);
}

TEST_CASE("the class universe has 30 classes, 24 closed") {
    const auto classes = motif_classes();
    CHECK(classes.size() == 30);
    int closed = 0, dup = 0;
    for (const auto& c : classes) {
        closed += c.closed;
        dup += c.duplicate_forced;
    }
    CHECK(closed == 24);
    CHECK(dup == 4);
    // ids are ascending canonical words
    for (std::size_t i = 1; i < classes.size(); ++i)
        CHECK(classes[i].canonical > classes[i - 1].canonical);
}

TEST_CASE("exhaustive 128-pattern enumeration reproduces the universe") {
    std::set<std::uint8_t> valid_canon;
    int disconnected = 0;
    for (int w = 0; w < 128; ++w) {
        const Classification c = classify(Pattern{static_cast<std::uint8_t>(w)});
        if (c.kind == PatternKind::disconnected) {
            ++disconnected;
            continue;
        }
        valid_canon.insert(c.cls->canonical);
    }
    CHECK(valid_canon.size() == 30);
    CHECK(disconnected == 128 - 96);  // 96 raw patterns have >= 2 intersecting pairs
}

TEST_CASE("classification is permutation invariant") {
    constexpr std::array<std::array<int, 3>, 6> perms{{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    }};
    for (int w = 0; w < 128; ++w) {
        const Pattern p{static_cast<std::uint8_t>(w)};
        const Classification base = classify(p);
        for (const auto& perm : perms) {
            const Classification c = classify(permute_pattern(p, perm));
            CHECK(c.kind == base.kind);
            if (base.cls) {
                REQUIRE(c.cls != nullptr);
                CHECK(c.cls->id == base.cls->id);
            }
        }
    }
}

TEST_CASE("duplicate-forced patterns classify as degenerate") {
    // N(ab) and N(abc) non-empty, everything else empty: the third edge is
    // the common core and the first two are forced equal
    const Classification c = classify(Pattern{0b1001000});
    CHECK(c.kind == PatternKind::degenerate);
    // all-ones pattern is a plain closed motif
    const Classification full = classify(Pattern{0b1111111});
    CHECK(full.kind == PatternKind::motif);
    CHECK(full.cls->closed);
    // a single pair bit is disconnected
    CHECK(classify(Pattern{0b0001000}).kind == PatternKind::disconnected);
}

TEST_CASE("census of the golden construction") {
    const auto h = testutil::canonical_of(testutil::golden_hyperlist());
    const CensusReport rep = census(h);
    CHECK(rep.connected_triplets == 1);
    CHECK(rep.degenerate_triplets == 0);
    const Classification full = classify(Pattern{0b1111111});
    CHECK(rep.class_counts[static_cast<std::size_t>(full.cls->id)] == 1);
}

TEST_CASE("census of three identical edges is one degenerate triplet") {
    const auto h = testutil::canonical_of("1 2 3 4\n1 2 3 4\n1 2 3 4\n");
    const CensusReport rep = census(h);
    CHECK(rep.connected_triplets == 1);
    CHECK(rep.degenerate_triplets == 1);
}

TEST_CASE("census equals the brute-force classifier") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const auto h = testutil::random_chung_lu(seed, 30, 35);
        for (std::optional<std::size_t> filter :
             {std::optional<std::size_t>{}, std::optional<std::size_t>{6}}) {
            const CensusReport rep = census(h, filter);
            const auto expect = oracle_census(h, filter);
            std::uint64_t total = 0;
            for (std::size_t i = 0; i < rep.class_counts.size(); ++i) {
                const auto it = expect.find(static_cast<int>(i));
                const std::uint64_t want = it == expect.end() ? 0 : it->second;
                CHECK(rep.class_counts[i] == want);
                total += rep.class_counts[i];
            }
            CHECK(total == rep.connected_triplets);
        }
    }
}

TEST_CASE("census is invariant to input edge order") {
    const auto base = testutil::random_chung_lu(21, 25, 30);
    std::ostringstream fwd;
    write_hyperlist(base.g, fwd);
    // reverse the edge lines
    std::istringstream lines(fwd.str());
    std::vector<std::string> all;
    for (std::string l; std::getline(lines, l);) all.push_back(l);
    std::ostringstream rev;
    for (auto it = all.rbegin(); it != all.rend(); ++it) rev << *it << '\n';

    const CensusReport a = census(testutil::canonical_of(fwd.str()));
    const CensusReport b = census(testutil::canonical_of(rev.str()));
    CHECK(a.class_counts == b.class_counts);
    CHECK(a.connected_triplets == b.connected_triplets);
}

TEST_CASE("max-edge-size filter drops large edges") {
    const auto h = testutil::canonical_of("1 2 3 4 5 6\n1 2\n2 3\n1 3\n");
    const CensusReport unfiltered = census(h);
    const CensusReport filtered = census(h, 3);
    CHECK(filtered.edges_filtered == 1);
    CHECK(filtered.max_edge_size == std::size_t{3});
    CHECK(unfiltered.connected_triplets == 4);  // C(4,3) all connected
    CHECK(filtered.connected_triplets == 1);    // the small triangle only
}
