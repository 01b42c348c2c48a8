#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hypertriplet/hypergraph.hpp"
#include "testutil.hpp"

using namespace hypertriplet;

TEST_CASE("hyperlist basics") {
    LoadReport rep;
    const Hypergraph h = testutil::load_text("1 2 3\n2 3 4\n", &rep);
    CHECK(h.node_count() == 4);
    CHECK(h.edge_count() == 2);
    CHECK(h.degree_sum() == 6);
    CHECK(rep.duplicate_members == 0);
    CHECK(check_incidence(h));
}

TEST_CASE("hyperlist dedup and comments") {
    LoadReport rep;
    const Hypergraph h = testutil::load_text("# comment\na a b\n\n  \nb c # trailing\n", &rep);
    CHECK(h.edge_count() == 2);
    CHECK(h.edges[0].size() == 2);
    CHECK(rep.duplicate_members == 1);
    CHECK(check_incidence(h));
}

TEST_CASE("hyperlist accepts CRLF") {
    const Hypergraph h = testutil::load_text("1 2\r\n2 3\r\n");
    CHECK(h.edge_count() == 2);
    CHECK(h.node_count() == 3);
}

TEST_CASE("hyperlist errors") {
    std::istringstream empty("# nothing here\n\n");
    CHECK_THROWS_AS(load_hyperlist(empty), std::runtime_error);
}

TEST_CASE("golden construction counts") {
    const Hypergraph h = testutil::load_text(testutil::golden_hyperlist());
    const HypergraphStats s = stats(h);
    CHECK(s.node_count == 26);
    CHECK(s.edge_count == 3);
    CHECK(s.degree_sum == 35);
    CHECK(s.max_edge_size == 12);
}

TEST_CASE("stats of a singleton edge") {
    const Hypergraph h = testutil::load_text("1\n");
    CHECK(stats(h) == HypergraphStats{1, 1, 1, 1});
}

TEST_CASE("bipartite basics") {
    std::istringstream in("e1 a\ne1 b\ne2 b\n");
    const Hypergraph h = load_bipartite(in);
    CHECK(h.node_count() == 2);
    CHECK(h.edge_count() == 2);
    CHECK(h.degree_sum() == 3);
    CHECK(h.edge_labels[0] == "e1");
    CHECK(check_incidence(h));
}

TEST_CASE("bipartite dedups membership pairs") {
    std::istringstream in("e1 a\ne1 a\n");
    LoadReport rep;
    const Hypergraph h = load_bipartite(in, &rep);
    CHECK(h.degree_sum() == 1);
    CHECK(rep.duplicate_members == 1);
}

TEST_CASE("bipartite rejects malformed lines") {
    std::istringstream in("e1 a b\n");
    CHECK_THROWS_AS(load_bipartite(in), std::runtime_error);
    std::istringstream empty("");
    CHECK_THROWS_AS(load_bipartite(empty), std::runtime_error);
}

TEST_CASE("bipartite and hyperlist loads of the same hypergraph agree") {
    const std::string hyper = "1 2 3\n2 3 4\n4 5\n";
    const std::string bip = "e0 1\ne0 2\ne0 3\ne1 2\ne1 3\ne1 4\ne2 4\ne2 5\n";
    const Hypergraph a = testutil::load_text(hyper);
    std::istringstream bin(bip);
    const Hypergraph b = load_bipartite(bin);
    REQUIRE(a.edge_count() == b.edge_count());
    REQUIRE(a.node_count() == b.node_count());
    const CanonicalHypergraph ca = canonicalize(a), cb = canonicalize(b);
    for (std::size_t e = 0; e < a.edge_count(); ++e) {
        REQUIRE(ca.g.edges[e].size() == cb.g.edges[e].size());
        for (std::size_t i = 0; i < ca.g.edges[e].size(); ++i) {
            const auto la = ca.g.node_labels[static_cast<std::size_t>(ca.g.edges[e][i])];
            const auto lb = cb.g.node_labels[static_cast<std::size_t>(cb.g.edges[e][i])];
            CHECK(la == lb);
        }
    }
}

TEST_CASE("canonicalize orders by size with stable ties") {
    const Hypergraph h = testutil::load_text("1 2\n1 2 3 4 5\n6 7 8\n9 10\n");
    const CanonicalHypergraph c = canonicalize(h);
    CHECK(c.g.edges[0].size() == 5);
    CHECK(c.g.edges[1].size() == 3);
    CHECK(c.g.edges[2].size() == 2);
    CHECK(c.g.edges[3].size() == 2);
    // equal-size edges keep original order
    CHECK(c.rank_to_orig[2] == 0);
    CHECK(c.rank_to_orig[3] == 3);
    CHECK(check_incidence(c.g));
    // label maps compose
    for (std::size_t rank = 0; rank < 4; ++rank)
        CHECK(c.g.edge_labels[rank] ==
              h.edge_labels[static_cast<std::size_t>(c.rank_to_orig[rank])]);
}

TEST_CASE("canonicalize is idempotent") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto c1 = testutil::random_chung_lu(seed, 50, 60);
        const CanonicalHypergraph c2 = canonicalize(c1.g);
        for (std::size_t i = 0; i < c2.rank_to_orig.size(); ++i)
            CHECK(c2.rank_to_orig[i] == static_cast<EdgeId>(i));
        CHECK(c2.g.edges == c1.g.edges);
    }
}

TEST_CASE("canonical size sequence is the sorted input multiset") {
    auto sizes = zipf_sequence(50, 0.8, 20);
    auto degrees = zipf_sequence(70, 0.6, 12);
    const auto ssum = std::accumulate(sizes.begin(), sizes.end(), std::int64_t{0});
    const auto dsum = std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0});
    if (dsum < ssum)
        pad_to_sum(degrees, ssum);
    else
        pad_to_sum(sizes, dsum);
    const Hypergraph raw = gen_chung_lu(degrees, sizes, 99);
    const CanonicalHypergraph c = canonicalize(raw);

    std::vector<std::size_t> canon_sizes, raw_sizes;
    for (const auto& e : c.g.edges) canon_sizes.push_back(e.size());
    for (const auto& e : raw.edges) raw_sizes.push_back(e.size());
    CHECK(std::is_sorted(canon_sizes.rbegin(), canon_sizes.rend()));
    std::vector<std::size_t> a = canon_sizes, b = raw_sizes;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
}

TEST_CASE("export and reload round-trips the structure") {
    for (std::uint64_t seed = 2; seed <= 6; ++seed) {
        const auto c = testutil::random_chung_lu(seed, 40, 50);
        std::ostringstream out;
        write_hyperlist(c.g, out);
        const Hypergraph back = testutil::load_text(out.str());
        REQUIRE(back.edge_count() == c.g.edge_count());
        const CanonicalHypergraph cb = canonicalize(back);
        const auto label_set = [](const CanonicalHypergraph& g, std::size_t e) {
            std::vector<std::string> ls;
            for (NodeId v : g.g.edges[e]) ls.push_back(g.g.node_labels[static_cast<std::size_t>(v)]);
            std::sort(ls.begin(), ls.end());
            return ls;
        };
        for (std::size_t e = 0; e < cb.g.edge_count(); ++e)
            CHECK(label_set(cb, e) == label_set(c, e));
        CHECK(check_incidence(back));
    }
}

TEST_CASE("bipartite export mirrors import") {
    std::istringstream in("r a\nr b\ns b\n");
    const Hypergraph h = load_bipartite(in);
    std::ostringstream out;
    write_bipartite(h, out);
    CHECK(out.str() == "r a\nr b\ns b\n");
}
