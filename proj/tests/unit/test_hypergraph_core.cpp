#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "tcover/enumerate.hpp"
#include "tcover/error.hpp"
#include "tcover/fixtures.hpp"
#include "tcover/hypergraph.hpp"
#include "tcover/matching.hpp"
#include "tcover/prng.hpp"
#include "tcover/vertex_cover.hpp"

using namespace tcover;

TEST_SUITE("hypergraph") {
  TEST_CASE("invariants") {
    CHECK_THROWS_AS(PartiteHypergraph({2}, {}), InvalidArgument);
    CHECK_THROWS_AS(PartiteHypergraph({2, 0}, {}), InvalidArgument);
    CHECK_THROWS_AS(PartiteHypergraph({2, 2}, {{0, 2}}), InvalidArgument);
    CHECK_THROWS_AS(PartiteHypergraph({2, 2}, {{0}}), InvalidArgument);
    CHECK_THROWS_AS(PartiteHypergraph({2, 2}, {{0, 1}, {0, 1}}), InvalidArgument);
    CHECK(PartiteHypergraph::from_edges_dedup({2, 2}, {{0, 1}, {0, 1}}).edge_count() == 1);
  }

  TEST_CASE("edges are sorted and addressable") {
    PartiteHypergraph h({2, 2}, {{1, 0}, {0, 1}});
    CHECK(h.edge(0) == Edge{0, 1});
    CHECK(h.find({1, 0}) == 1);
    CHECK(h.find({1, 1}) == -1);
    CHECK(h.vertex_count() == 4);
    const auto iso = h.isolated_vertices();
    CHECK(iso.empty());
  }

  TEST_CASE(".hg round trip and fixture files") {
    const auto h = fixtures::h_star();
    CHECK(parse_hg(to_hg_string(h)) == h);
    const std::string dir = std::string(TCOVER_DATA_DIR) + "/fixtures/";
    CHECK(read_hg_file(dir + "h_star.hg") == fixtures::h_star());
    CHECK(read_hg_file(dir + "ems.hg") == fixtures::ems());
    CHECK(read_hg_file(dir + "ems_covers.hg") == fixtures::ems_covers());
    CHECK_THROWS_AS(parse_hg("3 2 2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_hg(""), ParseError);
    nlohmann::json j = h;
    CHECK(j.get<PartiteHypergraph>() == h);
  }

  TEST_CASE("fixture structure") {
    CHECK(fixtures::h_star().pairwise_intersecting());
    CHECK(fixtures::h_star().edge_count() == 4);
    const auto ems = fixtures::ems();
    CHECK(oracle::matching_number(ems) == 4);
    const auto covers = fixtures::ems_covers();
    CHECK(covers.pairwise_intersecting());
    // Every three of the four edges are met by one cover.
    for (int skip = 0; skip < 4; ++skip) {
      bool met = false;
      for (const auto& c : covers.edges()) {
        bool all = true;
        for (int i = 0; i < 4; ++i)
          if (i != skip) all = all && oracle::meet(c, ems.edge(i));
        met = met || all;
      }
      CHECK(met);
    }
    CHECK(fixtures::ems_augmented().edge_count() == 8);
  }
}

TEST_SUITE("cover number") {
  TEST_CASE("spec examples") {
    const auto hs = tau(fixtures::h_star());
    CHECK(hs.size == 2);
    CHECK(hs.certificate.verified == Verification::Valid);
    CHECK(hs.certificate.vertices == std::vector<Vertex>{{0, 0}, {0, 1}});
    CHECK(tau(fixtures::disjoint_edges(3, 4)).size == 4);
    CHECK(tau(fixtures::ems()).size == 4);
    CHECK(tau(fixtures::ems_augmented()).size == 4);
    const auto empty = tau(PartiteHypergraph({2, 2, 2}, {}));
    CHECK(empty.size == 0);
    CHECK(empty.certificate.vertices.empty());
  }

  TEST_CASE("matches brute force; certificate is a lexicographically least optimal cover") {
    RngStream rng(101);
    for (int trial = 0; trial < 400; ++trial) {
      const int r = 2 + static_cast<int>(rng.below(3));
      const int part = 1 + static_cast<int>(rng.below(3));
      const auto h = oracle::random_hypergraph(rng, r, part, static_cast<int>(rng.below(10)));
      const auto result = tau(h);
      const int expected = oracle::tau(h);
      REQUIRE(result.size == expected);
      CHECK(tau_number(h) == expected);
      CHECK(cover_number_at_most(h, expected));
      if (expected > 0) CHECK_FALSE(cover_number_at_most(h, expected - 1));
      CHECK(oracle::covers(h, result.certificate.vertices));
      CHECK(is_cover(h, result.certificate.vertices));
      CHECK(result.certificate.verified == Verification::Valid);
      // Lexicographically least among optimal covers (sorted vertex lists).
      const auto all = oracle::all_vertices(h);
      oracle::any_subset(static_cast<int>(all.size()), expected, [&](const std::vector<int>& idx) {
        std::vector<Vertex> vs;
        for (int i : idx) vs.push_back(all[i]);
        if (oracle::covers(h, vs)) REQUIRE_FALSE(vs < result.certificate.vertices);
        return false;
      });
    }
  }

  TEST_CASE("verification flags invalid certificates") {
    const auto h = fixtures::h_star();
    CHECK(verify(h, {{{0, 0}}, Verification::Unverified}).verified == Verification::Invalid);
    CHECK(verify(h, {{{1, 0}, {1, 1}}, Verification::Unverified}).verified == Verification::Valid);
  }
}

TEST_SUITE("matching") {
  TEST_CASE("bipartite matching and König cover") {
    const std::vector<std::pair<int, int>> edges{{0, 0}, {0, 1}, {1, 0}, {2, 2}};
    const auto m = bipartite_matching(3, 3, edges);
    CHECK(m.size() == 3);
    const auto [left, right] = bipartite_vertex_cover(3, 3, edges);
    CHECK(left.size() + right.size() == 3);
    for (auto [u, v] : edges)
      CHECK((std::count(left.begin(), left.end(), u) + std::count(right.begin(), right.end(), v)) > 0);
  }

  TEST_CASE("spec examples") {
    CHECK(max_matching(fixtures::disjoint_edges(3, 4)).size() == 4);
    CHECK(max_matching(fixtures::h_star()).size() == 1);
  }

  TEST_CASE("matches brute force") {
    RngStream rng(102);
    for (int trial = 0; trial < 300; ++trial) {
      const int r = 2 + static_cast<int>(rng.below(3));
      const auto h = oracle::random_hypergraph(rng, r, 1 + static_cast<int>(rng.below(4)),
                                               static_cast<int>(rng.below(11)));
      const auto ids = max_matching_ids(h);
      REQUIRE(static_cast<int>(ids.size()) == oracle::matching_number(h));
      for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b) CHECK_FALSE(oracle::meet(h.edge(ids[a]), h.edge(ids[b])));
      // Bipartite cover duality.
      if (r == 2) CHECK(static_cast<int>(ids.size()) == oracle::tau(h));
    }
  }

  TEST_CASE("skew matching") {
    const auto four = fixtures::disjoint_edges(3, 4);
    CHECK(skew_matching(four, {}, 0) == four.edges());

    const auto hs = fixtures::h_star();
    const std::vector<Vertex> r1{{0, 0}};
    const auto one = skew_matching(hs, r1, 0);
    REQUIRE(one.size() == 1);
    CHECK_FALSE(contains(one[0], {0, 0}));
    CHECK(one[0] == Edge{1, 0, 0});

    // Pinned instance with cover number 3.
    const PartiteHypergraph h3({3, 3, 3}, {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {0, 1, 2}});
    REQUIRE(tau_number(h3) == 3);
    const std::vector<Vertex> t{{0, 0}};
    const auto two = skew_matching(h3, t, 0);
    REQUIRE(two.size() == 2);
    for (const auto& e : two) CHECK_FALSE(contains(e, {0, 0}));
    for (int p = 1; p < 3; ++p) CHECK(two[0][p] != two[1][p]);

    CHECK_THROWS_AS(skew_matching(PartiteHypergraph({2, 2}, {{0, 0}}), {}, 0), InfeasibleArity);
  }

  TEST_CASE("skew matching on random instances") {
    RngStream rng(103);
    for (int trial = 0; trial < 200; ++trial) {
      const auto h = oracle::random_hypergraph(rng, 3, 3, static_cast<int>(rng.below(9)));
      const auto cert = tau(h).certificate.vertices;
      const int drop = static_cast<int>(rng.below(cert.size() + 1));
      const std::vector<Vertex> t(cert.begin(), cert.begin() + drop);
      const int a = static_cast<int>(rng.below(3));
      const auto out = skew_matching(h, t, a);
      REQUIRE(static_cast<int>(out.size()) == oracle::tau(h) - drop);
      for (std::size_t i = 0; i < out.size(); ++i) {
        CHECK(h.has_edge(out[i]));
        for (const auto& v : t) CHECK_FALSE(contains(out[i], v));
        for (std::size_t j = i + 1; j < out.size(); ++j)
          for (int p = 0; p < 3; ++p)
            if (p != a) CHECK(out[i][p] != out[j][p]);
      }
    }
  }
}

TEST_SUITE("critical subgraph") {
  TEST_CASE("spec examples") {
    const auto four = fixtures::disjoint_edges(3, 4);
    CHECK(critical_subgraph(four, 4) == four);
    auto plus = fixtures::h_star().with_edges(std::vector<Edge>{{0, 0, 0}});
    // Greedy deletion in edge order drops (0,0,0) first and keeps three edges of H*.
    const auto crit = critical_subgraph(plus, 2);
    CHECK(crit.edge_count() == 3);
    CHECK(tau_number(crit) == 2);
    // The disjoint pair alone is already critical for t = 2.
    const auto pair = PartiteHypergraph({2, 2, 2}, {{0, 0, 0}, {1, 1, 1}});
    CHECK(critical_subgraph(pair, 2) == pair);
    CHECK(critical_subgraph(fixtures::h_star(), 1).edge_count() == 1);
    CHECK_THROWS_AS(critical_subgraph(fixtures::h_star(), 3), TargetUnreachable);
  }

  TEST_CASE("result is critical and within the size bound") {
    RngStream rng(104);
    for (int trial = 0; trial < 150; ++trial) {
      const auto h = oracle::random_hypergraph(rng, 3, 3, 1 + static_cast<int>(rng.below(10)));
      const int t = 1 + static_cast<int>(rng.below(oracle::tau(h)));
      const auto ids = critical_edge_ids(h, t);
      const auto f = h.subgraph(ids);
      REQUIRE(oracle::tau(f) == t);
      for (std::size_t drop = 0; drop < ids.size(); ++drop) {
        auto rest = ids;
        rest.erase(rest.begin() + static_cast<long>(drop));
        CHECK(oracle::tau(h.subgraph(rest)) < t);
      }
      // C(r+t-1, r) with r = 3.
      CHECK(static_cast<int>(ids.size()) <= (t + 2) * (t + 1) * t / 6);
    }
  }
}

TEST_SUITE("enumeration") {
  TEST_CASE("r=2, one vertex per part: empty and single edge") {
    EnumerateOptions o;
    o.r = 2;
    o.max_part = 1;
    CHECK(enumerate_masks(o, [](std::uint64_t) { return true; }).emitted == 2);
  }

  TEST_CASE("class counts agree with naive canonicalization") {
    for (auto [r, part] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
      for (bool perms : {false, true}) {
        CAPTURE(r);
        CAPTURE(part);
        CAPTURE(perms);
        EnumerateOptions o;
        o.r = r;
        o.max_part = part;
        o.part_permutations = perms;
        std::set<std::vector<Edge>> seen;
        EdgeSpace space(r, part);
        const auto stats = enumerate_masks(o, [&](std::uint64_t mask) {
          const auto h = space.to_hypergraph(mask);
          CHECK(seen.insert(oracle::canonical(h, perms)).second);
          return true;
        });
        CHECK(stats.emitted == oracle::naive_class_count(r, part, perms));
        CHECK(seen.size() == stats.emitted);
      }
    }
  }

  TEST_CASE("pairwise-intersecting filter and edge cap") {
    EnumerateOptions o;
    o.r = 3;
    o.max_part = 2;
    o.pairwise_intersecting_only = true;
    std::size_t count = 0;
    bool saw_h_star = false;
    enumerate(o, nullptr, [&](const PartiteHypergraph& h) {
      CHECK(h.pairwise_intersecting());
      ++count;
      if (h.edge_count() >= 4 && isomorphic(h, fixtures::h_star())) saw_h_star = true;
      return true;
    });
    CHECK(saw_h_star);
    CHECK(count == oracle::naive_class_count(3, 2, false, [](const PartiteHypergraph& h) {
            return h.pairwise_intersecting();
          }));

    o.pairwise_intersecting_only = false;
    o.max_edges = 2;
    enumerate_masks(o, [](std::uint64_t mask) {
      CHECK(__builtin_popcountll(mask) <= 2);
      return true;
    });
  }

  TEST_CASE("full r=3, parts of two count is stable") {
    EnumerateOptions o;
    o.r = 3;
    o.max_part = 2;
    const auto plain = enumerate_masks(o, [](std::uint64_t) { return true; });
    CHECK(plain.emitted == oracle::naive_class_count(3, 2, false));
    o.part_permutations = true;
    const auto perms = enumerate_masks(o, [](std::uint64_t) { return true; });
    CHECK(perms.emitted == oracle::naive_class_count(3, 2, true));
    CHECK(perms.emitted < plain.emitted);
  }

  TEST_CASE("shards partition the output") {
    EnumerateOptions o;
    o.r = 3;
    o.max_part = 2;
    std::multiset<std::uint64_t> whole, parts;
    enumerate_masks(o, [&](std::uint64_t m) { return whole.insert(m), true; });
    o.shard_count = 3;
    for (int s = 0; s < 3; ++s) {
      o.shard = s;
      enumerate_masks(o, [&](std::uint64_t m) { return parts.insert(m), true; });
    }
    CHECK(whole == parts);
  }

  TEST_CASE("visitor can stop early; oversized spaces are refused") {
    EnumerateOptions o;
    o.r = 3;
    o.max_part = 2;
    int seen = 0;
    enumerate_masks(o, [&](std::uint64_t) { return ++seen < 5; });
    CHECK(seen == 5);
    o.max_part = 5;
    CHECK_THROWS_AS(enumerate_masks(o, [](std::uint64_t) { return true; }), BudgetExceeded);
  }

  TEST_CASE("canonical form respects isolated vertices option") {
    const auto a = PartiteHypergraph({2, 2, 2}, {{0, 0, 0}});
    const auto b = PartiteHypergraph({1, 1, 1}, {{0, 0, 0}});
    CHECK_FALSE(isomorphic(a, b));
    CHECK(isomorphic(a, b, {false, true}));
    const auto c = PartiteHypergraph({2, 2, 2}, {{1, 0, 1}});
    CHECK(isomorphic(a, c));
    CHECK(canonical_form(a) == canonical_form(c));
  }
}
