#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "tcover/auxiliary.hpp"
#include "tcover/chain.hpp"
#include "tcover/classify.hpp"
#include "tcover/cover_family.hpp"
#include "tcover/enumerate.hpp"
#include "tcover/error.hpp"
#include "tcover/extremal.hpp"
#include "tcover/fixtures.hpp"
#include "tcover/matching.hpp"
#include "tcover/vertex_cover.hpp"

using namespace tcover;

namespace {

CoverFamily family(const PartiteHypergraph& host, int k, std::vector<Edge> members, CoverMode mode) {
  std::sort(members.begin(), members.end());
  return {host, k, std::move(members), mode};
}

std::vector<std::vector<int>> level_ids(const CoverageChain& chain) {
  std::vector<std::vector<int>> out;
  for (const auto& level : chain.levels) {
    std::vector<int> ids;
    for (const auto& e : level.edges()) ids.push_back(chain.levels[0].find(e));
    out.push_back(ids);
  }
  return out;
}

CoverageChain single_level(const PartiteHypergraph& h0, int k, const PartiteHypergraph& top) {
  return {k, {h0, top}};
}

}  // namespace

TEST_SUITE("cover families") {
  TEST_CASE("the four-disjoint-edge gadget with its fixed covers") {
    const auto cf = family(fixtures::ems(), 3, fixtures::ems_covers().edges(), CoverMode::Augmented);
    const auto check = check_cover_family(cf);
    CHECK(check.ok);
    CHECK(oracle::family_valid(cf.host, 3, cf.family));
    // Not a strict family: the covers are not edges of the host.
    auto strict = cf;
    strict.mode = CoverMode::Strict;
    const auto bad = check_cover_family(strict);
    CHECK_FALSE(bad.ok);
    CHECK(bad.failure == "member-not-in-host");
    // Nor a 4-cover: no member meets all four edges.
    auto four = cf;
    four.k = 4;
    const auto uncovered = check_cover_family(four);
    CHECK_FALSE(uncovered.ok);
    CHECK(uncovered.failure == "uncovered-tuple");
    CHECK(uncovered.witness.size() == 4);
  }

  TEST_CASE("two disjoint edges admit no strict 1-family") {
    const auto two = fixtures::disjoint_edges(3, 2);
    const auto both = check_cover_family(family(two, 1, two.edges(), CoverMode::Strict));
    CHECK_FALSE(both.ok);
    CHECK(both.failure == "not-intersecting");
    CHECK_FALSE(check_cover_family(family(two, 1, {two.edge(0)}, CoverMode::Strict)).ok);
    CHECK_FALSE(oracle::has_family(two, 1, two.edges()));
  }

  TEST_CASE("a single edge is its own family for any k") {
    const PartiteHypergraph one({2, 2, 2}, {{0, 1, 0}});
    for (int k = 1; k <= 5; ++k) CHECK(check_cover_family(family(one, k, one.edges(), CoverMode::Strict)).ok);
  }

  TEST_CASE("search on the spec instances") {
    const auto four = fixtures::disjoint_edges(3, 4);
    const auto found = search_cover_family(four, 3, CoverMode::Augmented);
    REQUIRE(found);
    CHECK(check_cover_family(*found).ok);
    CHECK(oracle::family_valid(four, 3, found->family));
    CHECK_FALSE(search_cover_family(four, 4, CoverMode::Augmented));
    CHECK_FALSE(search_cover_family(four, 4, CoverMode::Strict));
    CHECK_FALSE(search_cover_family(four, 3, CoverMode::Strict));
    const auto empty = search_cover_family(PartiteHypergraph({2, 2, 2}, {}), 3, CoverMode::Strict);
    REQUIRE(empty);
    CHECK(empty->family.empty());
    CHECK_THROWS_AS(search_cover_family(four, 2, CoverMode::Strict), ArityTooSmall);
  }

  TEST_CASE("search agrees with exhaustive subfamilies on small hosts") {
    RngStream rng(401);
    for (int trial = 0; trial < 120; ++trial) {
      const int r = 2 + static_cast<int>(rng.below(2));
      const auto host = oracle::random_hypergraph(rng, r, 2, 1 + static_cast<int>(rng.below(6)));
      const int k = r + static_cast<int>(rng.below(2));
      for (auto mode : {CoverMode::Strict, CoverMode::Augmented}) {
        CAPTURE(to_hg_string(host));
        CAPTURE(k);
        const auto pool = mode == CoverMode::Strict ? host.edges() : all_transversals(host.part_sizes());
        const auto found = search_cover_family(host, k, mode);
        REQUIRE(found.has_value() == oracle::has_family(host, k, pool));
        if (found) {
          CHECK(oracle::family_valid(host, k, found->family));
          CHECK(check_cover_family(*found).ok);
          // Matching bound for hosts with intersecting k-covers.
          CHECK(static_cast<int>(max_matching_ids(host).size()) < 2 * r);
        }
      }
    }
  }

  TEST_CASE("check agrees with the literal definition on random families") {
    RngStream rng(402);
    for (int trial = 0; trial < 300; ++trial) {
      const auto host = oracle::random_hypergraph(rng, 3, 2, static_cast<int>(rng.below(6)));
      std::vector<Edge> members;
      for (const auto& t : all_transversals(host.part_sizes()))
        if (rng.bernoulli(0.4)) members.push_back(t);
      const int k = 1 + static_cast<int>(rng.below(4));
      const auto cf = family(host, k, members, CoverMode::Augmented);
      CHECK(check_cover_family(cf).ok == oracle::family_valid(host, k, cf.family));
    }
  }

  TEST_CASE("phi picks the first covering member") {
    const auto cf = family(fixtures::ems(), 3, fixtures::ems_covers().edges(), CoverMode::Augmented);
    const std::vector<Edge> none;
    REQUIRE(phi(cf, none) != nullptr);
    CHECK(*phi(cf, none) == cf.family.front());
    const auto ems = fixtures::ems();
    const std::vector<Edge> three{ems.edge(0), ems.edge(1), ems.edge(2)};
    const Edge* f = phi(cf, three);
    REQUIRE(f != nullptr);
    CHECK(covers_all(*f, three));
    CHECK(phi(cf, ems.edges()) == nullptr);
  }
}

TEST_SUITE("chains") {
  TEST_CASE("H* with one level at k = 4") {
    const auto hs = fixtures::h_star();
    const auto chain = single_level(hs, 4, hs);
    CHECK(check_chain(chain).ok);
    CHECK(oracle::chain_valid(hs, 4, level_ids(chain)));
  }

  TEST_CASE("disjoint edges at the top fail P3") {
    const auto two = fixtures::disjoint_edges(3, 2);
    const auto result = check_chain(single_level(two, 3, two));
    CHECK_FALSE(result.ok);
    CHECK(result.property == "P3");
    CHECK(result.witness.size() == 2);
  }

  TEST_CASE("non-nested levels are rejected") {
    const auto hs = fixtures::h_star();
    const PartiteHypergraph stray(hs.part_sizes(), {{0, 0, 0}});
    const auto result = check_chain(single_level(hs, 3, stray));
    CHECK_FALSE(result.ok);
    CHECK(result.property == "nesting");
  }

  TEST_CASE("one-level chains are cover families") {
    RngStream rng(403);
    for (int trial = 0; trial < 200; ++trial) {
      const auto host = oracle::random_hypergraph(rng, 3, 2, 1 + static_cast<int>(rng.below(6)));
      std::vector<Edge> top;
      for (int i = 0; i < host.edge_count(); ++i)
        if (rng.bernoulli(0.5)) top.push_back(host.edge(i));
      const int k = 3 + static_cast<int>(rng.below(2));
      const PartiteHypergraph top_h(host.part_sizes(), top);
      // P1 with k-1 edges plus P2 with one more: every k edges are met by one member.
      const bool chain_ok = check_chain(single_level(host, k, top_h)).ok;
      CHECK(chain_ok == check_cover_family(family(host, k, top, CoverMode::Strict)).ok);
    }
  }

  TEST_CASE("search on the spec instances") {
    const auto hs = search_chain(fixtures::h_star(), 3);
    REQUIRE(hs);
    CHECK(hs->m() == 1);
    CHECK(check_chain(*hs).ok);
    CHECK_FALSE(search_chain(fixtures::disjoint_edges(3, 4), 4));
    CHECK_FALSE(search_chain(fixtures::ems_augmented(), 4));
    const auto empty = search_chain(PartiteHypergraph({2, 2, 2}, {}), 3);
    REQUIRE(empty);
    CHECK(check_chain(*empty).ok);
    CHECK_THROWS_AS(search_chain(fixtures::h_star(), 2), ArityTooSmall);
  }

  TEST_CASE("least m agrees with exhaustive nested subsets") {
    RngStream rng(404);
    int found = 0, longer = 0;
    for (int trial = 0; trial < 150; ++trial) {
      const int r = 2 + static_cast<int>(rng.below(2));
      const auto h0 = oracle::random_hypergraph(rng, r, 2, 1 + static_cast<int>(rng.below(5)));
      const int k = r + static_cast<int>(rng.below(2));
      CAPTURE(to_hg_string(h0));
      CAPTURE(k);
      const int expected = oracle::least_chain_m(h0, k, h0.edge_count());
      const auto chain = search_chain(h0, k);
      REQUIRE(chain.has_value() == (expected >= 0));
      if (!chain) continue;
      ++found;
      if (expected > 1) ++longer;
      CHECK(chain->m() == expected);
      CHECK(check_chain(*chain).ok);
      CHECK(oracle::chain_valid(h0, k, level_ids(*chain)));
    }
    CHECK(found > 20);
    MESSAGE("chains with m > 1: " << longer);
  }

  TEST_CASE("monotonicity in k and under repeated levels; the cover bound at k = r") {
    RngStream rng(405);
    for (int trial = 0; trial < 200; ++trial) {
      const int r = 2 + static_cast<int>(rng.below(2));
      const auto h0 = oracle::random_hypergraph(rng, r, 3, 1 + static_cast<int>(rng.below(7)));
      const int k = r + static_cast<int>(rng.below(3));
      const auto chain = search_chain(h0, k);
      if (!chain) continue;
      for (int lower = r; lower < k; ++lower) {
        auto weaker = *chain;
        weaker.k = lower;
        CHECK(check_chain(weaker).ok);
      }
      for (int at = 0; at <= chain->m(); ++at) {
        auto longer = *chain;
        longer.levels.insert(longer.levels.begin() + at, longer.levels[at]);
        CHECK(check_chain(longer).ok);
      }
      if (k == r) {
        CHECK(tau_number(h0) <= r * r);
        const auto matching = top_level_matching(*chain);
        CHECK(static_cast<int>(matching.size()) <= r);
        REQUIRE_FALSE(matching.empty());
        CHECK(matching.front() == chain->levels.back().edge(0));
        for (std::size_t a = 0; a < matching.size(); ++a)
          for (std::size_t b = a + 1; b < matching.size(); ++b) CHECK_FALSE(intersects(matching[a], matching[b]));
        // Maximal: every edge of H_0 meets the matching.
        for (const auto& e : h0.edges())
          CHECK(std::any_of(matching.begin(), matching.end(), [&](const Edge& f) { return intersects(e, f); }));
      }
    }
  }
}

TEST_SUITE("level chains") {
  TEST_CASE("thresholds") {
    const auto t = ladder_thresholds(512, 0.5);
    REQUIRE_FALSE(t.empty());
    CHECK(std::is_sorted(t.begin(), t.end()));
    CHECK(t.back() == doctest::Approx(10 * std::log(512.0) / 0.5));
    const auto sparse = ladder_thresholds(512, 0.001);
    CHECK(sparse.size() >= t.size());
    CHECK(sparse[sparse.size() - 2] == doctest::Approx(1000.0));
  }

  TEST_CASE("low thresholds keep every level equal to H_0") {
    const auto am = build_auxiliary(fixtures::coloured8());
    const auto chain = build_level_chain(am, 3, {1.0});
    REQUIRE(chain.m() == 1);
    CHECK(chain.levels[1] == chain.levels[0]);
  }

  TEST_CASE("thresholds above every multiplicity empty the top and break P1") {
    const auto am = build_auxiliary(fixtures::coloured8());
    const auto chain = build_level_chain(am, 3, {2.0, 100.0});
    CHECK(chain.levels.back().empty());
    const auto props = check_chain_properties(chain);
    CHECK_FALSE(props.p1.ok);
    CHECK(props.p1.property == "P1");
    CHECK(props.p3.ok);
    CHECK_THROWS_AS(build_level_chain(am, 3, {2.0, 2.0}), InvalidArgument);
    CHECK_THROWS_AS(build_level_chain(am, 3, {0.0}), InvalidArgument);
  }

  TEST_CASE("multiplicities are preimage counts") {
    const auto g = ColouredGraph::monochromatic(Graph::complete(6), 3, 1);
    const auto am = build_auxiliary(g, std::vector<int>{0});
    const auto chain = build_level_chain(am, 3, {5.0, 6.0});
    CHECK(chain.levels[1].edge_count() == 1);
    CHECK(chain.levels[2].empty());
  }
}

TEST_SUITE("classification") {
  TEST_CASE("spec examples") {
    const PartiteHypergraph star({2, 2, 2}, {{0, 0, 0}, {0, 1, 1}, {0, 1, 0}});
    const auto a = classify_intersecting_3graph(star);
    CHECK(a.kind == IntersectingCase::CommonVertex);
    CHECK(a.common == Vertex{0, 0});

    const PartiteHypergraph three({2, 2, 2}, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    const auto b = classify_intersecting_3graph(three);
    CHECK(b.kind == IntersectingCase::TwoOfThree);
    CHECK(b.core == std::array<Vertex, 3>{Vertex{0, 0}, Vertex{1, 0}, Vertex{2, 0}});

    const auto c = classify_intersecting_3graph(fixtures::h_star());
    CHECK(c.kind == IntersectingCase::IsomorphicHStar);

    CHECK(classify_intersecting_3graph(PartiteHypergraph({1, 1, 1}, {})).kind == IntersectingCase::CommonVertex);
    CHECK_THROWS_AS(classify_intersecting_3graph(fixtures::disjoint_edges(3, 2)), PreconditionViolated);
    CHECK_THROWS_AS(classify_intersecting_3graph(PartiteHypergraph({2, 2}, {{0, 0}})), InvalidArgument);
  }

  TEST_CASE("every intersecting 3-graph with parts of two is classified correctly") {
    EnumerateOptions o;
    o.r = 3;
    o.max_part = 2;
    o.pairwise_intersecting_only = true;
    int counts[3] = {0, 0, 0};
    enumerate(o, nullptr, [&](const PartiteHypergraph& h) {
      const auto c = classify_intersecting_3graph(h);
      ++counts[static_cast<int>(c.kind)];
      switch (c.kind) {
        case IntersectingCase::CommonVertex:
          for (const auto& e : h.edges()) CHECK(contains(e, c.common));
          break;
        case IntersectingCase::TwoOfThree:
          for (const auto& e : h.edges()) {
            int hits = 0;
            for (const auto& v : c.core) hits += contains(e, v) ? 1 : 0;
            CHECK(hits >= 2);
          }
          break;
        case IntersectingCase::IsomorphicHStar: {
          std::vector<Edge> image;
          const auto star = fixtures::h_star();
          for (const auto& e : star.edges()) {
            Edge f(3);
            for (int p = 0; p < 3; ++p) f[p] = c.isomorphism[p][e[p]];
            image.push_back(f);
          }
          std::sort(image.begin(), image.end());
          CHECK(image == h.edges());
          break;
        }
      }
      return true;
    });
    CHECK(counts[2] == 1);
    CHECK(counts[0] > 0);
    CHECK(counts[1] > 0);
  }
}

TEST_SUITE("extremal") {
  TEST_CASE("quantity names") {
    for (auto q : {Quantity::IntersectingCovers, Quantity::Coverable, Quantity::CoverThreshold})
      CHECK(parse_quantity(to_string(q)) == q);
    CHECK_THROWS_AS(parse_quantity("x"), InvalidArgument);
  }

  TEST_CASE("intersecting 3-covers of 3-graphs reach cover number four") {
    ExtremalCaps caps;
    caps.max_part = 2;
    caps.max_edges = 8;
    const auto report = compute_extremal(Quantity::IntersectingCovers, 3, 3, caps);
    CHECK(report.lower_bound >= 4);
    REQUIRE(report.upper_bound);
    CHECK(*report.upper_bound <= 3 * 5);
    bool from_fixture = false;
    for (const auto& cert : report.certificates) {
      if (cert.tau != report.lower_bound) continue;
      CHECK(tau_number(cert.hypergraph) == cert.tau);
      from_fixture = from_fixture || cert.source != "enumeration";
    }
    CHECK(from_fixture);
    const auto j = nlohmann::json(report);
    CHECK(j["quantity"] == "hi");
  }

  TEST_CASE("coverable bipartite graphs have cover number at most four") {
    ExtremalCaps caps;
    caps.max_part = 3;
    caps.max_edges = 9;
    caps.audit_all = true;
    const auto report = compute_extremal(Quantity::Coverable, 2, 2, caps);
    CHECK(report.lower_bound <= 4);
    CHECK(report.lower_bound >= 1);
    CHECK(report.exhaustive);
    CHECK(report.checked > 0);
    CHECK(report.accepted > 0);
  }

  TEST_CASE("cover threshold search stops at the first k without a certificate") {
    ExtremalCaps caps;
    caps.max_part = 2;
    caps.max_edges = 8;
    const auto report = compute_extremal(Quantity::CoverThreshold, 3, 3, caps);
    CHECK(report.lower_bound >= 4);
    REQUIRE(report.value_within_caps);
    CHECK(*report.value_within_caps >= report.lower_bound);
  }

  TEST_CASE("no (4, m)-coverable 3-graph with cover number four in the smoke tiers") {
    ExtremalCaps caps;
    caps.max_part = 2;
    caps.max_edges = 8;
    const auto small = refute_4m_coverable(caps);
    CHECK(small.exhaustive);
    CHECK(small.lower_bound <= 3);
    CHECK(small.tau_filtered >= 2);  // the fixtures

    caps.max_part = 4;
    caps.max_edges = 5;
    caps.include_fixtures = false;
    const auto wider = refute_4m_coverable(caps);
    CHECK(wider.tau_filtered > 0);
    CHECK(wider.lower_bound <= 3);
  }
}
