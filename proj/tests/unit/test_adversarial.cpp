#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "tcover/adversarial.hpp"
#include "tcover/error.hpp"
#include "tcover/fixtures.hpp"
#include "tcover/random_graph.hpp"
#include "tcover/tree_cover.hpp"

using namespace tcover;

namespace {

EdgeAssignment assignment(PartiteHypergraph target, std::vector<int> map) {
  return {std::move(target), std::move(map), false};
}

CoverFamily ems_family() {
  CoverFamily cf{fixtures::ems(), 3, fixtures::ems_covers().edges(), CoverMode::Augmented};
  std::sort(cf.family.begin(), cf.family.end());
  return cf;
}

CoverFamily h_star_family() {
  // H* pairwise intersects, so its own edges are a strict family for any k.
  return {fixtures::h_star(), 3, fixtures::h_star().edges(), CoverMode::Strict};
}

}  // namespace

TEST_SUITE("colouring") {
  TEST_CASE("edgeless graph gives an empty colouring") {
    const auto ea = assignment(fixtures::h_star(), {0, 1, 2});
    const auto g = build_colouring(Graph(3, {}), ea);
    CHECK(g.edges().empty());
    CHECK(g.r() == 3);
  }

  TEST_CASE("lowest agreeing part wins") {
    const PartiteHypergraph h({2, 2, 2}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}});
    const Graph one(2, {{0, 1}});
    CHECK(build_colouring(one, assignment(h, {0, 0})).edges()[0].colour == 1);
    // (0,0,0) and (1,0,1) agree only in the second part.
    CHECK(build_colouring(one, assignment(h, {0, 2})).edges()[0].colour == 2);
    // (0,1,1) and (1,0,1) agree only in the third part.
    CHECK(build_colouring(one, assignment(h, {1, 2})).edges()[0].colour == 3);
  }

  TEST_CASE("disjoint images are rejected with the offending edge") {
    const auto four = fixtures::disjoint_edges(3, 4);
    const Graph path(3, {{0, 1}, {1, 2}});
    const auto ea = assignment(four, {0, 0, 1});
    CHECK(incompatible_edge(path, ea) == std::pair{1, 2});
    try {
      build_colouring(path, ea);
      FAIL("expected IncompatibleAssignment");
    } catch (const IncompatibleAssignment& e) {
      CHECK(e.u() == 1);
      CHECK(e.v() == 2);
    }
  }
}

TEST_SUITE("lower bound") {
  TEST_CASE("isolated vertices onto four disjoint edges") {
    const auto ea = assignment(fixtures::disjoint_edges(3, 4), {0, 1, 2, 3});
    const auto report = verify_lower_bound(Graph(4, {}), ea);
    CHECK(report.bound() == 4);
    CHECK(report.exact_checked);
    CHECK(report.tree_cover.size == 4);
    CHECK(report.bound_holds());
    CHECK(nlohmann::json(report)["tau_target"] == 4);
  }

  TEST_CASE("single-edge target gives bound one") {
    const PartiteHypergraph h({1, 1}, {{0, 0}});
    const auto report = verify_lower_bound(Graph::complete(4), assignment(h, {0, 0, 0, 0}));
    CHECK(report.bound() == 1);
    CHECK(report.tree_cover.size == 1);
  }

  TEST_CASE("non-surjective maps are refused") {
    const auto ea = assignment(fixtures::disjoint_edges(3, 4), {0, 1, 2, 2});
    CHECK_FALSE(is_surjective(ea));
    try {
      verify_lower_bound(Graph(4, {}), ea);
      FAIL("expected PreconditionViolated");
    } catch (const PreconditionViolated& e) {
      CHECK(e.which() == "surjective");
    }
  }

  TEST_CASE("exact check is skipped above the limit") {
    const auto ea = assignment(fixtures::disjoint_edges(2, 2), {0, 1, 0});
    const auto report = verify_lower_bound(Graph(3, {}), ea, 2);
    CHECK_FALSE(report.exact_checked);
    CHECK(report.pairs_checked > 0);
  }
}

TEST_SUITE("construction from an independent set") {
  TEST_CASE("cover-family gadget: vertices outside the set map to the fixed covers") {
    // Eight independent vertices 0..7, eight outer vertices; outer vertex j sees
    // i_set members j, j+1, j+2 (mod 8), so no four share a neighbour.
    Graph::EdgeList edges;
    for (int j = 0; j < 8; ++j)
      for (int d = 0; d < 3; ++d) edges.emplace_back(8 + j, (j + d) % 8);
    const Graph g(16, edges);
    const std::vector<int> i_set{0, 1, 2, 3, 4, 5, 6, 7};
    const auto cf = ems_family();
    const auto ea = build_ed0_from_independent_set(g, fixtures::ems(), i_set, cf, 3);
    CHECK(ea.lower_bound_ready);
    CHECK(ea.target == fixtures::ems_augmented());
    for (int u = 8; u < 16; ++u) CHECK(fixtures::ems_covers().has_edge(ea.image(u)));
    const auto report = verify_lower_bound(g, ea);
    CHECK(report.bound() == 4);
    CHECK(report.tree_cover.size >= 4);
    CHECK(check_surjective_homomorphism(g, intersection_graph(ea.target), ea.map));
  }

  TEST_CASE("edgeless graph: the identity bijection") {
    const auto hs = h_star_family();
    const std::vector<int> i_set{3, 2, 1, 0};
    const auto ea = build_ed0_from_independent_set(Graph(4, {}), hs.host, i_set, hs, 3);
    CHECK(ea.map == std::vector<int>{3, 2, 1, 0});
    const auto report = verify_lower_bound(Graph(4, {}), ea);
    CHECK(report.bound() == 2);
    CHECK(report.tree_cover.size == 4);
    // The gadget still needs a valid family even when no tuple is ever formed.
    const auto four = fixtures::disjoint_edges(3, 4);
    const CoverFamily empty{four, 1, {}, CoverMode::Strict};
    CHECK_THROWS_AS(build_ed0_from_independent_set(Graph(4, {}), four, i_set, empty, 1), PreconditionViolated);
  }

  TEST_CASE("precondition failures name the condition") {
    const auto hs = h_star_family();
    auto which = [&](const Graph& g, std::vector<int> i_set, int k) {
      try {
        build_ed0_from_independent_set(g, hs.host, i_set, hs, k);
      } catch (const PreconditionViolated& e) {
        return e.which();
      }
      return std::string("none");
    };
    // Star: centre 0 adjacent to four set members.
    const Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(which(star, {1, 2, 3, 4}, 3) == "common-neighbour");
    CHECK(which(star, {1, 2, 3, 4}, 4) == "none");
    CHECK(which(star, {1, 2, 3}, 3) == "size");
    CHECK(which(star, {1, 1, 2, 3}, 3) == "size");
    CHECK(which(star, {0, 1, 2, 3}, 3) == "independent");
    CoverFamily bad{fixtures::h_star(), 3, {{0, 0, 0}}, CoverMode::Strict};
    try {
      build_ed0_from_independent_set(Graph(4, {}), bad.host, std::vector<int>{0, 1, 2, 3}, bad, 3);
      FAIL("expected PreconditionViolated");
    } catch (const PreconditionViolated& e) {
      CHECK(e.which() == "cover-family");
    }
  }

  TEST_CASE("random graphs: bound holds exactly and agrees with the homomorphism view") {
    RngStream rng(301);
    const auto hs = h_star_family();
    int applied = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 4 + static_cast<int>(rng.below(7));
      const auto g = sample_gnp({n, rng.uniform() * 0.5, rng()}).graph;
      const auto set = find_sparse_independent_set(g, 4, 4, {0, true});
      if (!set.found()) continue;
      ++applied;
      const auto ea = build_ed0_from_independent_set(g, hs.host, set.vertices, hs, 3);
      CHECK(check_surjective_homomorphism(g, intersection_graph(ea.target), ea.map));
      CHECK_FALSE(incompatible_edge(g, ea).has_value());
      const auto report = verify_lower_bound(g, ea);
      REQUIRE(report.exact_checked);
      CHECK(report.tree_cover.size >= tau_number(ea.target));
      CHECK(report.tree_cover.size == oracle::tree_cover(report.colouring));
    }
    CHECK(applied > 50);
  }
}

TEST_SUITE("intersection graph") {
  TEST_CASE("spec examples") {
    const auto hs = intersection_graph(fixtures::h_star());
    CHECK(hs.n == 4);
    CHECK(hs.complete());
    const auto four = intersection_graph(fixtures::disjoint_edges(3, 4));
    for (int a = 0; a < 4; ++a) {
      CHECK(four.has_loop(a));
      for (int b = 0; b < 4; ++b)
        if (a != b) CHECK_FALSE(four.adjacent[a][b]);
    }
    const auto one = intersection_graph(PartiteHypergraph({1, 1, 1}, {{0, 0, 0}}));
    CHECK(one.n == 1);
    CHECK(one.has_loop(0));
  }

  TEST_CASE("surjective homomorphisms") {
    const auto four = intersection_graph(fixtures::disjoint_edges(3, 2));
    CHECK(check_surjective_homomorphism(Graph(3, {}), four, std::vector<int>{0, 1, 1}));
    CHECK_FALSE(check_surjective_homomorphism(Graph(3, {}), four, std::vector<int>{0, 0, 0}));
    CHECK_FALSE(check_surjective_homomorphism(Graph(2, {{0, 1}}), four, std::vector<int>{0, 1}));
    CHECK(check_surjective_homomorphism(Graph(3, {{0, 1}}), four, std::vector<int>{0, 0, 1}));
  }

  TEST_CASE("compatibility is the homomorphism condition") {
    RngStream rng(302);
    const auto h = fixtures::ems_augmented();
    const auto f = intersection_graph(h);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 8 + static_cast<int>(rng.below(5));
      const auto g = sample_gnp({n, 0.2, rng()}).graph;
      std::vector<int> map(n);
      for (int u = 0; u < n; ++u) map[u] = u < 8 ? u : static_cast<int>(rng.below(8));
      const auto ea = assignment(h, map);
      CHECK(check_surjective_homomorphism(g, f, map) == !incompatible_edge(g, ea).has_value());
    }
  }
}
