#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "golden.hpp"
#include "tcover/error.hpp"
#include "tcover/lab.hpp"
#include "tcover/prng.hpp"

using namespace tcover;
using nlohmann::json;

namespace {

ExperimentSpec small_sweep() {
  return parse_spec(json::parse(R"({
    "kind": "adversarial-sweep", "n": [12, 24], "trials": 4, "seed": 5,
    "p_rule": {"root": 4, "coefficients": [0.1, 0.4], "controls": true},
    "gadget": {"name": "ems", "k": 3}, "node_budget": 5000
  })"));
}

ExperimentSpec small_oracle() {
  return parse_spec(json::parse(R"({"kind": "oracle-corpus", "count": 40, "max_n": 7, "seed": 77})"));
}

std::string sweep_csv(const ExperimentSpec& spec) {
  std::ostringstream out;
  write_sweep_csv(out, spec, run_adversarial_sweep(spec));
  return out.str();
}

}  // namespace

TEST_SUITE("output formats") {
  TEST_CASE("CSV quoting") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("") == "");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("two\nlines") == "\"two\nlines\"");
    CHECK(csv_field("cr\r") == "\"cr\r\"");
    std::ostringstream row;
    write_csv_row(row, {"a", "b,c", ""});
    CHECK(row.str() == "a,\"b,c\",\r\n");
  }

  TEST_CASE("doubles round trip") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1) == "1");
    CHECK(format_double(std::nan("")) == "NA");
    const double x = 0.1 + 0.2;
    CHECK(std::stod(format_double(x)) == x);
  }

  TEST_CASE("FNV-1a test vectors") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
    CHECK(hex64(0xabcULL) == "0000000000000abc");
  }
}

TEST_SUITE("specs") {
  TEST_CASE("defaults and round trip") {
    const auto spec = parse_spec(json::object());
    CHECK(spec.kind == ExperimentKind::AdversarialSweep);
    CHECK(spec.node_budget == 20000);
    CHECK(spec.threads == 1);
    const auto again = parse_spec(spec_to_json(spec));
    CHECK(spec_to_json(again) == spec_to_json(spec));
    CHECK(spec_hash(again) == spec_hash(spec));
  }

  TEST_CASE("hash ignores threads and output but nothing else") {
    auto a = small_sweep();
    auto b = a;
    b.threads = 8;
    b.output = "elsewhere.csv";
    CHECK(spec_hash(a) == spec_hash(b));
    b.seed = 6;
    CHECK(spec_hash(a) != spec_hash(b));
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(parse_spec(json::parse(R"({"kind": "nope"})")), ParseError);
    CHECK_THROWS_AS(parse_spec(json::parse(R"({"trials": "many"})")), ParseError);
    CHECK_THROWS_AS(parse_spec(json::parse(R"({"threads": 0})")), ParseError);
    CHECK_THROWS_AS(parse_spec(json::parse(R"({"colouring": "plaid"})")), ParseError);
    CHECK_THROWS_AS(parse_spec(json::parse(R"({"gadget": {"mode": "loose"}})")), ParseError);
    CHECK_THROWS_AS(parse_spec(json::parse("[1]")), ParseError);
    CHECK_THROWS_AS(read_spec_file("/nonexistent/spec.json"), ParseError);
  }

  TEST_CASE("pinned spec files parse") {
    const std::string dir = std::string(TCOVER_DATA_DIR) + "/specs/";
    CHECK(read_spec_file(dir + "sweep_pinned.json").kind == ExperimentKind::AdversarialSweep);
    CHECK(read_spec_file(dir + "oracle_pinned.json").kind == ExperimentKind::OracleCorpus);
    CHECK(read_spec_file(dir + "ladder_pinned.json").kind == ExperimentKind::PropertyAudit);
  }

  TEST_CASE("p rule") {
    CHECK(p_from_rule(1024, 4, 1.0) == doctest::Approx(std::pow(std::log(1024.0) / 1024, 0.25)));
    CHECK(p_from_rule(1024, 4, 100.0) == 1.0);
    CHECK(p_from_rule(1024, 2, 0.0) == 0.0);
  }

  TEST_CASE("gadgets load from name or files") {
    const auto ems = load_gadget(Gadget{});
    CHECK(ems.host.edge_count() == 4);
    CHECK(ems.family.size() == 4);
    Gadget files;
    files.name = "";
    files.hypergraph_path = std::string(TCOVER_DATA_DIR) + "/fixtures/ems.hg";
    files.family_path = std::string(TCOVER_DATA_DIR) + "/fixtures/ems_covers.hg";
    const auto loaded = load_gadget(files);
    CHECK(loaded.host == ems.host);
    CHECK(loaded.family == ems.family);
  }
}

TEST_SUITE("adversarial sweep") {
  TEST_CASE("control columns behave at the boundary") {
    const auto spec = small_sweep();
    const auto result = run_adversarial_sweep(spec);
    CHECK(result.rows.size() == 2 * 4 * 4);
    for (const auto& row : result.rows) {
      if (row.p == 0.0) {
        CHECK(row.found);
        CHECK(row.bound == 4);
        CHECK(row.status == "found");
      }
      if (row.p == 1.0) {
        CHECK_FALSE(row.found);
        CHECK(row.status == "not-found");
      }
      CHECK(row.wall_time < 0);
    }
  }

  TEST_CASE("success is monotone in p because samples are nested") {
    const auto rates = run_adversarial_sweep(small_sweep()).success_rates();
    for (std::size_t i = 1; i < rates.size(); ++i)
      if (rates[i].first.first == rates[i - 1].first.first) CHECK(rates[i].second <= rates[i - 1].second);
  }

  TEST_CASE("output is byte-identical across reruns and thread counts (golden)") {
    auto spec = small_sweep();
    const auto one = sweep_csv(spec);
    spec.threads = 8;
    CHECK(sweep_csv(spec) == one);
    CHECK(one.find("\r\n") != std::string::npos);
    CHECK(one.find("# spec_hash=fnv1a64:") != std::string::npos);
    CHECK(one.find("# generator=ctr-splitmix64/v1") != std::string::npos);
    CHECK(golden::compare("sweep_small.csv", one) == "");
  }

  TEST_CASE("timing adds wall time without touching the other columns") {
    auto spec = small_sweep();
    spec.n = {12};
    const auto plain = run_adversarial_sweep(spec);
    spec.timing = true;
    const auto timed = run_adversarial_sweep(spec);
    REQUIRE(plain.rows.size() == timed.rows.size());
    for (std::size_t i = 0; i < plain.rows.size(); ++i) {
      CHECK(plain.rows[i].status == timed.rows[i].status);
      CHECK(timed.rows[i].wall_time >= 0);
    }
  }
}

TEST_SUITE("oracle corpus") {
  TEST_CASE("all checks pass and instances are reproducible") {
    auto spec = small_oracle();
    const auto report = run_oracle_corpus(spec);
    CHECK(report["all_passed"] == true);
    for (const auto& [name, tally] : report["checks"].items()) {
      CAPTURE(name);
      CHECK(tally["passed"] == tally["total"]);
    }
    spec.threads = 8;
    CHECK(run_oracle_corpus(spec).dump() == report.dump());
    CHECK(golden::compare("oracle_small.json", report.dump(2) + "\n") == "");

    const auto a = oracle_instance(spec, 3);
    const auto b = oracle_instance(spec, 3);
    CHECK(a.graph == b.graph);
    CHECK(a.w == b.w);
    CHECK(a.graph.n() <= spec.max_n);
  }
}

TEST_SUITE("level ladder") {
  TEST_CASE("tiny graphs cannot reach the thresholds: P1 fails and is reported") {
    const auto spec = parse_spec(json::parse(R"({
      "kind": "property-audit", "n": [8], "trials": 2, "seed": 3, "r": 3, "k": 3,
      "p_rule": {"values": [0.3], "controls": false}
    })"));
    const auto report = run_level_ladder_audit(spec);
    REQUIRE(report["runs"].size() == 2);
    for (const auto& run : report["runs"]) {
      CHECK(run["status"] == "ok");
      CHECK(run["P1"]["holds"] == false);
      CHECK(run["chain_verified"] == false);
    }
  }

  TEST_CASE("complete graph with a dominant colour gives a verified chain") {
    const auto spec = parse_spec(json::parse(R"({
      "kind": "property-audit", "n": [120], "trials": 3, "seed": 4, "r": 3, "k": 3,
      "colouring": "dominant", "p_rule": {"values": [1.0], "controls": false}
    })"));
    const auto report = run_level_ladder_audit(spec);
    CHECK(report["chains_verified"] == 3);
    for (const auto& run : report["runs"]) CHECK(run["tau_bound_holds"] == true);
  }

  TEST_CASE("p = 0 is skipped rather than failed") {
    const auto spec = parse_spec(json::parse(R"({
      "kind": "property-audit", "n": [6], "trials": 1, "p_rule": {"values": [0.0], "controls": false}
    })"));
    const auto report = run_level_ladder_audit(spec);
    CHECK(report["runs"][0]["status"].get<std::string>().rfind("skipped", 0) == 0);
  }

  TEST_CASE("pinned run (golden)") {
    auto spec = read_spec_file(std::string(TCOVER_DATA_DIR) + "/specs/ladder_pinned.json");
    const auto report = run_level_ladder_audit(spec);
    CHECK(report["total"] == 2);
    spec.threads = 2;
    CHECK(run_level_ladder_audit(spec).dump() == report.dump());
    CHECK(golden::compare("ladder_pinned.json", report.dump(2) + "\n") == "");
  }
}
