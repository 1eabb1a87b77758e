// Command-line front end: tcover <module> <command> [options].

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tcover/adversarial.hpp"
#include "tcover/auxiliary.hpp"
#include "tcover/chain.hpp"
#include "tcover/classify.hpp"
#include "tcover/cover_family.hpp"
#include "tcover/error.hpp"
#include "tcover/extremal.hpp"
#include "tcover/lab.hpp"
#include "tcover/random_graph.hpp"
#include "tcover/tree_cover.hpp"
#include "tcover/vertex_cover.hpp"

using nlohmann::json;
using namespace tcover;

namespace {

CoverMode parse_mode(const std::string& s) {
  if (s == "strict") return CoverMode::Strict;
  if (s == "augmented") return CoverMode::Augmented;
  throw InvalidArgument("mode must be strict or augmented");
}

void emit(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::vector<int> parse_ids(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

// Exit status: 0 ok, 1 property does not hold, 2 error.
int status = 0;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monochromatic tree covers and r-partite hypergraph covers"};
  app.require_subcommand(1);

  // adversarial ---------------------------------------------------------------
  auto* adversarial = app.add_subcommand("adversarial", "lower-bound colourings from cover-family gadgets");
  adversarial->require_subcommand(1);
  auto* build = adversarial->add_subcommand("build", "colour a graph so that it needs tau(H_0) components");
  std::string graph_path, h0_path, covers_path, out_path, cert_path, mode_name = "augmented", i_set_text;
  int k = 3;
  std::uint64_t budget = 2'000'000;
  build->add_option("--graph", graph_path, ".cg graph (colours ignored)")->required();
  build->add_option("--hypergraph", h0_path, ".hg hypergraph H_0")->required();
  build->add_option("--covers", covers_path, ".hg cover family over the same parts")->required();
  build->add_option("--k", k, "arity")->required();
  build->add_option("--out", out_path, "coloured .cg output")->required();
  build->add_option("--certificate", cert_path, "JSON certificate (default: <out>.json)");
  build->add_option("--mode", mode_name, "strict or augmented");
  build->add_option("--independent-set", i_set_text, "comma-separated vertices; searched for when absent");
  build->add_option("--node-budget", budget, "independent set search budget");
  build->callback([&] {
    const auto graph = read_cg_file(graph_path).to_graph();
    const auto h0 = read_hg_file(h0_path);
    CoverFamily cf{h0, k, read_hg_file(covers_path).edges(), parse_mode(mode_name)};
    std::sort(cf.family.begin(), cf.family.end());
    const int m = assignment_target(h0, cf).edge_count();
    std::vector<int> i_set = parse_ids(i_set_text);
    if (i_set_text.empty()) {
      const auto found = find_sparse_independent_set(graph, m, k + 1, {budget, false});
      if (!found.found()) throw PreconditionViolated("independent-set", to_string(found.status));
      i_set = found.vertices;
    }
    const auto ea = build_ed0_from_independent_set(graph, h0, i_set, cf, k);
    const auto report = verify_lower_bound(graph, ea);
    std::ofstream out(out_path);
    if (!out) throw InvalidArgument("cannot write " + out_path);
    write_cg(out, report.colouring);
    json cert = {{"target", ea.target}, {"map", ea.map}, {"independent_set", i_set}, {"k", k}, {"report", report}};
    emit(cert, cert_path.empty() ? out_path + ".json" : cert_path);
    std::cout << "lower bound " << report.bound() << (report.exact_checked ? " (checked exactly)" : "") << '\n';
    if (!report.bound_holds()) status = 1;
  });

  // coverability --------------------------------------------------------------
  auto* cov = app.add_subcommand("coverability", "intersecting k-covers and coverable chains");
  cov->require_subcommand(1);
  std::string hg_path, json_out;
  auto* check = cov->add_subcommand("check-kcovers", "check a cover family");
  check->add_option("--hypergraph", hg_path)->required();
  check->add_option("--covers", covers_path)->required();
  check->add_option("--k", k)->required();
  check->add_option("--mode", mode_name);
  check->callback([&] {
    CoverFamily cf{read_hg_file(hg_path), k, read_hg_file(covers_path).edges(), parse_mode(mode_name)};
    std::sort(cf.family.begin(), cf.family.end());
    const auto result = check_cover_family(cf);
    emit({{"ok", result.ok}, {"message", result.message()}, {"family", cf}}, "");
    if (!result.ok) status = 1;
  });

  auto* search = cov->add_subcommand("search-kcovers", "search for a cover family");
  search->add_option("--hypergraph", hg_path)->required();
  search->add_option("--k", k)->required();
  search->add_option("--mode", mode_name);
  search->callback([&] {
    const auto found = search_cover_family(read_hg_file(hg_path), k, parse_mode(mode_name));
    emit(found ? json(*found) : json(nullptr), "");
    if (!found) status = 1;
  });

  int max_m = -1;
  auto* chain = cov->add_subcommand("search-chain", "search for a (k, m)-coverable chain with least m");
  chain->add_option("--hypergraph", hg_path)->required();
  chain->add_option("--k", k)->required();
  chain->add_option("--max-m", max_m, "default |E|");
  chain->callback([&] {
    const auto found = search_chain(read_hg_file(hg_path), k, {max_m});
    emit(found ? json(*found) : json(nullptr), "");
    if (!found) status = 1;
  });

  auto* classify = cov->add_subcommand("classify3", "case of a pairwise intersecting 3-partite hypergraph");
  classify->add_option("--hypergraph", hg_path)->required();
  classify->callback([&] { emit(classify_intersecting_3graph(read_hg_file(hg_path)), ""); });

  std::string quantity = "hi";
  int r = 3;
  ExtremalCaps caps;
  auto* extremal = cov->add_subcommand("extremal", "bounded search for hi, Hi or kc");
  extremal->add_option("--quantity", quantity, "hi | Hi | kc")->required();
  extremal->add_option("--r", r)->required();
  extremal->add_option("--k", k, "k for hi and Hi, t for kc")->required();
  extremal->add_option("--max-part", caps.max_part);
  extremal->add_option("--max-edges", caps.max_edges);
  extremal->add_option("--max-k", caps.max_k, "kc only");
  extremal->add_flag("--audit-all", caps.audit_all, "check every instance");
  extremal->add_option("--out", json_out);
  extremal->callback([&] { emit(compute_extremal(parse_quantity(quantity), r, k, caps), json_out); });

  auto* refute = cov->add_subcommand("refute", "no (4, m)-coverable 3-partite hypergraph with tau >= 4 within caps");
  refute->add_option("--max-part", caps.max_part);
  refute->add_option("--max-edges", caps.max_edges);
  refute->add_option("--out", json_out);
  refute->callback([&] { emit(refute_4m_coverable(caps), json_out); });

  // graph and hypergraph utilities ---------------------------------------------
  auto* aux = app.add_subcommand("auxiliary", "auxiliary hypergraph of a coloured graph");
  std::string w_text;
  aux->add_option("--graph", graph_path)->required();
  auto* w_opt = aux->add_option("--witness", w_text, "comma-separated W (default V)");
  aux->add_option("--out", json_out);
  aux->callback([&] {
    const auto g = read_cg_file(graph_path).to_coloured();
    const auto w = parse_ids(w_text);
    emit(w_opt->count() == 0 ? build_auxiliary(g) : build_auxiliary(g, w), json_out);
  });

  auto* tc = app.add_subcommand("tree-cover", "exact monochromatic component cover of a coloured graph");
  tc->add_option("--graph", graph_path)->required();
  tc->callback([&] {
    const auto g = read_cg_file(graph_path).to_coloured();
    const auto cover = tree_cover_number(g);
    json comps = json::array();
    for (const auto& c : cover.components) comps.push_back({{"colour", c.colour}, {"id", c.id}});
    emit({{"tree_cover_number", cover.size}, {"components", comps}, {"tau", tau_number(build_auxiliary(g).hypergraph)}},
         "");
  });

  auto* tau_cmd = app.add_subcommand("tau", "cover number of an r-partite hypergraph");
  tau_cmd->add_option("--hypergraph", hg_path)->required();
  tau_cmd->callback([&] {
    const auto result = tau(read_hg_file(hg_path));
    emit({{"tau", result.size}, {"certificate", result.certificate}}, "");
  });

  // lab -----------------------------------------------------------------------
  auto* lab = app.add_subcommand("lab", "seeded experiments");
  lab->require_subcommand(1);
  std::string spec_path;
  int threads = 0;
  auto add_lab = [&](const char* name, const char* help) {
    auto* sub = lab->add_subcommand(name, help);
    sub->add_option("--spec", spec_path, "experiment spec JSON")->required();
    sub->add_option("--threads", threads, "override the spec's thread count");
    sub->add_option("--out", out_path, "override the spec's output path");
    return sub;
  };
  auto load = [&] {
    auto spec = read_spec_file(spec_path);
    if (threads > 0) spec.threads = threads;
    if (!out_path.empty()) spec.output = out_path;
    return spec;
  };
  add_lab("sweep", "adversarial success rate over n, p, trials (CSV)")->callback([&] {
    const auto spec = load();
    const auto result = run_adversarial_sweep(spec);
    if (spec.output.empty() || spec.output == "-") {
      write_sweep_csv(std::cout, spec, result);
    } else {
      std::ofstream out(spec.output, std::ios::binary);
      if (!out) throw InvalidArgument("cannot write " + spec.output);
      write_sweep_csv(out, spec, result);
    }
  });
  add_lab("oracle", "random coloured graphs against the exact solvers (JSON)")->callback([&] {
    const auto spec = load();
    const auto report = run_oracle_corpus(spec);
    emit(report, spec.output);
    if (!report["all_passed"].get<bool>()) status = 1;
  });
  add_lab("ladder", "multiplicity-ladder chains on sampled graphs (JSON)")->callback([&] {
    const auto spec = load();
    emit(run_level_ladder_audit(spec), spec.output);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const CounterexampleFound& e) {
    std::cerr << "counterexample: " << e.what() << '\n' << e.certificate();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
