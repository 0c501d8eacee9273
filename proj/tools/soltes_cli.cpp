#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "soltes/constructions.hpp"
#include "soltes/error.hpp"
#include "soltes/hypergraph_io.hpp"
#include "soltes/lemmas.hpp"
#include "soltes/search.hpp"
#include "soltes/verify/acceptance.hpp"
#include "soltes/weighted_graph.hpp"

namespace {

using nlohmann::json;
using namespace soltes;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Output {
  std::string format = "text";
  std::string path = "-";
  std::ofstream file;

  std::ostream& stream() {
    if (path == "-") return std::cout;
    if (!file.is_open()) {
      file.open(path);
      if (!file) throw Error(ErrorCode::kParse, "cannot write " + path);
    }
    return file;
  }
  bool json_mode() const { return format == "json"; }
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("-o,--output", out.path, "output path, - for stdout");
}

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool looks_weighted(const std::string& path, const std::string& text, bool flag) {
  if (flag) return true;
  if (path.size() > 3 && path.compare(path.size() - 3, 3, ".wg") == 0) return true;
  return text.find("# format: wg") != std::string::npos;
}

std::size_t default_partitions() {
  if (const char* env = std::getenv("SOLTES_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<std::size_t>(n);
  }
  return 1;
}

json weighted_distribution(const WeightedGraph& g) {
  std::map<WeightedDistance, std::uint64_t> counts;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto d = dijkstra(g, u);
    for (Vertex v = u + 1; v < g.order(); ++v) ++counts[d[v]];
  }
  json out = json::object();
  for (const auto& [d, c] : counts) out[to_json(d).get<std::string>()] = c;
  return out;
}

std::string plain(const json& value) { return value.is_string() ? value.get<std::string>() : value.dump(); }

void print_text_distribution(std::ostream& os, const json& dist) {
  for (const auto& [d, c] : dist.items()) os << "  d = " << d << ": " << c << " pairs\n";
}

int cmd_wiener(const std::string& path, bool weighted_flag, Output& out) {
  const std::string text = slurp(path);
  std::istringstream in(text);
  json result;
  if (looks_weighted(path, text, weighted_flag)) {
    const WeightedGraph g = read_wg(in);
    result = {{"order", g.order()}, {"wiener", to_json(wiener(g))}, {"distribution", weighted_distribution(g)}};
  } else {
    const Hypergraph h = read_hg(in);
    result = {{"order", h.order()}, {"wiener", to_json(wiener(h))},
              {"distribution", to_json(distance_distribution(h))}};
  }
  std::ostream& os = out.stream();
  if (out.json_mode()) {
    os << result.dump() << '\n';
  } else {
    os << "W = " << plain(result["wiener"]) << '\n';
    print_text_distribution(os, result["distribution"]);
  }
  return kOk;
}

int cmd_check(const std::string& path, bool weighted_flag, const std::string& expect, Output& out) {
  const std::string text = slurp(path);
  std::istringstream in(text);
  json report;
  bool verdict = false;
  if (looks_weighted(path, text, weighted_flag)) {
    const WeightedSoltesReport r = soltes_report(read_wg(in));
    report = to_json(r);
    verdict = r.verdict;
  } else {
    const SoltesReport r = soltes_report(read_hg(in));
    report = to_json(r);
    verdict = r.verdict;
  }
  std::ostream& os = out.stream();
  if (out.json_mode()) {
    os << report.dump() << '\n';
  } else {
    os << "verdict: " << (verdict ? "true" : "false") << "\nW = " << plain(report["wiener"]) << '\n';
    for (const auto& v : report["vertices"]) {
      os << "  v " << v["label"] << ": sigma " << plain(v["sigma"]) << ", W(H - v) "
         << plain(v["wiener_after"]) << ", delta " << plain(v["delta"]) << '\n';
    }
  }
  if (!expect.empty() && (expect == "true") != verdict) {
    std::cerr << "verdict " << (verdict ? "true" : "false") << " but expected " << expect << '\n';
    return kMismatch;
  }
  return kOk;
}

int cmd_construct(ConstructionParams params, Output& out) {
  if (params.variant == Variant::kKnits && params.n >= 92 && params.n < 100) {
    std::cerr << "warning: knits below n = 100 relies on the s >= 15 bound\n";
  }
  const Construction built = construct(params);
  const bool expect_soltes =
      params.variant != Variant::kCycle &&
      (params.variant != Variant::kGeneralR || params.convention == IntervalConvention::kHalfOpenMiddle);

  json report;
  bool verdict = false;
  if (const auto* h = std::get_if<Hypergraph>(&built)) {
    const SoltesReport r = soltes_report(*h);
    report = to_json(r);
    verdict = r.verdict;
  } else {
    const WeightedSoltesReport r = soltes_report(std::get<WeightedGraph>(built));
    report = to_json(r);
    verdict = r.verdict;
  }

  std::ostream& os = out.stream();
  if (out.json_mode()) {
    json object;
    if (const auto* h = std::get_if<Hypergraph>(&built)) {
      json edges = json::array();
      for (const auto& e : h->edges()) edges.push_back(e.elements());
      object = {{"order", h->order()}, {"uniformity", h->uniformity()}, {"edges", edges}};
    } else {
      const auto& g = std::get<WeightedGraph>(built);
      json edges = json::array();
      for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.weight.to_string()});
      object = {{"order", g.order()}, {"edges", edges}};
    }
    os << json{{"descriptor", to_json(params)}, {"object", object}, {"report", report}}.dump() << '\n';
  } else {
    std::vector<std::string> comments{
        "descriptor: " + to_json(params).dump(),
        "wiener: " + plain(report["wiener"]),
        std::string("soltes: ") + (verdict ? "true" : "false"),
    };
    if (const auto* h = std::get_if<Hypergraph>(&built)) {
      write_hg(os, *h, comments);
    } else {
      comments.insert(comments.begin(), "format: wg");
      write_wg(os, std::get<WeightedGraph>(built), comments);
    }
  }
  if (expect_soltes && !verdict) {
    std::cerr << "self-validation failed: construction is not Soltes\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_search(const std::string& path, std::optional<std::size_t> partitions, Output& out) {
  json j;
  try {
    j = json::parse(slurp(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("search spec: ") + e.what());
  }
  SearchSpec spec = search_spec_from_json(j);
  if (partitions) spec.partitions = *partitions;
  else if (!j.contains("partitions")) spec.partitions = default_partitions();
  const SearchResult r = search_soltes(spec);

  std::ostream& os = out.stream();
  if (out.json_mode()) {
    for (const auto& w : r.witnesses) os << witness_json(w).dump() << '\n';
    os << summary_json(r).dump() << '\n';
  } else {
    for (const auto& w : r.witnesses) {
      os << "witness:";
      for (const auto& e : w.edges()) {
        os << " {";
        bool first = true;
        e.for_each([&](Vertex v) { os << (first ? "" : ",") << v, first = false; });
        os << '}';
      }
      os << '\n';
    }
    os << "status " << to_string(r.status) << ", " << r.classes_visited << " classes, " << r.witnesses.size()
       << " witnesses, " << r.wall_seconds << " s\n";
  }
  return kOk;
}

int cmd_lemmas(std::uint64_t samples, std::uint64_t seed, std::size_t exhaustive_max, Output& out) {
  const LemmaReport r = lemma_suite(samples, seed, exhaustive_max);
  std::ostream& os = out.stream();
  if (out.json_mode()) {
    os << to_json(r).dump() << '\n';
  } else {
    os << r.exhaustive_classes << " exhaustive classes, " << r.random_samples << " random samples\n";
    for (const auto& c : r.checks) {
      os << "  " << (c.violations == 0 ? "ok  " : "FAIL") << "  " << c.name << " (" << c.violations << " of "
         << c.checked << ")\n";
    }
  }
  return r.ok() ? kOk : kMismatch;
}

int cmd_verify(bool extended, std::size_t sweep_order, std::uint64_t seed, Output& out) {
  AcceptanceOptions options;
  options.extended = extended;
  options.graph_sweep_order = sweep_order;
  options.seed = seed;
  options.partitions = default_partitions();
  std::ostream& os = out.stream();
  json lines = json::array();
  const auto results = run_acceptance(options, [&](const CriterionResult& r) {
    if (out.json_mode()) lines.push_back(to_json(r));
    else os << format_line(r) << std::endl;
  });
  const bool ok = all_gating_passed(results);
  if (out.json_mode()) os << json{{"criteria", lines}, {"passed", ok}}.dump() << '\n';
  else os << (ok ? "all criteria passed" : "some criteria FAILED") << '\n';
  return ok ? kOk : kMismatch;
}

int exit_code_for(const Error& e) {
  return e.code() == ErrorCode::kInvariantViolated ? kMismatch : kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wiener-index invariance under vertex deletion: checks, constructions and searches"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "soltes 1.0");

  Output out;
  std::function<int()> action;

  std::string input;
  bool weighted = false;

  auto* wiener_cmd = app.add_subcommand("wiener", "print W and the distance distribution");
  wiener_cmd->add_option("file", input, "input .hg/.wg file, - for stdin")->required();
  wiener_cmd->add_flag("--weighted", weighted, "treat input as a weighted graph");
  add_output_flags(wiener_cmd, out);
  wiener_cmd->callback([&] { action = [&] { return cmd_wiener(input, weighted, out); }; });

  std::string expect;
  auto* check_cmd = app.add_subcommand("check", "print the vertex-deletion report");
  check_cmd->add_option("file", input, "input .hg/.wg file, - for stdin")->required();
  check_cmd->add_flag("--weighted", weighted, "treat input as a weighted graph");
  check_cmd->add_option("--expect", expect, "exit 1 unless the verdict matches")
      ->check(CLI::IsMember({"true", "false"}));
  add_output_flags(check_cmd, out);
  check_cmd->callback([&] { action = [&] { return cmd_check(input, weighted, expect, out); }; });

  ConstructionParams params;
  std::string variant;
  std::string convention = "half_open_middle";
  std::string descriptor;
  auto* construct_cmd = app.add_subcommand("construct", "build a family member and validate it");
  construct_cmd->add_option("--variant", variant, "knits, general_r, irregular54, cycle or prism");
  construct_cmd->add_option("--n", params.n, "order (knits, cycle)");
  construct_cmd->add_option("--s", params.s, "general_r parameter s");
  construct_cmd->add_option("--t", params.t, "general_r parameter t");
  construct_cmd->add_option("--r", params.r, "general_r parameter r");
  construct_cmd->add_option("--k", params.k, "prism family parameter (order 4k)");
  construct_cmd->add_option("--convention", convention, "general_r interval convention");
  construct_cmd->add_option("--descriptor", descriptor, "JSON descriptor file instead of flags");
  add_output_flags(construct_cmd, out);
  construct_cmd->callback([&] {
    action = [&] {
      if (!descriptor.empty()) {
        try {
          params = construction_params_from_json(json::parse(slurp(descriptor)));
        } catch (const json::exception& e) {
          throw Error(ErrorCode::kParse, std::string("descriptor: ") + e.what());
        }
      } else {
        if (variant.empty()) throw Error(ErrorCode::kParse, "construct needs --variant or --descriptor");
        params.variant = parse_variant(variant);
        params.convention = parse_convention(convention);
      }
      return cmd_construct(params, out);
    };
  });

  std::optional<std::size_t> partitions;
  auto* search_cmd = app.add_subcommand("search", "isomorph-free search for Soltes hypergraphs");
  search_cmd->add_option("spec", input, "search spec JSON file, - for stdin")->required();
  search_cmd->add_option("--partitions", partitions, "parallel shards (default SOLTES_THREADS or 1)");
  add_output_flags(search_cmd, out);
  search_cmd->callback([&] { action = [&] { return cmd_search(input, partitions, out); }; });

  std::uint64_t samples = 100000;
  std::uint64_t seed = 0x50174e5ULL;
  std::size_t exhaustive_max = 5;
  auto* lemmas_cmd = app.add_subcommand("lemmas", "check the order-8 4-uniform distance bounds");
  lemmas_cmd->add_option("--samples", samples, "random samples of larger size");
  lemmas_cmd->add_option("--seed", seed, "random seed");
  lemmas_cmd->add_option("--exhaustive-max", exhaustive_max, "largest size checked exhaustively");
  add_output_flags(lemmas_cmd, out);
  lemmas_cmd->callback([&] { action = [&] { return cmd_lemmas(samples, seed, exhaustive_max, out); }; });

  bool extended = false;
  auto* verify_cmd = app.add_subcommand("verify-paper", "run the acceptance suite");
  verify_cmd->add_flag("--extended", extended, "also run the long non-gating searches");
  std::size_t sweep_order = 9;
  verify_cmd->add_option("--sweep-order", sweep_order, "largest graph order in the extended sweep")
      ->check(CLI::Range(3, 12));
  verify_cmd->add_option("--seed", seed, "random seed");
  add_output_flags(verify_cmd, out);
  verify_cmd->callback([&] { action = [&] { return cmd_verify(extended, sweep_order, seed, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const int code = action();
    std::cout.flush();
    return code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
