#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quiverkit/checks.hpp"
#include "quiverkit/classify.hpp"
#include "quiverkit/errors.hpp"
#include "quiverkit/export.hpp"
#include "quiverkit/mutation.hpp"
#include "quiverkit/parallel.hpp"
#include "quiverkit/polygon.hpp"
#include "quiverkit/power.hpp"

namespace qk = quiverkit;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitCheckFailure = 4;

struct Options {
  unsigned threads = 0;
  std::string output;

  int n = 0;
  int m = 1;
  std::optional<int> base_n;
  std::string emit = "json";
  bool components = false;
  std::string report = "json";

  std::string matrix;
  std::string steps;
  bool enumerate = false;
  std::size_t seed_cap = 10000;
  int polygon_cap = qk::kDefaultAngulationPolygonCap;

  std::optional<std::string> only;
  std::uint64_t seed = qk::CheckOptions{}.seed;
};

void write_output(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw qk::ArgumentError("cannot open output file " + opt.output);
  file << text;
}

std::string dump(const qk::Json& json) { return json.dump(2) + "\n"; }

qk::Json with_schema() {
  qk::Json out = qk::Json::object();
  out["schema"] = qk::kSchema;
  return out;
}

int cmd_gamma(const Options& opt) {
  qk::TranslationQuiver g = qk::gamma(opt.n, opt.m, qk::default_vertex_cap());
  if (opt.emit == "dot") {
    write_output(opt, qk::to_dot(g, "Gamma(" + std::to_string(opt.n) + "," + std::to_string(opt.m) + ")"));
    return 0;
  }
  qk::Json out = with_schema();
  out["n"] = opt.n;
  out["m"] = opt.m;
  const qk::Json body = qk::to_json(g);
  for (const auto& [key, value] : body.items()) out[key] = value;
  write_output(opt, dump(out));
  return 0;
}

int cmd_power(const Options& opt) {
  const int base = opt.base_n ? *opt.base_n : opt.n * opt.m;
  if (opt.m < 1) throw qk::ArgumentError("power needs m >= 1");
  qk::PowerQuiver pq = qk::power(qk::gamma(base, 1, qk::default_vertex_cap()), opt.m);
  const std::string name = "Gamma(" + std::to_string(base) + ",1)^" + std::to_string(opt.m);

  std::vector<qk::TranslationQuiver> parts;
  if (opt.components) {
    for (auto& c : qk::decompose(pq)) parts.push_back(std::move(c.quiver));
  } else {
    parts.push_back(pq.result);
  }

  if (opt.emit == "dot") {
    std::string text;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      text += qk::to_dot(parts[i], parts.size() == 1 ? name : name + " component " + std::to_string(i + 1));
    }
    write_output(opt, text);
    return 0;
  }
  qk::Json out = with_schema();
  out["base"] = base;
  out["m"] = opt.m;
  qk::Json list = qk::Json::array();
  for (const auto& p : parts) list.push_back(qk::to_json(p));
  out["components"] = std::move(list);
  out["repeated_arrows"] = pq.repeated_arrows.size();
  write_output(opt, dump(out));
  return 0;
}

int cmd_classify(const Options& opt) {
  qk::ComponentReport report = qk::classify_components(opt.n, opt.m, qk::default_vertex_cap());
  write_output(opt, opt.report == "text" ? qk::to_text(report) : dump(qk::to_json(report)));
  return 0;
}

std::vector<std::size_t> parse_steps(const std::string& text, std::size_t rank) {
  std::vector<std::size_t> steps;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(item, &used);
    } catch (const std::exception&) {
      throw qk::ArgumentError("bad mutation step '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw qk::ArgumentError("bad mutation step '" + item + "'");
    }
    if (value < 1 || static_cast<std::size_t>(value) > rank) {
      throw qk::ArgumentError("mutation step " + std::to_string(value) + " outside 1.." + std::to_string(rank));
    }
    steps.push_back(static_cast<std::size_t>(value) - 1);
  }
  return steps;
}

qk::ExchangeMatrix parse_matrix(const std::string& text) {
  qk::Json rows;
  try {
    rows = qk::Json::parse(text);
  } catch (const qk::Json::parse_error& e) {
    throw qk::ArgumentError(std::string("matrix is not valid JSON: ") + e.what());
  }
  if (!rows.is_array() || rows.empty()) throw qk::ArgumentError("matrix must be a nonempty JSON array of rows");
  std::vector<std::vector<std::int64_t>> values;
  for (const auto& row : rows) {
    if (!row.is_array()) throw qk::ArgumentError("matrix rows must be arrays");
    std::vector<std::int64_t> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw qk::ArgumentError("matrix entries must be integers");
      r.push_back(x.get<std::int64_t>());
    }
    values.push_back(std::move(r));
  }
  return qk::ExchangeMatrix::from_rows(values);
}

int cmd_mutate(const Options& opt) {
  const qk::ExchangeMatrix matrix = parse_matrix(opt.matrix);
  qk::Json out = with_schema();
  out["matrix"] = matrix.entries().rows();

  if (opt.enumerate) {
    auto result = qk::enumerate_cluster_variables(matrix, opt.seed_cap);
    if (result.cap_reached) {
      throw qk::CapExceeded("more than " + std::to_string(opt.seed_cap) + " seeds; raise --cap");
    }
    qk::Json variables = qk::Json::array();
    bool laurent = true;
    for (const auto& x : result.variables) {
      variables.push_back(x.to_string());
      laurent = laurent && qk::is_laurent(x);
    }
    out["count"] = result.variables.size();
    out["seeds"] = result.seeds_visited;
    out["all_laurent"] = laurent;
    out["variables"] = std::move(variables);
    write_output(opt, dump(out));
    return 0;
  }

  qk::Seed seed = qk::initial_seed(matrix);
  qk::Json applied = qk::Json::array();
  for (std::size_t k : parse_steps(opt.steps, matrix.size())) {
    seed = qk::mutate_seed(seed, k);
    applied.push_back(k + 1);
  }
  qk::Json cluster = qk::Json::array();
  for (const auto& x : seed.cluster) cluster.push_back(x.to_string());
  out["steps"] = std::move(applied);
  out["cluster"] = std::move(cluster);
  out["mutated_matrix"] = seed.matrix.entries().rows();
  write_output(opt, dump(out));
  return 0;
}

int cmd_angulations(const Options& opt) {
  auto all = qk::enumerate_angulations(opt.n, opt.m, opt.polygon_cap);
  qk::Json list = qk::Json::array();
  for (const auto& a : all) {
    qk::Json one = qk::Json::array();
    for (const auto& d : a) one.push_back(qk::Json::array({d.first, d.second}));
    list.push_back(std::move(one));
  }
  qk::Json out = with_schema();
  out["n"] = opt.n;
  out["m"] = opt.m;
  out["count"] = all.size();
  out["angulations"] = std::move(list);
  write_output(opt, dump(out));
  return 0;
}

int cmd_verify(const Options& opt) {
  qk::CheckOptions options;
  options.seed = opt.seed;
  auto results = qk::run_checks(options, opt.only);
  std::string text;
  for (const auto& r : results) text += qk::format_result(r) + "\n";
  const bool ok = qk::all_gating_passed(results);
  text += ok ? "all hard checks passed\n" : "hard check failure\n";
  write_output(opt, text);
  return ok ? 0 : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Translation quivers of polygon diagonals, their powers, orbit quivers and cluster mutation"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--threads", opt.threads, "Maximum worker threads (0 = hardware concurrency)");
  app.add_option("-o,--output", opt.output, "Write to this file instead of stdout");

  auto* gamma = app.add_subcommand("gamma", "Emit the quiver of m-diagonals of the (nm+2)-gon");
  gamma->add_option("--n", opt.n, "Rank parameter n >= 2")->required();
  gamma->add_option("--m", opt.m, "Angulation parameter m >= 1");
  gamma->add_option("--emit", opt.emit, "Output format")->check(CLI::IsMember({"json", "dot"}));

  auto* power = app.add_subcommand("power", "Emit the m-th power of Gamma(nm,1)");
  auto* power_n = power->add_option("--n", opt.n, "Power Gamma(n*m,1)");
  power->add_option("--base-n", opt.base_n, "Power Gamma(base-n,1) instead")->excludes(power_n);
  power->add_option("--m", opt.m, "Exponent m >= 1");
  power->add_option("--emit", opt.emit, "Output format")->check(CLI::IsMember({"json", "dot"}));
  power->add_flag("--components", opt.components, "Split into connected components");

  auto* classify = app.add_subcommand("classify", "Classify the components of Gamma(nm,1)^m");
  classify->add_option("--n", opt.n, "Rank parameter n >= 2")->required();
  classify->add_option("--m", opt.m, "Exponent m >= 1")->required();
  classify->add_option("--report", opt.report, "Report format")->check(CLI::IsMember({"json", "text"}));

  auto* mutate = app.add_subcommand("mutate", "Mutate a seed or enumerate its cluster variables");
  mutate->add_option("--matrix", opt.matrix, "Exchange matrix as JSON rows, e.g. [[0,1],[-1,0]]")->required();
  mutate->add_option("--steps", opt.steps, "Comma separated 1-based mutation directions");
  mutate->add_flag("--enumerate", opt.enumerate, "List every reachable cluster variable");
  mutate->add_option("--cap", opt.seed_cap, "Maximum number of seeds to explore")->check(CLI::PositiveNumber);

  auto* angulations = app.add_subcommand("angulations", "List the (m+2)-angulations of the (nm+2)-gon");
  angulations->add_option("--n", opt.n, "Rank parameter n >= 2")->required();
  angulations->add_option("--m", opt.m, "Angulation parameter m >= 1");
  angulations->add_option("--cap", opt.polygon_cap, "Largest polygon to enumerate")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run the built-in verification checks");
  std::vector<std::string> names;
  for (const auto& info : qk::check_catalog()) names.push_back(info.name);
  verify->add_option("--only", opt.only, "Run a single named check")->check(CLI::IsMember(names));
  verify->add_option("--seed", opt.seed, "Seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    qk::set_worker_limit(opt.threads);
    if (power->parsed() && !opt.base_n && opt.n == 0) throw qk::ArgumentError("power needs --n or --base-n");
    if (gamma->parsed()) return cmd_gamma(opt);
    if (power->parsed()) return cmd_power(opt);
    if (classify->parsed()) return cmd_classify(opt);
    if (mutate->parsed()) return cmd_mutate(opt);
    if (angulations->parsed()) return cmd_angulations(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const qk::ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qk::NotSignSkewSymmetric& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qk::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return EXIT_FAILURE;
  }
  return kExitUsage;
}
