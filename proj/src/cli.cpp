#include "rbnc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "rbnc/errors.hpp"
#include "rbnc/redeiberge.hpp"
#include "rbnc/serialize.hpp"
#include "rbnc/verify.hpp"

namespace rbnc::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

long long parse_count(const std::string& text, const std::string& spec) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("bad number '" + text + "' in '" + spec + "'");
}

double parse_probability(const std::string& text, const std::string& spec) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size() && v >= 0.0 && v <= 1.0) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("bad edge probability '" + text + "' in '" + spec + "'");
}

int parse_vertices(const std::string& text, const std::string& spec) {
  const long long n = parse_count(text, spec);
  if (n < 0 || n > Digraph::kMaxVertices) throw ParseError("vertex count out of range in '" + spec + "'");
  return static_cast<int>(n);
}

bool is_generator_name(const std::string& name) {
  static const char* names[] = {"complete", "discrete", "path", "cycle", "random", "tournament"};
  return std::find(std::begin(names), std::end(names), name) != std::end(names);
}

// Builds one instance of a batch family for the given seed.
Digraph family_member(const std::string& family, std::uint64_t seed) {
  const auto parts = split(family, ':');
  if (parts.size() == 3 && parts[0] == "random")
    return random_digraph(parse_vertices(parts[1], family), parse_probability(parts[2], family), seed);
  if (parts.size() == 2 && parts[0] == "tournament") return random_tournament(parse_vertices(parts[1], family), seed);
  throw ParseError("batch family must be 'random:n:p' or 'tournament:n', got '" + family + "'");
}

NCSymElement compute_w(const Digraph& x, Algorithm algorithm) {
  if (algorithm == Algorithm::Auto) algorithm = Algorithm::Permutations;
  const int limit = algorithm_limit(algorithm);
  if (x.vertex_count() > limit)
    throw SizeLimitError(algorithm_name(algorithm) + " accepts at most " + std::to_string(limit) + " vertices");
  switch (algorithm) {
    case Algorithm::Definition:
      return w_by_definition(x);
    case Algorithm::DeletionContraction:
      return w_by_deletion_contraction(x);
    default:
      return w_by_permutations(x);
  }
}

int do_compute(const RunConfig& config, std::ostream& out) {
  const Digraph x = load_instance(config.input);
  const NCSymElement w = to_basis(compute_w(x, config.algorithm), config.basis);
  const Algorithm used = config.algorithm == Algorithm::Auto ? Algorithm::Permutations : config.algorithm;

  if (config.format == OutputFormat::Json) {
    Json report = {{"instance", config.input}, {"command", "compute"}, {"algorithm", algorithm_name(used)}};
    report["element"] = config.commutative ? to_json(commutative_image(w)) : to_json(w);
    report["results"] = Json::array();
    out << report.dump(2) << "\n";
    return kExitSuccess;
  }

  const char letter = basis_letter(config.basis);
  if (config.commutative) {
    const CSymElement image = commutative_image(w);
    if (image.is_zero()) out << "0\n";
    for (const auto& [lambda, c] : image.terms()) out << letter << lambda.to_string() << "  coeff " << to_string(c) << "\n";
  } else {
    if (w.is_zero()) out << "0\n";
    for (const auto& [pi, c] : w.terms()) out << letter << "[" << pi.to_string() << "]  coeff " << to_string(c) << "\n";
  }
  return kExitSuccess;
}

int do_verify(const RunConfig& config, std::ostream& out) {
  const Digraph x = load_instance(config.input);
  VerifyOptions options;
  options.instance = config.input;
  const auto reports = check_identities(x, config.checks, options);
  bool any_failed = false;
  for (const auto& r : reports) any_failed = any_failed || r.failed();

  if (config.format == OutputFormat::Json) {
    Json results = Json::array();
    for (const auto& r : reports) results.push_back(to_json(r));
    out << Json({{"instance", config.input}, {"command", "verify"}, {"results", results}}).dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << r.check << ": " << to_string(r.status);
      if (!r.detail.empty()) out << " (" << r.detail << ")";
      out << "\n";
    }
  }
  return any_failed ? kExitCheckFailure : kExitSuccess;
}

int do_bench(const RunConfig& config, std::ostream& out) {
  const Digraph x = load_instance(config.input);
  const int n = x.vertex_count();
  const int repeat = std::max(1, config.repeat);

  struct Row {
    std::string name;
    std::function<NCSymElement()> run;
  };
  std::vector<Row> rows;
  if (n <= algorithm_limit(Algorithm::Definition)) rows.push_back({"definition", [&] { return w_by_definition(x); }});
  if (n <= algorithm_limit(Algorithm::Permutations)) rows.push_back({"permutations", [&] { return w_by_permutations(x); }});
  if (n <= algorithm_limit(Algorithm::DeletionContraction))
    rows.push_back({"deletion-contraction", [&] { return w_by_deletion_contraction(x); }});
  if (is_tournament(x) && n <= 8) rows.push_back({"tournament", [&] { return w_tournament(x); }});
  if (rows.empty()) throw SizeLimitError("no algorithm accepts " + std::to_string(n) + " vertices");

  std::optional<NCSymElement> reference;
  out << std::left << std::setw(22) << "algorithm" << std::right << std::setw(12) << "time_ms" << std::setw(8)
      << "terms" << std::setw(8) << "agrees" << "\n";
  bool disagreement = false;
  for (const Row& row : rows) {
    NCSymElement result;
    double best = 0.0;
    for (int i = 0; i < repeat; ++i) {
      const auto start = std::chrono::steady_clock::now();
      result = row.run();
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      best = i == 0 ? ms : std::min(best, ms);
    }
    const NCSymElement in_m = to_basis(result, Basis::M);
    if (!reference) reference = in_m;
    const bool agrees = *reference == in_m;
    disagreement = disagreement || !agrees;
    out << std::left << std::setw(22) << row.name << std::right << std::setw(12) << std::fixed << std::setprecision(3)
        << best << std::setw(8) << result.terms().size() << std::setw(8) << (agrees ? "yes" : "NO") << "\n";
  }
  return disagreement ? kExitCheckFailure : kExitSuccess;
}

int do_batch(const RunConfig& config, std::ostream& out) {
  if (config.count < 1) throw ParseError("batch count must be positive");
  struct Tally {
    int pass = 0;
    int fail = 0;
    int skipped = 0;
  };
  std::map<std::string, Tally> tallies;
  std::vector<std::pair<std::uint64_t, VerificationReport>> failures;
  for (int i = 0; i < config.count; ++i) {
    const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(i);
    const Digraph x = family_member(config.input, seed);
    VerifyOptions options;
    options.instance = config.input + ":" + std::to_string(seed);
    for (auto& r : check_identities(x, config.checks, options)) {
      Tally& t = tallies[r.check];
      if (r.passed()) ++t.pass;
      if (r.status == CheckStatus::Skipped) ++t.skipped;
      if (r.failed()) {
        ++t.fail;
        failures.emplace_back(seed, std::move(r));
      }
    }
  }

  // Report checks in registry order.
  std::vector<std::string> order;
  for (const auto& name : check_names())
    if (tallies.count(name)) order.push_back(name);

  if (config.format == OutputFormat::Json) {
    Json results = Json::array();
    for (const auto& name : order) {
      const Tally& t = tallies[name];
      results.push_back({{"check", name},
                         {"status", t.fail ? "fail" : (t.pass ? "pass" : "skipped")},
                         {"passed", t.pass},
                         {"failed", t.fail},
                         {"skipped", t.skipped}});
    }
    for (const auto& [seed, r] : failures)
      results.push_back({{"check", r.check}, {"status", "fail"}, {"instance", r.instance}, {"witness", r.detail}});
    out << Json({{"instance", config.input},
                 {"command", "batch"},
                 {"seeds", {config.seed, config.seed + static_cast<std::uint64_t>(config.count) - 1}},
                 {"results", results}})
               .dump(2)
        << "\n";
  } else {
    out << "family " << config.input << " seeds " << config.seed << ".." << config.seed + config.count - 1 << "\n";
    out << std::left << std::setw(24) << "check" << std::right << std::setw(8) << "pass" << std::setw(8) << "fail"
        << std::setw(9) << "skipped" << "\n";
    for (const auto& name : order) {
      const Tally& t = tallies[name];
      out << std::left << std::setw(24) << name << std::right << std::setw(8) << t.pass << std::setw(8) << t.fail
          << std::setw(9) << t.skipped << "\n";
    }
    for (const auto& [seed, r] : failures) out << "FAIL " << r.check << " " << r.instance << ": " << r.detail << "\n";
  }
  return failures.empty() ? kExitSuccess : kExitCheckFailure;
}

}  // namespace

Digraph load_instance(const std::string& input) {
  const auto parts = split(input, ':');
  if (parts.size() >= 2 && is_generator_name(parts[0])) {
    const std::string& kind = parts[0];
    const int n = parse_vertices(parts[1], input);
    if (kind == "random") {
      if (parts.size() != 4) throw ParseError("expected 'random:n:p:seed', got '" + input + "'");
      return random_digraph(n, parse_probability(parts[2], input),
                            static_cast<std::uint64_t>(parse_count(parts[3], input)));
    }
    if (kind == "tournament") {
      if (parts.size() != 3) throw ParseError("expected 'tournament:n:seed', got '" + input + "'");
      return random_tournament(n, static_cast<std::uint64_t>(parse_count(parts[2], input)));
    }
    if (parts.size() != 2) throw ParseError("expected '" + kind + ":n', got '" + input + "'");
    if (kind == "complete") return complete_digraph(n);
    if (kind == "discrete") return discrete_digraph(n);
    if (kind == "path") return path_digraph(n);
    if (n < 2) throw ParseError("cycle generator needs n >= 2");
    return cycle_digraph(n);
  }
  return read_digraph_file(input);
}

int algorithm_limit(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Definition:
      return 6;
    case Algorithm::DeletionContraction:
      return 7;
    case Algorithm::Permutations:
    case Algorithm::Auto:
      return 8;
  }
  return 0;
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "auto") return Algorithm::Auto;
  if (name == "definition") return Algorithm::Definition;
  if (name == "permutations") return Algorithm::Permutations;
  if (name == "deletion-contraction") return Algorithm::DeletionContraction;
  throw ParseError("unknown algorithm '" + name + "'");
}

std::string algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Auto:
      return "auto";
    case Algorithm::Definition:
      return "definition";
    case Algorithm::Permutations:
      return "permutations";
    case Algorithm::DeletionContraction:
      return "deletion-contraction";
  }
  return "?";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Compute:
        return do_compute(config, out);
      case Command::Verify:
        return do_verify(config, out);
      case Command::Bench:
        return do_bench(config, out);
      case Command::Batch:
        return do_batch(config, out);
    }
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Redei-Berge functions of digraphs in noncommuting variables"};
  app.require_subcommand(1);

  RunConfig config;
  std::string basis = "p";
  std::string algorithm = "auto";
  std::string format = "text";

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* compute = app.add_subcommand("compute", "Expand W_X in a chosen basis");
  compute->add_option("input", config.input, "Digraph file or generator spec")->required();
  compute->add_option("--basis", basis, "m, p or e")->check(CLI::IsMember({"m", "p", "e"}));
  compute->add_flag("--commutative", config.commutative, "Let the variables commute");
  compute->add_option("--algorithm", algorithm, "auto, definition, permutations or deletion-contraction")
      ->check(CLI::IsMember({"auto", "definition", "permutations", "deletion-contraction"}));
  add_format(compute);

  auto* verify = app.add_subcommand("verify", "Check every identity on one digraph");
  verify->add_option("input", config.input, "Digraph file or generator spec")->required();
  verify->add_option("--checks", config.checks, "Comma-separated check names or 'all'")->delimiter(',');
  add_format(verify);

  auto* bench = app.add_subcommand("bench", "Time each algorithm on one digraph");
  bench->add_option("input", config.input, "Digraph file or generator spec")->required();
  bench->add_option("--repeat", config.repeat, "Repetitions per algorithm (best time is kept)");

  auto* batch = app.add_subcommand("batch", "Verify a seeded random family");
  batch->add_option("family", config.input, "'random:n:p' or 'tournament:n'")->required();
  batch->add_option("--count", config.count, "Number of instances");
  batch->add_option("--seed", config.seed, "First seed");
  batch->add_option("--checks", config.checks, "Comma-separated check names or 'all'")->delimiter(',');
  add_format(batch);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  if (compute->parsed()) config.command = Command::Compute;
  if (verify->parsed()) config.command = Command::Verify;
  if (bench->parsed()) config.command = Command::Bench;
  if (batch->parsed()) config.command = Command::Batch;
  config.basis = parse_basis(basis);
  config.algorithm = parse_algorithm(algorithm);
  config.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  if (config.checks.empty()) config.checks = {"all"};

  return run(config, out, err);
}

}  // namespace rbnc::cli
