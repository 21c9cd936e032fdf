#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pvds/generate.hpp"
#include "pvds/harness.hpp"
#include "pvds/io.hpp"
#include "pvds/planarity.hpp"
#include "pvds/rules.hpp"
#include "pvds/solver.hpp"
#include "pvds/stats.hpp"

namespace pvds {

namespace {

// Raised for anything the user should fix; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string &path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string &path, const std::string &text, std::ostream &out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

struct KernelFlags {
  std::string certificate = "on";
  bool certificate_given = false;
  bool no_region_rules = false;
  int max_paths_per_pair = RegionOptions{}.max_paths_per_pair;
  long long max_rounds = 0;

  FixpointOptions options() const {
    FixpointOptions o;
    if (certificate != "on" && certificate != "off") throw UsageError("--kernel-certificate takes on|off");
    // The certificate leans on the region rules; an explicit request for
    // both "on" and no region rules is contradictory.
    if (no_region_rules && certificate_given && certificate == "on")
      throw UsageError("--kernel-certificate on requires region rules");
    o.kernel_certificate = certificate == "on" && !no_region_rules;
    o.enable_region_rules = !no_region_rules;
    o.max_rounds = max_rounds;
    o.regions.max_paths_per_pair = max_paths_per_pair;
    return o;
  }
};

void add_kernel_flags(CLI::App *cmd, KernelFlags &k) {
  cmd->add_option("--kernel-certificate", k.certificate, "Decide NO when the reduced instance exceeds 101k (on|off)")
      ->each([&k](const std::string &) { k.certificate_given = true; });
  cmd->add_flag("--no-region-rules", k.no_region_rules, "Only run the local rules");
  cmd->add_option("--max-paths-per-pair", k.max_paths_per_pair, "Cap on boundary paths per endpoint pair (0 = none)");
  cmd->add_option("--max-rounds", k.max_rounds, "Stop after this many fixpoint rounds (0 = none)");
}

std::string witness_text(const VertexSet &s) {
  std::string out;
  for (Vertex v : s) out += ' ' + std::to_string(v + 1);
  return out;
}

VertexSet parse_witness(const std::string &text) {
  VertexSet s;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream toks(line);
    std::string tok;
    if (!(toks >> tok) || tok == "c") continue;
    do {
      if (tok == "YES") continue;
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used != tok.size() || v < 1 || v > std::numeric_limits<Vertex>::max())
        throw UsageError("bad witness token '" + tok + "'");
      s.push_back(static_cast<Vertex>(v - 1));
    } while (toks >> tok);
  }
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Planar vector dominating set kernelization toolkit", "pvds"};
  app.require_subcommand(1);

  std::string input = "-", output, stats_path, method = "bb", profile, witness_path;
  int oracle_limit = BruteOptions{}.oracle_limit;
  long long node_limit = 0;
  std::uint64_t seed = 1;
  int n = 10, k = 0, count = 200;
  double density = 1.0;
  KernelFlags kflags;

  auto *kernelize = app.add_subcommand("kernelize", "Reduce an instance to its kernel");
  kernelize->add_option("--input,-i", input, "Instance file ('-' for stdin)");
  kernelize->add_option("--output,-o", output, "Kernel file (default stdout)");
  kernelize->add_option("--stats", stats_path, "Write the stats line here instead of stderr");
  add_kernel_flags(kernelize, kflags);

  auto *solve = app.add_subcommand("solve", "Decide an instance exactly");
  solve->add_option("--input,-i", input, "Instance file ('-' for stdin)");
  solve->add_option("--method", method, "bb or brute")->check(CLI::IsMember({"bb", "brute"}));
  solve->add_option("--oracle-limit", oracle_limit, "Largest n the brute-force oracle accepts");
  solve->add_option("--node-limit", node_limit, "Abort branch and bound after this many nodes (0 = none)");

  auto *verify = app.add_subcommand("verify", "Check a witness against an instance");
  verify->add_option("--input,-i", input, "Instance file")->required();
  verify->add_option("--witness,-w", witness_path, "Witness file (1-indexed ids, optional leading YES)")->required();

  auto *generate = app.add_subcommand("generate", "Emit a random planar instance");
  generate->add_option("--n", n, "Vertex count")->check(CLI::PositiveNumber);
  generate->add_option("--density", density, "Probability of keeping each triangulation edge")
      ->check(CLI::Range(0.0, 1.0));
  generate->add_option("--seed", seed, "Random seed");
  generate->add_option("--profile", profile, "r:<r> | alpha:<x> | bdvd:<t> | pids | random:<max>");
  generate->add_option("--k", k, "Budget")->check(CLI::NonNegativeNumber);
  generate->add_option("--output,-o", output, "Instance file (default stdout)");

  auto *stats = app.add_subcommand("stats", "Print the kernel stats line for an instance");
  stats->add_option("--input,-i", input, "Instance file ('-' for stdin)");
  add_kernel_flags(stats, kflags);

  auto *selftest = app.add_subcommand("selftest", "Check every reduction event against the oracle");
  selftest->add_option("--count", count, "Number of generated instances")->check(CLI::PositiveNumber);
  selftest->add_option("--seed", seed, "Corpus seed");
  selftest->add_option("--oracle-limit", oracle_limit, "Largest n the oracle accepts");
  add_kernel_flags(selftest, kflags);

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (kernelize->parsed() || stats->parsed()) {
      const FixpointOptions options = kflags.options();
      const Instance original = parse_instance(slurp(input));
      Instance kernel = original;
      const FixpointReport report = run_fixpoint(kernel, options);
      const std::string line = format_stats_line(kernel_report(original, kernel, report, options.regions));
      if (stats->parsed()) {
        out << line << '\n';
        return 0;
      }
      emit(output, write_instance(kernel), out);
      if (stats_path.empty())
        err << line << '\n';
      else
        emit(stats_path, line + "\n", out);
      return 0;
    }

    if (solve->parsed()) {
      const Instance inst = parse_instance(slurp(input));
      const SolveResult r = method == "brute" ? solve_brute(inst, {oracle_limit}) : solve_bb(inst, {node_limit});
      if (r.answer == Answer::No) {
        out << "NO\n";
        return 1;
      }
      out << "YES" << witness_text(r.witness) << '\n';
      return 0;
    }

    if (verify->parsed()) {
      const Instance inst = parse_instance(slurp(input));
      const VertexSet s = parse_witness(slurp(witness_path));
      for (Vertex v : s)
        if (!inst.contains(v)) throw UsageError("witness names vertex " + std::to_string(v + 1) + " outside 1.." +
                                                std::to_string(inst.vertex_count()));
      const bool ok = verify_solution(inst, s);
      out << (ok ? "VALID" : "INVALID") << '\n';
      return ok ? 0 : 1;
    }

    if (generate->parsed()) {
      Instance inst = generate_planar(n, density, seed);
      if (!profile.empty()) inst = make_special_case(std::move(inst), parse_profile(profile), seed);
      inst.set_budget(k);
      if (auto problems = validate(inst); !problems.empty()) throw UsageError(problems.front());
      emit(output, write_instance(inst), out);
      return 0;
    }

    if (selftest->parsed()) {
      const FixpointOptions options = kflags.options();
      CorpusSpec spec;
      spec.count = count;
      spec.seed = seed;
      const SoundnessReport r = run_soundness_suite(make_corpus(spec), options, {oracle_limit});
      for (const auto &v : r.violations) out << "VIOLATION " << v << '\n';
      out << "selftest instances=" << r.instances << " events=" << r.events << " violations=" << r.violations.size();
      for (int rule = 0; rule < kRuleIdCount; ++rule)
        if (r.events_by_rule[rule] > 0) out << ' ' << to_string(rule_from_number(rule)) << '=' << r.events_by_rule[rule];
      out << '\n';
      return r.violations.empty() ? 0 : 1;
    }
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NonPlanar &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    // Oracle limits, aborted searches and bad profiles all land here.
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace pvds
