// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "pvds/generate.hpp"
#include "pvds/harness.hpp"
#include "pvds/io.hpp"
#include "pvds/planarity.hpp"
#include "pvds/rules.hpp"
#include "pvds/solver.hpp"
#include "pvds/stats.hpp"

using namespace pvds;
namespace fs = std::filesystem;

namespace {

constexpr int kCorpusSize = 1500;
int failures = 0;

void report(int id, const std::string &name, bool ok, const std::string &detail,
            const std::vector<std::string> &evidence = {}) {
  std::printf("criterion %d %s %s: %s\n", id, ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  for (std::size_t i = 0; i < evidence.size() && i < 10; ++i) std::printf("    %s\n", evidence[i].c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

// Context printed under a criterion; never affects the verdict.
void note(const std::string &text) {
  std::printf("    note: %s\n", text.c_str());
  std::fflush(stdout);
}

// Known instances outside the corpus scope that break a ceiling; rerun live so
// the notes reflect the current rule set.
Instance artifact(const char *name) {
  return read_instance_file(std::string(PVDS_TEST_DATA_DIR) + "/" + name);
}

// Everything below needs kernels of the whole corpus with region rules on and
// off; compute them once.
struct Run {
  Instance kernel;
  FixpointReport report;
};

Run reduce(const Instance &original, bool regions) {
  Run r{original, {}};
  FixpointOptions opts;
  opts.enable_region_rules = regions;
  opts.kernel_certificate = regions;
  r.report = run_fixpoint(r.kernel, opts);
  return r;
}

long long phi(const Instance &inst) {
  const long long n = inst.vertex_count();
  return 2 * n + inst.edge_count() + inst.total_demand() + n;
}

// All labeled graphs on n vertices whose degrees do not increase with the
// label; every unlabeled graph has at least one such labeling.
template <class F>
void for_each_small_connected_planar(int n, F &&visit) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  const int m_all = static_cast<int>(slots.size());
  const int m_max = n >= 3 ? 3 * n - 6 : m_all;
  for (std::uint32_t mask = 0; mask < (1u << m_all); ++mask) {
    const int m = __builtin_popcount(mask);
    if (m < n - 1 || m > m_max) continue;
    std::vector<int> deg(n, 0);
    for (int i = 0; i < m_all; ++i)
      if (mask >> i & 1) ++deg[slots[i].first], ++deg[slots[i].second];
    bool sorted = true;
    for (int v = 1; v < n && sorted; ++v) sorted = deg[v] <= deg[v - 1];
    if (!sorted) continue;
    Instance g(n);
    for (int i = 0; i < m_all; ++i)
      if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
    // connectivity
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v))
        if (!seen[u]) seen[u] = 1, ++reached, stack.push_back(u);
    }
    if (reached != n) continue;
    try {
      embed(g);
    } catch (const NonPlanar &) {
      continue;
    }
    visit(g);
  }
}

std::string cli_capture(std::vector<std::string> args, int &code, std::string &err) {
  args.insert(args.begin(), "pvds");
  std::ostringstream out, e;
  code = run_cli(args, out, e);
  err = e.str();
  return out.str();
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main() {
  const auto started = std::chrono::steady_clock::now();
  CorpusSpec spec;
  spec.count = kCorpusSize;
  spec.seed = 20240601;
  const std::vector<CorpusEntry> corpus = make_corpus(spec);

  // 1. Every single event preserves the oracle answer.
  {
    FixpointOptions on, off;
    off.enable_region_rules = false;
    off.kernel_certificate = false;
    SoundnessReport r_on = run_soundness_suite(corpus, on);
    SoundnessReport r_off = run_soundness_suite(corpus, off);
    long long region_events = 0;
    for (RuleId r : {RuleId::R6, RuleId::R7, RuleId::R8}) region_events += r_on.events_by_rule[static_cast<int>(r)];
    std::vector<std::string> evidence = r_on.violations;
    evidence.insert(evidence.end(), r_off.violations.begin(), r_off.violations.end());
    std::ostringstream d;
    d << corpus.size() << " instances x {regions on, off}; " << r_on.events + r_off.events << " events checked ("
      << region_events << " from region rules); " << evidence.size() << " violations";
    report(1, "rule soundness", evidence.empty(), d.str(), evidence);
  }

  std::vector<Answer> oracle(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) oracle[i] = solve_brute(corpus[i].instance).answer;
  std::vector<Run> with_regions, without_regions;
  for (const auto &entry : corpus) {
    with_regions.push_back(reduce(entry.instance, true));
    without_regions.push_back(reduce(entry.instance, false));
  }

  // 2. solve_bb on the written-and-reparsed kernel matches the oracle.
  {
    std::vector<std::string> bad;
    long long yes = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      yes += oracle[i] == Answer::Yes;
      for (const Run *run : {&with_regions[i], &without_regions[i]}) {
        const Instance kernel = parse_instance(write_instance(run->kernel));
        if (solve_bb(kernel).answer != oracle[i])
          bad.push_back(corpus[i].label + (run == &with_regions[i] ? " (regions on)" : " (regions off)"));
      }
    }
    std::ostringstream d;
    d << 2 * corpus.size() << " kernels (" << yes << " YES originals); " << bad.size() << " disagreements";
    report(2, "end-to-end kernel equivalence", bad.empty(), d.str(), bad);
  }

  // 3. n_after <= 101 k on fully reduced YES instances.
  {
    std::vector<std::string> bad;
    long long checked = 0;
    double worst = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const Run &run = with_regions[i];
      if (oracle[i] != Answer::Yes || run.report.region_cap_hit) continue;
      ++checked;
      const long long n = run.kernel.vertex_count(), k = run.kernel.budget();
      worst = std::max(worst, static_cast<double>(n) / std::max<long long>(k, 1));
      if (n > static_cast<long long>(kKernelFactor) * k && n > 0)
        bad.push_back(corpus[i].label + " n_after=" + std::to_string(n) + " k_after=" + std::to_string(k));
    }
    std::ostringstream d;
    d << checked << " YES instances; worst n_after/max(k_after,1) = " << worst << "; " << bad.size()
      << " violations";
    report(3, "kernel size ceiling", bad.empty(), d.str(), bad);
    const Instance g = artifact("k2_201_certificate.pvds");
    const VertexSet hubs{0, 1};
    Instance kernel = g;
    FixpointOptions off;
    off.kernel_certificate = false;
    const FixpointReport r = run_fixpoint(kernel, off);
    note("outside corpus scope: k2_201_certificate.pvds is YES (hubs valid: " +
         std::string(verify_solution(g, hubs) ? "yes" : "no") + ") and reduces to status " +
         std::string(to_string(r.final_status)) + " with n_after=" + std::to_string(kernel.vertex_count()) +
         " > 101*k_after=" + std::to_string(kKernelFactor * kernel.budget()) + "; see README, Known limitations");
  }

  // 4. <= 15 strictly interior vertices per maximal region after reduction.
  {
    std::vector<std::string> bad;
    long long kernels = 0, regions = 0;
    int worst = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const Instance &k = with_regions[i].kernel;
      if (k.status() == Status::DecidedNo || k.vertex_count() == 0) continue;
      ++kernels;
      const RotationSystem rs = embed(k);
      for (const auto &r : enumerate_all_regions(k, rs).regions) {
        ++regions;
        worst = std::max(worst, static_cast<int>(r.interior.size()));
        if (r.interior.size() > 15)
          bad.push_back(corpus[i].label + " region (" + std::to_string(r.a1 + 1) + "," + std::to_string(r.a2 + 1) +
                        ") interior=" + std::to_string(r.interior.size()));
      }
    }
    std::ostringstream d;
    d << kernels << " reduced instances, " << regions << " maximal regions; largest interior " << worst << "; "
      << bad.size() << " violations";
    report(4, "region interior ceiling", bad.empty(), d.str(), bad);
    Run k18 = reduce(artifact("k2_18_region.pvds"), true);
    note("outside corpus scope: k2_18_region.pvds reduces to status " +
         std::string(to_string(k18.report.final_status)) + " with a maximal region of " +
         std::to_string(max_region_interior(k18.kernel)) + " interior vertices; see README, Known limitations");
  }

  // 5. Branch and bound vs oracle: exhaustive small graphs plus the corpus.
  {
    std::vector<std::string> bad;
    long long graphs = 0, runs = 0;
    for (int n = 1; n <= 7; ++n)
      for_each_small_connected_planar(n, [&](const Instance &g) {
        ++graphs;
        for (int k = 0; k <= 3; ++k) {
          Instance inst = g;
          for (Vertex v : inst.vertices()) inst.set_demand(v, 1);
          inst.set_budget(k);
          ++runs;
          if (solve_bb(inst).answer != solve_brute(inst).answer)
            bad.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k) + "\n" + write_instance(inst));
        }
      });
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      ++runs;
      if (solve_bb(corpus[i].instance).answer != oracle[i]) bad.push_back(corpus[i].label);
    }
    std::ostringstream d;
    d << graphs << " connected planar graphs (n<=7, degree-sorted labelings) x k=0..3 plus " << corpus.size()
      << " corpus instances = " << runs << " comparisons; " << bad.size() << " disagreements";
    report(5, "solver cross-validation", bad.empty(), d.str(), bad);
  }

  // 6. Event count bounded by the potential; max_rounds never reached.
  {
    std::vector<std::string> bad;
    long long slack = -1;
    for (const auto &entry : corpus) {
      Instance work = entry.instance;
      FixpointOptions opts;
      const long long bound = phi(work);
      opts.max_rounds = bound + 1;
      const FixpointReport r = run_fixpoint(work, opts);
      const long long events = static_cast<long long>(r.events.size());
      if (events > bound || r.hit_max_rounds)
        bad.push_back(entry.label + " events=" + std::to_string(events) + " bound=" + std::to_string(bound));
      slack = slack < 0 ? bound - events : std::min(slack, bound - events);
    }
    std::ostringstream d;
    d << corpus.size() << " runs; tightest margin phi - events = " << slack << "; " << bad.size() << " violations";
    report(6, "termination bound", bad.empty(), d.str(), bad);
  }

  const fs::path dir = fs::temp_directory_path() / "pvds_acceptance";
  fs::create_directories(dir);

  // 7. Byte-exact round trip of generated files.
  {
    static const char *const kProfiles[] = {"random:3", "r:1", "bdvd:2", "pids", "alpha:0.3"};
    std::vector<std::string> bad;
    for (int i = 0; i < 200; ++i) {
      const fs::path p = dir / ("rt" + std::to_string(i) + ".pvds");
      int code = 0;
      std::string err;
      cli_capture({"generate", "--n", std::to_string(1 + i % 60), "--density", std::to_string(0.2 + (i % 9) * 0.1),
                   "--seed", std::to_string(1000 + i), "--profile", kProfiles[i % 5], "--k", std::to_string(i % 7),
                   "--output", p.string()},
                  code, err);
      const std::string text = slurp(p);
      if (code != 0 || write_instance(parse_instance(text)) != text) bad.push_back(p.string() + " " + err);
    }
    report(7, "format stability", bad.empty(), "200 generated files; " + std::to_string(bad.size()) + " mismatches",
           bad);
  }

  // 8. Same input, same kernel file and stats line.
  {
    std::vector<std::string> bad;
    for (int i = 0; i < 60; ++i) {
      const fs::path in = dir / ("det" + std::to_string(i) + ".pvds");
      int code = 0;
      std::string err;
      cli_capture({"generate", "--n", std::to_string(8 + i), "--density", "0.8", "--seed", std::to_string(77 + i),
                   "--profile", i % 2 ? "pids" : "random:2", "--k", std::to_string(1 + i % 5), "--output", in.string()},
                  code, err);
      std::string files[2], stats[2];
      for (int run = 0; run < 2; ++run) {
        const fs::path out = dir / ("det" + std::to_string(i) + "_" + std::to_string(run) + ".pvds");
        const fs::path st = dir / ("det" + std::to_string(i) + "_" + std::to_string(run) + ".stats");
        cli_capture({"kernelize", "--input", in.string(), "--output", out.string(), "--stats", st.string()}, code,
                    err);
        files[run] = slurp(out);
        stats[run] = slurp(st);
        if (code != 0) bad.push_back(in.string() + ": " + err);
      }
      if (files[0] != files[1] || stats[0] != stats[1] || stats[0].empty()) bad.push_back(in.string());
    }
    report(8, "determinism", bad.empty(), "60 inputs kernelized twice; " + std::to_string(bad.size()) + " differences",
           bad);
  }

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  std::printf("acceptance: %d of 8 criteria failed (%.1fs)\n", failures, secs);
  return failures == 0 ? 0 : 1;
}
