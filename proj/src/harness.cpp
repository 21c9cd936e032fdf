#include "pvds/harness.hpp"

#include <random>
#include <sstream>

#include "pvds/generate.hpp"

namespace pvds {

namespace {

const char *answer_text(Answer a) { return a == Answer::Yes ? "YES" : "NO"; }

}  // namespace

std::vector<CorpusEntry> make_corpus(const CorpusSpec &spec) {
  static const char *const kProfiles[] = {"random:3", "r:1", "r:2", "bdvd:1", "bdvd:2", "pids"};
  static const double kDensities[] = {0.55, 0.7, 0.85, 1.0};
  std::mt19937_64 rng(spec.seed);
  std::vector<CorpusEntry> corpus;
  corpus.reserve(spec.count);
  for (int i = 0; i < spec.count; ++i) {
    const int n = std::uniform_int_distribution<int>(spec.min_n, spec.max_n)(rng);
    const double density = kDensities[std::uniform_int_distribution<int>(0, 3)(rng)];
    const int k = std::uniform_int_distribution<int>(0, spec.max_k)(rng);
    const std::uint64_t seed = rng();
    const char *profile = kProfiles[i % std::size(kProfiles)];

    Instance inst = make_special_case(generate_planar(n, density, seed), parse_profile(profile), seed ^ 0x9e37u);
    inst.set_budget(k);
    const bool with_p = std::uniform_real_distribution<double>(0, 1)(rng) < spec.forbidden_fraction;
    if (with_p)
      for (Vertex v : inst.vertices())
        if (std::uniform_int_distribution<int>(0, 5)(rng) == 0) inst.set_forbidden(v);

    std::ostringstream label;
    label << "#" << i << " n=" << n << " k=" << k << " density=" << density << " profile=" << profile
          << " forbidden=" << inst.forbidden_count() << " seed=" << seed;
    corpus.push_back({std::move(inst), label.str()});
  }
  return corpus;
}

void SoundnessReport::merge(const SoundnessReport &other) {
  instances += other.instances;
  events += other.events;
  for (int r = 0; r < kRuleIdCount; ++r) events_by_rule[r] += other.events_by_rule[r];
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

SoundnessReport check_soundness(const CorpusEntry &entry, const FixpointOptions &options, const BruteOptions &oracle) {
  SoundnessReport out;
  out.instances = 1;
  Instance work = entry.instance;
  const Answer expected = solve_brute_serial(work, oracle).answer;
  long long index = 0;

  FixpointOptions opts = options;
  opts.on_event = [&](const Instance &now, const ReductionEvent &e) {
    ++out.events;
    ++out.events_by_rule[static_cast<int>(e.rule)];
    const Answer got = solve_brute_serial(now, oracle).answer;
    if (got != expected) {
      std::ostringstream msg;
      msg << entry.label << ": event " << index << " (" << to_string(e.rule) << ") turned " << answer_text(expected)
          << " into " << answer_text(got);
      out.violations.push_back(msg.str());
    }
    ++index;
    if (options.on_event) options.on_event(now, e);
  };
  run_fixpoint(work, opts);

  const Status s = work.status();
  if ((s == Status::DecidedYes && expected != Answer::Yes) || (s == Status::DecidedNo && expected != Answer::No))
    out.violations.push_back(entry.label + ": fixpoint decided " + to_string(s) + " but oracle says " +
                             answer_text(expected));
  return out;
}

SoundnessReport run_soundness_suite_serial(const std::vector<CorpusEntry> &corpus, const FixpointOptions &options,
                                           const BruteOptions &oracle) {
  SoundnessReport total;
  for (const auto &entry : corpus) total.merge(check_soundness(entry, options, oracle));
  return total;
}

SoundnessReport run_soundness_suite(const std::vector<CorpusEntry> &corpus, const FixpointOptions &options,
                                    const BruteOptions &oracle) {
  const long long n = static_cast<long long>(corpus.size());
  std::vector<SoundnessReport> parts(corpus.size());
  FixpointOptions serial_regions = options;
  serial_regions.regions.parallel_pairs = false;  // parallelism lives at the instance level here
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) parts[i] = check_soundness(corpus[i], serial_regions, oracle);
  SoundnessReport total;
  for (const auto &p : parts) total.merge(p);
  return total;
}

}  // namespace pvds
