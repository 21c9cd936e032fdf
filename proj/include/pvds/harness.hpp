#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pvds/rules.hpp"
#include "pvds/solver.hpp"

namespace pvds {

struct CorpusEntry {
  Instance instance;
  std::string label;
};

struct CorpusSpec {
  int count = 1000;
  int min_n = 4;
  int max_n = 14;
  int max_k = 3;
  double forbidden_fraction = 0.25;  // share of instances that get a random P
  std::uint64_t seed = 1;
};

// Random planar instances cycling through the demand profiles random, r:1,
// r:2, bdvd:1, bdvd:2 and pids. Same spec, same corpus.
std::vector<CorpusEntry> make_corpus(const CorpusSpec &spec);

struct SoundnessReport {
  long long instances = 0;
  long long events = 0;
  std::array<long long, kRuleIdCount> events_by_rule{};
  std::vector<std::string> violations;

  void merge(const SoundnessReport &other);
};

// Runs the fixpoint and asks the oracle after every single event whether the
// answer is still that of the original instance.
SoundnessReport check_soundness(const CorpusEntry &entry, const FixpointOptions &options,
                                const BruteOptions &oracle = {});

// The serial version is the reference; the OpenMP one hands each worker one
// instance at a time and merges in corpus order.
SoundnessReport run_soundness_suite_serial(const std::vector<CorpusEntry> &corpus, const FixpointOptions &options,
                                           const BruteOptions &oracle = {});
SoundnessReport run_soundness_suite(const std::vector<CorpusEntry> &corpus, const FixpointOptions &options,
                                    const BruteOptions &oracle = {});

}  // namespace pvds
