#pragma once

#include <chrono>
#include <span>
#include <stdexcept>

#include "pvds/instance.hpp"

namespace pvds {

enum class Answer { No, Yes };

struct SolveResult {
  Answer answer = Answer::No;
  VertexSet witness;  // present iff answer == Yes
  long long nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

class OracleLimitExceeded : public std::runtime_error {
 public:
  OracleLimitExceeded(int n, int limit);
};

class SearchAborted : public std::runtime_error {
 public:
  explicit SearchAborted(long long nodes);
};

struct BruteOptions {
  int oracle_limit = 18;  // at most 62
};

struct BranchOptions {
  long long node_limit = 0;  // 0 = unlimited
};

// Exhaustive oracle: subsets of V \ P by increasing size, and within a size
// in increasing order of their bitmask over the selectable vertices sorted by
// id. Returns the first witness found. An instance already decided NO answers
// NO without search.
SolveResult solve_brute_serial(const Instance &instance, const BruteOptions &options = {});
// OpenMP version of the same search; same answer, witness and node count.
SolveResult solve_brute(const Instance &instance, const BruteOptions &options = {});

// Branch and bound on an unsatisfied vertex of least slack.
SolveResult solve_bb(const Instance &instance, const BranchOptions &options = {});

// |S| <= k, S avoids P, and every vertex outside S has its demand met by S.
bool verify_solution(const Instance &instance, std::span<const Vertex> solution);

}  // namespace pvds
