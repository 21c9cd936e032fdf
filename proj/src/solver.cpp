#include "pvds/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>

namespace pvds {

OracleLimitExceeded::OracleLimitExceeded(int n, int limit)
    : std::runtime_error("instance has " + std::to_string(n) + " vertices; oracle limit is " +
                         std::to_string(limit)) {}

SearchAborted::SearchAborted(long long nodes)
    : std::runtime_error("branch and bound aborted after " + std::to_string(nodes) + " nodes") {}

namespace {

using Clock = std::chrono::steady_clock;

// Bitmask view of an instance over its selectable vertices.
struct MaskModel {
  VertexSet selectable;               // ascending ids; bit i <-> selectable[i]
  std::vector<std::uint64_t> nb;      // per alive vertex: selectable neighbors
  std::vector<int> demand;            // per alive vertex
  std::vector<int> self_bit;          // bit of the vertex itself, or -1
  int budget = 0;

  bool satisfied(std::uint64_t s) const {
    for (std::size_t v = 0; v < nb.size(); ++v) {
      if (self_bit[v] >= 0 && (s >> self_bit[v] & 1)) continue;
      if (std::popcount(nb[v] & s) < demand[v]) return false;
    }
    return true;
  }

  VertexSet decode(std::uint64_t s) const {
    VertexSet out;
    for (std::size_t i = 0; i < selectable.size(); ++i)
      if (s >> i & 1) out.push_back(selectable[i]);
    return out;
  }
};

MaskModel build_model(const Instance &inst, const BruteOptions &options) {
  const int limit = std::min(options.oracle_limit, 62);
  if (inst.vertex_count() > limit) throw OracleLimitExceeded(inst.vertex_count(), limit);
  MaskModel m;
  m.budget = inst.budget();
  const VertexSet ids = inst.vertices();
  std::vector<int> bit(inst.capacity(), -1);
  for (Vertex v : ids)
    if (!inst.forbidden(v)) {
      bit[v] = static_cast<int>(m.selectable.size());
      m.selectable.push_back(v);
    }
  for (Vertex v : ids) {
    std::uint64_t mask = 0;
    for (Vertex u : inst.neighbors(v))
      if (bit[u] >= 0) mask |= std::uint64_t{1} << bit[u];
    m.nb.push_back(mask);
    m.demand.push_back(inst.demand(v));
    m.self_bit.push_back(bit[v]);
  }
  return m;
}

long long binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  long long c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

// Position of s among the masks with the same popcount, in increasing order.
long long colex_rank(std::uint64_t s) {
  long long rank = 0;
  int seen = 0;
  for (int p = 0; p < 64; ++p)
    if (s >> p & 1) rank += binomial(p, ++seen);
  return rank;
}

// Inverse of colex_rank for masks with `bits` set bits.
std::uint64_t colex_unrank(long long rank, int bits) {
  std::uint64_t s = 0;
  for (int i = bits; i >= 1; --i) {
    int p = i - 1;
    while (binomial(p + 1, i) <= rank) ++p;
    s |= std::uint64_t{1} << p;
    rank -= binomial(p, i);
  }
  return s;
}

// Gosper's hack; 0 stays 0.
std::uint64_t next_same_popcount(std::uint64_t s) {
  if (s == 0) return 0;
  const std::uint64_t low = s & -s;
  const std::uint64_t ripple = s + low;
  return (((ripple ^ s) >> 2) / low) | ripple;
}

bool trivially_no(const Instance &inst) {
  return inst.status() == Status::DecidedNo || inst.budget() < 0;
}

}  // namespace

SolveResult solve_brute_serial(const Instance &instance, const BruteOptions &options) {
  const auto start = Clock::now();
  SolveResult result;
  if (trivially_no(instance)) return result;
  const MaskModel m = build_model(instance, options);
  const int e = static_cast<int>(m.selectable.size());
  const int top = std::min(m.budget, e);
  for (int size = 0; size <= top; ++size) {
    std::uint64_t s = size == 0 ? 0 : (std::uint64_t{1} << size) - 1;
    const std::uint64_t end = std::uint64_t{1} << e;
    while (s < end) {
      ++result.nodes_explored;
      if (m.satisfied(s)) {
        result.answer = Answer::Yes;
        result.witness = m.decode(s);
        result.elapsed = Clock::now() - start;
        return result;
      }
      if (s == 0) break;
      s = next_same_popcount(s);
    }
  }
  result.elapsed = Clock::now() - start;
  return result;
}

SolveResult solve_brute(const Instance &instance, const BruteOptions &options) {
  const auto start = Clock::now();
  SolveResult result;
  if (trivially_no(instance)) return result;
  const MaskModel m = build_model(instance, options);
  const int e = static_cast<int>(m.selectable.size());
  const int top = std::min(m.budget, e);
  for (int size = 0; size <= top; ++size) {
    // Split the colex ranks of this size into chunks; each chunk unranks its
    // first mask and walks forward. The smallest hit wins, as in the serial
    // order.
    const long long total = binomial(e, size);
    const long long chunks = std::clamp<long long>(total / 512, 1, 256);
    const std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t best = none;
    std::atomic<long long> found_rank{std::numeric_limits<long long>::max()};
#pragma omp parallel for schedule(dynamic, 1) reduction(min : best)
    for (long long c = 0; c < chunks; ++c) {
      const long long lo = total / chunks * c + std::min(c, total % chunks);
      const long long hi = lo + total / chunks + (c < total % chunks ? 1 : 0);
      std::uint64_t s = colex_unrank(lo, size);
      for (long long rank = lo; rank < hi; ++rank) {
        if (rank > found_rank.load(std::memory_order_relaxed)) break;
        if (m.satisfied(s)) {
          best = std::min(best, s);
          long long seen = found_rank.load(std::memory_order_relaxed);
          while (rank < seen && !found_rank.compare_exchange_weak(seen, rank, std::memory_order_relaxed)) {
          }
          break;
        }
        s = next_same_popcount(s);
      }
    }
    if (best != none) {
      result.nodes_explored += colex_rank(best) + 1;
      result.answer = Answer::Yes;
      result.witness = m.decode(best);
      result.elapsed = Clock::now() - start;
      return result;
    }
    result.nodes_explored += total;
  }
  result.elapsed = Clock::now() - start;
  return result;
}

namespace {

class BranchSearch {
 public:
  BranchSearch(const Instance &inst, const BranchOptions &options) : options_(options) {
    ids_ = inst.vertices();
    std::vector<int> index(inst.capacity(), -1);
    for (std::size_t i = 0; i < ids_.size(); ++i) index[ids_[i]] = static_cast<int>(i);
    const std::size_t n = ids_.size();
    adj_.resize(n);
    residual_.resize(n);
    selectable_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (Vertex u : inst.neighbors(ids_[i])) adj_[i].push_back(index[u]);
      residual_[i] = inst.demand(ids_[i]);
      selectable_[i] = !inst.forbidden(ids_[i]);
    }
    in_solution_.assign(n, 0);
    excluded_.assign(n, 0);
    budget_ = inst.budget();
  }

  bool run() { return search(); }
  long long nodes() const { return nodes_; }

  VertexSet witness() const {
    VertexSet out;
    for (std::size_t i = 0; i < ids_.size(); ++i)
      if (in_solution_[i]) out.push_back(ids_[i]);
    return out;
  }

 private:
  bool open(int u) const { return selectable_[u] && !in_solution_[u] && !excluded_[u]; }
  bool unsatisfied(int v) const { return !in_solution_[v] && residual_[v] > 0; }

  void add(int u) {
    in_solution_[u] = 1;
    --budget_;
    for (int w : adj_[u]) --residual_[w];
  }
  void remove(int u) {
    in_solution_[u] = 0;
    ++budget_;
    for (int w : adj_[u]) ++residual_[w];
  }

  bool search() {
    ++nodes_;
    if (options_.node_limit > 0 && nodes_ > options_.node_limit) throw SearchAborted(nodes_);

    const int n = static_cast<int>(ids_.size());
    int pick = -1;
    long long best_slack = std::numeric_limits<long long>::max();
    long long residual_sum = 0;
    for (int v = 0; v < n; ++v) {
      if (!unsatisfied(v)) continue;
      residual_sum += residual_[v];
      int open_nbrs = 0;
      for (int u : adj_[v]) open_nbrs += open(u);
      if (!open(v) && open_nbrs < residual_[v]) return false;
      const long long slack = open_nbrs + (open(v) ? 1 : 0) - residual_[v];
      if (slack < best_slack) {
        best_slack = slack;
        pick = v;
      }
    }
    if (pick < 0) return true;
    if (budget_ <= 0) return false;

    // One selection removes at most its own residual plus one unit from each
    // unsatisfied neighbor.
    long long reach = 0;
    for (int u = 0; u < n; ++u) {
      if (!open(u)) continue;
      long long gain = unsatisfied(u) ? residual_[u] : 0;
      for (int w : adj_[u]) gain += unsatisfied(w);
      reach = std::max(reach, gain);
    }
    if (reach == 0) return false;
    if ((residual_sum + reach - 1) / reach > budget_) return false;

    std::vector<int> branches;
    if (open(pick)) branches.push_back(pick);
    for (int u : adj_[pick])
      if (open(u)) branches.push_back(u);

    std::vector<int> shut;
    bool found = false;
    for (int c : branches) {
      add(c);
      found = search();
      if (found) break;
      remove(c);
      excluded_[c] = 1;
      shut.push_back(c);
    }
    for (int c : shut) excluded_[c] = 0;
    return found;
  }

  BranchOptions options_;
  VertexSet ids_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> residual_;
  std::vector<char> selectable_;
  std::vector<char> in_solution_;
  std::vector<char> excluded_;
  int budget_ = 0;
  long long nodes_ = 0;
};

}  // namespace

SolveResult solve_bb(const Instance &instance, const BranchOptions &options) {
  const auto start = Clock::now();
  SolveResult result;
  if (trivially_no(instance)) return result;
  BranchSearch search(instance, options);
  if (search.run()) {
    result.answer = Answer::Yes;
    result.witness = search.witness();
  }
  result.nodes_explored = search.nodes();
  result.elapsed = Clock::now() - start;
  return result;
}

bool verify_solution(const Instance &instance, std::span<const Vertex> solution) {
  VertexSet s(solution.begin(), solution.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (Vertex v : s) {
    instance.require(v);
    if (instance.forbidden(v)) return false;
  }
  if (static_cast<long long>(s.size()) > instance.budget()) return false;
  const VertexSet all = instance.vertices();
  return dominates(instance, s, all);
}

}  // namespace pvds
