#include "pvds/generate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pvds {

Instance generate_planar(int n, double edge_density, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate_planar: n must be at least 1");
  if (!(edge_density >= 0.0 && edge_density <= 1.0))
    throw std::invalid_argument("generate_planar: density must lie in [0, 1]");
  std::mt19937_64 rng(seed);

  std::vector<std::pair<Vertex, Vertex>> edges;
  if (n == 2) edges.emplace_back(0, 1);
  if (n >= 3) {
    edges = {{0, 1}, {1, 2}, {0, 2}};
    // Both sides of the starting triangle are faces.
    std::vector<std::array<Vertex, 3>> faces = {{0, 1, 2}, {0, 2, 1}};
    for (Vertex v = 3; v < n; ++v) {
      std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
      const std::size_t f = pick(rng);
      const auto [a, b, c] = faces[f];
      edges.emplace_back(a, v);
      edges.emplace_back(b, v);
      edges.emplace_back(c, v);
      faces[f] = {a, b, v};
      faces.push_back({b, c, v});
      faces.push_back({c, a, v});
    }
  }

  Instance inst(n, 0);
  std::bernoulli_distribution keep(edge_density);
  for (auto [u, v] : edges)
    if (keep(rng)) inst.add_edge(u, v);
  return inst;
}

DemandProfile parse_profile(const std::string &text) {
  DemandProfile p;
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto integer = [&] {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(arg, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (arg.empty() || used != arg.size()) throw std::invalid_argument("bad profile argument in '" + text + "'");
    if (value < 0) throw std::invalid_argument("profile argument must be non-negative in '" + text + "'");
    return value;
  };
  if (head == "pids" && colon == std::string::npos) {
    p.kind = ProfileKind::Pids;
    p.alpha = 0.5;
  } else if (head == "r") {
    p.kind = ProfileKind::RDom;
    p.r = integer();
  } else if (head == "bdvd") {
    p.kind = ProfileKind::Bdvd;
    p.t = integer();
  } else if (head == "random") {
    p.kind = ProfileKind::Random;
    p.max_demand = integer();
  } else if (head == "alpha") {
    p.kind = ProfileKind::AlphaDom;
    std::size_t used = 0;
    try {
      p.alpha = std::stod(arg, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (arg.empty() || used != arg.size()) throw std::invalid_argument("bad profile argument in '" + text + "'");
    if (!(p.alpha > 0.0 && p.alpha <= 1.0)) throw std::invalid_argument("alpha must lie in (0, 1]");
  } else {
    throw std::invalid_argument("unknown profile '" + text + "'");
  }
  return p;
}

std::string to_string(const DemandProfile &p) {
  std::ostringstream os;
  switch (p.kind) {
    case ProfileKind::RDom: os << "r:" << p.r; break;
    case ProfileKind::AlphaDom: os << "alpha:" << p.alpha; break;
    case ProfileKind::Bdvd: os << "bdvd:" << p.t; break;
    case ProfileKind::Pids: os << "pids"; break;
    case ProfileKind::Random: os << "random:" << p.max_demand; break;
  }
  return os.str();
}

Instance make_special_case(Instance instance, const DemandProfile &profile, std::uint64_t seed) {
  if (profile.r < 0 || profile.t < 0 || profile.max_demand < 0)
    throw std::invalid_argument("profile parameters must be non-negative");
  if ((profile.kind == ProfileKind::AlphaDom || profile.kind == ProfileKind::Pids) &&
      !(profile.alpha > 0.0 && profile.alpha <= 1.0))
    throw std::invalid_argument("alpha must lie in (0, 1]");

  std::mt19937_64 rng(seed);
  const int cap = std::max(0, instance.vertex_count() - 1);
  std::uniform_int_distribution<int> draw(0, std::min(profile.max_demand, cap));
  for (Vertex v : instance.vertices()) {
    const int deg = instance.degree(v);
    int d = 0;
    switch (profile.kind) {
      case ProfileKind::RDom: d = profile.r; break;
      case ProfileKind::Pids: d = (deg + 1) / 2; break;
      case ProfileKind::AlphaDom:
        // ceil without letting 0.1 * 10 round up to 2
        d = static_cast<int>(std::ceil(profile.alpha * deg - 1e-9));
        break;
      case ProfileKind::Bdvd: d = std::max(0, deg - profile.t); break;
      case ProfileKind::Random: d = draw(rng); break;
    }
    instance.set_demand(v, d);
  }
  return instance;
}

}  // namespace pvds
