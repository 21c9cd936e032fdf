#include "pvds/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace pvds {

ParseError::ParseError(int line, const std::string &message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long number(std::string_view tok, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Instance inst;
  bool have_header = false;
  long long declared_m = 0;
  long long n = 0;
  std::vector<char> demand_seen;
  int line_no = 0;

  auto vertex = [&](std::string_view tok, int line) {
    const long long v = number(tok, line);
    if (v < 1 || v > n) throw ParseError(line, "vertex " + std::string(tok) + " out of range 1.." + std::to_string(n));
    return static_cast<Vertex>(v - 1);
  };
  auto arity = [&](const std::vector<std::string_view> &toks, std::size_t want, int line) {
    if (toks.size() != want) throw ParseError(line, "malformed '" + std::string(toks[0]) + "' line");
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto toks = split(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (have_header) throw ParseError(line_no, "second header line");
      arity(toks, 5, line_no);
      if (toks[1] != "pvds") throw ParseError(line_no, "unknown format '" + std::string(toks[1]) + "'");
      n = number(toks[2], line_no);
      declared_m = number(toks[3], line_no);
      const long long k = number(toks[4], line_no);
      if (n < 0 || declared_m < 0 || k < 0) throw ParseError(line_no, "negative header field");
      if (n > 50'000'000 || k > 2'000'000'000) throw ParseError(line_no, "header field too large");
      inst = Instance(static_cast<int>(n), static_cast<int>(k));
      demand_seen.assign(n, 0);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "expected 'p pvds n m k' header first");
    if (toks[0] == "d") {
      arity(toks, 3, line_no);
      const Vertex v = vertex(toks[1], line_no);
      const long long d = number(toks[2], line_no);
      if (d < 0) throw ParseError(line_no, "negative demand");
      if (d > n - 1) throw ParseError(line_no, "demand exceeds n-1");
      if (demand_seen[v]) throw ParseError(line_no, "demand of vertex " + std::string(toks[1]) + " given twice");
      demand_seen[v] = 1;
      inst.set_demand(v, static_cast<int>(d));
    } else if (toks[0] == "f") {
      arity(toks, 2, line_no);
      inst.set_forbidden(vertex(toks[1], line_no));
    } else if (toks[0] == "e") {
      arity(toks, 3, line_no);
      const Vertex u = vertex(toks[1], line_no), v = vertex(toks[2], line_no);
      if (u == v) throw ParseError(line_no, "self-loop at " + std::string(toks[1]));
      if (inst.adjacent(u, v)) throw ParseError(line_no, "duplicate edge");
      inst.add_edge(u, v);
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(toks[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(0, "missing 'p pvds n m k' header");
  if (inst.edge_count() != declared_m)
    throw ParseError(0, "header declares " + std::to_string(declared_m) + " edges, file has " +
                            std::to_string(inst.edge_count()));
  if (auto problems = validate(inst); !problems.empty()) throw ParseError(0, problems.front());
  return inst;
}

std::string write_instance(const Instance &instance) {
  if (instance.status() == Status::DecidedNo) return "p pvds 2 0 0\nd 1 1\n";
  const VertexSet ids = instance.vertices();
  std::vector<int> out_id(instance.capacity(), 0);
  for (std::size_t i = 0; i < ids.size(); ++i) out_id[ids[i]] = static_cast<int>(i) + 1;

  std::ostringstream os;
  os << "p pvds " << ids.size() << ' ' << instance.edge_count() << ' ' << instance.budget() << '\n';
  for (Vertex v : ids)
    if (instance.demand(v) != 0) os << "d " << out_id[v] << ' ' << instance.demand(v) << '\n';
  for (Vertex v : ids)
    if (instance.forbidden(v)) os << "f " << out_id[v] << '\n';
  for (Vertex u : ids)
    for (Vertex v : instance.neighbors(u))
      if (u < v) os << "e " << out_id[u] << ' ' << out_id[v] << '\n';
  return os.str();
}

Instance read_instance_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_instance_file(const std::string &path, const Instance &instance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << write_instance(instance);
}

}  // namespace pvds
