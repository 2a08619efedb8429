#include "cutpoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cutpoly {

namespace {

bool connected(int m, const std::vector<Edge>& edges) {
  VertexSet seen = vertex_bit(1);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& e : edges) {
      bool hu = seen & vertex_bit(e.u);
      bool hv = seen & vertex_bit(e.v);
      if (hu != hv) {
        seen |= vertex_bit(e.u) | vertex_bit(e.v);
        grew = true;
      }
    }
  }
  return std::popcount(seen) == m;
}

VertexSet full_set(int m) { return m >= 64 ? ~VertexSet{0} : (VertexSet{1} << m) - 1; }

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1 || vertex_count_ > kMaxVertices)
    throw std::invalid_argument("vertex count must be in [1, " + std::to_string(kMaxVertices) + "]");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > vertex_count_)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("loops are not allowed");
    for (std::size_t j = 0; j < i; ++j)
      if (edges_[j] == e) throw std::invalid_argument("parallel edges are not allowed");
  }
  if (!connected(vertex_count_, edges_)) throw std::invalid_argument("graph is not connected");
}

VertexSet Graph::all_vertices() const { return full_set(vertex_count_); }

Partition::Partition(int vertex_count, VertexSet side) : vertex_count_(vertex_count) {
  const VertexSet all = full_set(vertex_count);
  if (side & ~all) throw std::invalid_argument("partition side has out-of-range vertices");
  a_ = (side & vertex_bit(1)) ? (all & ~side) : side;
}

VertexSet Partition::b_side() const { return full_set(vertex_count_) & ~a_; }

int Partition::min_size() const {
  int a = std::popcount(a_);
  return std::min(a, vertex_count_ - a);
}

CutVector cut_vector(const Graph& g, VertexSet a) {
  if (a & ~g.all_vertices()) throw std::invalid_argument("vertex subset has out-of-range vertices");
  CutVector cv;
  cv.coords.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    bool in_u = a & vertex_bit(e.u);
    bool in_v = a & vertex_bit(e.v);
    cv.coords.push_back(in_u != in_v ? 1 : 0);
  }
  return cv;
}

std::vector<CutVector> cut_polytope_vertices(const Graph& g) {
  const int m = g.vertex_count();
  const std::uint64_t count = std::uint64_t{1} << (m - 1);
  std::vector<CutVector> out;
  out.reserve(count);
  // Canonical sides are exactly the subsets of {2..m}.
  for (std::uint64_t s = 0; s < count; ++s) out.push_back(cut_vector(g, s << 1));
  return out;
}

CutConfiguration::CutConfiguration(const Graph& g) : graph_(g) {
  const int m = g.vertex_count();
  const std::uint64_t count = std::uint64_t{1} << (m - 1);
  partitions_.reserve(count);
  columns_.reserve(count);
  for (std::uint64_t s = 0; s < count; ++s) {
    partitions_.emplace_back(m, s << 1);
    auto cv = cut_vector(g, s << 1);
    IntVector col(cv.coords.begin(), cv.coords.end());
    col.push_back(1);
    columns_.push_back(std::move(col));
  }
}

CutConfiguration configuration(const Graph& g) { return CutConfiguration(g); }

Graph complete_bipartite(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("complete_bipartite needs p, q >= 1");
  if (p + q > kMaxVertices) throw std::invalid_argument("complete_bipartite: too many vertices");
  std::vector<Edge> edges;
  for (int i = 1; i <= p; ++i)
    for (int j = p + 1; j <= p + q; ++j) edges.push_back({i, j});
  return Graph(p + q, std::move(edges));
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  if (n > kMaxVertices) throw std::invalid_argument("cycle: too many vertices");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, n});
  return Graph(n, std::move(edges));
}

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1 edges");
  if (n + 1 > kMaxVertices) throw std::invalid_argument("path: too many vertices");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({i, i + 1});
  return Graph(n + 1, std::move(edges));
}

Graph tree_from_edge_list(std::vector<Edge> edges) {
  if (edges.empty()) throw std::invalid_argument("tree needs at least one edge");
  const int m = static_cast<int>(edges.size()) + 1;
  for (const auto& e : edges)
    if (std::max(e.u, e.v) > m || std::min(e.u, e.v) < 1)
      throw std::invalid_argument("tree vertices must be labeled 1..edges+1");
  // m - 1 edges and connected on m vertices means acyclic.
  return Graph(m, std::move(edges));
}

GraphParseError::GraphParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph read_edge_list(std::istream& in) {
  std::string text;
  int lineno = 0;
  int m = -1;
  int header_line = 0;
  std::vector<Edge> edges;
  while (std::getline(in, text)) {
    ++lineno;
    auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    std::istringstream ls(text);
    if (m < 0) {
      if (!(ls >> m) || m < 1) throw GraphParseError(lineno, "expected a positive vertex count");
      header_line = lineno;
    } else {
      Edge e;
      if (!(ls >> e.u >> e.v)) throw GraphParseError(lineno, "expected 'u v'");
      edges.push_back(e);
    }
    std::string rest;
    if (ls >> rest) throw GraphParseError(lineno, "unexpected trailing text '" + rest + "'");
  }
  if (m < 0) throw GraphParseError(lineno, "missing vertex count");
  try {
    return Graph(m, std::move(edges));
  } catch (const std::invalid_argument& err) {
    throw GraphParseError(header_line, err.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_vectors_csv(std::ostream& out, const std::vector<CutVector>& vs) {
  for (const auto& v : vs) {
    for (std::size_t i = 0; i < v.coords.size(); ++i) out << (i ? "," : "") << v.coords[i];
    out << "\r\n";
  }
}

std::string vectors_json(const std::vector<CutVector>& vs) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& v : vs) j.push_back(v.coords);
  return j.dump();
}

}  // namespace cutpoly
