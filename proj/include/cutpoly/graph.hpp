#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cutpoly/numeric.hpp"

namespace cutpoly {

/// Vertex subset as a bitmask; vertex v (1-based) is bit v-1.
using VertexSet = std::uint64_t;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << (v - 1); }

/// Largest vertex count accepted. Cut enumeration is 2^(m-1).
inline constexpr int kMaxVertices = 24;

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite connected simple graph on vertices 1..m with an ordered edge list.
/// The edge order fixes the coordinate order of cut vectors.
class Graph {
public:
  /// Throws std::invalid_argument for loops, repeated edges, out-of-range
  /// endpoints, disconnected input, or m outside [1, kMaxVertices].
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  VertexSet all_vertices() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  int vertex_count_;
  std::vector<Edge> edges_;
};

/// Unordered partition A|B of V(G). Stored canonically: B is the side
/// holding vertex 1, so A|B and B|A compare equal.
class Partition {
public:
  Partition(int vertex_count, VertexSet side);

  int vertex_count() const { return vertex_count_; }
  /// Side not containing vertex 1. This is also the partition's encoding.
  VertexSet a_side() const { return a_; }
  VertexSet b_side() const;
  int min_size() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  int vertex_count_;
  VertexSet a_;
};

struct CutVector {
  std::vector<int> coords;
  friend bool operator==(const CutVector&, const CutVector&) = default;
  friend auto operator<=>(const CutVector&, const CutVector&) = default;
};

/// The matrix of cut vectors with an appended all-ones row, stored by column.
/// Column j belongs to partitions()[j]; there are exactly 2^(m-1) columns.
class CutConfiguration {
public:
  explicit CutConfiguration(const Graph& g);

  const Graph& graph() const { return graph_; }
  std::size_t rows() const { return graph_.edge_count() + 1; }
  std::size_t cols() const { return columns_.size(); }
  const std::vector<IntVector>& columns() const { return columns_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  std::int64_t at(std::size_t row, std::size_t col) const { return columns_[col][row]; }

private:
  Graph graph_;
  std::vector<Partition> partitions_;
  std::vector<IntVector> columns_;
};

/// Throws std::invalid_argument if `a` holds vertices outside 1..m.
CutVector cut_vector(const Graph& g, VertexSet a);

/// One vector per canonical partition, ordered by the partition encoding.
std::vector<CutVector> cut_polytope_vertices(const Graph& g);

CutConfiguration configuration(const Graph& g);

// Named families. Edge orders are fixed:
//   complete_bipartite(p, q): parts {1..p} and {p+1..p+q}, edges (i, j)
//     lexicographic with i in the first part;
//   cycle(n): {1,2}, {2,3}, ..., {n-1,n}, {1,n};
//   path(n): n edges {1,2}, ..., {n,n+1}.
Graph complete_bipartite(int p, int q);
Graph cycle(int n);
Graph path(int n);
/// Throws unless the edges form a spanning tree on 1..m (m = edges + 1).
Graph tree_from_edge_list(std::vector<Edge> edges);

/// Plain edge-list format: first line "m", then one "u v" line per edge.
/// Blank lines and lines starting with '#' are ignored.
class GraphParseError : public std::runtime_error {
public:
  GraphParseError(int line, const std::string& what);
  int line() const { return line_; }

private:
  int line_;
};

Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// One row per vector, comma separated, no header.
void write_vectors_csv(std::ostream& out, const std::vector<CutVector>& vs);
std::string vectors_json(const std::vector<CutVector>& vs);

}  // namespace cutpoly
