#include "doctest.h"

#include <cutpoly/graph.hpp>

#include "oracles.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

using namespace cutpoly;

namespace {

VertexSet set_of(std::initializer_list<int> vs) {
  VertexSet s = 0;
  for (int v : vs) s |= vertex_bit(v);
  return s;
}

// Random connected simple graph: random spanning tree plus extra edges.
Graph random_graph(std::mt19937& rng, int m) {
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  for (int v = 2; v <= m; ++v) {
    int u = std::uniform_int_distribution<int>(1, v - 1)(rng);
    edges.push_back({u, v});
    seen.insert({u, v});
  }
  int extra = std::uniform_int_distribution<int>(0, m)(rng);
  for (int i = 0; i < extra; ++i) {
    int u = std::uniform_int_distribution<int>(1, m)(rng);
    int v = std::uniform_int_distribution<int>(1, m)(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (seen.insert({u, v}).second) edges.push_back({u, v});
  }
  return Graph(m, edges);
}

}  // namespace

TEST_CASE("cut vectors of the 4-cycle") {
  Graph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  CHECK(cut_vector(c4, set_of({1, 2})).coords == std::vector<int>{0, 1, 0, 1});
  CHECK(cut_vector(c4, set_of({1})).coords == std::vector<int>{1, 0, 0, 1});
  CHECK(cut_vector(c4, 0).coords == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("cycle(4) is the standard 4-cycle with eight cut vectors") {
  Graph c4 = cycle(4);
  CHECK(c4 == Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  auto vs = cut_polytope_vertices(c4);
  std::set<std::vector<int>> got;
  for (const auto& v : vs) got.insert(v.coords);
  std::set<std::vector<int>> want{{0, 0, 0, 0}, {1, 0, 0, 1}, {1, 1, 0, 0}, {0, 1, 1, 0},
                                  {0, 0, 1, 1}, {0, 1, 0, 1}, {1, 0, 1, 0}, {1, 1, 1, 1}};
  CHECK(vs.size() == 8);
  CHECK(got == want);
}

TEST_CASE("single edge") {
  Graph k2 = path(1);
  CHECK(k2 == Graph(2, {{1, 2}}));
  auto vs = cut_polytope_vertices(k2);
  REQUIRE(vs.size() == 2);
  CHECK(vs[0].coords == std::vector<int>{0});
  CHECK(vs[1].coords == std::vector<int>{1});
  auto cfg = configuration(k2);
  CHECK(cfg.rows() == 2);
  CHECK(cfg.columns() == std::vector<IntVector>{{0, 1}, {1, 1}});
}

TEST_CASE("complete_bipartite(2,3)") {
  Graph g = complete_bipartite(2, 3);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 6);
  CHECK(g.edges().front() == Edge{1, 3});
  CHECK(g.edges().back() == Edge{2, 5});
  CHECK(cut_polytope_vertices(g).size() == 16);
}

TEST_CASE("K_{2,3} configuration equals the reference matrix up to row and column order") {
  const auto listed = oracle::reference_k23_matrix();
  auto cfg = configuration(complete_bipartite(2, 3));
  REQUIRE(cfg.rows() == 7);
  REQUIRE(cfg.cols() == 16);
  // The last row is all ones in both; find a permutation of the six edge
  // rows under which the column multisets agree.
  std::multiset<std::vector<int>> listed_cols;
  for (std::size_t c = 0; c < 16; ++c) {
    std::vector<int> col;
    for (std::size_t r = 0; r < 7; ++r) col.push_back(listed[r][c]);
    listed_cols.insert(col);
  }
  std::vector<std::size_t> perm{0, 1, 2, 3, 4, 5};
  bool matched = false;
  do {
    std::multiset<std::vector<int>> ours;
    for (std::size_t c = 0; c < 16; ++c) {
      std::vector<int> col;
      for (std::size_t r = 0; r < 6; ++r) col.push_back(static_cast<int>(cfg.at(perm[r], c)));
      col.push_back(static_cast<int>(cfg.at(6, c)));
      ours.insert(col);
    }
    matched = ours == listed_cols;
  } while (!matched && std::next_permutation(perm.begin(), perm.end()));
  CHECK(matched);
}

TEST_CASE("C4 configuration column sums are one plus the cut size") {
  Graph c4 = cycle(4);
  auto cfg = configuration(c4);
  REQUIRE(cfg.cols() == 8);
  for (std::size_t c = 0; c < cfg.cols(); ++c) {
    VertexSet a = cfg.partitions()[c].a_side();
    int crossing = 0;
    for (const auto& e : c4.edges())
      crossing += ((a & vertex_bit(e.u)) != 0) != ((a & vertex_bit(e.v)) != 0);
    std::int64_t sum = 0;
    for (std::size_t r = 0; r < cfg.rows(); ++r) sum += cfg.at(r, c);
    CHECK(sum == 1 + crossing);
  }
}

TEST_CASE("partitions are canonical and vertex 1 is never on the stored side") {
  Partition p(4, set_of({1, 2}));
  CHECK(p.a_side() == set_of({3, 4}));
  CHECK(p.b_side() == set_of({1, 2}));
  CHECK(p == Partition(4, set_of({3, 4})));
  CHECK(Partition(5, 0).min_size() == 0);
  CHECK(Partition(5, set_of({2, 3})).min_size() == 2);
}

TEST_CASE("property: complement symmetry and vertex count on random graphs") {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 40; ++trial) {
    int m = std::uniform_int_distribution<int>(2, 12)(rng);
    Graph g = random_graph(rng, m);
    auto vs = cut_polytope_vertices(g);
    CHECK(vs.size() == (std::size_t{1} << (m - 1)));
    std::set<CutVector> distinct(vs.begin(), vs.end());
    CHECK(distinct.size() == vs.size());
    VertexSet a = std::uniform_int_distribution<VertexSet>(0, g.all_vertices())(rng);
    CHECK(cut_vector(g, a) == cut_vector(g, g.all_vertices() & ~a));
  }
}

TEST_CASE("invalid graphs are rejected") {
  CHECK_THROWS_AS(Graph(3, {{1, 2}}), std::invalid_argument);           // disconnected
  CHECK_THROWS_AS(Graph(2, {{1, 2}, {2, 1}}), std::invalid_argument);   // multi-edge
  CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);           // loop
  CHECK_THROWS_AS(Graph(2, {{1, 3}}), std::invalid_argument);           // out of range
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(Graph(kMaxVertices + 1, {}), std::invalid_argument);
}

TEST_CASE("edge-list reading and writing") {
  std::istringstream in("# a path\n3\n1 2\n\n2 3\n");
  Graph g = read_edge_list(in);
  CHECK(g == path(2));
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream back(out.str());
  CHECK(read_edge_list(back) == g);

  std::istringstream bad("3\n1 2\n2 x\n");
  try {
    read_edge_list(bad);
    FAIL("expected a parse error");
  } catch (const GraphParseError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream disconnected("4\n1 2\n3 4\n");
  CHECK_THROWS(read_edge_list(disconnected));
}

TEST_CASE("vector exports") {
  auto vs = cut_polytope_vertices(path(1));
  std::ostringstream csv;
  write_vectors_csv(csv, vs);
  CHECK(csv.str() == "0\r\n1\r\n");
  CHECK(vectors_json(vs).find("[0]") != std::string::npos);
}
