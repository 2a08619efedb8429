#include "cutpoly/ehrhart.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "json.hpp"
#include "cutpoly/simplex.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cutpoly {

void CountSequence::validate() const {
  if (dimension < 0) throw std::invalid_argument("CountSequence: negative dimension");
  if (counts.empty() || counts[0] != 1) throw std::invalid_argument("CountSequence: counts[0] must be 1");
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] < counts[i - 1]) throw std::invalid_argument("CountSequence: counts must be nondecreasing");
}

std::string CountSequence::to_json() const {
  nlohmann::ordered_json j;
  j["dimension"] = dimension;
  j["counts"] = counts;
  return j.dump();
}

CountSequence CountSequence::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  CountSequence cs;
  cs.dimension = j.at("dimension").get<int>();
  cs.counts = j.at("counts").get<std::vector<std::uint64_t>>();
  cs.validate();
  return cs;
}

namespace {

// A point is stored as the raw bytes of its coordinates (the constant last
// coordinate dropped), which gives hashing and equality for free.
using Coord = std::uint16_t;
using PointKey = std::string;

std::vector<Coord> column_coords(const IntVector& col) {
  return std::vector<Coord>(col.begin(), col.end() - 1);
}

void add_into(PointKey& out, const PointKey& p, const std::vector<Coord>& c) {
  out = p;
  auto* dst = reinterpret_cast<Coord*>(out.data());
  for (std::size_t i = 0; i < c.size(); ++i) dst[i] = static_cast<Coord>(dst[i] + c[i]);
}

std::vector<PointKey> next_layer_serial(const std::vector<PointKey>& layer,
                                        const std::vector<std::vector<Coord>>& gens) {
  std::unordered_set<PointKey> seen;
  seen.reserve(layer.size() * 4);
  PointKey buf;
  for (const auto& p : layer)
    for (const auto& g : gens) {
      add_into(buf, p, g);
      seen.insert(buf);
    }
  return std::vector<PointKey>(seen.begin(), seen.end());
}

std::vector<PointKey> next_layer_parallel(const std::vector<PointKey>& layer,
                                          const std::vector<std::vector<Coord>>& gens) {
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::vector<std::unordered_set<PointKey>> local(static_cast<std::size_t>(threads));
  const auto n = static_cast<std::ptrdiff_t>(layer.size());
#pragma omp parallel
  {
    int tid = 0;
#ifdef _OPENMP
    tid = omp_get_thread_num();
#endif
    auto& mine = local[static_cast<std::size_t>(tid)];
    PointKey buf;
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
      for (const auto& g : gens) {
        add_into(buf, layer[static_cast<std::size_t>(i)], g);
        mine.insert(buf);
      }
  }
  for (std::size_t t = 1; t < local.size(); ++t) {
    local[0].merge(local[t]);
    local[t].clear();
  }
  return std::vector<PointKey>(local[0].begin(), local[0].end());
}

}  // namespace

std::vector<std::uint64_t> semigroup_counts(const CutConfiguration& cfg, int max_m, Exec exec) {
  if (max_m < 0) throw std::invalid_argument("semigroup_counts: negative dilate");
  std::int64_t max_entry = 0;
  for (const auto& c : cfg.columns())
    for (auto x : c) {
      if (x < 0) throw std::invalid_argument("semigroup_counts: negative entries are not supported");
      max_entry = std::max(max_entry, x);
    }
  if (max_entry * max_m > std::numeric_limits<Coord>::max())
    throw CostGuardError("semigroup_counts: coordinates exceed 16 bits");

  std::vector<std::vector<Coord>> gens;
  for (const auto& c : cfg.columns()) gens.push_back(column_coords(c));

  const std::size_t width = cfg.rows() - 1;
  std::vector<PointKey> layer{PointKey(width * sizeof(Coord), '\0')};
  std::vector<std::uint64_t> counts{1};
  for (int m = 1; m <= max_m; ++m) {
    layer = exec == Exec::parallel ? next_layer_parallel(layer, gens) : next_layer_serial(layer, gens);
    counts.push_back(layer.size());
  }
  return counts;
}

std::uint64_t count_semigroup(const CutConfiguration& cfg, int m, Exec exec) {
  return semigroup_counts(cfg, m, exec).back();
}

bool membership_in_dilate(std::span<const std::int64_t> point, const CutConfiguration& cfg, int m) {
  if (point.size() != cfg.rows()) throw std::invalid_argument("membership_in_dilate: dimension mismatch");
  if (point.back() != m) throw std::invalid_argument("membership_in_dilate: last coordinate must equal m");
  // The all-ones row of the configuration enforces sum(lambda) = m.
  return nonnegative_feasible(cfg.columns(), point);
}

std::uint64_t count_lattice_points(const CutConfiguration& cfg, const LatticeBasis& b, int m, Exec exec) {
  if (m < 0) throw std::invalid_argument("count_lattice_points: negative dilate");
  if (m == 0) return 1;
  const std::size_t width = cfg.rows() - 1;

  // Coordinate i of any point of mP' lies in [m * min_j a_ij, m * max_j a_ij].
  std::vector<std::int64_t> lo(width), span(width);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < width; ++i) {
    std::int64_t mn = cfg.at(i, 0), mx = mn;
    for (std::size_t j = 1; j < cfg.cols(); ++j) {
      mn = std::min(mn, cfg.at(i, j));
      mx = std::max(mx, cfg.at(i, j));
    }
    lo[i] = mn * m;
    span[i] = (mx - mn) * m + 1;
    if (total > kMaxDilateCandidates / static_cast<std::uint64_t>(span[i]))
      throw CostGuardError("count_lattice_points: candidate box exceeds " +
                           std::to_string(kMaxDilateCandidates) + " points");
    total *= static_cast<std::uint64_t>(span[i]);
  }

  auto decode = [&](std::uint64_t index, IntVector& point) {
    for (std::size_t i = 0; i < width; ++i) {
      const auto s = static_cast<std::uint64_t>(span[i]);
      point[i] = lo[i] + static_cast<std::int64_t>(index % s);
      index /= s;
    }
    point[width] = m;
  };
  auto accept = [&](const IntVector& point) {
    return b.contains(point) && membership_in_dilate(point, cfg, m);
  };

  std::uint64_t count = 0;
  if (exec == Exec::serial) {
    IntVector point(width + 1);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      decode(idx, point);
      if (accept(point)) ++count;
    }
    return count;
  }

  const auto n = static_cast<std::int64_t>(total);
#pragma omp parallel reduction(+ : count)
  {
    IntVector point(width + 1);
#pragma omp for schedule(dynamic, 512)
    for (std::int64_t idx = 0; idx < n; ++idx) {
      decode(static_cast<std::uint64_t>(idx), point);
      if (accept(point)) ++count;
    }
  }
  return count;
}

IntPolynomial hstar_from_counts(const CountSequence& cs) {
  cs.validate();
  const int d = cs.dimension;
  const int M = cs.dilate_max();
  if (M < d)
    throw std::invalid_argument("hstar_from_counts: need counts up to m = " + std::to_string(d) +
                                ", have " + std::to_string(M));
  auto coefficient = [&](int i) {
    BigInt h = 0;
    for (int j = 0; j <= std::min(i, d + 1); ++j) {
      BigInt term = binomial(d + 1, j) * BigInt(static_cast<unsigned long>(cs.counts[static_cast<std::size_t>(i - j)]));
      if (j % 2) h -= term;
      else h += term;
    }
    return h;
  };
  std::vector<BigInt> h;
  for (int i = 0; i <= d; ++i) {
    h.push_back(coefficient(i));
    if (sgn(h.back()) < 0)
      throw VerificationError("hstar_from_counts: negative coefficient h*_" + std::to_string(i) + " = " +
                              h.back().get_str());
  }
  for (int i = d + 1; i <= M; ++i) {
    BigInt extra = coefficient(i);
    if (sgn(extra) != 0)
      throw VerificationError("hstar_from_counts: coefficient " + std::to_string(i) + " beyond d is " +
                              extra.get_str() + ", expected 0");
  }
  return IntPolynomial(std::move(h));
}

BigInt ehrhart_from_hstar(const IntPolynomial& h, int d, int m) {
  if (h.degree() > d) throw std::invalid_argument("ehrhart_from_hstar: deg h* exceeds d");
  BigInt sum = 0;
  for (int i = 0; i <= h.degree(); ++i) sum += h.coeff(static_cast<std::size_t>(i)) * binomial(m + d - i, d);
  return sum;
}

CountSequence count_sequence(const CutConfiguration& cfg, int max_dilate, CountMethod method, Exec exec) {
  CountSequence cs;
  cs.dimension = polytope_dimension(cfg);
  if (method == CountMethod::semigroup) {
    cs.counts = semigroup_counts(cfg, max_dilate, exec);
  } else {
    const LatticeBasis basis = lattice_basis(cfg);
    for (int m = 0; m <= max_dilate; ++m) cs.counts.push_back(count_lattice_points(cfg, basis, m, exec));
  }
  return cs;
}

}  // namespace cutpoly
