#pragma once

// Independent reference computations used by the unit and acceptance suites.
// Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

/// Set partitions of {1..n} into exactly k blocks, by restricted growth strings.
inline std::uint64_t set_partitions(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  std::uint64_t count = 0;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int max_block) {
    if (pos == n) {
      if (max_block + 1 == k) ++count;
      return;
    }
    for (int b = 0; b <= max_block + 1 && b < k; ++b) {
      rgs[static_cast<std::size_t>(pos)] = b;
      rec(pos + 1, std::max(max_block, b));
    }
  };
  rgs[0] = 0;
  rec(1, 0);
  return count;
}

/// Descent-count distribution over all permutations of n letters.
inline std::vector<std::uint64_t> eulerian_by_descents(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::uint64_t> dist(static_cast<std::size_t>(n), 0);
  do {
    int des = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(i + 1)]) ++des;
    ++dist[static_cast<std::size_t>(des)];
  } while (std::next_permutation(w.begin(), w.end()));
  return dist;
}

/// Leibniz determinant of a small square matrix (rows).
inline long long det_leibniz(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    long long prod = 1;
    for (std::size_t i = 0; i < n; ++i) prod *= m[i][perm[i]];
    total += (inversions % 2 ? -prod : prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Rank of a matrix given by columns, as the largest k with a nonzero k x k
/// minor (exhaustive; only for small matrices).
inline std::size_t rank_by_minors(const std::vector<std::vector<long long>>& cols, std::size_t rows) {
  const std::size_t ncols = cols.size();
  for (std::size_t k = std::min(rows, ncols); k > 0; --k) {
    std::vector<bool> rsel(rows, false), csel(ncols, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        std::vector<std::vector<long long>> sub;
        for (std::size_t r = 0; r < rows; ++r) {
          if (!rsel[r]) continue;
          std::vector<long long> row;
          for (std::size_t c = 0; c < ncols; ++c)
            if (csel[c]) row.push_back(cols[c][r]);
          sub.push_back(std::move(row));
        }
        if (det_leibniz(sub) != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

/// Is `target` an integer combination of `cols` with coefficients in [-bound, bound]?
inline bool small_combination_exists(const std::vector<std::vector<long long>>& cols,
                                     const std::vector<long long>& target, int bound) {
  const std::size_t n = cols.size();
  std::vector<long long> acc(target.size(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t j) {
    if (j == n) return acc == target;
    for (int c = -bound; c <= bound; ++c) {
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * cols[j][i];
      bool hit = rec(j + 1);
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] -= c * cols[j][i];
      if (hit) return true;
    }
    return false;
  };
  return rec(0);
}

using Side = std::uint32_t;  // bit v-1 for vertex v
/// Canonical side of a partition of [n]: the side without vertex 1.
inline Side canon(int n, Side s) {
  const Side all = (Side{1} << n) - 1;
  return (s & 1) ? (all & ~s) : s;
}

/// Binomial as (sorted canonical lead sides, sorted canonical trail sides).
using BinomialKey = std::pair<std::vector<Side>, std::vector<Side>>;

inline std::vector<Side> sorted_pair(Side a, Side b) {
  std::vector<Side> v{a, b};
  std::sort(v.begin(), v.end());
  return v;
}

/// Families (1)-(3) enumerated literally over ordered partitions A|B, C|D of
/// [n]; binomials keyed by lead, earlier families winning ties.
inline std::map<std::vector<Side>, BinomialKey> gb_by_side_conditions(int n) {
  const Side all = (Side{1} << n) - 1;
  const Side v1 = 1, v2 = 2;
  const Side outer = all & ~Side{3};
  std::map<std::vector<Side>, BinomialKey> out;
  auto put = [&](Side l1, Side l2, Side t1, Side t2) {
    auto lead = sorted_pair(canon(n, l1), canon(n, l2));
    out.try_emplace(lead, BinomialKey{lead, sorted_pair(canon(n, t1), canon(n, t2))});
  };
  // (1): A|B ranges over ordered pairs with A u B = {3..n}.
  for (Side a = 0; a <= all; ++a) {
    if ((a & ~outer) != 0) continue;
    const Side b = outer & ~a;
    put(v1 | a, v1 | b, 0, v1 | v2);
  }
  // (2) and (3): all ordered pairs of partitions A|B, C|D written with
  // A = first side.
  for (Side a = 0; a <= all; ++a)
    for (Side c = 0; c <= all; ++c) {
      const Side b = all & ~a, d = all & ~c;
      const bool incomparable = (a & ~c) && (c & ~a);
      if (!incomparable) continue;
      const bool fam2 = (a & v1) && (c & v1) && (b & v2) && (d & v2);
      const bool fam3 = (a & c & v1) && (a & c & v2);
      if (fam2 || fam3) put(a, c, a & c, a | c);
    }
  return out;
}

/// Number of strict chains S_1 < ... < S_k of subsets of an m-set subject to
/// endpoint predicates, by brute force over increasing sequences of masks.
inline std::uint64_t chains(int m, int k, const std::function<bool(Side, Side)>& ends_ok) {
  const Side full = (Side{1} << m) - 1;
  std::uint64_t count = 0;
  std::vector<Side> seq;
  std::function<void()> rec = [&] {
    if (static_cast<int>(seq.size()) == k) {
      if (k == 0 || ends_ok(seq.front(), seq.back())) ++count;
      return;
    }
    for (Side s = 0; s <= full; ++s) {
      if (!seq.empty() && !(seq.back() != s && (seq.back() & ~s) == 0)) continue;
      seq.push_back(s);
      rec();
      seq.pop_back();
    }
  };
  rec();
  return count;
}

// Reference data for K_{2,3}: each variable written
// by the first side of q_{A|B}.
struct ReferenceBinomial {
  std::vector<int> lead1, lead2, trail1, trail2;
};

inline std::vector<ReferenceBinomial> reference_k23_basis() {
  return {
      {{1}, {2}, {}, {1, 2}},          {{1, 3}, {2, 3}, {}, {1, 2}},   {{1, 4}, {2, 4}, {}, {1, 2}},
      {{1, 5}, {2, 5}, {}, {1, 2}},    {{3}, {4, 5}, {}, {1, 2}},      {{5}, {3, 4}, {}, {1, 2}},
      {{4}, {3, 5}, {}, {1, 2}},       {{4}, {5}, {}, {4, 5}},         {{3}, {5}, {}, {3, 5}},
      {{3}, {4}, {}, {3, 4}},          {{3, 5}, {4, 5}, {5}, {1, 2}},  {{3, 4}, {3, 5}, {3}, {1, 2}},
      {{3, 4}, {4, 5}, {4}, {1, 2}},   {{1, 4}, {1, 5}, {1}, {2, 3}},  {{1, 3}, {1, 5}, {1}, {2, 4}},
      {{2, 3}, {2, 4}, {2}, {1, 5}},   {{1, 3}, {1, 4}, {1}, {2, 5}},  {{2, 3}, {2, 5}, {2}, {1, 4}},
      {{2, 4}, {2, 5}, {2}, {1, 3}},
  };
}

inline Side side_of(const std::vector<int>& vs) {
  Side s = 0;
  for (int v : vs) s |= Side{1} << (v - 1);
  return s;
}

inline std::set<BinomialKey> reference_k23_keys() {
  std::set<BinomialKey> keys;
  for (const auto& b : reference_k23_basis())
    keys.insert({sorted_pair(canon(5, side_of(b.lead1)), canon(5, side_of(b.lead2))),
                 sorted_pair(canon(5, side_of(b.trail1)), canon(5, side_of(b.trail2)))});
  return keys;
}

/// Reference 7 x 16 configuration matrix of K_{2,3}, by rows.
inline std::vector<std::vector<int>> reference_k23_matrix() {
  return {
      {0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1},
      {0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1}, {0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1},
      {0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1}, {0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1},
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
  };
}

}  // namespace oracle
