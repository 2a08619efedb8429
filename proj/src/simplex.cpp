#include "cutpoly/simplex.hpp"

#include <stdexcept>

namespace cutpoly {

bool nonnegative_feasible(std::span<const IntVector> columns, std::span<const std::int64_t> rhs) {
  const std::size_t rows = rhs.size();
  const std::size_t cols = columns.size();
  for (const auto& c : columns)
    if (c.size() != rows) throw std::invalid_argument("nonnegative_feasible: ragged columns");

  // Tableau over structural columns only; artificial columns are implicit
  // and are never re-admitted once they leave the basis.
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols));
  std::vector<Rational> b(rows);
  std::vector<std::size_t> basis(rows);
  std::vector<Rational> reduced(cols);
  Rational infeasibility = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    const bool flip = rhs[i] < 0;
    b[i] = flip ? -rhs[i] : rhs[i];
    for (std::size_t j = 0; j < cols; ++j) {
      const std::int64_t a = columns[j][i];
      t[i][j] = flip ? -a : a;
      reduced[j] -= t[i][j];
    }
    basis[i] = cols + i;
    infeasibility += b[i];
  }

  while (sgn(infeasibility) > 0) {
    // Bland: lowest-index improving column.
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (sgn(reduced[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == cols) return false;

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = b[i] / t[i][enter];
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    // A negative reduced cost with no positive entry would mean an unbounded
    // phase-1 objective, which cannot happen (it is bounded below by 0).
    if (leave == rows) throw std::logic_error("nonnegative_feasible: unbounded phase 1");

    const Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    b[leave] /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j)
        if (sgn(t[leave][j]) != 0) t[i][j] -= f * t[leave][j];
      b[i] -= f * b[leave];
    }
    const Rational f = reduced[enter];
    for (std::size_t j = 0; j < cols; ++j)
      if (sgn(t[leave][j]) != 0) reduced[j] -= f * t[leave][j];
    infeasibility += f * b[leave];
    basis[leave] = enter;
  }
  return true;
}

}  // namespace cutpoly
