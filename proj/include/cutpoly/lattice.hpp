#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cutpoly/graph.hpp"
#include "cutpoly/numeric.hpp"

namespace cutpoly {

/// Integer column lattice in Hermite normal form.
///
/// Convention (lower-triangular column HNF): basis column j has a pivot in
/// row pivot_row(j); pivot rows strictly increase with j; every entry above
/// a pivot is zero; the pivot is positive; and the entries of a pivot row
/// lying to the left of the pivot are reduced into [0, pivot). Under this
/// convention the basis of a given lattice is unique.
class LatticeBasis {
public:
  static constexpr const char* kConvention =
      "column-HNF/lower: pivot rows increasing; zeros above pivots; pivot > 0; "
      "0 <= entry < pivot left of each pivot";

  /// HNF of the integer span of `columns`, each of length `dimension`.
  LatticeBasis(std::span<const IntVector> columns, std::size_t dimension);

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::vector<BigInt>>& columns() const { return basis_; }
  std::size_t pivot_row(std::size_t j) const { return pivots_[j]; }

  /// Exact membership by back-substitution against the HNF.
  /// Throws std::invalid_argument on a length mismatch.
  bool contains(std::span<const std::int64_t> v) const;
  bool contains(std::span<const BigInt> v) const;

  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;

private:
  std::size_t dimension_;
  std::vector<std::vector<BigInt>> basis_;
  std::vector<std::size_t> pivots_;
};

LatticeBasis lattice_basis(const CutConfiguration& cfg);
inline bool lattice_contains(const LatticeBasis& b, std::span<const std::int64_t> v) {
  return b.contains(v);
}

/// Rank over Q by fraction-based Gaussian elimination.
std::size_t rational_rank(std::span<const IntVector> columns, std::size_t dimension);

/// Rational rank of the configuration minus one.
int polytope_dimension(const CutConfiguration& cfg);

// Matrix text I/O: one row per line, whitespace separated. JSON: array of rows.
std::vector<IntVector> read_matrix_rows(std::istream& in);
void write_matrix_rows(std::ostream& out, const std::vector<IntVector>& rows);
std::string matrix_json(const std::vector<IntVector>& rows);
std::vector<IntVector> matrix_from_json(const std::string& text);

/// Converts between column storage and row storage.
std::vector<IntVector> transpose(const std::vector<IntVector>& m, std::size_t inner);

/// {"convention": ..., "dimension": n, "rank": k, "pivot_rows": [...],
///  "columns": [[...], ...]} with entries as decimal strings when large.
std::string basis_json(const LatticeBasis& b);

}  // namespace cutpoly
