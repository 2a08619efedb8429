#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cutpoly/graph.hpp"
#include "cutpoly/lattice.hpp"
#include "cutpoly/parallel.hpp"
#include "cutpoly/polynomial.hpp"

namespace cutpoly {

/// Values i(P,0), ..., i(P,M) of the normalized Ehrhart function.
struct CountSequence {
  int dimension = 0;
  std::vector<std::uint64_t> counts;

  int dilate_max() const { return static_cast<int>(counts.size()) - 1; }

  /// counts[0] == 1, nondecreasing, dimension >= 0.
  /// Throws std::invalid_argument otherwise.
  void validate() const;

  /// {"dimension": d, "counts": [...]}
  std::string to_json() const;
  static CountSequence from_json(const std::string& text);

  friend bool operator==(const CountSequence&, const CountSequence&) = default;
};

/// Number of distinct sums of exactly m columns (with repetition). This is
/// the Hilbert function of the toric ring in degree m, and equals i(P,m)
/// when the toric ring is normal.
std::uint64_t count_semigroup(const CutConfiguration& cfg, int m, Exec exec = Exec::parallel);

/// count_semigroup for every m in 0..max_m, sharing the iterated sumsets.
std::vector<std::uint64_t> semigroup_counts(const CutConfiguration& cfg, int max_m,
                                            Exec exec = Exec::parallel);

/// True iff `point` = sum_j lambda_j * column_j with lambda >= 0 rational and
/// sum lambda = m. Throws std::invalid_argument on a length mismatch or if the
/// last coordinate is not m.
bool membership_in_dilate(std::span<const std::int64_t> point, const CutConfiguration& cfg, int m);

/// Largest candidate box scanned by count_lattice_points before it refuses.
inline constexpr std::uint64_t kMaxDilateCandidates = 200'000'000;

/// |mP' ∩ ZA| by scanning the box spanned by the column ranges, filtering by
/// lattice membership, and then by exact LP feasibility. Makes no normality
/// assumption. Throws CostGuardError if the box exceeds kMaxDilateCandidates.
std::uint64_t count_lattice_points(const CutConfiguration& cfg, const LatticeBasis& b, int m,
                                   Exec exec = Exec::parallel);

/// h*_i = sum_{j=0..i} (-1)^j C(d+1, j) i(P, i-j) for i = 0..d.
/// Throws VerificationError if a coefficient is negative or if the same
/// formula is nonzero for some index in d+1..M; std::invalid_argument if
/// M < d.
IntPolynomial hstar_from_counts(const CountSequence& cs);

/// i(P,m) = sum_i h*_i C(m + d - i, d). Throws std::invalid_argument if
/// deg h > d.
BigInt ehrhart_from_hstar(const IntPolynomial& h, int d, int m);

enum class CountMethod { semigroup, lp };

/// Counts for m = 0..max_dilate with the chosen method.
CountSequence count_sequence(const CutConfiguration& cfg, int max_dilate, CountMethod method,
                             Exec exec = Exec::parallel);

}  // namespace cutpoly
