#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cutpoly/graph.hpp"
#include "cutpoly/numeric.hpp"
#include "cutpoly/parallel.hpp"

namespace cutpoly {

/// Variables q_{A|B} of the cut ideal of K_{2,n-2} split by where vertices
/// 1 and 2 fall.
enum class VariableClass {
  split,     ///< 1 and 2 on different sides: q_{{1} u A' | {2} u B'}
  together,  ///< 1 and 2 on the same side: q_{A | {1,2} u B}
};

struct PartitionVariable {
  Partition partition;
  VariableClass cls;
  int min_size;

  static PartitionVariable from_side(int n, VertexSet a_side);

  /// Sorted vertex list of the side not containing vertex 1.
  std::vector<int> encoding() const;
  /// The chain set used by the standard-monomial characterization: A for a
  /// `together` variable, A' = {3..n} minus B' for a `split` variable.
  VertexSet chain_set() const;
};

/// Strict weak "smaller variable" relation.
using VariableLess = std::function<bool(const PartitionVariable&, const PartitionVariable&)>;

/// Orders by min{|A|,|B|}, then split before together, then by the
/// lexicographic order of encoding().
bool default_variable_less(const PartitionVariable& a, const PartitionVariable& b);

/// Index of a variable in the ring's order; 0 is the smallest variable.
using VarId = std::uint32_t;

/// Polynomial ring K[q] over the 2^(n-1) unordered partitions of [n], with
/// the variables ranked by a pluggable comparator.
class PartitionRing {
public:
  explicit PartitionRing(int n, VariableLess less = default_variable_less);

  int n() const { return n_; }
  std::size_t variable_count() const { return vars_.size(); }
  const PartitionVariable& variable(VarId id) const { return vars_[id]; }
  /// Accepts either side of the partition.
  VarId id_of(VertexSet side) const;
  /// Convenience for tests: id_of the side listed.
  VarId id_of(std::initializer_list<int> side) const;

  /// Set {3, ..., n}.
  VertexSet outer_vertices() const;

private:
  int n_;
  std::vector<PartitionVariable> vars_;
  std::vector<VarId> id_by_index_;
};

/// Monomial in K[q], stored as the sorted multiset of its variables.
class PartitionMonomial {
public:
  PartitionMonomial() = default;
  explicit PartitionMonomial(std::vector<VarId> vars);
  PartitionMonomial(std::initializer_list<VarId> vars);

  unsigned degree() const { return static_cast<unsigned>(vars_.size()); }
  unsigned exponent(VarId v) const;
  /// (variable, exponent) pairs with positive exponents, ascending.
  std::vector<std::pair<VarId, unsigned>> exponents() const;
  std::span<const VarId> variables() const { return vars_; }
  bool is_unit() const { return vars_.empty(); }
  bool is_squarefree() const;

  bool divides(const PartitionMonomial& other) const;
  bool coprime(const PartitionMonomial& other) const;
  /// Requires divisor.divides(*this).
  PartitionMonomial quotient(const PartitionMonomial& divisor) const;
  PartitionMonomial lcm(const PartitionMonomial& other) const;
  friend PartitionMonomial operator*(const PartitionMonomial& a, const PartitionMonomial& b);

  friend bool operator==(const PartitionMonomial&, const PartitionMonomial&) = default;

private:
  std::vector<VarId> vars_;
};

/// Degree first, then reverse lexicographic on the ring's variable ranks:
/// among equal-degree monomials, the one with the larger exponent on the
/// smallest differing variable is smaller.
std::strong_ordering monomial_order_cmp(const PartitionMonomial& a, const PartitionMonomial& b);

struct MonomialGreater {
  bool operator()(const PartitionMonomial& a, const PartitionMonomial& b) const {
    return monomial_order_cmp(a, b) > 0;
  }
};

/// Integer-coefficient polynomial in K[q]; iteration runs from the largest
/// term down.
using QPolynomial = std::map<PartitionMonomial, std::int64_t, MonomialGreater>;

struct CutBinomial {
  PartitionMonomial lead;
  PartitionMonomial trail;
  int family = 0;

  QPolynomial as_polynomial() const;
  friend bool operator==(const CutBinomial&, const CutBinomial&) = default;
};

/// Quadratic Groebner basis of I_{K_{2,n-2}}:
///  (1) q_{{1}uA|{2}uB} q_{{1}uB|{2}uA} - q_{0|[n]} q_{{1,2}|{3..n}} for every
///      unordered {A, B} with A u B = {3..n} disjoint (A = 0 included);
///  (2) q_{A|B} q_{C|D} - q_{AnC|BuD} q_{AuC|BnD}, 1 in AnC, 2 in BnD,
///      A, C incomparable, skipping pairs whose lead is already a family (1)
///      lead;
///  (3) the same binomial with 1, 2 in AnC, A, C incomparable.
/// Binomials come out in family order, then by lead. Throws
/// std::invalid_argument for n < 4 and VerificationError if some lead is not
/// strictly greater than its trail under the ring's order.
std::vector<CutBinomial> generate_gb(const PartitionRing& ring);

/// Lead-term index over a binomial list for repeated reductions.
class BinomialReducer {
public:
  explicit BinomialReducer(std::span<const CutBinomial> gb, std::size_t variable_count);

  /// Index of some binomial whose lead divides m, or -1.
  long find_divisor(const PartitionMonomial& m) const;
  /// Rewrites the largest reducible term (lead -> trail) until none remain.
  QPolynomial reduce(QPolynomial p) const;

private:
  std::span<const CutBinomial> gb_;
  std::vector<std::vector<std::uint32_t>> by_smallest_var_;
};

QPolynomial reduce(QPolynomial p, std::span<const CutBinomial> gb, std::size_t variable_count);
QPolynomial s_polynomial(const CutBinomial& f, const CutBinomial& g);

struct SPairFailure {
  std::size_t first;
  std::size_t second;
  QPolynomial remainder;
};

struct BuchbergerCertificate {
  int n = 0;
  std::size_t binomials = 0;
  std::size_t pairs_total = 0;
  std::size_t pairs_coprime_skipped = 0;
  std::size_t pairs_reduced = 0;
  std::vector<SPairFailure> failures;  ///< sorted by (first, second)

  bool passed() const { return failures.empty(); }
};

/// S-pair check of generate_gb(n). Throws CostGuardError unless 4 <= n <= 6.
BuchbergerCertificate buchberger_check(int n, Exec exec = Exec::parallel);
/// Same check over an arbitrary binomial list, no cost guard.
BuchbergerCertificate buchberger_check(const PartitionRing& ring, std::span<const CutBinomial> gb,
                                       Exec exec = Exec::parallel);

/// No lead of gb divides m.
bool is_standard(const PartitionMonomial& m, std::span<const CutBinomial> gb);

struct SquarefreeStandard {
  PartitionMonomial monomial;
  PartitionMonomial together_part;  ///< product of the together variables
  PartitionMonomial split_part;     ///< product of the split variables
};

/// Hard limit for squarefree enumeration.
inline constexpr int kMaxEnumerationN = 8;

/// Every squarefree standard monomial of degree k, in increasing variable
/// order. Each result is checked against the chain characterization and a
/// VerificationError is thrown on a mismatch. Throws CostGuardError for
/// n > kMaxEnumerationN and std::invalid_argument unless 0 <= k <= 2n - 3.
std::vector<SquarefreeStandard> enumerate_squarefree_standard(int n, int k);

/// Chain characterization of a squarefree standard monomial: the chain sets
/// of each factor form a strict chain, and the split factor does not run
/// from 0 to {3..n}.
bool satisfies_chain_characterization(const PartitionRing& ring, const SquarefreeStandard& s);

/// Degree-by-degree census of all squarefree standard monomials from one
/// exhaustive search.
struct SquarefreeCensus {
  int n = 0;
  std::vector<std::uint64_t> total;     ///< by degree 0..2n-3
  std::vector<std::uint64_t> together;  ///< only together variables
  std::vector<std::uint64_t> split;     ///< only split variables
  /// Together-only monomials by degree and cell: index 2*[A_1 empty] + [A_k full].
  /// The unit monomial falls in cell 0.
  std::vector<std::array<std::uint64_t, 4>> endpoint_cells;
  std::uint64_t chain_violations = 0;
};

/// Throws CostGuardError for n > kMaxEnumerationN, invalid_argument for n < 4.
SquarefreeCensus squarefree_census(int n, Exec exec = Exec::parallel);

/// Together count: (k-1)! S(n-2,k-1) + 2 k! S(n-2,k) + (k+1)! S(n-2,k+1);
/// the first term is taken as 0 at k = 0, so count_type1(n, 0) = 1.
BigInt count_type1(int n, int k);
/// Split count: 2 k! S(n-2,k) + (k+1)! S(n-2,k+1).
BigInt count_type2(int n, int k);
/// Cell of count_type1 for the given A_1 / A_k conditions.
BigInt endpoint_cell(int n, int k, bool a1_empty, bool ak_full);

/// (f_{-1}, f_0, ..., f_{2n-4}) with f_{k-1} = sum_a B_a C_{k-a}.
/// Throws std::invalid_argument for n < 4.
std::vector<BigInt> f_vector(int n);

/// Number of standard monomials (any exponents) of degree m.
/// Throws CostGuardError unless 4 <= n <= 6 and 0 <= m <= 5.
std::uint64_t count_standard_by_degree(int n, int m);

std::string to_string(const PartitionRing& ring, const PartitionMonomial& m);
std::string to_string(const PartitionRing& ring, const CutBinomial& b);
/// [{"family": f, "lead": [[...], [...]], "trail": [[...], [...]]}, ...]
/// with each variable as the sorted side not containing vertex 1.
std::string gb_json(const PartitionRing& ring, std::span<const CutBinomial> gb);
/// Header "degree,together_degree,split_degree,variables"; variables are
/// space-separated brace lists (quoted).
void write_standard_csv(std::ostream& out, const PartitionRing& ring,
                        std::span<const SquarefreeStandard> monomials);

}  // namespace cutpoly
