#include "cutpoly/grobner.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "cutpoly/polynomial.hpp"

namespace cutpoly {

namespace {

std::vector<int> vertex_list(VertexSet s) {
  std::vector<int> out;
  for (int v = 1; s; ++v, s >>= 1)
    if (s & 1) out.push_back(v);
  return out;
}

VertexSet outer_set(int n) { return ((VertexSet{1} << n) - 1) & ~VertexSet{3}; }

bool incomparable(VertexSet a, VertexSet b) { return (a & ~b) && (b & ~a); }

}  // namespace

// ---------------------------------------------------------------------------
// Variables and the ring

PartitionVariable PartitionVariable::from_side(int n, VertexSet a_side) {
  Partition p(n, a_side);
  const bool two_apart = p.a_side() & vertex_bit(2);
  return {p, two_apart ? VariableClass::split : VariableClass::together, p.min_size()};
}

std::vector<int> PartitionVariable::encoding() const { return vertex_list(partition.a_side()); }

VertexSet PartitionVariable::chain_set() const {
  const VertexSet outer = outer_set(partition.vertex_count());
  if (cls == VariableClass::together) return partition.a_side();
  return outer & ~partition.a_side();
}

bool default_variable_less(const PartitionVariable& a, const PartitionVariable& b) {
  if (a.min_size != b.min_size) return a.min_size < b.min_size;
  if (a.cls != b.cls) return a.cls == VariableClass::split;
  return a.encoding() < b.encoding();
}

PartitionRing::PartitionRing(int n, VariableLess less) : n_(n) {
  if (n < 2 || n > 16) throw std::invalid_argument("PartitionRing: n must be in [2, 16]");
  const std::size_t count = std::size_t{1} << (n - 1);
  vars_.reserve(count);
  for (std::size_t s = 0; s < count; ++s) vars_.push_back(PartitionVariable::from_side(n, VertexSet(s) << 1));
  const auto bad = [] { return std::invalid_argument("PartitionRing: variable comparator is not a strict total order"); };
  for (const auto& v : vars_)
    if (less(v, v)) throw bad();
  std::stable_sort(vars_.begin(), vars_.end(), less);
  for (std::size_t i = 1; i < vars_.size(); ++i)
    if (!less(vars_[i - 1], vars_[i]) || less(vars_[i], vars_[i - 1]))
      throw bad();
  id_by_index_.resize(count);
  for (std::size_t i = 0; i < vars_.size(); ++i)
    id_by_index_[vars_[i].partition.a_side() >> 1] = static_cast<VarId>(i);
}

VarId PartitionRing::id_of(VertexSet side) const {
  return id_by_index_[Partition(n_, side).a_side() >> 1];
}

VarId PartitionRing::id_of(std::initializer_list<int> side) const {
  VertexSet s = 0;
  for (int v : side) {
    if (v < 1 || v > n_) throw std::invalid_argument("PartitionRing::id_of: vertex out of range");
    s |= vertex_bit(v);
  }
  return id_of(s);
}

VertexSet PartitionRing::outer_vertices() const { return outer_set(n_); }

// ---------------------------------------------------------------------------
// Monomials

PartitionMonomial::PartitionMonomial(std::vector<VarId> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
}

PartitionMonomial::PartitionMonomial(std::initializer_list<VarId> vars)
    : PartitionMonomial(std::vector<VarId>(vars)) {}

unsigned PartitionMonomial::exponent(VarId v) const {
  auto [lo, hi] = std::equal_range(vars_.begin(), vars_.end(), v);
  return static_cast<unsigned>(hi - lo);
}

std::vector<std::pair<VarId, unsigned>> PartitionMonomial::exponents() const {
  std::vector<std::pair<VarId, unsigned>> out;
  for (VarId v : vars_) {
    if (!out.empty() && out.back().first == v)
      ++out.back().second;
    else
      out.emplace_back(v, 1u);
  }
  return out;
}

bool PartitionMonomial::is_squarefree() const {
  return std::adjacent_find(vars_.begin(), vars_.end()) == vars_.end();
}

bool PartitionMonomial::divides(const PartitionMonomial& other) const {
  return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end());
}

bool PartitionMonomial::coprime(const PartitionMonomial& other) const {
  auto a = vars_.begin();
  auto b = other.vars_.begin();
  while (a != vars_.end() && b != other.vars_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a;
    else ++b;
  }
  return true;
}

PartitionMonomial PartitionMonomial::quotient(const PartitionMonomial& divisor) const {
  PartitionMonomial r;
  std::set_difference(vars_.begin(), vars_.end(), divisor.vars_.begin(), divisor.vars_.end(),
                      std::back_inserter(r.vars_));
  return r;
}

PartitionMonomial PartitionMonomial::lcm(const PartitionMonomial& other) const {
  PartitionMonomial r;
  std::set_union(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(),
                 std::back_inserter(r.vars_));
  return r;
}

PartitionMonomial operator*(const PartitionMonomial& a, const PartitionMonomial& b) {
  PartitionMonomial r;
  std::merge(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(), std::back_inserter(r.vars_));
  return r;
}

std::strong_ordering monomial_order_cmp(const PartitionMonomial& a, const PartitionMonomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  // Equal degree: the first position where the ascending variable lists
  // differ names the smallest variable with different exponents, and the
  // monomial carrying more of it is the smaller one.
  auto va = a.variables();
  auto vb = b.variables();
  return std::lexicographical_compare_three_way(va.begin(), va.end(), vb.begin(), vb.end());
}

QPolynomial CutBinomial::as_polynomial() const {
  QPolynomial p;
  p[lead] += 1;
  p[trail] -= 1;
  return p;
}

// ---------------------------------------------------------------------------
// Basis generation

std::vector<CutBinomial> generate_gb(const PartitionRing& ring) {
  const int n = ring.n();
  if (n < 4) throw std::invalid_argument("generate_gb: n must be >= 4");
  const VertexSet outer = ring.outer_vertices();
  const VertexSet two = vertex_bit(2);

  std::vector<VertexSet> subsets;  // all subsets of {3..n}
  for (VertexSet s = outer;; s = (s - 1) & outer) {
    subsets.push_back(s);
    if (s == 0) break;
  }
  std::sort(subsets.begin(), subsets.end());

  auto binomial = [&](VertexSet l1, VertexSet l2, VertexSet t1, VertexSet t2, int family) {
    return CutBinomial{PartitionMonomial{ring.id_of(l1), ring.id_of(l2)},
                       PartitionMonomial{ring.id_of(t1), ring.id_of(t2)}, family};
  };

  std::vector<CutBinomial> fam1, fam2, fam3;
  for (VertexSet a : subsets) {
    const VertexSet b = outer & ~a;
    // q_{{1}uA|{2}uB} q_{{1}uB|{2}uA}; the sides without 1 are {2}uB, {2}uA.
    if (a < b) fam1.push_back(binomial(two | b, two | a, 0, outer, 1));
  }
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      const VertexSet b = subsets[i], d = subsets[j];
      if (!incomparable(b, d)) continue;
      // Family (3): 1, 2 on the A, C side; B, D are the sides without 1.
      fam3.push_back(binomial(b, d, b | d, b & d, 3));
      // Family (2): sides without 1 are {2}uB', {2}uD'. A lead equal to a
      // family (1) lead is left to family (1).
      if ((b & d) == 0 && (b | d) == outer) continue;
      fam2.push_back(binomial(two | b, two | d, two | b | d, two | (b & d), 2));
    }

  std::vector<CutBinomial> gb;
  for (auto* fam : {&fam1, &fam2, &fam3}) {
    std::sort(fam->begin(), fam->end(), [](const CutBinomial& x, const CutBinomial& y) {
      return monomial_order_cmp(x.lead, y.lead) > 0;
    });
    gb.insert(gb.end(), fam->begin(), fam->end());
  }
  for (const auto& g : gb)
    if (monomial_order_cmp(g.lead, g.trail) <= 0)
      throw VerificationError("generate_gb: lead not greater than trail in " + to_string(ring, g));
  return gb;
}

// ---------------------------------------------------------------------------
// Reduction

BinomialReducer::BinomialReducer(std::span<const CutBinomial> gb, std::size_t variable_count)
    : gb_(gb), by_smallest_var_(variable_count) {
  for (std::size_t i = 0; i < gb.size(); ++i) {
    if (gb[i].lead.is_unit()) throw std::invalid_argument("BinomialReducer: unit lead");
    by_smallest_var_.at(gb[i].lead.variables().front()).push_back(static_cast<std::uint32_t>(i));
  }
}

long BinomialReducer::find_divisor(const PartitionMonomial& m) const {
  auto vars = m.variables();
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (k && vars[k] == vars[k - 1]) continue;
    for (auto idx : by_smallest_var_[vars[k]])
      if (gb_[idx].lead.divides(m)) return static_cast<long>(idx);
  }
  return -1;
}

QPolynomial BinomialReducer::reduce(QPolynomial p) const {
  for (auto it = p.begin(); it != p.end();) {
    const long idx = find_divisor(it->first);
    if (idx < 0) {
      ++it;
      continue;
    }
    const auto& g = gb_[static_cast<std::size_t>(idx)];
    const std::int64_t c = it->second;
    const PartitionMonomial term = it->first;
    p.erase(it);
    auto [pos, inserted] = p.try_emplace(term.quotient(g.lead) * g.trail, 0);
    pos->second += c;
    if (pos->second == 0) p.erase(pos);
    // Terms above the rewritten one were already irreducible and the
    // replacement is smaller, so resume just below it.
    it = p.upper_bound(term);
  }
  return p;
}

QPolynomial reduce(QPolynomial p, std::span<const CutBinomial> gb, std::size_t variable_count) {
  return BinomialReducer(gb, variable_count).reduce(std::move(p));
}

QPolynomial s_polynomial(const CutBinomial& f, const CutBinomial& g) {
  const PartitionMonomial l = f.lead.lcm(g.lead);
  QPolynomial s;
  s[l.quotient(f.lead) * f.trail] -= 1;
  s[l.quotient(g.lead) * g.trail] += 1;
  std::erase_if(s, [](const auto& kv) { return kv.second == 0; });
  return s;
}

// ---------------------------------------------------------------------------
// Buchberger criterion

BuchbergerCertificate buchberger_check(const PartitionRing& ring, std::span<const CutBinomial> gb, Exec exec) {
  const BinomialReducer reducer(gb, ring.variable_count());
  BuchbergerCertificate cert;
  cert.n = ring.n();
  cert.binomials = gb.size();
  cert.pairs_total = gb.size() * (gb.size() - (gb.empty() ? 0 : 1)) / 2;

  auto check_row = [&](std::size_t i, std::size_t& skipped, std::size_t& reduced,
                       std::vector<SPairFailure>& failures) {
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      if (gb[i].lead.coprime(gb[j].lead)) {
        ++skipped;
        continue;
      }
      ++reduced;
      QPolynomial r = reducer.reduce(s_polynomial(gb[i], gb[j]));
      if (!r.empty()) failures.push_back({i, j, std::move(r)});
    }
  };

  const auto rows = static_cast<std::int64_t>(gb.size());
  if (exec == Exec::serial) {
    for (std::int64_t i = 0; i < rows; ++i)
      check_row(static_cast<std::size_t>(i), cert.pairs_coprime_skipped, cert.pairs_reduced, cert.failures);
  } else {
    std::size_t skipped = 0, reduced = 0;
#pragma omp parallel reduction(+ : skipped, reduced)
    {
      std::vector<SPairFailure> local;
#pragma omp for schedule(dynamic, 1) nowait
      for (std::int64_t i = 0; i < rows; ++i) check_row(static_cast<std::size_t>(i), skipped, reduced, local);
#pragma omp critical
      cert.failures.insert(cert.failures.end(), std::make_move_iterator(local.begin()),
                           std::make_move_iterator(local.end()));
    }
    cert.pairs_coprime_skipped = skipped;
    cert.pairs_reduced = reduced;
  }
  std::sort(cert.failures.begin(), cert.failures.end(), [](const SPairFailure& a, const SPairFailure& b) {
    return std::pair(a.first, a.second) < std::pair(b.first, b.second);
  });
  return cert;
}

BuchbergerCertificate buchberger_check(int n, Exec exec) {
  if (n < 4 || n > 6) throw CostGuardError("buchberger_check: n must be in [4, 6], got " + std::to_string(n));
  const PartitionRing ring(n);
  const auto gb = generate_gb(ring);
  return buchberger_check(ring, gb, exec);
}

bool is_standard(const PartitionMonomial& m, std::span<const CutBinomial> gb) {
  return std::none_of(gb.begin(), gb.end(), [&](const CutBinomial& g) { return g.lead.divides(m); });
}

// ---------------------------------------------------------------------------
// Standard monomials

namespace {

struct Bits {
  std::uint64_t w[2] = {0, 0};

  void set(unsigned i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(unsigned i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  bool any() const { return w[0] | w[1]; }
  Bits operator&(const Bits& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
  Bits operator|(const Bits& o) const { return {{w[0] | o.w[0], w[1] | o.w[1]}}; }
  Bits operator~() const { return {{~w[0], ~w[1]}}; }
  /// Pops the lowest set bit.
  unsigned pop() {
    if (w[0]) {
      unsigned i = static_cast<unsigned>(std::countr_zero(w[0]));
      w[0] &= w[0] - 1;
      return i;
    }
    unsigned i = 64 + static_cast<unsigned>(std::countr_zero(w[1]));
    w[1] &= w[1] - 1;
    return i;
  }
};

/// conflict[v]: variables w such that q_v q_w is a lead. Requires every lead
/// to be a product of two distinct variables.
std::vector<Bits> conflict_sets(const PartitionRing& ring, std::span<const CutBinomial> gb) {
  if (ring.variable_count() > 128) throw CostGuardError("standard monomial search supports at most 128 variables");
  std::vector<Bits> conflict(ring.variable_count());
  for (const auto& g : gb) {
    auto v = g.lead.variables();
    if (v.size() != 2 || v[0] == v[1])
      throw std::logic_error("standard monomial search expects squarefree quadratic leads");
    conflict[v[0]].set(v[1]);
    conflict[v[1]].set(v[0]);
  }
  return conflict;
}

Bits above(unsigned v, std::size_t count) {
  Bits b;
  for (unsigned w = v + 1; w < count; ++w) b.set(w);
  return b;
}

SquarefreeStandard split_parts(const PartitionRing& ring, const std::vector<VarId>& vars) {
  std::vector<VarId> together, split;
  for (VarId v : vars)
    (ring.variable(v).cls == VariableClass::together ? together : split).push_back(v);
  return {PartitionMonomial(vars), PartitionMonomial(std::move(together)), PartitionMonomial(std::move(split))};
}

/// Chain sets of the factor's variables, sorted by size, and whether they
/// form a strict chain.
bool strict_chain(const PartitionRing& ring, const PartitionMonomial& m, std::vector<VertexSet>& sets) {
  sets.clear();
  for (VarId v : m.variables()) sets.push_back(ring.variable(v).chain_set());
  std::sort(sets.begin(), sets.end(),
            [](VertexSet a, VertexSet b) { return std::popcount(a) < std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b); });
  for (std::size_t i = 1; i < sets.size(); ++i)
    if (sets[i - 1] == sets[i] || (sets[i - 1] & ~sets[i])) return false;
  return true;
}

void check_guard(int n) {
  if (n < 4) throw std::invalid_argument("squarefree standard monomials: n must be >= 4");
  if (n > kMaxEnumerationN)
    throw CostGuardError("squarefree standard monomials: n must be <= " + std::to_string(kMaxEnumerationN));
}

}  // namespace

bool satisfies_chain_characterization(const PartitionRing& ring, const SquarefreeStandard& s) {
  std::vector<VertexSet> sets;
  if (!strict_chain(ring, s.together_part, sets)) return false;
  if (!strict_chain(ring, s.split_part, sets)) return false;
  return sets.empty() || !(sets.front() == 0 && sets.back() == ring.outer_vertices());
}

std::vector<SquarefreeStandard> enumerate_squarefree_standard(int n, int k) {
  check_guard(n);
  if (k < 0 || k > 2 * n - 3) throw std::invalid_argument("enumerate_squarefree_standard: k out of [0, 2n-3]");
  const PartitionRing ring(n);
  const auto gb = generate_gb(ring);
  const auto conflict = conflict_sets(ring, gb);
  const std::size_t count = ring.variable_count();

  std::vector<SquarefreeStandard> out;
  std::vector<VarId> current;
  auto visit = [&](auto&& self, Bits candidates) -> void {
    if (current.size() == static_cast<std::size_t>(k)) {
      out.push_back(split_parts(ring, current));
      if (!satisfies_chain_characterization(ring, out.back()))
        throw VerificationError("standard monomial violates the chain characterization: " +
                                to_string(ring, out.back().monomial));
      return;
    }
    while (candidates.any()) {
      const unsigned v = candidates.pop();
      current.push_back(v);
      self(self, candidates & ~conflict[v]);
      current.pop_back();
    }
  };
  Bits all;
  for (unsigned v = 0; v < count; ++v) all.set(v);
  visit(visit, all);
  return out;
}

SquarefreeCensus squarefree_census(int n, Exec exec) {
  check_guard(n);
  const PartitionRing ring(n);
  const auto gb = generate_gb(ring);
  const auto conflict = conflict_sets(ring, gb);
  const std::size_t count = ring.variable_count();
  const std::size_t degrees = static_cast<std::size_t>(2 * n - 2);
  const VertexSet outer = ring.outer_vertices();

  auto empty_census = [&] {
    SquarefreeCensus c;
    c.n = n;
    c.total.assign(degrees, 0);
    c.together.assign(degrees, 0);
    c.split.assign(degrees, 0);
    c.endpoint_cells.assign(degrees, {0, 0, 0, 0});
    return c;
  };

  auto record = [&](SquarefreeCensus& c, const std::vector<VarId>& vars) {
    const std::size_t k = vars.size();
    if (k >= degrees) {
      // A standard squarefree monomial above degree 2n-3 would contradict
      // the polytope dimension; count it as a violation.
      ++c.chain_violations;
      return;
    }
    ++c.total[k];
    SquarefreeStandard s = split_parts(ring, vars);
    if (!satisfies_chain_characterization(ring, s)) ++c.chain_violations;
    if (s.split_part.is_unit()) {
      ++c.together[k];
      // The unit monomial lands in cell 0.
      int cell = 0;
      if (k > 0) {
        std::vector<VertexSet> sets;
        strict_chain(ring, s.together_part, sets);
        cell = 2 * (sets.front() == 0) + (sets.back() == outer);
      }
      ++c.endpoint_cells[k][static_cast<std::size_t>(cell)];
    }
    if (s.together_part.is_unit()) ++c.split[k];
  };

  auto search_from = [&](unsigned root, SquarefreeCensus& c) {
    std::vector<VarId> current{root};
    auto visit = [&](auto&& self, Bits candidates) -> void {
      record(c, current);
      while (candidates.any()) {
        const unsigned v = candidates.pop();
        current.push_back(v);
        self(self, candidates & ~conflict[v]);
        current.pop_back();
      }
    };
    visit(visit, above(root, count) & ~conflict[root]);
  };

  SquarefreeCensus census = empty_census();
  record(census, {});
  const auto roots = static_cast<std::int64_t>(count);
  if (exec == Exec::serial) {
    for (std::int64_t r = 0; r < roots; ++r) search_from(static_cast<unsigned>(r), census);
    return census;
  }
#pragma omp parallel
  {
    SquarefreeCensus local = empty_census();
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t r = 0; r < roots; ++r) search_from(static_cast<unsigned>(r), local);
#pragma omp critical
    {
      for (std::size_t k = 0; k < degrees; ++k) {
        census.total[k] += local.total[k];
        census.together[k] += local.together[k];
        census.split[k] += local.split[k];
        for (std::size_t c = 0; c < 4; ++c) census.endpoint_cells[k][c] += local.endpoint_cells[k][c];
      }
      census.chain_violations += local.chain_violations;
    }
  }
  return census;
}

namespace {

// k! S(n-2, k) with k possibly negative (then 0).
BigInt ordered_partitions(int n, int k) {
  if (k < 0) return 0;
  return factorial(static_cast<unsigned>(k)) * stirling2(static_cast<unsigned>(n - 2), static_cast<unsigned>(k));
}

void check_formula_args(int n, int k) {
  if (n < 2) throw std::invalid_argument("counting formulas need n >= 2");
  if (k < 0) throw std::invalid_argument("counting formulas need k >= 0");
}

}  // namespace

BigInt endpoint_cell(int n, int k, bool a1_empty, bool ak_full) {
  check_formula_args(n, k);
  if (a1_empty && ak_full) return ordered_partitions(n, k - 1);
  if (a1_empty || ak_full) return ordered_partitions(n, k);
  return ordered_partitions(n, k + 1);
}

BigInt count_type1(int n, int k) {
  check_formula_args(n, k);
  return ordered_partitions(n, k - 1) + 2 * ordered_partitions(n, k) + ordered_partitions(n, k + 1);
}

BigInt count_type2(int n, int k) {
  check_formula_args(n, k);
  return 2 * ordered_partitions(n, k) + ordered_partitions(n, k + 1);
}

std::vector<BigInt> f_vector(int n) {
  if (n < 4) throw std::invalid_argument("f_vector: n must be >= 4");
  std::vector<BigInt> f;
  for (int k = 0; k <= 2 * n - 3; ++k) {
    BigInt sum = 0;
    for (int a = 0; a <= k; ++a) sum += count_type1(n, a) * count_type2(n, k - a);
    f.push_back(sum);
  }
  return f;
}

std::uint64_t count_standard_by_degree(int n, int m) {
  if (n < 4 || n > 6) throw CostGuardError("count_standard_by_degree: n must be in [4, 6]");
  if (m < 0 || m > 5) throw CostGuardError("count_standard_by_degree: m must be in [0, 5]");
  const PartitionRing ring(n);
  const auto gb = generate_gb(ring);
  const auto conflict = conflict_sets(ring, gb);
  const auto count = static_cast<unsigned>(ring.variable_count());

  // Monomials as nondecreasing variable sequences; a monomial is standard
  // iff no two of its (distinct) variables form a lead.
  auto visit = [&](auto&& self, int remaining, unsigned start, Bits forbidden) -> std::uint64_t {
    if (remaining == 0) return 1;
    std::uint64_t total = 0;
    for (unsigned v = start; v < count; ++v)
      if (!forbidden.test(v)) total += self(self, remaining - 1, v, forbidden | conflict[v]);
    return total;
  };
  return visit(visit, m, 0, Bits{});
}

// ---------------------------------------------------------------------------
// Export

namespace {

std::string brace_list(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : vertex_list(s)) {
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string variable_name(const PartitionRing& ring, VarId v) {
  const Partition& p = ring.variable(v).partition;
  std::string a = brace_list(p.a_side()), b = brace_list(p.b_side());
  return "q" + a.substr(0, a.size() - 1) + "|" + b.substr(1);
}

nlohmann::json monomial_json(const PartitionRing& ring, const PartitionMonomial& m) {
  nlohmann::json j = nlohmann::json::array();
  for (VarId v : m.variables()) j.push_back(ring.variable(v).encoding());
  return j;
}

}  // namespace

std::string to_string(const PartitionRing& ring, const PartitionMonomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (auto [v, e] : m.exponents()) {
    if (!out.empty()) out += '*';
    out += variable_name(ring, v);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string to_string(const PartitionRing& ring, const CutBinomial& b) {
  return to_string(ring, b.lead) + " - " + to_string(ring, b.trail);
}

std::string gb_json(const PartitionRing& ring, std::span<const CutBinomial> gb) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& g : gb) {
    nlohmann::ordered_json j;
    j["family"] = g.family;
    j["lead"] = monomial_json(ring, g.lead);
    j["trail"] = monomial_json(ring, g.trail);
    out.push_back(std::move(j));
  }
  return out.dump();
}

void write_standard_csv(std::ostream& out, const PartitionRing& ring,
                        std::span<const SquarefreeStandard> monomials) {
  out << "degree,together_degree,split_degree,variables\r\n";
  for (const auto& s : monomials) {
    std::string vars;
    for (VarId v : s.monomial.variables()) {
      if (!vars.empty()) vars += ' ';
      vars += brace_list(ring.variable(v).partition.a_side());
    }
    out << s.monomial.degree() << ',' << s.together_part.degree() << ',' << s.split_part.degree() << ",\""
        << vars << "\"\r\n";
  }
}

}  // namespace cutpoly
