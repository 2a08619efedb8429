#include "cutpoly/lattice.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cutpoly {

namespace {

using BigColumn = std::vector<BigInt>;

// col_a -= q * col_b
void axpy(BigColumn& a, const BigInt& q, const BigColumn& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= q * b[i];
}

bool is_zero(const BigColumn& c) {
  return std::all_of(c.begin(), c.end(), [](const BigInt& x) { return sgn(x) == 0; });
}

template <class T>
bool contains_impl(const LatticeBasis& b, std::span<const T> v) {
  if (v.size() != b.dimension()) throw std::invalid_argument("lattice_contains: dimension mismatch");
  BigColumn residual(v.begin(), v.end());
  std::size_t row = 0;
  for (std::size_t j = 0; j < b.rank(); ++j) {
    const std::size_t p = b.pivot_row(j);
    for (; row < p; ++row)
      if (sgn(residual[row]) != 0) return false;
    const auto& col = b.columns()[j];
    if (!mpz_divisible_p(residual[p].get_mpz_t(), col[p].get_mpz_t())) return false;
    BigInt q = residual[p] / col[p];
    if (sgn(q) != 0)
      for (std::size_t i = p; i < residual.size(); ++i) residual[i] -= q * col[i];
    row = p + 1;
  }
  for (; row < residual.size(); ++row)
    if (sgn(residual[row]) != 0) return false;
  return true;
}

}  // namespace

LatticeBasis::LatticeBasis(std::span<const IntVector> columns, std::size_t dimension)
    : dimension_(dimension) {
  std::vector<BigColumn> work;
  work.reserve(columns.size());
  for (const auto& c : columns) {
    if (c.size() != dimension) throw std::invalid_argument("LatticeBasis: ragged columns");
    BigColumn bc(c.begin(), c.end());
    if (!is_zero(bc)) work.push_back(std::move(bc));
  }

  std::size_t next = 0;  // first column not yet holding a pivot
  for (std::size_t row = 0; row < dimension && next < work.size(); ++row) {
    // Euclid on row `row` across columns next..end until one nonzero remains.
    for (;;) {
      std::size_t best = work.size();
      for (std::size_t j = next; j < work.size(); ++j) {
        if (sgn(work[j][row]) == 0) continue;
        if (best == work.size() || mpz_cmpabs(work[j][row].get_mpz_t(), work[best][row].get_mpz_t()) < 0) best = j;
      }
      if (best == work.size()) break;
      std::swap(work[next], work[best]);
      bool others = false;
      for (std::size_t j = next + 1; j < work.size(); ++j) {
        if (sgn(work[j][row]) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), work[j][row].get_mpz_t(), work[next][row].get_mpz_t());
        axpy(work[j], q, work[next]);
        if (sgn(work[j][row]) != 0) others = true;
      }
      if (!others) break;
    }
    if (next < work.size() && sgn(work[next][row]) != 0) {
      if (sgn(work[next][row]) < 0)
        for (auto& x : work[next]) x = -x;
      const BigInt& pivot = work[next][row];
      for (std::size_t k = 0; k < next; ++k) {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), work[k][row].get_mpz_t(), pivot.get_mpz_t());
        if (sgn(q) != 0) axpy(work[k], q, work[next]);
      }
      pivots_.push_back(row);
      ++next;
    }
    // Drop columns that became zero.
    work.erase(std::remove_if(work.begin() + static_cast<std::ptrdiff_t>(next), work.end(), is_zero),
               work.end());
  }
  work.resize(next);
  basis_ = std::move(work);
}

bool LatticeBasis::contains(std::span<const std::int64_t> v) const {
  return contains_impl<std::int64_t>(*this, v);
}

bool LatticeBasis::contains(std::span<const BigInt> v) const { return contains_impl<BigInt>(*this, v); }

LatticeBasis lattice_basis(const CutConfiguration& cfg) {
  return LatticeBasis(cfg.columns(), cfg.rows());
}

std::size_t rational_rank(std::span<const IntVector> columns, std::size_t dimension) {
  // Row-reduce the transpose: each column becomes a row.
  std::vector<std::vector<Rational>> m;
  for (const auto& c : columns) {
    if (c.size() != dimension) throw std::invalid_argument("rational_rank: ragged columns");
    m.emplace_back(c.begin(), c.end());
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dimension && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && sgn(m[piv][col]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col] / m[rank][col];
      for (std::size_t k = col; k < dimension; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

int polytope_dimension(const CutConfiguration& cfg) {
  return static_cast<int>(rational_rank(cfg.columns(), cfg.rows())) - 1;
}

std::vector<IntVector> read_matrix_rows(std::istream& in) {
  std::vector<IntVector> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    IntVector row;
    std::int64_t x;
    while (ls >> x) row.push_back(x);
    if (!ls.eof()) throw std::invalid_argument("matrix line " + std::to_string(lineno) + ": not an integer");
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::invalid_argument("matrix line " + std::to_string(lineno) + ": ragged row");
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_matrix_rows(std::ostream& out, const std::vector<IntVector>& rows) {
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i];
    out << '\n';
  }
}

std::string matrix_json(const std::vector<IntVector>& rows) { return nlohmann::json(rows).dump(); }

std::vector<IntVector> matrix_from_json(const std::string& text) {
  auto rows = nlohmann::json::parse(text).get<std::vector<IntVector>>();
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw std::invalid_argument("matrix_from_json: ragged rows");
  return rows;
}

std::vector<IntVector> transpose(const std::vector<IntVector>& m, std::size_t inner) {
  std::vector<IntVector> t(inner, IntVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < inner; ++j) t[j][i] = m[i].at(j);
  return t;
}

std::string basis_json(const LatticeBasis& b) {
  nlohmann::json cols = nlohmann::json::array();
  for (const auto& c : b.columns()) {
    nlohmann::json col = nlohmann::json::array();
    for (const auto& x : c) {
      if (x.fits_slong_p())
        col.push_back(x.get_si());
      else
        col.push_back(x.get_str());
    }
    cols.push_back(std::move(col));
  }
  std::vector<std::size_t> pivots;
  for (std::size_t j = 0; j < b.rank(); ++j) pivots.push_back(b.pivot_row(j));
  nlohmann::ordered_json j;
  j["convention"] = LatticeBasis::kConvention;
  j["dimension"] = b.dimension();
  j["rank"] = b.rank();
  j["pivot_rows"] = pivots;
  j["columns"] = cols;
  return j.dump();
}

}  // namespace cutpoly
