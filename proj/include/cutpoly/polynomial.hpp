#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cutpoly/numeric.hpp"

namespace cutpoly {

/// Dense univariate polynomial with big-integer coefficients.
/// coeff(i) is the coefficient of x^i; no trailing zeros are stored, so the
/// zero polynomial has an empty coefficient list and degree -1.
class IntPolynomial {
public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial monomial(BigInt c, unsigned exponent);
  static IntPolynomial constant(BigInt c) { return monomial(std::move(c), 0); }
  /// a + b*x
  static IntPolynomial linear(long a, long b);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  IntPolynomial& operator*=(const BigInt& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  IntPolynomial pow(unsigned e) const;
  BigInt evaluate(const BigInt& x) const;
  /// p(x + shift); with shift = -1 this is the substitution X = x - 1.
  IntPolynomial compose_shift(long shift) const;

  /// Descending-degree form, e.g. "x^5 + 9x^4 + 26x^3 + 26x^2 + 9x + 1".
  std::string to_string() const;
  /// Coefficient array, constant term first.
  std::string to_json() const;
  static IntPolynomial from_json(const std::string& text);

private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

/// Stirling number of the second kind by the alternating sum
/// (1/k!) * sum_{j=0..k} (-1)^(k-j) C(k,j) j^n. S(0,0) = 1 and S(n,0) = 0
/// for n > 0.
BigInt stirling2(unsigned n, unsigned k);

/// Eulerian polynomial A_n(x) = sum_{k=1..n} k! S(n,k) (x-1)^(n-k).
/// Throws std::invalid_argument for n = 0.
IntPolynomial eulerian(unsigned n);

/// h(x) = sum_{i=0..d+1} f_{i-1} x^i (1-x)^(d+1-i), with f[0] = f_{-1}.
/// Throws std::invalid_argument unless f[0] == 1 and f.size() <= d + 2.
IntPolynomial f_to_h(std::span<const BigInt> f, unsigned d);

/// (x + 1) * A_{n-2}(x)^2. Throws std::invalid_argument for n < 4.
IntPolynomial hstar_closed_form_k2m(unsigned n);

bool is_palindromic(const IntPolynomial& p);
/// Coefficients weakly increase then weakly decrease.
bool is_unimodal(const IntPolynomial& p);
/// h_i >= h_1 for 1 <= i <= deg - 1.
bool satisfies_hibi_inequality(const IntPolynomial& p);

}  // namespace cutpoly
