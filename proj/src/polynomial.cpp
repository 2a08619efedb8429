#include "cutpoly/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cutpoly {

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial IntPolynomial::monomial(BigInt c, unsigned exponent) {
  std::vector<BigInt> v(exponent + 1);
  v[exponent] = std::move(c);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(long a, long b) { return IntPolynomial{a, b}; }

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial r{1};
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::compose_shift(long shift) const {
  // Horner in the ring: acc = acc * (x + shift) + c.
  const IntPolynomial step = linear(shift, 1);
  IntPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= step;
    acc += constant(*it);
  }
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::string IntPolynomial::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : coeffs_) {
    if (c.fits_slong_p())
      j.push_back(c.get_si());
    else
      j.push_back(c.get_str());
  }
  return j.dump();
}

IntPolynomial IntPolynomial::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<BigInt> v;
  for (const auto& x : j) {
    if (x.is_number_integer())
      v.emplace_back(x.get<long>());
    else if (x.is_string())
      v.emplace_back(x.get<std::string>());
    else
      throw std::invalid_argument("polynomial JSON entries must be integers");
  }
  return IntPolynomial(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

BigInt stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k == 0) return n == 0 ? 1 : 0;
  BigInt sum = 0;
  for (unsigned j = 0; j <= k; ++j) {
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), j, n);
    term *= binomial(k, j);
    if ((k - j) % 2) sum -= term;
    else sum += term;
  }
  // The alternating sum is k! S(n,k); the division is exact.
  BigInt kf = factorial(k);
  mpz_divexact(sum.get_mpz_t(), sum.get_mpz_t(), kf.get_mpz_t());
  return sum;
}

IntPolynomial eulerian(unsigned n) {
  if (n == 0) throw std::invalid_argument("eulerian: n must be >= 1");
  const IntPolynomial x_minus_1 = IntPolynomial::linear(-1, 1);
  IntPolynomial sum;
  for (unsigned k = 1; k <= n; ++k)
    sum += x_minus_1.pow(n - k) * (factorial(k) * stirling2(n, k));
  return sum;
}

IntPolynomial f_to_h(std::span<const BigInt> f, unsigned d) {
  if (f.empty() || f[0] != 1) throw std::invalid_argument("f_to_h: f_{-1} must be 1");
  if (f.size() > d + 2) throw std::invalid_argument("f_to_h: more than d + 2 entries");
  const IntPolynomial one_minus_x = IntPolynomial::linear(1, -1);
  IntPolynomial h;
  for (unsigned i = 0; i < f.size(); ++i)
    h += IntPolynomial::monomial(f[i], i) * one_minus_x.pow(d + 1 - i);
  return h;
}

IntPolynomial hstar_closed_form_k2m(unsigned n) {
  if (n < 4) throw std::invalid_argument("hstar_closed_form_k2m: n must be >= 4");
  IntPolynomial a = eulerian(n - 2);
  return IntPolynomial::linear(1, 1) * a * a;
}

bool is_palindromic(const IntPolynomial& p) {
  const auto& c = p.coefficients();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

bool is_unimodal(const IntPolynomial& p) {
  const auto& c = p.coefficients();
  std::size_t i = 1;
  while (i < c.size() && c[i] >= c[i - 1]) ++i;
  while (i < c.size() && c[i] <= c[i - 1]) ++i;
  return i >= c.size();
}

bool satisfies_hibi_inequality(const IntPolynomial& p) {
  const BigInt h1 = p.coeff(1);
  for (int i = 1; i <= p.degree() - 1; ++i)
    if (p.coeff(static_cast<std::size_t>(i)) < h1) return false;
  return true;
}

}  // namespace cutpoly
