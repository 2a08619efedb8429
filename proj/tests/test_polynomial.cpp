#include "doctest.h"

#include <cutpoly/grobner.hpp>
#include <cutpoly/polynomial.hpp>

#include "oracles.hpp"

#include <random>

using namespace cutpoly;

namespace {

IntPolynomial from_counts(const std::vector<std::uint64_t>& c) {
  std::vector<BigInt> v;
  for (auto x : c) v.emplace_back(static_cast<unsigned long>(x));
  return IntPolynomial(v);
}

IntPolynomial random_poly(std::mt19937& rng) {
  int deg = std::uniform_int_distribution<int>(-1, 6)(rng);
  std::vector<BigInt> c;
  for (int i = 0; i <= deg; ++i) c.emplace_back(std::uniform_int_distribution<long>(-9, 9)(rng));
  return IntPolynomial(c);
}

}  // namespace

TEST_CASE("arithmetic") {
  const IntPolynomial one_plus_x{1, 1};
  CHECK(one_plus_x * one_plus_x == IntPolynomial{1, 2, 1});
  CHECK(one_plus_x - one_plus_x == IntPolynomial{});
  CHECK((IntPolynomial{1, 2, 3} - IntPolynomial{0, 0, 3}).degree() == 1);
  CHECK(IntPolynomial{}.is_zero());
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK(one_plus_x.pow(3) == IntPolynomial{1, 3, 3, 1});
  CHECK(IntPolynomial{2, 0, 1}.evaluate(3) == 11);
  CHECK(IntPolynomial::linear(-1, 1) == IntPolynomial{-1, 1});
  CHECK(IntPolynomial::monomial(5, 2) == IntPolynomial{0, 0, 5});
}

TEST_CASE("property: ring laws and evaluation homomorphism on random polynomials") {
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - b) + b == a);
    BigInt x = std::uniform_int_distribution<long>(-5, 5)(rng);
    CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    long s = std::uniform_int_distribution<long>(-3, 3)(rng);
    CHECK(a.compose_shift(s).evaluate(x) == a.evaluate(x + s));
    CHECK(a.compose_shift(s).compose_shift(-s) == a);
    CHECK(IntPolynomial::from_json(a.to_json()) == a);
  }
}

TEST_CASE("printing") {
  CHECK(IntPolynomial{1, 9, 26, 26, 9, 1}.to_string() == "x^5 + 9x^4 + 26x^3 + 26x^2 + 9x + 1");
  CHECK(IntPolynomial{}.to_string() == "0");
  CHECK(IntPolynomial{-1, 0, -2}.to_string() == "-2x^2 - 1");
  CHECK(IntPolynomial{0, 1}.to_string() == "x");
  CHECK(IntPolynomial{1, 3, 3, 1}.to_json() == "[1,3,3,1]");
  BigInt big("123456789012345678901234567890");
  auto p = IntPolynomial::constant(big);
  CHECK(IntPolynomial::from_json(p.to_json()) == p);
  CHECK_THROWS_AS(IntPolynomial::from_json("{}"), std::invalid_argument);
}

TEST_CASE("Stirling numbers against set-partition enumeration") {
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(3, 0) == 0);
  CHECK(stirling2(2, 5) == 0);
  for (unsigned n = 1; n <= 9; ++n) {
    CHECK(stirling2(n, 1) == 1);
    for (unsigned k = 0; k <= n + 1; ++k)
      CHECK(stirling2(n, k) == BigInt(static_cast<unsigned long>(oracle::set_partitions(int(n), int(k)))));
  }
}

TEST_CASE("Eulerian polynomials against descent enumeration") {
  CHECK(eulerian(1) == IntPolynomial{1});
  CHECK(eulerian(2) == IntPolynomial{1, 1});
  CHECK(eulerian(3) == IntPolynomial{1, 4, 1});
  for (unsigned n = 1; n <= 9; ++n) {
    auto a = eulerian(n);
    CHECK(a == from_counts(oracle::eulerian_by_descents(int(n))));
    CHECK(a.evaluate(1) == factorial(n));
    CHECK(a.degree() == int(n) - 1);
    CHECK(is_palindromic(a));
    CHECK(is_unimodal(a));
  }
  CHECK_THROWS_AS(eulerian(0), std::invalid_argument);
}

TEST_CASE("change of variable X = x - 1 re-expands A_3 correctly") {
  // A_3(x) = sum_k k! S(3,k) (x-1)^{3-k}, written as a polynomial in X.
  IntPolynomial in_x_minus_1;
  for (unsigned k = 1; k <= 3; ++k)
    in_x_minus_1 += IntPolynomial::monomial(factorial(k) * stirling2(3, k), 3 - k);
  CHECK(in_x_minus_1.compose_shift(-1) == eulerian(3));
  // Direct expansion of 1*(x-1)^2 + 6*(x-1) + 6.
  CHECK(IntPolynomial{-1, 1}.pow(2) + IntPolynomial{-1, 1} * BigInt(6) + IntPolynomial{6} == eulerian(3));
}

TEST_CASE("f to h") {
  std::vector<BigInt> point{1, 1};
  CHECK(f_to_h(point, 0) == IntPolynomial{1});
  std::vector<BigInt> segment{1, 3, 2};
  CHECK(f_to_h(segment, 1) == IntPolynomial{1, 1});
  auto f5 = f_vector(5);
  CHECK(f_to_h(f5, 6) == IntPolynomial{1, 9, 26, 26, 9, 1});
  std::vector<BigInt> bad{2, 1};
  CHECK_THROWS_AS(f_to_h(bad, 1), std::invalid_argument);
  CHECK_THROWS_AS(f_to_h(segment, 0), std::invalid_argument);
}

TEST_CASE("closed form") {
  CHECK(hstar_closed_form_k2m(5) == IntPolynomial{1, 9, 26, 26, 9, 1});
  CHECK(hstar_closed_form_k2m(4) == IntPolynomial{1, 3, 3, 1});
  CHECK(hstar_closed_form_k2m(5).evaluate(1) == 72);
  for (unsigned n = 4; n <= 12; ++n) {
    auto h = hstar_closed_form_k2m(n);
    CHECK(h.degree() == int(2 * n - 5));
    CHECK(is_palindromic(h));
    CHECK(satisfies_hibi_inequality(h));
    CHECK(h.evaluate(1) == 2 * factorial(n - 2) * factorial(n - 2));
  }
  CHECK_THROWS_AS(hstar_closed_form_k2m(3), std::invalid_argument);
}

TEST_CASE("palindromic, unimodal and Hibi predicates") {
  CHECK(is_palindromic(IntPolynomial{1, 4, 1}));
  CHECK_FALSE(is_palindromic(IntPolynomial{1, 2}));
  CHECK(is_palindromic(hstar_closed_form_k2m(6)));
  CHECK(is_unimodal(IntPolynomial{1, 3, 2, 2, 1}));
  CHECK_FALSE(is_unimodal(IntPolynomial{1, 3, 1, 3}));
  CHECK(satisfies_hibi_inequality(IntPolynomial{1, 3, 4, 3}));
  CHECK_FALSE(satisfies_hibi_inequality(IntPolynomial{1, 3, 2, 5}));
}

TEST_CASE("binomial and factorial helpers") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(2, 5) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
}
