#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cutpoly {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense integer vector used for lattice points and configuration columns.
using IntVector = std::vector<std::int64_t>;

/// Raised when a request would exceed a documented size limit. Limits are
/// hard errors; nothing is silently truncated.
class CostGuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when two computation routes that must agree do not, or when a
/// computed quantity violates a structural property (negative h*, ...).
class VerificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

BigInt factorial(unsigned n);
BigInt binomial(long n, long k);

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace cutpoly
