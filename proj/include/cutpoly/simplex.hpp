#pragma once

#include <span>
#include <vector>

#include "cutpoly/numeric.hpp"

namespace cutpoly {

/// Phase-1 feasibility of { x >= 0 : A x = b } over the rationals, where A
/// is given by columns of length b.size(). Exact arithmetic, Bland's rule.
/// Throws std::invalid_argument on ragged input.
bool nonnegative_feasible(std::span<const IntVector> columns, std::span<const std::int64_t> rhs);

}  // namespace cutpoly
