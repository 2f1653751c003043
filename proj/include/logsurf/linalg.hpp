#pragma once

#include <vector>

#include "logsurf/rational.hpp"

namespace logsurf {

using Matrix = std::vector<std::vector<Rational>>;

// Signs of the leading principal minors det(M_1), ..., det(M_n), computed by
// fraction-free (Bareiss) elimination after clearing row denominators.
// Stops early when a minor vanishes: the returned vector then ends with a 0
// and may be shorter than n. No pivoting, so the minor interpretation of the
// pivots stays intact.
std::vector<int> leading_minor_signs(const Matrix& m);

// Exact solution of m * x = rhs for square nonsingular m, by fraction-free
// elimination with row pivoting and exact back substitution. Throws
// PreconditionError when m is singular.
std::vector<Rational> solve_linear(const Matrix& m, const std::vector<Rational>& rhs);

} // namespace logsurf
