#pragma once

// Sound comparisons involving logarithms. Each routine brackets the real
// quantity with outward-rounded interval arithmetic and raises the working
// precision until the bracket decides the comparison; the answers are exact.

#include <gmpxx.h>

#include <cstdint>
#include <span>

#include "powg/numtheory.hpp"

namespace powg::dlog {

/// ceil(k * log2 v) for k >= 0, v >= 1.
Natural ceil_mul_log2(const Natural& k, const Natural& v);

/// Sign of lhs - k * log2 v.
int compare_with_mul_log2(const Natural& lhs, const Natural& k, const Natural& v);

/// Sign of ln(n) - q for n >= 1.
int compare_ln(const Natural& n, const mpq_class& q);

/// Sign of log_{b_m}( ... log_{b_1}(x) ... ) - q, the logs applied innermost
/// first, using the plain (unclamped) real logarithm. Requires every
/// intermediate value to exceed 1 so the outer log stays positive.
int compare_nested_log(const Natural& x, std::span<const unsigned> bases_inner_first,
                       const mpq_class& q);

/// Floating approximation, for display only.
double approx_log2(const Natural& x);

}  // namespace powg::dlog
