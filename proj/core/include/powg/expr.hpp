#pragma once

// Integer expressions for inputs too large to type: decimal literals,
// fact(n), pow(a, b), products with '*', and parentheses.

#include <cstdint>
#include <optional>
#include <string>

#include "powg/numtheory.hpp"

namespace powg {

struct ParsedExpr {
  Natural value;
  /// m when the whole expression is fact(m).
  std::optional<std::uint64_t> factorial_of;
};

/// Throws PreconditionError on a syntax error or when the upper size estimate
/// of an intermediate value (bits(a) * b for pow, m * bits(m) for fact)
/// exceeds max_bits.
ParsedExpr parse_expr(const std::string& text, std::uint64_t max_bits = 1u << 26);

}  // namespace powg
