#pragma once

// Numbers of the form 2^l * v^r kept as their exponents, so that values such
// as 6^(65536!) can be reasoned about without being built.

#include <cstdint>
#include <optional>
#include <string>

#include "powg/numtheory.hpp"

namespace powg {

struct SymbolicPow {
  Natural v;
  Natural l;
  Natural r;
  /// Set when l (resp. r) is known to equal m!; valuations then go through
  /// Legendre's formula.
  std::optional<std::uint64_t> l_factorial_of;
  std::optional<std::uint64_t> r_factorial_of;

  /// Validates v odd, >= 3, not a perfect power, and r >= 1.
  static SymbolicPow make(Natural v, Natural l, Natural r);
  /// Decomposes u; throws PreconditionError for powers of two.
  static SymbolicPow from_natural(const Natural& u);

  std::uint64_t nu_r(const Natural& p) const;
  bool r_divisible_by(const Natural& d) const;
  /// Smallest d >= 2 not dividing r.
  Natural least_nondivisor_of_r() const;

  /// ceil(log2 u) = l + ceil(r log2 v), exact.
  Natural ceil_log2_u() const;

  /// u itself when it has at most max_bits bits.
  std::optional<Natural> materialize(std::uint64_t max_bits = 1u << 20) const;

  std::string to_string() const;
};

}  // namespace powg
