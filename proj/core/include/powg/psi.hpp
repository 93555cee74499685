#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "powg/numtheory.hpp"

namespace powg::nt {

/// Chebyshev's psi(n) = ln lcm{1..n}, held exactly through L(n). Comparisons
/// against rationals and multiples of ln 2 are decided exactly.
class PsiValue {
 public:
  PsiValue(std::uint64_t n, Natural lcm) : n_(n), lcm_(std::move(lcm)) {}

  std::uint64_t n() const { return n_; }
  const Natural& lcm() const { return lcm_; }

  /// Sign of psi(n) - x.
  int compare(const mpq_class& x) const;

  /// Sign of psi(n) - (a*n + b).
  int compare_affine(const mpq_class& a, const mpq_class& b) const;

  /// Sign of psi(n) - e*ln 2, i.e. of L(n) - 2^e; pure integer comparison.
  int compare_ln2_multiple(std::uint64_t e) const;

  double approx() const;

 private:
  std::uint64_t n_;
  Natural lcm_;
};

PsiValue chebyshev_psi(std::uint64_t n);

/// 0.916 n - 2.318 < psi(n) < 1.086 n.
bool psi_within_nagura_bounds(const PsiValue& psi);

}  // namespace powg::nt
