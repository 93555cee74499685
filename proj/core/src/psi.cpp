#include "powg/psi.hpp"

#include <cmath>

#include "powg/directed_log.hpp"

namespace powg::nt {

int PsiValue::compare(const mpq_class& x) const { return dlog::compare_ln(lcm_, x); }

int PsiValue::compare_affine(const mpq_class& a, const mpq_class& b) const {
  const mpq_class rhs = a * mpq_class(Natural(static_cast<unsigned long>(n_))) + b;
  return compare(rhs);
}

int PsiValue::compare_ln2_multiple(std::uint64_t e) const {
  Natural pow2 = 1;
  mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), e);
  return cmp(lcm_, pow2) < 0 ? -1 : (cmp(lcm_, pow2) > 0 ? 1 : 0);
}

double PsiValue::approx() const { return dlog::approx_log2(lcm_) * std::log(2.0); }

PsiValue chebyshev_psi(std::uint64_t n) { return PsiValue(n, lcm_range(n)); }

bool psi_within_nagura_bounds(const PsiValue& psi) {
  static const mpq_class kLowerSlope(916, 1000);
  static const mpq_class kLowerShift(-2318, 1000);
  static const mpq_class kUpperSlope(1086, 1000);
  return psi.compare_affine(kLowerSlope, kLowerShift) > 0 &&
         psi.compare_affine(kUpperSlope, mpq_class(0)) < 0;
}

}  // namespace powg::nt
