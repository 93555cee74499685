#include "powg/directed_log.hpp"

#include <mpfr.h>

#include <stdexcept>
#include <vector>

#include "powg/error.hpp"

namespace powg::dlog {
namespace {

constexpr mpfr_prec_t kMaxPrecision = mpfr_prec_t{1} << 24;

// RAII handle for an mpfr_t.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// [lo, hi] bracket of k * log2 v.
struct Bracket {
  Real lo;
  Real hi;
  explicit Bracket(mpfr_prec_t prec) : lo(prec), hi(prec) {}
};

void mul_log2_bracket(Bracket& b, const Natural& k, const Natural& v) {
  mpfr_set_z(b.lo.get(), v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(b.hi.get(), v.get_mpz_t(), MPFR_RNDU);
  mpfr_log2(b.lo.get(), b.lo.get(), MPFR_RNDD);
  mpfr_log2(b.hi.get(), b.hi.get(), MPFR_RNDU);
  mpfr_mul_z(b.lo.get(), b.lo.get(), k.get_mpz_t(), MPFR_RNDD);
  mpfr_mul_z(b.hi.get(), b.hi.get(), k.get_mpz_t(), MPFR_RNDU);
}

mpfr_prec_t initial_precision(const Natural& k) {
  return static_cast<mpfr_prec_t>(nt::bit_length(k) + 96);
}

// Exact value of k*log2 v when v is a power of two.
bool exact_mul_log2(const Natural& k, const Natural& v, Natural& out) {
  if (!nt::is_oddless(v)) return false;
  out = k * static_cast<unsigned long>(nt::floor_log2(v));
  return true;
}

}  // namespace

Natural ceil_mul_log2(const Natural& k, const Natural& v) {
  if (v < 1 || k < 0) throw PreconditionError("ceil_mul_log2: need k >= 0, v >= 1");
  Natural exact;
  if (k == 0) return 0;
  if (exact_mul_log2(k, v, exact)) return exact;
  // k*log2 v is irrational here, so the bracket eventually excludes integers.
  for (mpfr_prec_t prec = initial_precision(k); prec <= kMaxPrecision; prec *= 2) {
    Bracket b(prec);
    mul_log2_bracket(b, k, v);
    Natural lo_ceil, hi_ceil;
    Real t(prec);
    mpfr_ceil(t.get(), b.lo.get());
    mpfr_get_z(lo_ceil.get_mpz_t(), t.get(), MPFR_RNDN);
    mpfr_ceil(t.get(), b.hi.get());
    mpfr_get_z(hi_ceil.get_mpz_t(), t.get(), MPFR_RNDN);
    if (lo_ceil == hi_ceil && !mpfr_integer_p(b.lo.get())) return lo_ceil;
  }
  throw std::runtime_error("ceil_mul_log2: precision limit reached");
}

int compare_with_mul_log2(const Natural& lhs, const Natural& k, const Natural& v) {
  if (v < 1 || k < 0) throw PreconditionError("compare_with_mul_log2: need k >= 0, v >= 1");
  Natural exact;
  if (k == 0 || exact_mul_log2(k, v, exact)) {
    if (k == 0) exact = 0;
    return lhs < exact ? -1 : (lhs > exact ? 1 : 0);
  }
  const auto prec0 = static_cast<mpfr_prec_t>(std::max(nt::bit_length(k), nt::bit_length(lhs)) + 96);
  for (mpfr_prec_t prec = prec0; prec <= kMaxPrecision; prec *= 2) {
    Bracket b(prec);
    mul_log2_bracket(b, k, v);
    if (mpfr_cmp_z(b.hi.get(), lhs.get_mpz_t()) < 0) return 1;
    if (mpfr_cmp_z(b.lo.get(), lhs.get_mpz_t()) > 0) return -1;
  }
  throw std::runtime_error("compare_with_mul_log2: precision limit reached");
}

int compare_ln(const Natural& n, const mpq_class& q) {
  if (n < 1) throw PreconditionError("compare_ln: n must be >= 1");
  if (n == 1) return q > 0 ? -1 : (q < 0 ? 1 : 0);
  // ln n is transcendental for n >= 2, so it never equals q.
  for (mpfr_prec_t prec = 128; prec <= kMaxPrecision; prec *= 2) {
    Real lo(prec), hi(prec);
    mpfr_set_z(lo.get(), n.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi.get(), n.get_mpz_t(), MPFR_RNDU);
    mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
    if (mpfr_cmp_q(lo.get(), q.get_mpq_t()) > 0) return 1;
    if (mpfr_cmp_q(hi.get(), q.get_mpq_t()) < 0) return -1;
  }
  throw std::runtime_error("compare_ln: precision limit reached");
}

int compare_nested_log(const Natural& x, std::span<const unsigned> bases_inner_first,
                       const mpq_class& q) {
  for (mpfr_prec_t prec = 128; prec <= kMaxPrecision; prec *= 2) {
    Real lo(prec), hi(prec), blo(prec), bhi(prec);
    mpfr_set_z(lo.get(), x.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi.get(), x.get_mpz_t(), MPFR_RNDU);
    for (const unsigned base : bases_inner_first) {
      if (mpfr_cmp_ui(lo.get(), 1) <= 0) {
        throw PreconditionError("compare_nested_log: intermediate value not above 1");
      }
      // log_b y = ln y / ln b; round the quotient outward.
      mpfr_set_ui(blo.get(), base, MPFR_RNDD);
      mpfr_set_ui(bhi.get(), base, MPFR_RNDU);
      mpfr_log(blo.get(), blo.get(), MPFR_RNDD);
      mpfr_log(bhi.get(), bhi.get(), MPFR_RNDU);
      mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
      mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
      mpfr_div(lo.get(), lo.get(), bhi.get(), MPFR_RNDD);
      mpfr_div(hi.get(), hi.get(), blo.get(), MPFR_RNDU);
    }
    if (mpfr_cmp_q(lo.get(), q.get_mpq_t()) > 0) return 1;
    if (mpfr_cmp_q(hi.get(), q.get_mpq_t()) < 0) return -1;
  }
  throw std::runtime_error("compare_nested_log: precision limit reached");
}

double approx_log2(const Natural& x) {
  if (x <= 0) throw PreconditionError("approx_log2: x must be positive");
  Real r(64);
  mpfr_set_z(r.get(), x.get_mpz_t(), MPFR_RNDN);
  mpfr_log2(r.get(), r.get(), MPFR_RNDN);
  return mpfr_get_d(r.get(), MPFR_RNDN);
}

}  // namespace powg::dlog
