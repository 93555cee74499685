#include "powg/symbolic.hpp"

#include "powg/directed_log.hpp"
#include "powg/error.hpp"

namespace powg {

SymbolicPow SymbolicPow::make(Natural v, Natural l, Natural r) {
  if (v < 3 || mpz_even_p(v.get_mpz_t())) {
    throw PreconditionError("base v must be odd and >= 3, got " + v.get_str());
  }
  if (nt::is_perfect_power(v)) throw PreconditionError("base v must not be a perfect power");
  if (r < 1) throw PreconditionError("exponent r must be >= 1");
  if (l < 0) throw PreconditionError("exponent l must be >= 0");
  SymbolicPow s;
  s.v = std::move(v);
  s.l = std::move(l);
  s.r = std::move(r);
  return s;
}

SymbolicPow SymbolicPow::from_natural(const Natural& u) {
  const auto d = nt::power_decompose(u);
  const auto* f = std::get_if<nt::OddPowerForm>(&d);
  if (!f) throw PreconditionError(u.get_str() + " is a power of two");
  SymbolicPow s;
  s.v = f->base;
  s.l = Natural(static_cast<unsigned long>(f->two_adic));
  s.r = Natural(static_cast<unsigned long>(f->exponent));
  return s;
}

std::uint64_t SymbolicPow::nu_r(const Natural& p) const {
  if (r_factorial_of) {
    const Natural e = nt::nu_p_factorial(p, Natural(static_cast<unsigned long>(*r_factorial_of)));
    return e.get_ui();
  }
  return nt::nu_p(p, r);
}

bool SymbolicPow::r_divisible_by(const Natural& d) const {
  if (d < 1) throw PreconditionError("divisor must be >= 1");
  if (!r_factorial_of) return mpz_divisible_p(r.get_mpz_t(), d.get_mpz_t()) != 0;
  for (const auto& pp : nt::factorize(d)) {
    if (nu_r(pp.prime) < pp.exponent) return false;
  }
  return true;
}

Natural SymbolicPow::least_nondivisor_of_r() const {
  if (!r_factorial_of) return nt::least_nondivisor(r);
  Natural d = 2;
  while (r_divisible_by(d)) ++d;
  return d;
}

Natural SymbolicPow::ceil_log2_u() const { return l + dlog::ceil_mul_log2(r, v); }

std::optional<Natural> SymbolicPow::materialize(std::uint64_t max_bits) const {
  if (ceil_log2_u() > max_bits) return std::nullopt;
  Natural out;
  mpz_pow_ui(out.get_mpz_t(), v.get_mpz_t(), r.get_ui());
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), l.get_ui());
  return out;
}

std::string SymbolicPow::to_string() const {
  auto part = [](const Natural& x, const std::optional<std::uint64_t>& fact) {
    return fact ? "fact(" + std::to_string(*fact) + ")" : x.get_str();
  };
  return "2^" + part(l, l_factorial_of) + " * " + v.get_str() + "^" + part(r, r_factorial_of);
}

}  // namespace powg
