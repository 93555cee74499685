#pragma once

// Lower bounds on c(u) for u = 2^l * v^r from the D/N/B recurrences.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "powg/numtheory.hpp"
#include "powg/symbolic.hpp"

namespace powg::certify {

struct DnbRow {
  int k = 0;
  Natural D;
  Natural N;
  Natural B;
  /// N_k * sum_{i<k} 2^(k-1-i) (D_i + 1); B_k <= Bprime_k * log2 v.
  Natural Bprime;
};

struct DnbTable {
  Natural v;
  std::vector<DnbRow> rows;  // rows[k-1] holds k

  const DnbRow& row(int k) const;
  int kmax() const { return static_cast<int>(rows.size()); }
};

inline constexpr int kMaxDnbRows = 6;

/// D_1 = 1, N_1 = 3, B_1 = 0, D_{k+1} = D_k L(N_k), N_{k+1} = N_k^2,
/// B_{k+1} = 2 N_k B_k + N_k^2 ceil(D_k log2 v). Requires 1 <= kmax <= 6.
DnbTable dnb_table(const Natural& v, int kmax);

struct CertificateQuery {
  Natural v;
  std::vector<Natural> l;
  std::vector<Natural> r;
  int k = 1;
};

struct CertificateResult {
  bool divisibility = false;  // D_k | r_i for every i
  bool exponent_gap = false;  // sum n_i l_i >= B_k whenever |n|_1 <= N_k, sum n_i r_i > 0
  bool certified = false;
  /// A vector n violating the gap condition, when one was found.
  std::optional<std::vector<std::int64_t>> counterexample;
  std::uint64_t tuples_checked = 0;
};

inline constexpr std::size_t kMaxCertificateArity = 3;

/// Checks both conditions; true certifies c(u_0, ..., u_{t-1}) >= k for
/// u_i = 2^{l_i} v^{r_i}. For t = 1 the gap condition is l >= B_k (or r = 0).
/// Throws BudgetExceeded when enumeration would exceed tuple_budget.
CertificateResult check_certificate(const CertificateQuery& q,
                                    std::uint64_t tuple_budget = 1'000'000'000);

/// Largest k <= kmax with D_k | r and l >= B_k (at least 1).
int best_single_certificate(const SymbolicPow& s, const DnbTable& table);

struct LowerBoundFormula {
  bool applicable = false;
  std::string reason;
  std::int64_t value = 0;
  Natural d;                    // least nondivisor of r
  std::int64_t d_term = 0;      // floor(log ceil(log_3 d)) + 1
  std::int64_t l_term = 0;      // floor(log log_3 log_4 (l / log v)) + 3
  std::int64_t simple_loglog3 = 0;  // ceil(log log_3 d)
  std::int64_t simple_floorlog = 0; // floor(log ceil(log d))
};

/// The closed-form bound, guarded by l / log2 v >= 10^8.
LowerBoundFormula lower_bound_formula(const SymbolicPow& s);

struct PrimeCheck {
  std::uint64_t p = 0;
  std::uint64_t nu_d = 0;  // nu_p(D_{k+1})
  Natural nu_r;            // nu_p(m!)
};

struct FactorialSandwichReport {
  int k = 0;
  std::uint64_t m = 0;  // 2^(2^k); u = 6^(m!) = 2^(m!) 3^(m!)
  std::vector<PrimeCheck> primes;
  bool divisibility = false;  // D_{k+1} | m!
  bool exponent = false;      // m! >= B_{k+1}
  std::int64_t certified_lower = 0;
  Natural d;                  // least nondivisor of m!
  std::int64_t upper = 0;
  std::size_t d_digits = 0;   // decimal digits of D_{k+1}
};

/// k in 0..4.
FactorialSandwichReport factorial_sandwich(int k);

/// sum_{i=0}^{j} 3^(2^i - 2^j) for 1 <= j <= 8.
mpq_class alpha(int j);

}  // namespace powg::certify
