#pragma once

// Closed-form upper bounds on c(u), and their combination with solver results.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "powg/numtheory.hpp"
#include "powg/symbolic.hpp"

namespace powg::bounds {

struct BoundEntry {
  std::string name;
  bool applicable = false;
  std::int64_t value = 0;
  /// The quantity the formula was evaluated at (d, r, nu_2(u), ...).
  std::string witness;
  std::string reason;
};

struct BoundReport {
  bool power_of_two = false;
  std::vector<BoundEntry> entries;
  /// Unset means infinite.
  std::optional<std::int64_t> best;
  std::string best_source;
};

/// ceil(log floor(log d)) + 4 with d the least nondivisor of r.
std::int64_t upper_nondivisor(const SymbolicPow& s);
/// Throws PreconditionError for powers of two.
std::int64_t upper_nondivisor(const Natural& u);

struct LogBounds {
  BoundEntry log_u;  // ceil(log log log log u) + 4
  BoundEntry log_r;  // ceil(log log log r) + 4
  BoundEntry log_nu2;  // ceil(log log log nu_2(u)) + 5, needs 2^(nu_2(u)+1) < u
};

LogBounds upper_log_bounds(const SymbolicPow& s);
LogBounds upper_log_bounds(const Natural& u);

struct NuNuTerm {
  Natural p;
  Natural q;
  std::uint64_t nu = 0;  // nu_q(nu_p(u))
  /// q^max(1, nu); the term log nu + log log q equals log log key.
  Natural key;
  double value = 0;
};

struct NuNuReport {
  NuNuTerm best;
  std::vector<NuNuTerm> terms;
};

/// min over odd primes p | u and primes q of log nu_q(nu_p(u)) + log log q, with
/// no additive constant. q ranges over the primes dividing nu_p(u) and the least
/// prime that does not; other primes only give larger terms. Diagnostic only.
NuNuReport upper_nu_nu(const Natural& u);

/// Minimum of the applicable closed forms and the given solver win depths.
BoundReport combine_upper(const Natural& u, std::span<const std::int64_t> solver_hits = {});
BoundReport combine_upper(const SymbolicPow& s, std::span<const std::int64_t> solver_hits = {});

}  // namespace powg::bounds
