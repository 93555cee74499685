#pragma once

// Truth of the powers-of-two axioms on initial segments of the naturals.
// Universally quantified variables range over [0, N); existential witnesses
// and the interpretation of P2 extend to [0, 2N), so that nothing is reported
// merely because a witness falls just past N.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "powg/numtheory.hpp"

namespace powg::axioms {

/// An interpretation of P2 on [0, 2N).
class SegmentModel {
 public:
  /// P2 = {2^k : 2^k < 2N}. Requires 4 <= N <= 2^31.
  static SegmentModel standard(const Natural& n);

  std::uint64_t limit() const { return n_; }
  std::uint64_t horizon() const { return 2 * n_; }
  bool contains(std::uint64_t u) const;
  /// Sorted members.
  const std::vector<std::uint64_t>& members() const { return members_; }

  /// Mutations for corruption tests. Throws PreconditionError outside [0, 2N).
  void add(std::uint64_t u);
  void remove(std::uint64_t u);

 private:
  std::uint64_t n_ = 0;
  std::vector<std::uint64_t> members_;
};

struct AxiomCheck {
  std::string name;
  std::string statement;
  bool passed = true;
  /// Variable assignment of the first failure found.
  std::map<std::string, std::uint64_t> counterexample;
  std::uint64_t instances = 0;
};

struct AxiomsReport {
  std::uint64_t limit = 0;
  std::vector<AxiomCheck> checks;
  bool ok() const;
  const AxiomCheck* find(const std::string& name) const;
};

/// interval_power:  x > 0 -> exists u (P2(u) and u <= x < 2u)
/// quotient:        P2(u) and P2(v) and u <= v -> exists w (P2(w) and uw = v)
/// unique_power:    x > 0 -> at most one u with P2(u) and u <= x < 2u
/// zero_excluded:   not P2(0)
/// product_closed:  P2(u) and P2(v) -> P2(uv)   (pairs with uv < 2N)
/// no_gap:          P2(u), P2(v), P2(w) -> not (uv < w < 2uv)
AxiomsReport check_p2_axioms(const SegmentModel& m);
AxiomsReport check_p2_axioms(const Natural& n);

/// For every 1 <= x <= x_max, some u in [x, 2x) has, for each 0 < y < x, a
/// divisor v with v <= y < 2v. 2^ceil(log2 x) is tried first.
AxiomsReport check_divisor_windows(const Natural& x_max);

/// For all u < N: u has no odd divisor above 1 iff u is a power of two. Also
/// checks, for that predicate, that every x > 0 lies in some [u, 2u), and
/// that u <= v implies u | v.
AxiomsReport check_pow2_equiv(const Natural& n);

}  // namespace powg::axioms
