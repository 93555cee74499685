#include "powg/axioms.hpp"

#include <algorithm>

#include "powg/error.hpp"

namespace powg::axioms {
namespace {

constexpr std::uint64_t kMaxLimit = std::uint64_t{1} << 31;

std::uint64_t to_limit(const Natural& n, std::uint64_t min, const char* who) {
  if (n < min || n > Natural(static_cast<unsigned long>(kMaxLimit))) {
    throw PreconditionError(std::string(who) + ": limit must be in [" + std::to_string(min) + ", 2^31]");
  }
  return n.get_ui();
}

void fail(AxiomCheck& c, std::map<std::string, std::uint64_t> at) {
  if (!c.passed) return;
  c.passed = false;
  c.counterexample = std::move(at);
}

// Largest member <= x, or 0 when there is none above 0.
std::uint64_t floor_member(const std::vector<std::uint64_t>& sorted, std::uint64_t x) {
  auto it = std::upper_bound(sorted.begin(), sorted.end(), x);
  if (it == sorted.begin()) return 0;
  return *std::prev(it);
}

std::vector<std::uint64_t> below(const std::vector<std::uint64_t>& sorted, std::uint64_t n) {
  return {sorted.begin(), std::lower_bound(sorted.begin(), sorted.end(), n)};
}

std::vector<std::uint64_t> divisors(std::uint64_t u) {
  std::vector<std::uint64_t> lo, hi;
  for (std::uint64_t d = 1; d * d <= u; ++d) {
    if (u % d) continue;
    lo.push_back(d);
    if (d * d != u) hi.push_back(u / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

// First y in [1, x) with no divisor v of u such that v <= y < 2v, or 0.
std::uint64_t uncovered_window(std::uint64_t u, std::uint64_t x) {
  const auto ds = divisors(u);
  std::size_t i = 0;
  for (std::uint64_t y = 1; y < x; ++y) {
    while (i + 1 < ds.size() && ds[i + 1] <= y) ++i;
    if (y >= 2 * ds[i]) return y;
  }
  return 0;
}

}  // namespace

SegmentModel SegmentModel::standard(const Natural& n) {
  SegmentModel m;
  m.n_ = to_limit(n, 4, "SegmentModel");
  for (std::uint64_t p = 1; p < m.horizon(); p *= 2) m.members_.push_back(p);
  return m;
}

bool SegmentModel::contains(std::uint64_t u) const {
  return std::binary_search(members_.begin(), members_.end(), u);
}

void SegmentModel::add(std::uint64_t u) {
  if (u >= horizon()) throw PreconditionError("SegmentModel::add: " + std::to_string(u) + " is outside [0, 2N)");
  auto it = std::lower_bound(members_.begin(), members_.end(), u);
  if (it == members_.end() || *it != u) members_.insert(it, u);
}

void SegmentModel::remove(std::uint64_t u) {
  if (u >= horizon()) throw PreconditionError("SegmentModel::remove: " + std::to_string(u) + " is outside [0, 2N)");
  auto it = std::lower_bound(members_.begin(), members_.end(), u);
  if (it != members_.end() && *it == u) members_.erase(it);
}

bool AxiomsReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* AxiomsReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

AxiomsReport check_p2_axioms(const SegmentModel& m) {
  const std::uint64_t n = m.limit();
  const auto& all = m.members();
  const auto small = below(all, n);
  AxiomsReport rep;
  rep.limit = n;

  AxiomCheck ip{"interval_power", "x > 0 -> exists u (P2(u) and u <= x < 2u)"};
  AxiomCheck uniq{"unique_power", "x > 0 -> at most one u with P2(u) and u <= x < 2u"};
  for (std::uint64_t x = 1; x < n; ++x) {
    ++ip.instances;
    ++uniq.instances;
    const std::uint64_t u = floor_member(all, x);
    if (u == 0 || x >= 2 * u) fail(ip, {{"x", x}});
    // Members in [floor(x/2) + 1, x].
    auto lo = std::upper_bound(all.begin(), all.end(), x / 2);
    auto hi = std::upper_bound(all.begin(), all.end(), x);
    if (hi - lo > 1) fail(uniq, {{"x", x}, {"u", *lo}, {"u2", *std::next(lo)}});
  }

  AxiomCheck quot{"quotient", "P2(u) and P2(v) and u <= v -> exists w (P2(w) and uw = v)"};
  AxiomCheck prod{"product_closed", "P2(u) and P2(v) -> P2(uv)"};
  AxiomCheck gap{"no_gap", "P2(u) and P2(v) and P2(w) -> not (uv < w < 2uv)"};
  for (std::uint64_t u : small) {
    for (std::uint64_t v : small) {
      if (u <= v) {
        ++quot.instances;
        if (u == 0 ? v != 0 : (v % u != 0 || !m.contains(v / u))) fail(quot, {{"u", u}, {"v", v}});
      }
      const std::uint64_t uv = u * v;
      if (uv < m.horizon()) {
        ++prod.instances;
        if (!m.contains(uv)) fail(prod, {{"u", u}, {"v", v}});
      }
      ++gap.instances;
      auto w = std::upper_bound(small.begin(), small.end(), uv);
      if (w != small.end() && *w < 2 * uv) fail(gap, {{"u", u}, {"v", v}, {"w", *w}});
    }
  }

  AxiomCheck zero{"zero_excluded", "not P2(0)"};
  zero.instances = 1;
  if (m.contains(0)) fail(zero, {{"u", 0}});

  rep.checks = {std::move(ip), std::move(quot), std::move(uniq), std::move(zero), std::move(prod), std::move(gap)};
  return rep;
}

AxiomsReport check_p2_axioms(const Natural& n) { return check_p2_axioms(SegmentModel::standard(n)); }

AxiomsReport check_divisor_windows(const Natural& x_max) {
  const std::uint64_t xm = to_limit(x_max, 2, "check_divisor_windows");
  AxiomsReport rep;
  rep.limit = xm;
  AxiomCheck c{"divisor_windows",
               "for all x exists u in [x, 2x) for all 0 < y < x exists v (v <= y < 2v and v | u)"};
  for (std::uint64_t x = 1; x <= xm; ++x) {
    ++c.instances;
    std::uint64_t first = 1;
    while (first < x) first *= 2;
    std::uint64_t bad_y = uncovered_window(first, x);
    if (bad_y == 0) continue;
    bool found = false;
    for (std::uint64_t u = x; u < 2 * x && !found; ++u) {
      found = u != first && uncovered_window(u, x) == 0;
    }
    if (!found) fail(c, {{"x", x}, {"u", first}, {"y", bad_y}});
  }
  rep.checks.push_back(std::move(c));
  return rep;
}

AxiomsReport check_pow2_equiv(const Natural& n) {
  const std::uint64_t lim = to_limit(n, 2, "check_pow2_equiv");
  // has_odd[u]: some odd d > 1 divides u. Zero is divisible by everything.
  std::vector<char> has_odd(lim, 0);
  has_odd[0] = 1;
  for (std::uint64_t d = 3; d < lim; d += 2) {
    if (has_odd[d]) continue;  // a smaller odd divisor already marked its multiples
    for (std::uint64_t k = d; k < lim; k += d) has_odd[k] = 1;
  }
  std::vector<char> standard(lim, 0);
  for (std::uint64_t p = 1; p < lim; p *= 2) standard[p] = 1;

  AxiomsReport rep;
  rep.limit = lim;
  AxiomCheck eq{"oddless_iff_power", "(x | u -> x = 1 or 2 | x) <-> u is a power of two"};
  std::vector<std::uint64_t> oddless;
  for (std::uint64_t u = 0; u < lim; ++u) {
    ++eq.instances;
    const bool by_sieve = !has_odd[u];
    const bool by_bits = u > 0 && nt::is_oddless(Natural(static_cast<unsigned long>(u)));
    if (by_sieve != by_bits || by_sieve != static_cast<bool>(standard[u])) fail(eq, {{"u", u}});
    if (by_sieve) oddless.push_back(u);
  }

  AxiomCheck ip{"pow2_interval", "x > 0 -> exists u (Pow2(u) and u <= x < 2u)"};
  for (std::uint64_t x = 1; x < lim; ++x) {
    ++ip.instances;
    const std::uint64_t u = floor_member(oddless, x);
    if (u == 0 || x >= 2 * u) fail(ip, {{"x", x}});
  }

  AxiomCheck div{"pow2_divides", "Pow2(u) and Pow2(v) and u <= v -> u | v"};
  for (std::uint64_t u : oddless) {
    for (std::uint64_t v : oddless) {
      if (u > v) continue;
      ++div.instances;
      if (v % u != 0) fail(div, {{"u", u}, {"v", v}});
    }
  }

  rep.checks = {std::move(eq), std::move(ip), std::move(div)};
  return rep;
}

}  // namespace powg::axioms
