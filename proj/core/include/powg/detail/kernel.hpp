#pragma once

// Loss detection and bad-set construction, written once over two integer
// representations: machine words (elements < 2^62, products in 128 bits) and
// GMP integers for everything else.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "powg/numtheory.hpp"

namespace powg::detail {

struct WordTraits {
  using Elem = std::uint64_t;
  using Wide = unsigned __int128;

  static Wide isqrt(Wide n) {
    if (n == 0) return 0;
    auto r = static_cast<Wide>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
  }
};

struct BigTraits {
  using Elem = Natural;
  using Wide = Natural;

  static Wide isqrt(const Wide& n) {
    Natural r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
  }
};

inline constexpr std::uint64_t kWordLimit = std::uint64_t{1} << 62;

Natural wide_to_natural(unsigned __int128 w);

template <class W>
struct Run {
  W lo;
  W hi;
};

template <class T>
using RunsOf = std::vector<Run<typename T::Wide>>;

/// Loss triple over a sorted, deduplicated span; values (h, i, j).
template <class T>
std::optional<std::array<typename T::Elem, 3>> find_triple(std::span<const typename T::Elem> s) {
  using Wide = typename T::Wide;
  const std::size_t n = s.size();
  if (n == 0) return std::nullopt;
  const auto& top = s[n - 1];
  for (std::size_t i = 0; i < n; ++i) {
    if (Wide(s[i]) * s[i] >= top) break;
    for (std::size_t j = i; j < n; ++j) {
      const Wide p = Wide(s[i]) * s[j];
      if (p >= top) break;
      auto it = std::upper_bound(s.begin() + static_cast<std::ptrdiff_t>(j), s.end(), p,
                                 [](const Wide& v, const auto& e) { return v < Wide(e); });
      if (it != s.end() && Wide(*it) < 2 * p) return std::array{*it, s[i], s[j]};
    }
  }
  return std::nullopt;
}

template <class T>
bool lost(std::span<const typename T::Elem> s) {
  return find_triple<T>(s).has_value();
}

template <class W>
void sort_and_merge(std::vector<Run<W>>& runs) {
  std::sort(runs.begin(), runs.end(), [](const Run<W>& a, const Run<W>& b) { return a.lo < b.lo; });
  std::size_t out = 0;
  for (std::size_t k = 0; k < runs.size(); ++k) {
    if (out > 0 && runs[k].lo <= runs[out - 1].hi + 1) {
      if (runs[k].hi > runs[out - 1].hi) runs[out - 1].hi = runs[k].hi;
    } else {
      runs[out++] = runs[k];
    }
  }
  runs.resize(out);
}

/// Runs of answers w for which s plus {w} is lost, assuming s itself is not.
/// w enters a triple as the quotient (u_i u_j < w < 2 u_i u_j), as one factor
/// (u_h / 2u_i < w < u_h / u_i), or as both factors (w^2 < u_h < 2 w^2).
template <class T>
RunsOf<T> bad_runs(std::span<const typename T::Elem> s) {
  using Wide = typename T::Wide;
  RunsOf<T> runs;
  const std::size_t n = s.size();
  runs.reserve(n * n + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Wide p = Wide(s[i]) * s[j];
      if (p >= 2) runs.push_back({p + 1, 2 * p - 1});
    }
  }
  for (std::size_t h = 0; h < n; ++h) {
    const Wide uh = Wide(s[h]);
    for (std::size_t i = 0; i < h; ++i) {
      const Wide ui = Wide(s[i]);
      Wide lo = uh / (2 * ui) + 1;
      Wide hi = (uh - 1) / ui;
      if (lo <= hi) runs.push_back({std::move(lo), std::move(hi)});
    }
    Wide lo = T::isqrt(uh / 2) + 1;
    Wide hi = T::isqrt(uh - 1);
    if (lo <= hi) runs.push_back({std::move(lo), std::move(hi)});
  }
  sort_and_merge(runs);
  return runs;
}

template <class W>
bool runs_contain(const std::vector<Run<W>>& runs, const W& w) {
  auto it = std::upper_bound(runs.begin(), runs.end(), w,
                             [](const W& v, const Run<W>& r) { return v < r.lo; });
  if (it == runs.begin()) return false;
  --it;
  return w <= it->hi;
}

/// Least winning challenge given the merged bad runs: 1 when 1 is bad,
/// otherwise the least even 2m with [m+1, 2m] inside a run.
template <class W>
std::optional<W> one_round_witness(const std::vector<Run<W>>& runs) {
  for (const auto& r : runs) {
    if (r.lo == 1) return W(1);
    const W m = r.lo - 1;
    if (2 * m <= r.hi) return 2 * m;
  }
  return std::nullopt;
}

template <class T>
std::optional<typename T::Wide> wins_in_one(std::span<const typename T::Elem> s) {
  return one_round_witness(bad_runs<T>(s));
}

/// Sorted insert without duplicates.
template <class E>
std::vector<E> adjoin(std::span<const E> s, const E& w) {
  std::vector<E> out;
  out.reserve(s.size() + 1);
  auto it = std::lower_bound(s.begin(), s.end(), w);
  out.insert(out.end(), s.begin(), it);
  if (it == s.end() || *it != w) out.push_back(w);
  out.insert(out.end(), it, s.end());
  return out;
}

}  // namespace powg::detail
