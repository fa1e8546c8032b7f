#ifndef QLDS_PERMUTATION_HPP
#define QLDS_PERMUTATION_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace qlds {

/// Default largest matrix order accepted by the n!-term expansions.
inline constexpr std::size_t kDefaultEnumerationCap = 8;

inline void check_enumeration_cap(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw CapExceededError("order " + std::to_string(n) + " exceeds enumeration cap " +
                           std::to_string(cap));
}

/// A permutation written as an ordered list of disjoint cycles (0-based).
struct CyclePermutation {
  std::vector<std::vector<std::size_t>> cycles;

  std::size_t cycle_count() const { return cycles.size(); }
  /// (-1)^{n-r}
  int sign(std::size_t n) const { return ((n - cycles.size()) % 2) ? -1 : 1; }
};

namespace detail {

// Walks every cycle normal form anchored at `anchor`. The anchor cycle comes
// first; every later cycle opens at the smallest unused element, so later
// cycles appear in increasing order of their leading element.
inline void walk_forms(std::size_t n, std::size_t anchor,
                       const std::function<void(const CyclePermutation&)>& emit) {
  std::vector<bool> used(n, false);
  CyclePermutation cur;
  std::function<void(std::size_t)> rec = [&](std::size_t left) {
    std::vector<std::size_t>& cyc = cur.cycles.back();
    // extend the open cycle
    for (std::size_t e = 0; e < n; ++e) {
      if (used[e]) continue;
      used[e] = true;
      cyc.push_back(e);
      rec(left - 1);
      cur.cycles.back().pop_back();
      used[e] = false;
    }
    // or close it
    if (left == 0) {
      emit(cur);
      return;
    }
    std::size_t head = 0;
    while (used[head]) ++head;
    used[head] = true;
    cur.cycles.push_back({head});
    rec(left - 1);
    cur.cycles.pop_back();
    used[head] = false;
  };
  used[anchor] = true;
  cur.cycles.push_back({anchor});
  rec(n - 1);
}

}  // namespace detail

/// All n! normal forms used by the row determinant at row `i`.
inline std::vector<CyclePermutation> row_normal_forms(std::size_t n, std::size_t i) {
  std::vector<CyclePermutation> out;
  detail::walk_forms(n, i, [&](const CyclePermutation& p) { out.push_back(p); });
  return out;
}

/// All n! normal forms used by the column determinant at column `j`. The
/// anchored cycle is written last and ends with j; the others precede it in
/// decreasing order of their smallest element, each ending with it.
inline std::vector<CyclePermutation> column_normal_forms(std::size_t n, std::size_t j) {
  std::vector<CyclePermutation> out;
  detail::walk_forms(n, j, [&](const CyclePermutation& p) {
    CyclePermutation q;
    for (auto it = p.cycles.rbegin(); it != p.cycles.rend(); ++it) {
      // (h g1 g2 ... gm) read backwards is (gm ... g1 h)
      q.cycles.emplace_back(it->rbegin(), it->rend());
    }
    out.push_back(std::move(q));
  });
  return out;
}

/// Strictly increasing index sequences of length r from {0..n-1}, in
/// lexicographic order. With `must_contain` set, only sequences holding it.
inline std::vector<std::vector<std::size_t>> index_sets(std::size_t r, std::size_t n,
                                                        long must_contain = -1) {
  std::vector<std::vector<std::size_t>> out;
  if (r == 0 || r > n) return out;
  std::vector<std::size_t> cur(r);
  for (std::size_t t = 0; t < r; ++t) cur[t] = t;
  while (true) {
    bool ok = must_contain < 0;
    for (std::size_t v : cur)
      if (static_cast<long>(v) == must_contain) ok = true;
    if (ok) out.push_back(cur);
    std::size_t t = r;
    while (t > 0 && cur[t - 1] == n - r + t - 1) --t;
    if (t == 0) break;
    ++cur[t - 1];
    for (std::size_t u = t; u < r; ++u) cur[u] = cur[u - 1] + 1;
  }
  return out;
}

/// Position of `v` inside a sorted index set.
inline std::size_t position_in(const std::vector<std::size_t>& set, std::size_t v) {
  for (std::size_t t = 0; t < set.size(); ++t)
    if (set[t] == v) return t;
  throw PreconditionError("index not in set");
}

}  // namespace qlds

#endif  // QLDS_PERMUTATION_HPP
