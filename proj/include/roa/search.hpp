#ifndef ROA_SEARCH_HPP
#define ROA_SEARCH_HPP

#include <optional>
#include <vector>

#include "core.hpp"

// Constrained run search over a finite word: count runs p -> q that visit
// every set in `must_visit` (endpoints included) and never touch
// `must_avoid`.  Counts saturate at 2, which is enough to report
// none / unique / multiple, and a witness run is returned when one exists.

namespace roa {

enum class RunCount { None, Unique, Multiple };

struct RunSearchResult {
  RunCount count = RunCount::None;
  std::vector<int> witness;  // run states, length |w|+1, empty when none
};

inline RunSearchResult run_search(const Automaton& a, const FiniteWord& w, int p, int q,
                                  const std::vector<Mask>& must_visit = {},
                                  Mask must_avoid = 0) {
  if (p < 0 || p >= a.n || q < 0 || q >= a.n)
    throw std::invalid_argument("run_search: endpoint out of range");
  if (must_visit.size() > 31) throw std::invalid_argument("run_search: too many visit sets");
  const int len = static_cast<int>(w.size());
  const std::uint32_t kSets = static_cast<std::uint32_t>(must_visit.size());
  const std::uint32_t full = (kSets == 0) ? 0 : ((1u << kSets) - 1);
  auto memb = [&](int s) {
    std::uint32_t m = 0;
    for (std::uint32_t i = 0; i < kSets; ++i)
      if (must_visit[i] & bit(s)) m |= (1u << i);
    return m;
  };
  std::vector<Rel> rels;
  rels.reserve(w.size());
  for (const auto& l : w) rels.push_back(resolve(a, l));

  // dp[pos][state][mask] = saturating count of partial runs from p
  const std::size_t width = static_cast<std::size_t>(a.n) << kSets;
  std::vector<std::vector<std::uint8_t>> dp(static_cast<std::size_t>(len) + 1,
                                            std::vector<std::uint8_t>(width, 0));
  auto idx = [&](int s, std::uint32_t m) { return (static_cast<std::size_t>(s) << kSets) | m; };
  if (!(must_avoid & bit(p))) dp[0][idx(p, memb(p))] = 1;
  for (int t = 0; t < len; ++t) {
    for (int s = 0; s < a.n; ++s)
      for (std::uint32_t m = 0; m <= full; ++m) {
        std::uint8_t c = dp[t][idx(s, m)];
        if (!c) continue;
        for (auto [x, y] : rels[t]) {
          if (x != s) continue;
          if (must_avoid & bit(y)) continue;
          auto& cell = dp[t + 1][idx(y, m | memb(y))];
          cell = static_cast<std::uint8_t>(std::min<int>(2, cell + c));
        }
      }
  }
  RunSearchResult res;
  std::uint8_t total = dp[len][idx(q, full)];
  // runs with supersets of `full` cannot exist: masks only contain tracked bits
  if (total == 0) return res;
  res.count = total == 1 ? RunCount::Unique : RunCount::Multiple;
  // backtrack one witness
  std::vector<int> states(static_cast<std::size_t>(len) + 1);
  int s = q;
  std::uint32_t m = full;
  states[static_cast<std::size_t>(len)] = s;
  for (int t = len; t > 0; --t) {
    bool found = false;
    for (auto [x, y] : rels[t - 1]) {
      if (y != s || found) continue;
      if (must_avoid & bit(x)) continue;
      // m at step t satisfies m = m_prev | memb(y); try compatible m_prev
      for (std::uint32_t mp = 0; mp <= full && !found; ++mp) {
        if ((mp | memb(y)) != m) continue;
        if (dp[t - 1][idx(x, mp)]) {
          s = x;
          m = mp;
          states[static_cast<std::size_t>(t) - 1] = s;
          found = true;
        }
      }
    }
    if (!found) return res;  // defensive; dp guarantees a witness
  }
  res.witness = std::move(states);
  return res;
}

}  // namespace roa

#endif  // ROA_SEARCH_HPP
