#ifndef ROA_PROFILE_HPP
#define ROA_PROFILE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "core.hpp"

// Transition profiles: for a finite word w, the relation p -> q "some run
// over w", together with which tracked state sets such a run can visit
// (endpoints included) and, optionally, whether a run avoiding a given set
// exists.  Profiles form a monoid under composition and the profile map is
// a homomorphism from words.

namespace roa {

namespace detail {

// keep only maximal masks; achievable visit-mask sets are represented by
// their maximal elements
inline void insert_maximal(std::vector<std::uint32_t>& anti, std::uint32_t m) {
  for (std::uint32_t x : anti)
    if ((x & m) == m) return;  // dominated
  anti.erase(std::remove_if(anti.begin(), anti.end(),
                            [m](std::uint32_t x) { return (m & x) == x; }),
             anti.end());
  anti.push_back(m);
  std::sort(anti.begin(), anti.end());
}

}  // namespace detail

struct Profile {
  int n = 0;
  int tracked = 0;          // number of tracked sets (mask width)
  bool has_avoid = false;
  std::vector<Mask> reach;  // reach[p] = successor row bitmask
  std::vector<Mask> avoid;  // avoid[p] = states reachable while dodging the avoid set
  // marks[p*n+q]: maximal achievable visit masks over the tracked sets;
  // empty exactly when (p,q) is unreachable
  std::vector<std::vector<std::uint32_t>> marks;

  bool reaches(int p, int q) const { return (reach[p] & bit(q)) != 0; }
  bool reaches_through(int p, int q, int tracked_idx) const {
    for (std::uint32_t m : marks[static_cast<std::size_t>(p) * n + q])
      if (m & (1u << tracked_idx)) return true;
    return false;
  }
  bool reaches_avoiding(int p, int q) const { return (avoid[p] & bit(q)) != 0; }

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.n == b.n && a.tracked == b.tracked && a.has_avoid == b.has_avoid &&
           a.reach == b.reach && a.avoid == b.avoid && a.marks == b.marks;
  }
};

// Profile of the empty word: identity relation, empty marks; a one-state
// run avoids B iff its single state is outside B.
inline Profile identity_profile(int n, int tracked, std::optional<Mask> avoid_set) {
  Profile p;
  p.n = n;
  p.tracked = tracked;
  p.has_avoid = avoid_set.has_value();
  p.reach.assign(static_cast<std::size_t>(n), 0);
  p.avoid.assign(static_cast<std::size_t>(n), 0);
  p.marks.assign(static_cast<std::size_t>(n) * n, {});
  for (int q = 0; q < n; ++q) {
    p.reach[q] = bit(q);
    p.marks[static_cast<std::size_t>(q) * n + q].push_back(0);
    if (avoid_set && !(*avoid_set & bit(q))) p.avoid[q] = bit(q);
  }
  return p;
}

inline Profile letter_profile(int n, const Rel& rel, const std::vector<Mask>& tracked_sets,
                              std::optional<Mask> avoid_set) {
  Profile p;
  p.n = n;
  p.tracked = static_cast<int>(tracked_sets.size());
  p.has_avoid = avoid_set.has_value();
  p.reach.assign(static_cast<std::size_t>(n), 0);
  p.avoid.assign(static_cast<std::size_t>(n), 0);
  p.marks.assign(static_cast<std::size_t>(n) * n, {});
  auto memb = [&](int q) {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < tracked_sets.size(); ++i)
      if (tracked_sets[i] & bit(q)) m |= (1u << i);
    return m;
  };
  for (auto [a, b] : rel) {
    p.reach[a] |= bit(b);
    detail::insert_maximal(p.marks[static_cast<std::size_t>(a) * n + b], memb(a) | memb(b));
    if (avoid_set && !(*avoid_set & bit(a)) && !(*avoid_set & bit(b))) p.avoid[a] |= bit(b);
  }
  return p;
}

inline Profile compose(const Profile& u, const Profile& v) {
  if (u.n != v.n || u.tracked != v.tracked || u.has_avoid != v.has_avoid)
    throw std::invalid_argument("compose: profile shape mismatch");
  const int n = u.n;
  Profile w;
  w.n = n;
  w.tracked = u.tracked;
  w.has_avoid = u.has_avoid;
  w.reach.assign(static_cast<std::size_t>(n), 0);
  w.avoid.assign(static_cast<std::size_t>(n), 0);
  w.marks.assign(static_cast<std::size_t>(n) * n, {});
  for (int p = 0; p < n; ++p) {
    for (int r = 0; r < n; ++r) {
      if (!(u.reach[p] & bit(r))) continue;
      w.reach[p] |= v.reach[r];
      const auto& mu = u.marks[static_cast<std::size_t>(p) * n + r];
      for (int q = 0; q < n; ++q) {
        if (!(v.reach[r] & bit(q))) continue;
        auto& out = w.marks[static_cast<std::size_t>(p) * n + q];
        for (std::uint32_t a : mu)
          for (std::uint32_t b : v.marks[static_cast<std::size_t>(r) * n + q])
            detail::insert_maximal(out, a | b);
      }
    }
    if (w.has_avoid)
      for (int r = 0; r < n; ++r)
        if (u.avoid[p] & bit(r)) w.avoid[p] |= v.avoid[r];
  }
  return w;
}

// Union of achievable behaviours of two profiles over the same word length
// family (used for closures over v^+).  Reach/avoid union, mark antichains
// merged.
inline Profile profile_union(const Profile& a, const Profile& b) {
  Profile w = a;
  for (int p = 0; p < a.n; ++p) {
    w.reach[p] |= b.reach[p];
    if (w.has_avoid) w.avoid[p] |= b.avoid[p];
    for (int q = 0; q < a.n; ++q) {
      auto& out = w.marks[static_cast<std::size_t>(p) * a.n + q];
      for (std::uint32_t m : b.marks[static_cast<std::size_t>(p) * a.n + q])
        detail::insert_maximal(out, m);
    }
  }
  return w;
}

inline Profile transition_profile(const Automaton& a, const FiniteWord& w,
                                  const std::vector<Mask>& tracked_sets = {},
                                  std::optional<Mask> avoid_set = std::nullopt) {
  if (a.n > 64) throw std::invalid_argument("transition_profile: more than 64 states");
  if (tracked_sets.size() > 32) throw std::invalid_argument("transition_profile: too many tracked sets");
  Profile acc = identity_profile(a.n, static_cast<int>(tracked_sets.size()), avoid_set);
  for (const auto& l : w)
    acc = compose(acc, letter_profile(a.n, resolve(a, l), tracked_sets, avoid_set));
  return acc;
}

// Reach-only fast path.
inline std::vector<Mask> word_reach(const Automaton& a, const FiniteWord& w) {
  std::vector<Mask> rows(static_cast<std::size_t>(a.n));
  for (int q = 0; q < a.n; ++q) rows[q] = bit(q);
  for (const auto& l : w) {
    const Rel& rel = resolve(a, l);
    std::vector<Mask> next(static_cast<std::size_t>(a.n), 0);
    std::vector<Mask> step(static_cast<std::size_t>(a.n), 0);
    for (auto [p, q] : rel) step[p] |= bit(q);
    for (int p = 0; p < a.n; ++p)
      for (int r = 0; r < a.n; ++r)
        if (rows[p] & bit(r)) next[p] |= step[r];
    rows = std::move(next);
  }
  return rows;
}

inline Mask word_image(const Automaton& a, Mask from, const FiniteWord& w) {
  Mask cur = from;
  for (const auto& l : w) cur = rel_succ(resolve(a, l), cur);
  return cur;
}

}  // namespace roa

#endif  // ROA_PROFILE_HPP
