#ifndef ROA_TESTS_ORACLES_HPP
#define ROA_TESTS_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "roa/core.hpp"

// Independent reference implementations used to cross-check the library.
// Everything here favours obviousness over speed: explicit run enumeration
// and transitive-closure reasoning only.

namespace oracles {

using roa::Acceptance;
using roa::Automaton;
using roa::FiniteWord;
using roa::LassoWord;
using roa::Letter;
using roa::Mask;
using roa::Rel;
using roa::bit;

// every run p -> q over w, by brute-force extension
inline void enum_runs(const Automaton& a, const std::vector<Rel>& rels, std::size_t t,
                      std::vector<int>& cur, int q, std::vector<std::vector<int>>& out) {
  if (t == rels.size()) {
    if (cur.back() == q) out.push_back(cur);
    return;
  }
  for (auto [x, y] : rels[t]) {
    if (x != cur.back()) continue;
    cur.push_back(y);
    enum_runs(a, rels, t + 1, cur, q, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> all_runs(const Automaton& a, const FiniteWord& w, int p,
                                              int q) {
  std::vector<Rel> rels;
  for (const auto& l : w) rels.push_back(roa::resolve(a, l));
  std::vector<std::vector<int>> out;
  std::vector<int> cur{p};
  enum_runs(a, rels, 0, cur, q, out);
  return out;
}

inline bool run_visits(const std::vector<int>& run, Mask set) {
  for (int s : run)
    if (set & bit(s)) return true;
  return false;
}

// counts runs satisfying visit/avoid constraints (endpoints included)
inline int constrained_run_count(const Automaton& a, const FiniteWord& w, int p, int q,
                                 const std::vector<Mask>& must_visit, Mask must_avoid) {
  int count = 0;
  for (const auto& run : all_runs(a, w, p, q)) {
    bool ok = true;
    for (Mask v : must_visit)
      if (!run_visits(run, v)) ok = false;
    if (run_visits(run, must_avoid)) ok = false;
    if (ok) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// lasso membership via transitive closure on the period product graph

struct Product {
  // vertex = state * period_len + pos
  int n = 0;
  std::size_t plen = 0;
  std::vector<std::vector<bool>> edge;  // one period step
  std::vector<bool> start;              // states after the prefix, at pos 0

  std::size_t size() const { return static_cast<std::size_t>(n) * plen; }
};

inline Product build_product(const Automaton& a, const LassoWord& w) {
  Product pr;
  pr.n = a.n;
  pr.plen = w.period.size();
  const std::size_t v = pr.size();
  pr.edge.assign(v, std::vector<bool>(v, false));
  pr.start.assign(v, false);
  std::vector<bool> cur(static_cast<std::size_t>(a.n), false);
  for (int s : a.initial) cur[static_cast<std::size_t>(s)] = true;
  for (const auto& l : w.prefix) {
    std::vector<bool> nxt(static_cast<std::size_t>(a.n), false);
    for (auto [x, y] : roa::resolve(a, l))
      if (cur[static_cast<std::size_t>(x)]) nxt[static_cast<std::size_t>(y)] = true;
    cur = nxt;
  }
  for (int s = 0; s < a.n; ++s)
    if (cur[static_cast<std::size_t>(s)]) pr.start[static_cast<std::size_t>(s) * pr.plen] = true;
  for (std::size_t pos = 0; pos < pr.plen; ++pos) {
    Rel rel = roa::resolve(a, w.period[pos]);
    std::size_t npos = (pos + 1) % pr.plen;
    for (auto [x, y] : rel)
      pr.edge[static_cast<std::size_t>(x) * pr.plen + pos]
             [static_cast<std::size_t>(y) * pr.plen + npos] = true;
  }
  return pr;
}

inline std::vector<std::vector<bool>> closure(const Product& pr) {
  auto c = pr.edge;
  const std::size_t v = pr.size();
  for (std::size_t k = 0; k < v; ++k)
    for (std::size_t i = 0; i < v; ++i)
      if (c[i][k])
        for (std::size_t j = 0; j < v; ++j)
          if (c[k][j]) c[i][j] = true;
  return c;
}

inline bool lasso_member_buchi(const Automaton& a, const LassoWord& w) {
  Product pr = build_product(a, w);
  auto c = closure(pr);
  const std::size_t v = pr.size();
  Mask f = roa::to_mask(a.acc.buchi);
  for (std::size_t i = 0; i < v; ++i) {
    if (!pr.start[i]) continue;
    for (std::size_t j = 0; j < v; ++j) {
      if (!(f & bit(static_cast<int>(j / pr.plen)))) continue;
      if ((i == j || c[i][j]) && c[j][j]) return true;
    }
  }
  return false;
}

// reach over (vertex, visited-sets bitmask) layers; accepts when some start
// vertex reaches a vertex from which a cycle collects every set
inline bool lasso_member_genbuchi(const Automaton& a, const LassoWord& w) {
  Product pr = build_product(a, w);
  const std::size_t v = pr.size();
  const std::size_t k = a.acc.sets.size();
  std::vector<Mask> sets;
  for (const auto& f : a.acc.sets) sets.push_back(roa::to_mask(f));
  auto memb = [&](std::size_t vert) {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (sets[i] & bit(static_cast<int>(vert / pr.plen))) m |= (1u << i);
    return m;
  };
  auto c = closure(pr);
  const std::uint32_t full = k == 0 ? 0 : ((1u << k) - 1);
  // candidate cycle anchors: reachable from a start vertex
  for (std::size_t anchor = 0; anchor < v; ++anchor) {
    bool reach = false;
    for (std::size_t i = 0; i < v && !reach; ++i)
      if (pr.start[i] && (i == anchor || c[i][anchor])) reach = true;
    if (!reach || !c[anchor][anchor]) continue;
    // BFS over (vertex, mask) within the SCC-ish closed walk space
    std::vector<std::vector<bool>> seen(v, std::vector<bool>(full + 1, false));
    std::vector<std::pair<std::size_t, std::uint32_t>> stack;
    for (std::size_t j = 0; j < v; ++j)
      if (pr.edge[anchor][j] && (j == anchor || c[j][anchor])) {
        std::uint32_t m = memb(anchor) | memb(j);
        if (!seen[j][m]) {
          seen[j][m] = true;
          stack.emplace_back(j, m);
        }
      }
    while (!stack.empty()) {
      auto [x, m] = stack.back();
      stack.pop_back();
      if (x == anchor && m == full) return true;
      for (std::size_t y = 0; y < v; ++y) {
        if (!pr.edge[x][y]) continue;
        if (y != anchor && !c[y][anchor]) continue;
        std::uint32_t nm = m | memb(y);
        if (!seen[y][nm]) {
          seen[y][nm] = true;
          stack.emplace_back(y, nm);
        }
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// random inputs

inline Letter random_letter(std::mt19937& rng, int n, const std::string& name) {
  Letter l;
  l.name = name;
  std::uniform_int_distribution<int> coin(0, 3);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (coin(rng) == 0) l.rel.emplace_back(p, q);
  roa::normalize(l.rel);
  return l;
}

inline Automaton random_buchi(std::mt19937& rng, int n, int nletters) {
  Automaton a;
  a.n = n;
  std::uniform_int_distribution<int> coin(0, 1);
  for (int s = 0; s < n; ++s)
    if (coin(rng)) a.initial.push_back(s);
  if (a.initial.empty()) a.initial.push_back(0);
  std::vector<int> f;
  for (int s = 0; s < n; ++s)
    if (coin(rng)) f.push_back(s);
  a.acc = Acceptance::buchi_acc(f);
  for (int i = 0; i < nletters; ++i)
    a.alphabet.push_back(random_letter(rng, n, std::string(1, static_cast<char>('a' + i))));
  return a;
}

inline Automaton random_genbuchi(std::mt19937& rng, int n, int nletters, int k) {
  Automaton a = random_buchi(rng, n, nletters);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<std::vector<int>> sets;
  for (int i = 0; i < k; ++i) {
    std::vector<int> f;
    for (int s = 0; s < n; ++s)
      if (coin(rng)) f.push_back(s);
    sets.push_back(std::move(f));
  }
  a.acc = Acceptance::genbuchi_acc(std::move(sets));
  return a;
}

// all words of exactly the given length over an explicit alphabet
inline void for_each_word(const Automaton& a, int len,
                          const std::function<void(const FiniteWord&)>& fn) {
  FiniteWord w;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(w.size()) == len) {
      fn(w);
      return;
    }
    for (const auto& l : a.alphabet) {
      w.push_back(l);
      rec();
      w.pop_back();
    }
  };
  rec();
}

}  // namespace oracles

#endif  // ROA_TESTS_ORACLES_HPP
