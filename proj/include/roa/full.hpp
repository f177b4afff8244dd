#ifndef ROA_FULL_HPP
#define ROA_FULL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core.hpp"
#include "profile.hpp"

// Full automata: every relation over the state indices is a letter and is
// its own transition table.  Any explicit automaton embeds into the full
// automaton over its states by reading each named letter as the relation it
// induces; complements of the full automaton pull back along that map.

namespace roa::full {

inline Automaton full_automaton(int n, std::vector<int> initial, Acceptance acc) {
  if (initial.empty()) throw std::invalid_argument("full_automaton: empty initial set");
  Automaton a;
  a.n = n;
  a.initial = std::move(initial);
  a.implicit_full = true;
  a.acc = std::move(acc);
  validate(a);
  return a;
}

// finite-word semantics: Buchi F doubles as the final-state set
inline bool nfw_accepts(const Automaton& a, const FiniteWord& w) {
  if (a.acc.type != AccType::Buchi)
    throw std::invalid_argument("nfw_accepts: Buchi-style final set required");
  Mask cur = word_image(a, a.initial_mask(), w);
  return (cur & to_mask(a.acc.buchi)) != 0;
}

using LetterMap = std::map<std::string, Rel>;

struct Embedding {
  Automaton target;  // full automaton over the same states
  LetterMap map;     // source letter name -> relation letter
};

inline Embedding embed(const Automaton& a) {
  if (a.implicit_full) throw std::invalid_argument("embed: explicit source required");
  validate(a);
  Embedding e;
  e.target = a;
  e.target.implicit_full = true;
  e.target.alphabet.clear();
  for (const auto& l : a.alphabet) {
    if (l.name.empty()) throw std::invalid_argument("embed: unnamed source letter");
    e.map[l.name] = l.rel;
  }
  return e;
}

inline FiniteWord map_word(const LetterMap& m, const FiniteWord& w) {
  FiniteWord out;
  for (const auto& l : w) {
    auto it = m.find(l.name);
    if (it == m.end()) throw std::invalid_argument("map_word: unmapped letter " + l.name);
    Letter nl;
    nl.rel = it->second;
    out.push_back(std::move(nl));
  }
  return out;
}

// Pull a complement (or any automaton over relation letters) back to the
// source alphabet.  `ca` is either named with canonical relation names or
// implicit-full over its own states.
inline Automaton pull_back(const Automaton& ca, const LetterMap& m) {
  validate(ca);
  Automaton out = ca;
  out.implicit_full = false;
  out.alphabet.clear();
  for (const auto& [name, rel] : m) {
    Letter nl;
    nl.name = name;
    if (ca.implicit_full) {
      check_rel(rel, ca.n, "pull_back letter");
      nl.rel = rel;
    } else {
      std::string key = canonical_name(rel);
      const Letter* found = nullptr;
      for (const auto& al : ca.alphabet)
        if (al.name == key || al.rel == rel) {
          found = &al;
          break;
        }
      if (!found) throw std::invalid_argument("pull_back: image letter missing: " + key);
      nl.rel = found->rel;
    }
    out.alphabet.push_back(std::move(nl));
  }
  return out;
}

// ---------------------------------------------------------------------------
// word equivalence over a full automaton's states

enum class EquivMode { Sim, Approx };

// Sim: identical reach matrices.  Approx: identical reach and
// reach-through-F matrices restricted to non-final states.
inline bool word_equiv(const Automaton& a, const FiniteWord& u, const FiniteWord& v,
                       EquivMode mode) {
  if (mode == EquivMode::Sim) return word_reach(a, u) == word_reach(a, v);
  if (a.acc.type != AccType::Buchi)
    throw std::invalid_argument("word_equiv: approx mode needs a Buchi final set");
  Mask f = to_mask(a.acc.buchi);
  Mask sprime = full_mask(a.n) & ~f;
  Profile pu = transition_profile(a, u, {f});
  Profile pv = transition_profile(a, v, {f});
  for (int p = 0; p < a.n; ++p) {
    if (!(sprime & bit(p))) continue;
    for (int q = 0; q < a.n; ++q) {
      if (!(sprime & bit(q))) continue;
      if (pu.reaches(p, q) != pv.reaches(p, q)) return false;
      if (pu.reaches_through(p, q, 0) != pv.reaches_through(p, q, 0)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// finite-word lower-bound witness: the n-state full NFW, its two-letter
// restriction, and the fooling word family

struct NfwWitness {
  int n = 0;
  Automaton fa;      // full NFW, all states initial and final
  Automaton an;      // restriction to letters a, b
  Letter a, b;       // a: cyclic shift, b: drop state 0
};

inline NfwWitness nfw_witness(int n) {
  if (n < 2) throw std::invalid_argument("nfw_witness: n >= 2 required");
  NfwWitness w;
  w.n = n;
  std::vector<int> all;
  for (int s = 0; s < n; ++s) all.push_back(s);
  w.fa = full_automaton(n, all, Acceptance::buchi_acc(all));
  for (int i = 0; i + 1 < n; ++i) w.a.rel.emplace_back(i + 1, i);
  w.a.rel.emplace_back(0, n - 1);
  normalize(w.a.rel);
  w.a.name = "a";
  w.b = id_letter(full_mask(n) & ~bit(0), n);
  w.b.name = "b";
  w.an = restrict(w.fa, {w.a, w.b});
  return w;
}

// u_T = Id(T) as a single relation letter
inline FiniteWord id_word(Mask t, int n) { return {id_letter(t, n)}; }

// the {a, b} word simulating Id(T): for each index outside T, rotate it to
// slot 0 and drop it
inline FiniteWord ab_id_word(const NfwWitness& w, Mask t) {
  FiniteWord out;
  for (int i = 0; i < w.n; ++i) {
    if (t & bit(i)) continue;
    for (int r = 0; r < i; ++r) out.push_back(w.a);
    out.push_back(w.b);
    for (int r = 0; r < w.n - i; ++r) out.push_back(w.a);
  }
  return out;
}

struct FoolingReport {
  int n = 0;
  bool substituted = false;  // ran over the two-letter restriction
  bool pass = false;
  long long pairs_checked = 0;
  // first failure, if any
  std::optional<std::pair<Mask, Mask>> failure;
};

// u_{T1} v_{T2} must be accepted exactly when T1 \ T2 is non-empty, and in
// particular every diagonal pair is rejected.
inline FoolingReport fooling_report(int n, bool substituted) {
  NfwWitness w = nfw_witness(n);
  FoolingReport rep;
  rep.n = n;
  rep.substituted = substituted;
  rep.pass = true;
  Mask all = full_mask(n);
  for (Mask t1 = 0; t1 <= all; ++t1) {
    for (Mask t2 = 0; t2 <= all; ++t2) {
      FiniteWord word;
      const Automaton* aut;
      if (substituted) {
        word = ab_id_word(w, t1);
        FiniteWord v = ab_id_word(w, all & ~t2);
        word.insert(word.end(), v.begin(), v.end());
        aut = &w.an;
      } else {
        word = id_word(t1, n);
        FiniteWord v = id_word(all & ~t2, n);
        word.insert(word.end(), v.begin(), v.end());
        aut = &w.fa;
      }
      bool acc = nfw_accepts(*aut, word);
      // u_{T1} = Id(T1), v_{T2} = Id(S \ T2); accepted iff T1 meets S \ T2
      bool expect = (t1 & ~t2) != 0;
      if (acc != expect) {
        rep.pass = false;
        if (!rep.failure) rep.failure = {t1, t2};
      }
      ++rep.pairs_checked;
    }
  }
  return rep;
}

// number of reachable subsets of the {a,b} restriction, from the full
// initial set
inline long long subset_reach_count(const Automaton& a) {
  if (a.n > 24) throw std::invalid_argument("subset_reach_count: n <= 24 required");
  std::set<Mask> seen;
  std::vector<Mask> stack{a.initial_mask()};
  seen.insert(a.initial_mask());
  while (!stack.empty()) {
    Mask cur = stack.back();
    stack.pop_back();
    for (const auto& l : a.alphabet) {
      Mask nxt = rel_succ(l.rel, cur);
      if (seen.insert(nxt).second) stack.push_back(nxt);
    }
  }
  return static_cast<long long>(seen.size());
}

}  // namespace roa::full

#endif  // ROA_FULL_HPP
