#ifndef ROA_CORE_HPP
#define ROA_CORE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Core types for automata over relation-valued letters.
//
// A letter is a binary relation over state indices.  A "full" automaton
// admits every relation as a letter and the relation itself is the
// transition table; a named automaton fixes a finite list of letters.

namespace roa {

using Mask = std::uint64_t;  // state-set bitmask, valid when n <= 64

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask bit(int i) { return Mask{1} << i; }

inline Mask to_mask(const std::vector<int>& states) {
  Mask m = 0;
  for (int s : states) m |= bit(s);
  return m;
}

inline std::vector<int> from_mask(Mask m) {
  std::vector<int> v;
  for (int i = 0; i < 64; ++i)
    if (m & bit(i)) v.push_back(i);
  return v;
}

inline Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

// A relation over state indices, kept sorted and duplicate-free.
using Rel = std::vector<std::pair<int, int>>;

inline void normalize(Rel& r) {
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
}

inline Rel make_rel(std::initializer_list<std::pair<int, int>> pairs) {
  Rel r(pairs);
  normalize(r);
  return r;
}

struct Letter {
  Rel rel;            // relation content (and transitions, for relational automata)
  std::string name;   // empty for anonymous relation letters

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.rel == b.rel && a.name == b.name;
  }
};

// Stable textual form of a relation, used as a letter key when feeding
// full-automaton words to candidate automata over the same alphabet.
inline std::string canonical_name(const Rel& r) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) os << ',';
    os << '(' << r[i].first << ',' << r[i].second << ')';
  }
  os << '}';
  return os.str();
}

enum class AccType { Buchi, GenBuchi, Rabin, Streett, Muller, Parity };

inline const char* acc_type_name(AccType t) {
  switch (t) {
    case AccType::Buchi: return "buchi";
    case AccType::GenBuchi: return "genbuchi";
    case AccType::Rabin: return "rabin";
    case AccType::Streett: return "streett";
    case AccType::Muller: return "muller";
    case AccType::Parity: return "parity";
  }
  return "?";
}

struct AccPair {
  std::vector<int> G, B;
};

struct Acceptance {
  AccType type = AccType::Buchi;
  std::vector<int> buchi;                 // Buchi F
  std::vector<std::vector<int>> sets;     // GenBuchi F_i or Muller family
  std::vector<AccPair> pairs;             // Rabin / Streett
  std::vector<int> parity;                // colour per state

  static Acceptance buchi_acc(std::vector<int> f) {
    Acceptance a;
    a.type = AccType::Buchi;
    std::sort(f.begin(), f.end());
    a.buchi = std::move(f);
    return a;
  }
  static Acceptance genbuchi_acc(std::vector<std::vector<int>> fs) {
    Acceptance a;
    a.type = AccType::GenBuchi;
    a.sets = std::move(fs);
    return a;
  }
  static Acceptance rabin_acc(std::vector<AccPair> ps) {
    Acceptance a;
    a.type = AccType::Rabin;
    a.pairs = std::move(ps);
    return a;
  }
  static Acceptance streett_acc(std::vector<AccPair> ps) {
    Acceptance a;
    a.type = AccType::Streett;
    a.pairs = std::move(ps);
    return a;
  }
  static Acceptance muller_acc(std::vector<std::vector<int>> family) {
    Acceptance a;
    a.type = AccType::Muller;
    a.sets = std::move(family);
    return a;
  }
  static Acceptance parity_acc(std::vector<int> colours) {
    Acceptance a;
    a.type = AccType::Parity;
    a.parity = std::move(colours);
    return a;
  }
};

struct Automaton {
  int n = 0;                      // state count, states are 0..n-1
  std::vector<int> initial;       // initial state set
  bool implicit_full = false;     // alphabet = every relation over the states
  std::vector<Letter> alphabet;   // for named automata
  Acceptance acc;

  Mask initial_mask() const { return to_mask(initial); }
};

using FiniteWord = std::vector<Letter>;

struct LassoWord {
  FiniteWord prefix;
  FiniteWord period;  // must be non-empty
};

// ---------------------------------------------------------------------------
// validation

inline void check_rel(const Rel& r, int n, const std::string& what) {
  for (auto [p, q] : r)
    if (p < 0 || p >= n || q < 0 || q >= n)
      throw std::invalid_argument(what + ": relation pair out of range");
}

inline void validate(const Automaton& a) {
  if (a.n <= 0) throw std::invalid_argument("automaton: empty state set");
  for (int s : a.initial)
    if (s < 0 || s >= a.n) throw std::invalid_argument("automaton: bad initial state");
  std::set<std::string> names;
  for (const auto& l : a.alphabet) {
    check_rel(l.rel, a.n, "alphabet letter");
    if (!l.name.empty() && !names.insert(l.name).second)
      throw std::invalid_argument("automaton: duplicate letter name " + l.name);
  }
  auto check_set = [&](const std::vector<int>& v) {
    for (int s : v)
      if (s < 0 || s >= a.n) throw std::invalid_argument("automaton: acceptance state out of range");
  };
  switch (a.acc.type) {
    case AccType::Buchi:
      check_set(a.acc.buchi);
      break;
    case AccType::GenBuchi:
    case AccType::Muller:
      if (a.acc.type == AccType::GenBuchi && a.acc.sets.empty())
        throw std::invalid_argument("automaton: generalized Buchi index must be >= 1");
      for (const auto& s : a.acc.sets) check_set(s);
      break;
    case AccType::Rabin:
    case AccType::Streett:
      if (a.acc.pairs.empty())
        throw std::invalid_argument("automaton: Rabin/Streett index must be >= 1");
      for (const auto& p : a.acc.pairs) {
        check_set(p.G);
        check_set(p.B);
      }
      break;
    case AccType::Parity:
      if (static_cast<int>(a.acc.parity.size()) != a.n)
        throw std::invalid_argument("automaton: parity colouring must cover all states");
      for (int c : a.acc.parity)
        if (c < 0) throw std::invalid_argument("automaton: negative parity colour");
      break;
  }
}

// Resolve a word letter against an automaton's alphabet: returns the
// relation that drives transitions.
inline const Rel& resolve(const Automaton& a, const Letter& l) {
  if (a.implicit_full) {
    check_rel(l.rel, a.n, "letter");
    return l.rel;
  }
  if (!l.name.empty()) {
    for (const auto& al : a.alphabet)
      if (al.name == l.name) return al.rel;
    throw std::invalid_argument("unknown letter name: " + l.name);
  }
  for (const auto& al : a.alphabet)
    if (al.rel == l.rel) return al.rel;
  throw std::invalid_argument("letter relation not in alphabet: " + canonical_name(l.rel));
}

// successor set of `from` under relation `r`
inline Mask rel_succ(const Rel& r, Mask from) {
  Mask out = 0;
  for (auto [p, q] : r)
    if (from & bit(p)) out |= bit(q);
  return out;
}

inline Mask rel_pred(const Rel& r, Mask to) {
  Mask out = 0;
  for (auto [p, q] : r)
    if (to & bit(q)) out |= bit(p);
  return out;
}

inline bool is_deterministic(const Automaton& a) {
  if (a.initial.size() != 1) return false;
  if (a.implicit_full) return a.alphabet.empty() && false;  // full alphabets are never deterministic
  for (const auto& l : a.alphabet) {
    std::vector<int> deg(a.n, 0);
    for (auto [p, q] : l.rel) {
      (void)q;
      if (++deg[p] > 1) return false;
    }
  }
  return true;
}

inline bool is_complete(const Automaton& a) {
  if (a.implicit_full) return false;  // the empty-relation letter has no successors
  for (const auto& l : a.alphabet) {
    std::vector<int> deg(a.n, 0);
    for (auto [p, q] : l.rel) {
      (void)q;
      ++deg[p];
    }
    for (int s = 0; s < a.n; ++s)
      if (deg[s] == 0) return false;
  }
  return true;
}

// Does acceptance hold for a run with infinity set `inf` (bitmask)?
inline bool accepts_inf(const Acceptance& acc, Mask inf) {
  switch (acc.type) {
    case AccType::Buchi:
      return (inf & to_mask(acc.buchi)) != 0;
    case AccType::GenBuchi: {
      for (const auto& f : acc.sets)
        if ((inf & to_mask(f)) == 0) return false;
      return true;
    }
    case AccType::Rabin: {
      for (const auto& p : acc.pairs)
        if ((inf & to_mask(p.G)) != 0 && (inf & to_mask(p.B)) == 0) return true;
      return false;
    }
    case AccType::Streett: {
      for (const auto& p : acc.pairs)
        if ((inf & to_mask(p.B)) != 0 && (inf & to_mask(p.G)) == 0) return false;
      return true;
    }
    case AccType::Muller: {
      for (const auto& f : acc.sets)
        if (to_mask(f) == inf) return true;
      return false;
    }
    case AccType::Parity: {
      int best = -1;
      for (int s = 0; s < 64; ++s)
        if (inf & bit(s)) {
          int c = acc.parity[static_cast<std::size_t>(s)];
          if (best < 0 || c < best) best = c;
        }
      return best >= 0 && best % 2 == 0;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// common letter builders

inline Letter id_letter(Mask t, int n) {
  Letter l;
  for (int q = 0; q < n; ++q)
    if (t & bit(q)) l.rel.emplace_back(q, q);
  return l;
}

inline Letter complete_letter(int n) {
  Letter l;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) l.rel.emplace_back(p, q);
  return l;
}

// Restriction of an automaton to a named letter list (relations must be
// valid over its states).
inline Automaton restrict(const Automaton& a, const std::vector<Letter>& gamma) {
  Automaton out = a;
  out.implicit_full = false;
  out.alphabet.clear();
  std::set<std::string> names;
  for (const auto& l : gamma) {
    check_rel(l.rel, a.n, "restriction letter");
    if (!a.implicit_full) {
      // every restriction letter must already be a letter of a
      bool found = false;
      for (const auto& al : a.alphabet)
        if (al.rel == l.rel) found = true;
      if (!found)
        throw std::invalid_argument("restrict: letter not in source alphabet");
    }
    if (!l.name.empty() && !names.insert(l.name).second)
      throw std::invalid_argument("restrict: duplicate letter name");
    out.alphabet.push_back(l);
  }
  return out;
}

}  // namespace roa

#endif  // ROA_CORE_HPP
