#ifndef ROA_NGBW_HPP
#define ROA_NGBW_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "core.hpp"
#include "member.hpp"
#include "search.hpp"

// The generalized-Buchi lower-bound machinery: the full automaton family
// FB_{n,k} with a balanced acceptance condition, pseudo level rankings,
// the segment words built from identity-edit letters, conflict checking
// over an exponent grid, and the collision extractor that refutes small
// complement candidates.

namespace roa::ngbw {

// ---------------------------------------------------------------------------
// balanced acceptance condition

// k distinct subsets of {0..n-2}, each of size floor((n-1)/2), arranged so
// that every state is avoided by at least floor(k/2) of them.  State n-1
// (the bridge state) is a member of no set.
struct StandardAcc {
  int n = 0;
  int k = 0;
  std::vector<Mask> sets;  // F_1..F_k as bitmasks over 0..n-2

  int chi(int q) const {
    int c = 0;
    for (Mask f : sets)
      if (f & bit(q)) ++c;
    return c;
  }
  int avoid_count(int q) const { return k - chi(q); }
};

inline std::int64_t binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

inline StandardAcc build_acc(int n, int k) {
  if (n < 2) throw std::invalid_argument("build_acc: n > 1 required");
  const int m = (n - 1) / 2;
  if (k <= 1 || static_cast<std::int64_t>(k) > binom(n - 1, m))
    throw std::invalid_argument("build_acc: k out of range");
  StandardAcc acc;
  acc.n = n;
  acc.k = k;
  // colex order on equal-size subsets = numeric order on bitmasks
  for (Mask s = 0; static_cast<int>(acc.sets.size()) < k; ++s) {
    if (std::popcount(s) == m && (s & ~(full_mask(n - 1))) == 0) acc.sets.push_back(s);
  }
  // swap repair: move one state from an over-covered p to an under-covered q
  auto has_set = [&](Mask f) {
    return std::find(acc.sets.begin(), acc.sets.end(), f) != acc.sets.end();
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (int p = 0; p < n - 1 && !changed; ++p)
      for (int q = 0; q < n - 1 && !changed; ++q) {
        if (acc.chi(p) - acc.chi(q) <= 1) continue;
        for (std::size_t i = 0; i < acc.sets.size() && !changed; ++i) {
          Mask f = acc.sets[i];
          if (!(f & bit(p)) || (f & bit(q))) continue;
          Mask g = (f & ~bit(p)) | bit(q);
          if (has_set(g)) continue;
          acc.sets[i] = g;
          changed = true;
        }
      }
  }
  for (int q = 0; q < n - 1; ++q)
    if (acc.avoid_count(q) < k / 2) throw std::logic_error("build_acc: balance repair failed");
  return acc;
}

inline Automaton gen_fb_nk(int n, int k) {
  StandardAcc acc = build_acc(n, k);
  std::vector<std::vector<int>> fs;
  for (Mask f : acc.sets) fs.push_back(from_mask(f));
  Automaton a;
  a.n = n;
  a.implicit_full = true;
  a.initial.resize(static_cast<std::size_t>(n));
  std::iota(a.initial.begin(), a.initial.end(), 0);
  a.acc = Acceptance::genbuchi_acc(std::move(fs));
  validate(a);
  return a;
}

// GenBuchi -> Streett without changing the language: one pair <F_i, S> per set
inline Automaton genbuchi_to_streett(const Automaton& a) {
  if (a.acc.type != AccType::GenBuchi)
    throw std::invalid_argument("genbuchi_to_streett: GenBuchi input required");
  std::vector<int> all(static_cast<std::size_t>(a.n));
  std::iota(all.begin(), all.end(), 0);
  std::vector<AccPair> ps;
  for (const auto& f : a.acc.sets) ps.push_back({f, all});
  Automaton out = a;
  out.acc = Acceptance::streett_acc(std::move(ps));
  return out;
}

// ---------------------------------------------------------------------------
// pseudo level rankings

// f: bijection over the non-bridge states onto {1..n-1}; g picks, for each
// state, one acceptance set avoiding it.
struct PGCLRanking {
  std::vector<int> f;  // per state 0..n-2, values 1..n-1, bijective
  std::vector<int> g;  // per state 0..n-2, values 1..k

  int state_of_rank(int r) const {
    for (std::size_t q = 0; q < f.size(); ++q)
      if (f[q] == r) return static_cast<int>(q);
    throw std::invalid_argument("rank out of range");
  }
};

inline bool pgcl_valid(const PGCLRanking& rk, const StandardAcc& acc) {
  const std::size_t sz = static_cast<std::size_t>(acc.n - 1);
  if (rk.f.size() != sz || rk.g.size() != sz) return false;
  std::vector<char> seen(sz + 1, 0);
  for (int v : rk.f) {
    if (v < 1 || v > acc.n - 1 || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t q = 0; q < sz; ++q) {
    int gi = rk.g[q];
    if (gi < 1 || gi > acc.k) return false;
    if (acc.sets[static_cast<std::size_t>(gi) - 1] & bit(static_cast<int>(q))) return false;
  }
  return true;
}

// exact count: g is unconstrained by f, so choices multiply
inline std::int64_t pgcl_count(const StandardAcc& acc) {
  std::int64_t c = 1;
  for (int r = 2; r <= acc.n - 1; ++r) c *= r;
  for (int q = 0; q < acc.n - 1; ++q) c *= acc.avoid_count(q);
  return c;
}

inline std::int64_t pgcl_lower_bound(int n, int k) {
  std::int64_t c = 1;
  for (int r = 2; r <= n - 1; ++r) c *= r;
  for (int q = 0; q < n - 1; ++q) c *= k / 2;
  return c;
}

// f outer (lexicographic over the value vector), g inner (odometer)
inline std::vector<PGCLRanking> pgcl_enumerate(const StandardAcc& acc) {
  const std::size_t sz = static_cast<std::size_t>(acc.n - 1);
  std::vector<std::vector<int>> gchoices(sz);
  for (std::size_t q = 0; q < sz; ++q) {
    for (int i = 1; i <= acc.k; ++i)
      if (!(acc.sets[static_cast<std::size_t>(i) - 1] & bit(static_cast<int>(q))))
        gchoices[q].push_back(i);
    if (gchoices[q].empty()) throw std::logic_error("pgcl_enumerate: state avoided by no set");
  }
  std::vector<int> f(sz);
  std::iota(f.begin(), f.end(), 1);
  std::vector<PGCLRanking> out;
  do {
    std::vector<std::size_t> pick(sz, 0);
    while (true) {
      PGCLRanking rk;
      rk.f = f;
      rk.g.resize(sz);
      for (std::size_t q = 0; q < sz; ++q) rk.g[q] = gchoices[q][pick[q]];
      out.push_back(std::move(rk));
      std::size_t q = sz;
      while (q > 0 && pick[q - 1] + 1 == gchoices[q - 1].size()) pick[--q] = 0;
      if (q == 0) break;
      ++pick[q - 1];
    }
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

// ---------------------------------------------------------------------------
// segment words

namespace detail {

// Identity on the non-bridge states, edited by added and removed pairs.
// When a pair appears on both lists (possible when the auxiliary state
// coincides with a principal one), `removes_win` decides which edit
// survives; each block below picks the order that keeps its intended run
// structure.
inline Letter edit_letter(int n, const Rel& adds, const Rel& removes, bool removes_win) {
  Letter l = id_letter(full_mask(n) & ~bit(n - 1), n);
  if (removes_win) {
    for (auto ab : adds) l.rel.push_back(ab);
    normalize(l.rel);
    Rel kept;
    for (auto ab : l.rel)
      if (std::find(removes.begin(), removes.end(), ab) == removes.end()) kept.push_back(ab);
    l.rel = std::move(kept);
  } else {
    Rel kept;
    for (auto ab : l.rel)
      if (std::find(removes.begin(), removes.end(), ab) == removes.end()) kept.push_back(ab);
    l.rel = std::move(kept);
    for (auto ab : adds) l.rel.push_back(ab);
    normalize(l.rel);
  }
  // canonical names let explicit candidates over this alphabet resolve the
  // segment letters by name
  l.name = canonical_name(l.rel);
  return l;
}

inline int least_member(Mask m) {
  if (m == 0) throw std::logic_error("least_member: empty set");
  return std::countr_zero(m);
}

}  // namespace detail

// detour block: the rank-r state visits every acceptance set except the one
// it avoids, everything else holds its position
inline FiniteWord u_word(const StandardAcc& acc, const PGCLRanking& rk, int r) {
  const int n = acc.n;
  const int nf = n - 1;
  const int p = rk.state_of_rank(r);
  const Mask fp = acc.sets[static_cast<std::size_t>(rk.g[static_cast<std::size_t>(p)]) - 1];
  FiniteWord w;
  for (int i = 1; i <= acc.k; ++i) {
    if (i == rk.g[static_cast<std::size_t>(p)]) continue;
    Mask diff = acc.sets[static_cast<std::size_t>(i) - 1] & ~fp;
    if (diff == 0) throw std::logic_error("u_word: acceptance sets not distinct");
    const int s = detail::least_member(diff);
    w.push_back(detail::edit_letter(n, {{p, s}, {s, nf}}, {{p, p}, {s, s}}, true));
    w.push_back(detail::edit_letter(n, {{s, p}, {nf, s}}, {{p, p}, {s, s}}, true));
  }
  return w;
}

// descent block: the rank-r state drops to rank r-1 through the set it
// avoids, everything else holds its position
inline FiniteWord v_word(const StandardAcc& acc, const PGCLRanking& rk, int r) {
  const int n = acc.n;
  const int nf = n - 1;
  const int p = rk.state_of_rank(r);
  const int q = rk.state_of_rank(r - 1);
  const Mask fp = acc.sets[static_cast<std::size_t>(rk.g[static_cast<std::size_t>(p)]) - 1];
  // any member of F_{g(p)} works as the waypoint; avoid q when possible so
  // the two letters stay collision-free
  const Mask pref = fp & ~bit(q);
  const int s = detail::least_member(pref != 0 ? pref : fp);
  FiniteWord w;
  w.push_back(detail::edit_letter(n, {{p, s}, {s, nf}}, {{s, s}}, true));
  w.push_back(detail::edit_letter(n, {{s, q}, {nf, s}}, {{s, s}}, false));
  return w;
}

inline FiniteWord seg_word(const StandardAcc& acc, const PGCLRanking& rk) {
  if (!pgcl_valid(rk, acc)) throw std::invalid_argument("seg_word: invalid ranking");
  FiniteWord w;
  for (int r = acc.n - 1; r >= 2; --r) {
    FiniteWord u = u_word(acc, rk, r);
    w.insert(w.end(), u.begin(), u.end());
    FiniteWord v = v_word(acc, rk, r);
    w.insert(w.end(), v.begin(), v.end());
  }
  FiniteWord u1 = u_word(acc, rk, 1);
  w.insert(w.end(), u1.begin(), u1.end());
  return w;
}

inline std::vector<FiniteWord> all_seg_words(const StandardAcc& acc) {
  std::vector<FiniteWord> out;
  for (const auto& rk : pgcl_enumerate(acc)) out.push_back(seg_word(acc, rk));
  return out;
}

// distinct letters appearing across every segment word for this condition
inline std::size_t seg_alphabet_size(const StandardAcc& acc) {
  std::vector<Rel> rels;
  for (const auto& w : all_seg_words(acc))
    for (const auto& l : w)
      if (std::find(rels.begin(), rels.end(), l.rel) == rels.end()) rels.push_back(l.rel);
  return rels.size();
}

// ---------------------------------------------------------------------------
// segment and conflict checks

inline bool is_gc_segment(const Automaton& b, const FiniteWord& w) {
  if (w.empty()) throw std::invalid_argument("is_gc_segment: empty word");
  return !lasso_member(b, LassoWord{{}, w});
}

inline FiniteWord repeat_word(const FiniteWord& w, int k) {
  FiniteWord out;
  out.reserve(w.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

struct ConflictEvidence {
  bool conflict = false;
  struct Cell {
    int k0 = 0, k1 = 0, k2 = 0;
    bool accepted = false;
    std::optional<LassoRun> witness;  // present when a concrete run was extracted
  };
  std::vector<Cell> cells;
};

// check acceptance of w1^k0 (w1^k1 w2^k2)^w for every exponent triple from
// the grid (default {1,2}^3)
inline ConflictEvidence conflict_check(const Automaton& b, const FiniteWord& w1,
                                       const FiniteWord& w2,
                                       const std::vector<int>& exponents = {1, 2}) {
  if (w1 == w2) throw std::invalid_argument("conflict_check: segments must be distinct");
  for (int e : exponents)
    if (e <= 0) throw std::invalid_argument("conflict_check: exponents must be positive");
  ConflictEvidence ev;
  ev.conflict = true;
  for (int k0 : exponents)
    for (int k1 : exponents)
      for (int k2 : exponents) {
        LassoWord alpha;
        alpha.prefix = repeat_word(w1, k0);
        alpha.period = repeat_word(w1, k1);
        FiniteWord tail = repeat_word(w2, k2);
        alpha.period.insert(alpha.period.end(), tail.begin(), tail.end());
        ConflictEvidence::Cell cell{k0, k1, k2, false, std::nullopt};
        if (b.n <= 20) {
          cell.witness = find_accepting_lasso_run(b, alpha);
          cell.accepted = cell.witness.has_value();
        } else {
          cell.accepted = lasso_member(b, alpha);
        }
        if (!cell.accepted) ev.conflict = false;
        ev.cells.push_back(std::move(cell));
      }
  return ev;
}

struct ConflictCertificate {
  bool certified = false;
  std::size_t bound = 0;  // |W| when certified
  std::size_t segments_checked = 0;
  std::size_t pairs_checked = 0;
  std::vector<std::size_t> gc_failures;                 // indices into W
  std::vector<std::pair<std::size_t, std::size_t>> conflict_failures;  // ordered pairs
};

// The certified bound applies to any complement of b in a class whose
// acceptance is preserved under unions of infinity sets (generalized Buchi,
// Streett), and transfers to deterministic Rabin acceptors of L(b) by
// dualization.
inline ConflictCertificate certify_conflict_set(const Automaton& b,
                                                const std::vector<FiniteWord>& ws,
                                                const std::vector<int>& exponents = {1, 2}) {
  if (ws.empty()) throw std::invalid_argument("certify_conflict_set: empty segment set");
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j)
      if (ws[i] == ws[j]) throw std::invalid_argument("certify_conflict_set: duplicate segment");
  ConflictCertificate cert;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    ++cert.segments_checked;
    if (!is_gc_segment(b, ws[i])) cert.gc_failures.push_back(i);
  }
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = 0; j < ws.size(); ++j) {
      if (i == j) continue;
      ++cert.pairs_checked;
      if (!conflict_check(b, ws[i], ws[j], exponents).conflict)
        cert.conflict_failures.emplace_back(i, j);
    }
  if (cert.gc_failures.empty() && cert.conflict_failures.empty()) {
    cert.certified = true;
    cert.bound = ws.size();
  }
  return cert;
}

// ---------------------------------------------------------------------------
// collision extraction against a candidate complement

struct CollisionOutcome {
  enum class Kind { Collision, NoCollision, DirectFailure } kind = Kind::NoCollision;
  int direct_failure_index = 0;  // 1 or 2: candidate rejects that segment's power
  int q_hat = -1;                // shared boundary state of the two runs
  int k0 = 0, k1 = 0, k2 = 0;
  LassoWord alpha;               // w1^k0 (w1^k1 w2^k2)^w
  bool candidate_accepts = false;
  bool base_accepts = false;

  bool verified() const {
    return kind == Kind::Collision && candidate_accepts && base_accepts;
  }
};

namespace detail {

// states hit at word-boundary positions, once the run has entered its cycle
inline std::vector<int> boundary_states(const LassoRun& run, std::size_t block_len) {
  std::vector<int> out;
  const std::size_t start = run.stem.size();
  const std::size_t c = run.cycle.size();
  for (std::size_t t = start; t < start + c; ++t) {
    if (t % block_len != 0) continue;
    int s = run.state_at(t);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

}  // namespace detail

// Two accepting runs of the candidate over w1^w and w2^w that share a
// word-boundary state can be spliced into a run over a word that the base
// automaton also accepts (when w1 and w2 conflict), refuting the candidate.
inline CollisionOutcome collision_extract(const Automaton& candidate, const Automaton& base,
                                          const FiniteWord& w1, const FiniteWord& w2) {
  if (candidate.acc.type != AccType::GenBuchi && candidate.acc.type != AccType::Streett)
    throw std::invalid_argument("collision_extract: GenBuchi or Streett candidate required");
  if (w1.empty() || w2.empty()) throw std::invalid_argument("collision_extract: empty segment");
  CollisionOutcome out;
  auto run1 = find_accepting_lasso_run(candidate, LassoWord{{}, w1});
  if (!run1) {
    out.kind = CollisionOutcome::Kind::DirectFailure;
    out.direct_failure_index = 1;
    return out;
  }
  auto run2 = find_accepting_lasso_run(candidate, LassoWord{{}, w2});
  if (!run2) {
    out.kind = CollisionOutcome::Kind::DirectFailure;
    out.direct_failure_index = 2;
    return out;
  }
  const std::size_t l1 = w1.size(), l2 = w2.size();
  std::vector<int> q1 = detail::boundary_states(*run1, l1);
  std::vector<int> q2 = detail::boundary_states(*run2, l2);
  int qh = -1;
  for (int s : q1)
    if (std::find(q2.begin(), q2.end(), s) != q2.end()) {
      qh = s;
      break;
    }
  if (qh < 0) return out;  // NoCollision

  // first boundary hit of qh after the stem; k0 counts whole w1 blocks
  const std::size_t c1 = run1->cycle.size();
  std::size_t t0 = run1->stem.size();
  while (t0 % l1 != 0 || run1->state_at(t0) != qh) ++t0;
  out.kind = CollisionOutcome::Kind::Collision;
  out.q_hat = qh;
  out.k0 = static_cast<int>(t0 / l1);
  out.k1 = static_cast<int>(c1 / l1);  // one full cycle covers Inf(run1)
  out.k2 = static_cast<int>(run2->cycle.size() / l2);
  out.alpha.prefix = repeat_word(w1, out.k0);
  out.alpha.period = repeat_word(w1, out.k1);
  FiniteWord tail = repeat_word(w2, out.k2);
  out.alpha.period.insert(out.alpha.period.end(), tail.begin(), tail.end());
  out.candidate_accepts = lasso_member(candidate, out.alpha);
  out.base_accepts = lasso_member(base, out.alpha);
  return out;
}

}  // namespace roa::ngbw

#endif  // ROA_NGBW_HPP
