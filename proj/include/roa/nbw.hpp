#ifndef ROA_NBW_HPP
#define ROA_NBW_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "full.hpp"
#include "member.hpp"
#include "profile.hpp"

// The Buchi lower-bound witness family: the full automaton FB_n with a
// single final state, tight rankings over its non-final states, the hard
// lasso word assembled from ranking pairs, the seven-letter restriction
// B_n, and the confusion argument against small complement candidates.

namespace roa::nbw {

// FB_n: states 0..n-1, final state n-1, all other states initial
inline Automaton gen_fb(int n) {
  if (n < 2) throw std::invalid_argument("gen_fb: n >= 2 required");
  std::vector<int> init;
  for (int s = 0; s + 1 < n; ++s) init.push_back(s);
  return full::full_automaton(n, init, Acceptance::buchi_acc({n - 1}));
}

// ---------------------------------------------------------------------------
// tight rankings over the non-final states

struct QRanking {
  int m = 0;            // tightness class: ranks in [0, 2m-1], all odd attained
  std::vector<int> r;   // rank per state 0..n-2
};

inline bool q_ranking_ok(const std::vector<int>& r, int m) {
  std::vector<char> odd_seen(static_cast<std::size_t>(m), 0);
  for (int x : r) {
    if (x < 0 || x > 2 * m - 1) return false;
    if (x % 2 == 1) odd_seen[static_cast<std::size_t>(x / 2)] = 1;
  }
  for (char c : odd_seen)
    if (!c) return false;
  return true;
}

// lexicographic enumeration over the rank vector
inline std::vector<QRanking> q_rankings(int n, int m) {
  if (n < 2 || m < 1 || m > n - 1) throw std::invalid_argument("q_rankings: need 2 <= m+1 <= n");
  std::vector<QRanking> out;
  std::vector<int> r(static_cast<std::size_t>(n) - 1, 0);
  while (true) {
    if (q_ranking_ok(r, m)) out.push_back({m, r});
    int i = static_cast<int>(r.size()) - 1;
    while (i >= 0 && r[static_cast<std::size_t>(i)] == 2 * m - 1) {
      r[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++r[static_cast<std::size_t>(i)];
  }
  return out;
}

inline long long count_q_rankings(int n, int m) {
  long long c = 0;
  std::vector<int> r(static_cast<std::size_t>(n) - 1, 0);
  while (true) {
    if (q_ranking_ok(r, m)) ++c;
    int i = static_cast<int>(r.size()) - 1;
    while (i >= 0 && r[static_cast<std::size_t>(i)] == 2 * m - 1) {
      r[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++r[static_cast<std::size_t>(i)];
  }
  return c;
}

// smallest m maximizing the ranking count
inline std::pair<int, long long> best_m(int n) {
  int best = 1;
  long long bestc = -1;
  for (int m = 1; m <= n - 1; ++m) {
    long long c = count_q_rankings(n, m);
    if (c > bestc) {
      bestc = c;
      best = m;
    }
  }
  return {best, bestc};
}

// ---------------------------------------------------------------------------
// letters of the hard word

inline Letter ttof_letter(Mask t, int n) {
  Letter l = id_letter(full_mask(n) & ~bit(n - 1), n);
  for (int q = 0; q + 1 < n; ++q)
    if (t & bit(q)) l.rel.emplace_back(q, n - 1);
  normalize(l.rel);
  return l;
}

inline Letter ftot_letter(Mask t, int n) {
  Letter l = id_letter(full_mask(n) & ~bit(n - 1), n);
  for (int q = 0; q + 1 < n; ++q)
    if (t & bit(q)) l.rel.emplace_back(n - 1, q);
  normalize(l.rel);
  return l;
}

// pairs (p,q) with f(p) = g(q), both odd
inline Letter c_letter(const QRanking& f, const QRanking& g, int n) {
  Letter l;
  for (int p = 0; p + 1 < n; ++p)
    for (int q = 0; q + 1 < n; ++q)
      if (f.r[static_cast<std::size_t>(p)] == g.r[static_cast<std::size_t>(q)] &&
          f.r[static_cast<std::size_t>(p)] % 2 == 1)
        l.rel.emplace_back(p, q);
  normalize(l.rel);
  return l;
}

inline Mask rank_set(const QRanking& h, int r) {
  Mask m = 0;
  for (std::size_t i = 0; i < h.r.size(); ++i)
    if (h.r[i] == r) m |= bit(static_cast<int>(i));
  return m;
}

// descent word of a ranking: for consecutive attained ranks r > r', route
// the r-class through the final state into the r'-class
inline FiniteWord u_word(const QRanking& h, int n) {
  std::vector<int> attained;
  for (int r = 2 * h.m - 1; r >= 0; --r)
    if (rank_set(h, r) != 0) attained.push_back(r);
  FiniteWord w;
  for (std::size_t i = 0; i + 1 < attained.size(); ++i) {
    w.push_back(ttof_letter(rank_set(h, attained[i]), n));
    w.push_back(ftot_letter(rank_set(h, attained[i + 1]), n));
  }
  return w;
}

inline FiniteWord w_word(const QRanking& f, const QRanking& g, int n) {
  FiniteWord w = u_word(f, n);
  w.push_back(c_letter(f, g, n));
  FiniteWord ug = u_word(g, n);
  w.insert(w.end(), ug.begin(), ug.end());
  return w;
}

struct HardWord {
  int n = 0;
  int m = 0;                     // chosen tightness class
  long long count = 0;           // number of rankings (period segments)
  std::vector<QRanking> rankings;
  FiniteWord period;
  std::vector<int> boundaries;   // start offset of each segment in the period
};

inline HardWord hard_word(int n) {
  if (n < 2) throw std::invalid_argument("hard_word: n >= 2 required");
  HardWord hw;
  hw.n = n;
  auto [m, c] = best_m(n);
  hw.m = m;
  hw.count = c;
  hw.rankings = q_rankings(n, m);
  for (std::size_t i = 0; i < hw.rankings.size(); ++i) {
    hw.boundaries.push_back(static_cast<int>(hw.period.size()));
    const QRanking& f = hw.rankings[i];
    const QRanking& g = hw.rankings[(i + 1) % hw.rankings.size()];
    FiniteWord seg = w_word(f, g, n);
    hw.period.insert(hw.period.end(), seg.begin(), seg.end());
  }
  // canonical names let explicit candidates over this alphabet resolve the
  // period letters by name
  for (auto& l : hw.period) l.name = canonical_name(l.rel);
  return hw;
}

// ---------------------------------------------------------------------------
// the seven-letter alphabet and gadget substitution

// letter order: rotate, clear0, swap01, copy01, 0toF, Fto0, clearF
inline std::vector<Letter> gamma(int n) {
  if (n < 2) throw std::invalid_argument("gamma: n >= 2 required");
  const int nf = n - 1;  // final state index
  const int k = n - 1;   // non-final state count
  std::vector<Letter> g(7);
  Letter& rotate = g[0];
  for (int i = 0; i + 1 < k; ++i) rotate.rel.emplace_back(i + 1, i);
  rotate.rel.emplace_back(0, k - 1);
  rotate.rel.emplace_back(nf, nf);
  normalize(rotate.rel);
  rotate.name = "rotate";
  g[1] = id_letter(full_mask(n) & ~bit(0), n);
  g[1].name = "clear0";
  Letter& swap01 = g[2];
  swap01.rel = id_letter(full_mask(n) & ~bit(nf), n).rel;
  swap01.rel.emplace_back(0, 1);
  swap01.rel.emplace_back(1, 0);
  normalize(swap01.rel);
  swap01.rel.erase(std::remove(swap01.rel.begin(), swap01.rel.end(), std::make_pair(0, 0)),
                   swap01.rel.end());
  swap01.rel.erase(std::remove(swap01.rel.begin(), swap01.rel.end(), std::make_pair(1, 1)),
                   swap01.rel.end());
  swap01.name = "swap01";
  Letter& copy01 = g[3];
  copy01.rel = id_letter(full_mask(n) & ~bit(nf), n).rel;
  copy01.rel.emplace_back(1, 0);
  normalize(copy01.rel);
  copy01.name = "copy01";
  Letter& zf = g[4];
  zf.rel = id_letter(full_mask(n), n).rel;
  zf.rel.emplace_back(0, nf);
  normalize(zf.rel);
  zf.name = "0toF";
  Letter& fz = g[5];
  fz.rel = id_letter(full_mask(n), n).rel;
  fz.rel.emplace_back(nf, 0);
  normalize(fz.rel);
  fz.name = "Fto0";
  g[6] = id_letter(full_mask(n) & ~bit(nf), n);
  g[6].name = "clearF";
  return g;
}

inline Automaton gen_b(int n) { return restrict(gen_fb(n), gamma(n)); }

namespace detail {

struct GammaKit {
  int n;
  std::vector<Letter> g;
  const Letter& rotate() const { return g[0]; }
  const Letter& clear0() const { return g[1]; }
  const Letter& swap01() const { return g[2]; }
  const Letter& copy01() const { return g[3]; }
  const Letter& zero_to_f() const { return g[4]; }
  const Letter& f_to_zero() const { return g[5]; }
  const Letter& clearf() const { return g[6]; }
  int regs() const { return n - 1; }

  void emit_rot(FiniteWord& w, int times) const {
    for (int i = 0; i < times; ++i) w.push_back(rotate());
  }
  // adjacent register transposition (k, k+1)
  void emit_adj_swap(FiniteWord& w, int k) const {
    emit_rot(w, k);
    w.push_back(swap01());
    emit_rot(w, regs() - k);
  }
  void emit_swap(FiniteWord& w, int i, int j) const {
    if (i == j) return;
    if (i > j) std::swap(i, j);
    for (int k = j - 1; k >= i; --k) emit_adj_swap(w, k);
    for (int k = i + 1; k < j; ++k) emit_adj_swap(w, k);
  }
  void emit_clear(FiniteWord& w, int i) const {
    emit_swap(w, 0, i);
    w.push_back(clear0());
    emit_swap(w, 0, i);
  }
  // r_i <- r_i union r_j
  void emit_copy(FiniteWord& w, int i, int j) const {
    std::vector<std::pair<int, int>> pi;
    if (i == 0 && j == 1) {
    } else if (i == 1 && j == 0) {
      pi = {{0, 1}};
    } else if (i == 0) {
      pi = {{1, j}};
    } else if (i == 1) {
      pi = {{0, 1}, {1, j}};
    } else if (j == 0) {
      pi = {{0, 1}, {0, i}};
    } else if (j == 1) {
      pi = {{0, i}};
    } else {
      pi = {{0, i}, {1, j}};
    }
    for (auto [x, y] : pi) emit_swap(w, x, y);
    w.push_back(copy01());
    for (auto it = pi.rbegin(); it != pi.rend(); ++it) emit_swap(w, it->first, it->second);
  }
};

// drive the register configuration from the identity to `targets`
// (targets[j] = set of source indices that must reach register j); the
// distinct non-empty targets must be pairwise disjoint
inline FiniteWord config_word(int n, const std::vector<Mask>& targets) {
  GammaKit kit{n, gamma(n)};
  const int regs = n - 1;
  if (static_cast<int>(targets.size()) != regs)
    throw std::invalid_argument("config_word: one target per register required");
  std::vector<Mask> classes;
  for (Mask t : targets) {
    if (t == 0) continue;
    if ((t & ~full_mask(regs)) != 0) throw std::invalid_argument("config_word: target out of range");
    bool seen = false;
    for (Mask c : classes) {
      if (c == t) seen = true;
      else if (c & t) throw std::invalid_argument("config_word: overlapping distinct targets");
    }
    if (!seen) classes.push_back(t);
  }
  std::vector<int> accum;  // register per class: lowest member
  std::vector<int> reg_class(static_cast<std::size_t>(regs), -1);
  for (std::size_t d = 0; d < classes.size(); ++d) {
    int a = std::countr_zero(classes[d]);
    accum.push_back(a);
    reg_class[static_cast<std::size_t>(a)] = static_cast<int>(d);
  }
  FiniteWord w;
  // stage 1: union each class into its accumulator
  for (std::size_t d = 0; d < classes.size(); ++d)
    for (int i = 0; i < regs; ++i)
      if ((classes[d] & bit(i)) && i != accum[d]) kit.emit_copy(w, accum[d], i);
  // stage 2a: non-accumulators take their final content
  auto class_of = [&](Mask t) -> int {
    for (std::size_t d = 0; d < classes.size(); ++d)
      if (classes[d] == t) return static_cast<int>(d);
    return -1;
  };
  for (int j = 0; j < regs; ++j) {
    if (reg_class[static_cast<std::size_t>(j)] >= 0) continue;
    kit.emit_clear(w, j);
    if (targets[static_cast<std::size_t>(j)] != 0)
      kit.emit_copy(w, j, accum[static_cast<std::size_t>(class_of(targets[static_cast<std::size_t>(j)]))]);
  }
  // stage 2b: accumulators, resolving read-before-write dependencies
  const int p = static_cast<int>(classes.size());
  std::vector<int> sigma(static_cast<std::size_t>(p), -1);  // class each accumulator must hold
  std::vector<int> need(static_cast<std::size_t>(p), 0);
  for (int d = 0; d < p; ++d) {
    Mask t = targets[static_cast<std::size_t>(accum[static_cast<std::size_t>(d)])];
    sigma[static_cast<std::size_t>(d)] = t == 0 ? -1 : class_of(t);
  }
  for (int d = 0; d < p; ++d)
    if (sigma[static_cast<std::size_t>(d)] >= 0 && sigma[static_cast<std::size_t>(d)] != d)
      ++need[static_cast<std::size_t>(sigma[static_cast<std::size_t>(d)])];
  std::vector<char> done(static_cast<std::size_t>(p), 0);
  std::vector<int> queue;
  for (int d = 0; d < p; ++d)
    if (sigma[static_cast<std::size_t>(d)] != d && need[static_cast<std::size_t>(d)] == 0)
      queue.push_back(d);
  while (!queue.empty()) {
    int d = queue.back();
    queue.pop_back();
    done[static_cast<std::size_t>(d)] = 1;
    kit.emit_clear(w, accum[static_cast<std::size_t>(d)]);
    int s = sigma[static_cast<std::size_t>(d)];
    if (s >= 0) {
      kit.emit_copy(w, accum[static_cast<std::size_t>(d)], accum[static_cast<std::size_t>(s)]);
      if (--need[static_cast<std::size_t>(s)] == 0 && sigma[static_cast<std::size_t>(s)] != s &&
          !done[static_cast<std::size_t>(s)])
        queue.push_back(s);
    }
  }
  // remaining unprocessed accumulators with sigma != self form cycles
  for (int d0 = 0; d0 < p; ++d0) {
    if (done[static_cast<std::size_t>(d0)] || sigma[static_cast<std::size_t>(d0)] == d0) continue;
    std::vector<int> cyc{d0};
    done[static_cast<std::size_t>(d0)] = 1;
    int cur = sigma[static_cast<std::size_t>(d0)];
    while (cur != d0) {
      cyc.push_back(cur);
      done[static_cast<std::size_t>(cur)] = 1;
      cur = sigma[static_cast<std::size_t>(cur)];
    }
    for (std::size_t i = 0; i + 1 < cyc.size(); ++i)
      kit.emit_swap(w, accum[static_cast<std::size_t>(cyc[i])],
                    accum[static_cast<std::size_t>(cyc[i + 1])]);
  }
  return w;
}

}  // namespace detail

// Gadget word over the seven letters simulating one hard-word letter, up to
// reach and reach-through-F over the non-final states.
inline FiniteWord substitute_gamma(int n, const Letter& letter) {
  const int nf = n - 1;
  detail::GammaKit kit{n, gamma(n)};
  const Rel& rel = resolve(gen_fb(n), letter);
  Rel sprime_part, into_f, from_f;
  bool f_self = false;
  for (auto [p, q] : rel) {
    if (p == nf && q == nf) f_self = true;
    else if (q == nf) into_f.emplace_back(p, q);
    else if (p == nf) from_f.emplace_back(p, q);
    else sprime_part.emplace_back(p, q);
  }
  Rel idp = id_letter(full_mask(n) & ~bit(nf), n).rel;
  if (!f_self && from_f.empty() && !into_f.empty() && sprime_part == idp) {
    // TtoF(T)
    FiniteWord w{kit.clearf()};
    for (auto [p, q] : into_f) {
      (void)q;
      kit.emit_rot(w, p);
      w.push_back(kit.zero_to_f());
      kit.emit_rot(w, kit.regs() - p);
    }
    return w;
  }
  if (!f_self && into_f.empty() && !from_f.empty() && sprime_part == idp) {
    // FtoT(T)
    FiniteWord w;
    for (auto [p, q] : from_f) {
      (void)p;
      kit.emit_rot(w, q);
      w.push_back(kit.f_to_zero());
      kit.emit_rot(w, kit.regs() - q);
    }
    w.push_back(kit.clearf());
    return w;
  }
  if (!f_self && into_f.empty() && from_f.empty()) {
    // a letter within the non-final states: realize its column configuration
    std::vector<Mask> targets(static_cast<std::size_t>(kit.regs()), 0);
    for (auto [p, q] : sprime_part) targets[static_cast<std::size_t>(q)] |= bit(p);
    FiniteWord w{kit.clearf()};  // runs parked on the final state die here, as in the original
    FiniteWord cfg = detail::config_word(n, targets);
    w.insert(w.end(), cfg.begin(), cfg.end());
    return w;
  }
  throw std::invalid_argument("substitute_gamma: unsupported letter shape");
}

inline FiniteWord gamma_word(int n, const FiniteWord& w) {
  FiniteWord out;
  for (const auto& l : w) {
    FiniteWord s = substitute_gamma(n, l);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// the confusion argument

struct ConfusionOutcome {
  bool applicable = false;        // candidate accepts the hard word
  bool candidate_rejects = false; // direct failure: hard word not accepted
  // witness (valid when applicable)
  LassoWord alpha_prime;
  LassoRun original_run;
  LassoRun rebuilt_run;
  int class_i = -1, class_j = -1;
  int q_hat = -1;
  int state_q = -1, rank_i = -1, rank_j = -1;
  bool in_fb = false;             // alpha' accepted by FB_n
  bool run_ok = false;            // rebuilt run valid
  bool occ_inf_preserved = false;
  bool accepted_by_candidate = false;

  bool verified() const { return in_fb && run_ok && occ_inf_preserved && accepted_by_candidate; }
};

inline ConfusionOutcome confuse(const Automaton& ca, int n) {
  validate(ca);
  HardWord hw = hard_word(n);
  const long long L = hw.count;
  if (ca.n >= L)
    throw std::invalid_argument("confuse: candidate must have fewer states than ranking count");
  LassoWord alpha{{}, hw.period};
  ConfusionOutcome out;
  auto runopt = find_accepting_lasso_run(ca, alpha);
  if (!runopt) {
    out.candidate_rejects = true;
    return out;
  }
  out.applicable = true;
  out.original_run = *runopt;
  const LassoRun& run = *runopt;
  const std::size_t P = hw.period.size();
  const std::size_t s = run.stem.size() - 1;      // anchor index
  const std::size_t c = run.cycle.size();         // multiple of P
  const std::size_t segs = hw.rankings.size();
  // boundary state sets per segment, collected over one cycle
  std::vector<std::vector<int>> qhat(segs);
  for (std::size_t t = s + 1; t <= s + c; ++t) {
    std::size_t pos = t % P;
    for (std::size_t i = 0; i < segs; ++i)
      if (pos == static_cast<std::size_t>(hw.boundaries[i])) {
        int st = run.state_at(t);
        auto& v = qhat[i];
        if (std::find(v.begin(), v.end(), st) == v.end()) v.push_back(st);
      }
  }
  // pigeonhole: some candidate state guards two different ranking classes
  for (std::size_t i = 0; i < segs && out.q_hat < 0; ++i)
    for (std::size_t j = 0; j < segs && out.q_hat < 0; ++j) {
      if (i == j) continue;
      for (int cand : qhat[i]) {
        if (std::find(qhat[j].begin(), qhat[j].end(), cand) == qhat[j].end()) continue;
        // need a state where the class-i ranking exceeds the class-j one
        const auto& fi = hw.rankings[i].r;
        const auto& fj = hw.rankings[j].r;
        for (std::size_t q = 0; q < fi.size(); ++q)
          if (fi[q] > fj[q]) {
            out.class_i = static_cast<int>(i);
            out.class_j = static_cast<int>(j);
            out.q_hat = cand;
            out.state_q = static_cast<int>(q);
            out.rank_i = fi[q];
            out.rank_j = fj[q];
            break;
          }
        if (out.q_hat >= 0) break;
      }
    }
  if (out.q_hat < 0)
    throw std::runtime_error("confuse: pigeonhole collision not found");  // cannot happen when |CA| < L
  // cut the run at two boundary visits of q_hat, one cycle apart or more
  auto letter_at = [&](std::size_t t) { return hw.period[t % P]; };
  std::size_t ki = static_cast<std::size_t>(hw.boundaries[static_cast<std::size_t>(out.class_i)]);
  std::size_t kj = static_cast<std::size_t>(hw.boundaries[static_cast<std::size_t>(out.class_j)]);
  std::size_t t1 = 0, t2 = 0;
  for (std::size_t t = s + c + 1; t <= s + 2 * c; ++t)
    if (t % P == ki && run.state_at(t) == out.q_hat) {
      t1 = t;
      break;
    }
  for (std::size_t t = t1 + c; t <= t1 + 2 * c; ++t)
    if (t % P == kj && run.state_at(t) == out.q_hat) {
      t2 = t;
      break;
    }
  if (t1 == 0 || t2 == 0) throw std::runtime_error("confuse: cut points not found");
  for (std::size_t t = 0; t < t1; ++t) out.alpha_prime.prefix.push_back(letter_at(t));
  for (std::size_t t = t1; t < t2; ++t) out.alpha_prime.period.push_back(letter_at(t));
  for (std::size_t t = 0; t <= t1; ++t) out.rebuilt_run.stem.push_back(run.state_at(t));
  for (std::size_t t = t1 + 1; t <= t2; ++t) out.rebuilt_run.cycle.push_back(run.state_at(t));
  // verification
  out.in_fb = lasso_member(gen_fb(n), out.alpha_prime);
  out.run_ok = lasso_run_valid(ca, out.alpha_prime, out.rebuilt_run);
  out.occ_inf_preserved =
      out.rebuilt_run.inf() == run.inf() && out.rebuilt_run.occ() == run.occ();
  out.accepted_by_candidate = accepts_inf(ca.acc, out.rebuilt_run.inf());
  return out;
}

}  // namespace roa::nbw

#endif  // ROA_NBW_HPP
