#ifndef ROA_RANK_HPP
#define ROA_RANK_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "member.hpp"

// Rank-based complementation of nondeterministic Buchi automata.  States
// are a subset phase followed by level-ranking phase pairs (g, O); the
// optional tight mode restricts the guessed rankings to tight ones.

namespace roa::rank {

// A level ranking: rank per state, -1 for undefined.  Odd ranks are
// forbidden on final states.
using LevelRanking = std::vector<int>;

inline bool ranking_tight(const LevelRanking& g) {
  int maxr = -1;
  for (int r : g) maxr = std::max(maxr, r);
  if (maxr < 1 || maxr % 2 == 0) return false;
  for (int j = 1; j <= maxr; j += 2) {
    bool attained = false;
    for (int r : g)
      if (r == j) attained = true;
    if (!attained) return false;
  }
  return true;
}

// every tight level ranking over n states (final set fmask) of tightness
// class m, ranks drawn from [0, 2m-1], all odd ranks attained; counted per m
inline std::vector<unsigned long long> count_tight(int n, Mask fmask) {
  if (n < 1 || n > 8) throw std::invalid_argument("count_tight: 1 <= n <= 8 required");
  std::vector<unsigned long long> per_m;
  for (int m = 1; m <= std::max(1, n - 1); ++m) {
    const int vals = 2 * m + 1;  // -1 (undef) plus 0..2m-1
    unsigned long long count = 0;
    std::vector<int> g(static_cast<std::size_t>(n), -1);
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(vals);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      bool ok = true;
      for (int i = 0; i < n; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<int>(c % vals) - 1;
        c /= vals;
        if (g[static_cast<std::size_t>(i)] >= 0 && g[static_cast<std::size_t>(i)] % 2 == 1 &&
            (fmask & bit(i)))
          ok = false;
      }
      if (!ok) continue;
      int maxr = -1;
      for (int r : g) maxr = std::max(maxr, r);
      if (maxr != 2 * m - 1) continue;
      if (!ranking_tight(g)) continue;
      ++count;
    }
    per_m.push_back(count);
  }
  return per_m;
}

// ---------------------------------------------------------------------------
// the complement construction, explored lazily

class RankComplement {
 public:
  struct State {
    bool ranking_phase = false;
    Mask subset = 0;     // subset phase: tracked reachable set
    LevelRanking g;      // ranking phase
    Mask odd_free = 0;   // O: even-ranked states not yet confirmed to descend
  };

  RankComplement(const Automaton& a, bool tight) : a_(a), tight_(tight) {
    validate(a);
    if (a.implicit_full || a.acc.type != AccType::Buchi)
      throw std::invalid_argument("complement_rank: explicit Buchi input required");
    if (a.n > 62) throw std::invalid_argument("complement_rank: n <= 62 required");
    fmask_ = to_mask(a.acc.buchi);
    // odd rankings with max rank 2(n - |F|) certify rejection; rank 1
    // everywhere covers the degenerate F-free case
    int nf = popcount(fmask_);
    max_rank_ = nf >= 1 ? 2 * (a.n - nf) : 1;
    if (max_rank_ < 1) max_rank_ = 1;
    rels_.reserve(a.alphabet.size());
    for (const auto& l : a.alphabet) {
      std::vector<Mask> step(static_cast<std::size_t>(a.n), 0);
      for (auto [p, q] : l.rel) step[static_cast<std::size_t>(p)] |= bit(q);
      rels_.push_back(std::move(step));
    }
    State init;
    init.subset = a.initial_mask();
    initials_.push_back(intern(init));
  }

  int num_letters() const { return static_cast<int>(rels_.size()); }
  const std::vector<int>& initials() const { return initials_; }
  bool accepting(int s) const {
    const State& st = states_[static_cast<std::size_t>(s)];
    return st.ranking_phase && st.odd_free == 0;
  }
  const State& state(int s) const { return states_[static_cast<std::size_t>(s)]; }
  int max_rank() const { return max_rank_; }
  bool tight_mode() const { return tight_; }

  const std::vector<int>& succ(int s, int letter) {
    if (succ_[static_cast<std::size_t>(s)][static_cast<std::size_t>(letter)])
      return *succ_[static_cast<std::size_t>(s)][static_cast<std::size_t>(letter)];
    std::vector<int> out;
    const State st = states_[static_cast<std::size_t>(s)];  // copy: interning may reallocate
    const auto& step = rels_[static_cast<std::size_t>(letter)];
    if (!st.ranking_phase) {
      Mask next = image(step, st.subset);
      State sub;
      sub.subset = next;
      out.push_back(intern(sub));
      // guess any (tight) level ranking over the successor set
      for (auto& g : rankings_for(next, std::nullopt, step)) {
        State rk;
        rk.ranking_phase = true;
        rk.g = g;
        rk.odd_free = 0;
        out.push_back(intern(rk));
      }
    } else {
      Mask dom = dom_mask(st.g);
      Mask next = image(step, dom);
      for (auto& g : rankings_for(next, st.g, step)) {
        Mask even = even_mask(g);
        Mask o = st.odd_free == 0 ? even : (image(step, st.odd_free) & even);
        State rk;
        rk.ranking_phase = true;
        rk.g = g;
        rk.odd_free = o;
        out.push_back(intern(rk));
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    auto& slot = succ_[static_cast<std::size_t>(s)][static_cast<std::size_t>(letter)];
    slot = std::move(out);
    return *slot;
  }

  // explore everything reachable; returns the state count
  int explore_all() {
    for (std::size_t s = 0; s < states_.size(); ++s)
      for (int l = 0; l < num_letters(); ++l) succ(static_cast<int>(s), l);
    return static_cast<int>(states_.size());
  }

  int discovered() const { return static_cast<int>(states_.size()); }

  Automaton materialize() {
    int n = explore_all();
    Automaton out;
    out.n = n;
    out.initial = initials_;
    out.implicit_full = false;
    for (std::size_t l = 0; l < rels_.size(); ++l) {
      Letter nl;
      nl.name = a_.alphabet[l].name;
      for (int s = 0; s < n; ++s)
        for (int t : succ(s, static_cast<int>(l))) nl.rel.emplace_back(s, t);
      normalize(nl.rel);
      out.alphabet.push_back(std::move(nl));
    }
    std::vector<int> fin;
    for (int s = 0; s < n; ++s)
      if (accepting(s)) fin.push_back(s);
    out.acc = Acceptance::buchi_acc(std::move(fin));
    return out;
  }

 private:
  Mask image(const std::vector<Mask>& step, Mask from) const {
    Mask out = 0;
    for (int s = 0; s < a_.n; ++s)
      if (from & bit(s)) out |= step[static_cast<std::size_t>(s)];
    return out;
  }
  static Mask dom_mask(const LevelRanking& g) {
    Mask m = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] >= 0) m |= bit(static_cast<int>(i));
    return m;
  }
  static Mask even_mask(const LevelRanking& g) {
    Mask m = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] >= 0 && g[i] % 2 == 0) m |= bit(static_cast<int>(i));
    return m;
  }

  // all level rankings with domain `dom`; when `prev` is given, ranks are
  // capped by the minimum rank over predecessors under `step`
  std::vector<LevelRanking> rankings_for(Mask dom, const std::optional<LevelRanking>& prev,
                                         const std::vector<Mask>& step) {
    std::vector<int> bound(static_cast<std::size_t>(a_.n), max_rank_);
    if (prev) {
      for (int q = 0; q < a_.n; ++q) {
        if (!(dom & bit(q))) continue;
        int b = max_rank_;
        for (int p = 0; p < a_.n; ++p)
          if ((*prev)[static_cast<std::size_t>(p)] >= 0 && (step[static_cast<std::size_t>(p)] & bit(q)))
            b = std::min(b, (*prev)[static_cast<std::size_t>(p)]);
        bound[static_cast<std::size_t>(q)] = b;
      }
    }
    std::vector<LevelRanking> out;
    LevelRanking g(static_cast<std::size_t>(a_.n), -1);
    std::vector<int> doms = from_mask(dom);
    // depth-first product over per-state rank choices
    enumerate(doms, bound, g, 0, out);
    if (tight_ && dom != 0) {
      std::vector<LevelRanking> kept;
      for (auto& r : out)
        if (ranking_tight(r)) kept.push_back(std::move(r));
      return kept;
    }
    return out;
  }

  void enumerate(const std::vector<int>& doms, const std::vector<int>& bound, LevelRanking& g,
                 std::size_t i, std::vector<LevelRanking>& out) {
    if (i == doms.size()) {
      out.push_back(g);
      return;
    }
    int q = doms[i];
    for (int r = 0; r <= bound[static_cast<std::size_t>(q)]; ++r) {
      if (r % 2 == 1 && (fmask_ & bit(q))) continue;
      g[static_cast<std::size_t>(q)] = r;
      enumerate(doms, bound, g, i + 1, out);
    }
    g[static_cast<std::size_t>(q)] = -1;
  }

  int intern(const State& st) {
    std::string key;
    key.push_back(st.ranking_phase ? 'r' : 's');
    if (!st.ranking_phase) {
      key.append(reinterpret_cast<const char*>(&st.subset), sizeof(Mask));
    } else {
      for (int r : st.g) key.push_back(static_cast<char>(r + 1));
      key.append(reinterpret_cast<const char*>(&st.odd_free), sizeof(Mask));
    }
    auto [it, fresh] = ids_.emplace(std::move(key), static_cast<int>(states_.size()));
    if (fresh) {
      states_.push_back(st);
      succ_.emplace_back(rels_.size());
    }
    return it->second;
  }

  Automaton a_;
  bool tight_;
  Mask fmask_ = 0;
  int max_rank_ = 0;
  std::vector<std::vector<Mask>> rels_;
  std::vector<State> states_;
  std::vector<std::vector<std::optional<std::vector<int>>>> succ_;
  std::map<std::string, int> ids_;
  std::vector<int> initials_;
};

inline Automaton complement_rank(const Automaton& a, bool tight) {
  RankComplement rc(a, tight);
  return rc.materialize();
}

// ---------------------------------------------------------------------------
// ranking slices: a certificate that a lasso word is rejected

struct CRankingSlice {
  // ranks[t][q] for positions t = 0 .. |prefix|+|period|; the final level
  // must repeat level |prefix|
  std::vector<LevelRanking> levels;
};

struct SliceVerdict {
  bool valid = false;
  std::string reason;
};

inline SliceVerdict validate_c_ranking(const Automaton& a, const LassoWord& w,
                                       const CRankingSlice& slice) {
  SliceVerdict v;
  if (a.acc.type != AccType::Buchi) {
    v.reason = "Buchi acceptance required";
    return v;
  }
  const std::size_t lu = w.prefix.size(), lv = w.period.size();
  if (lv == 0) {
    v.reason = "empty period";
    return v;
  }
  if (slice.levels.size() != lu + lv + 1) {
    v.reason = "slice must cover prefix + one period + wrap level";
    return v;
  }
  std::vector<Rel> rels;
  for (const auto& l : w.prefix) rels.push_back(resolve(a, l));
  for (const auto& l : w.period) rels.push_back(resolve(a, l));
  Mask fmask = to_mask(a.acc.buchi);
  // (wrap) the slice presents an ultimately periodic ranking
  if (slice.levels[lu + lv] != slice.levels[lu]) {
    v.reason = "wrap level differs from period entry level";
    return v;
  }
  // (i) defined exactly on reachable states; requires the reachable sets to
  // be periodic for this presentation of the lasso
  Mask cur = a.initial_mask();
  for (std::size_t t = 0; t <= lu + lv; ++t) {
    const LevelRanking& g = slice.levels[t];
    if (g.size() != static_cast<std::size_t>(a.n)) {
      v.reason = "ranking width mismatch";
      return v;
    }
    for (int q = 0; q < a.n; ++q) {
      bool reach = (cur & bit(q)) != 0;
      bool defined = g[static_cast<std::size_t>(q)] >= 0;
      if (reach != defined) {
        v.reason = "condition (i): defined-iff-reachable fails at level " + std::to_string(t);
        return v;
      }
      // (ii) odd ranks never sit on final states
      if (defined && g[static_cast<std::size_t>(q)] % 2 == 1 && (fmask & bit(q))) {
        v.reason = "condition (ii): odd rank on a final state";
        return v;
      }
    }
    if (t < lu + lv) cur = rel_succ(rels[t], cur);
  }
  // (iii) ranks never increase along transitions (wrap edge included via
  // the duplicated level)
  for (std::size_t t = 0; t < lu + lv; ++t) {
    const LevelRanking& g = slice.levels[t];
    const LevelRanking& h = slice.levels[t + 1];
    for (auto [p, q] : rels[t]) {
      if (g[static_cast<std::size_t>(p)] < 0 || h[static_cast<std::size_t>(q)] < 0) continue;
      if (h[static_cast<std::size_t>(q)] > g[static_cast<std::size_t>(p)]) {
        v.reason = "condition (iii): rank increases at level " + std::to_string(t);
        return v;
      }
    }
  }
  // oddness: no cycle of even rank in the period graph (by (iii) every
  // cycle has constant rank)
  const int m = static_cast<int>(lv);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(a.n) * lv);
  auto vid = [&](int q, int t) { return static_cast<std::size_t>(t) * a.n + q; };
  for (std::size_t t = 0; t < lv; ++t) {
    const LevelRanking& g = slice.levels[lu + t];
    const LevelRanking& h = slice.levels[lu + t + 1];
    for (auto [p, q] : rels[lu + t]) {
      int rp = g[static_cast<std::size_t>(p)];
      int rq = h[static_cast<std::size_t>(q)];
      if (rp < 0 || rq < 0) continue;
      if (rp != rq || rp % 2 != 0) continue;  // only even equal-rank edges can close a cycle
      adj[vid(p, static_cast<int>(t))].push_back(
          static_cast<int>(vid(q, (static_cast<int>(t) + 1) % m)));
    }
  }
  std::vector<int> comp;
  int nc = tarjan_scc(adj, comp);
  std::vector<char> has_edge(static_cast<std::size_t>(nc), 0);
  for (std::size_t x = 0; x < adj.size(); ++x)
    for (int y : adj[x])
      if (comp[static_cast<std::size_t>(y)] == comp[x]) has_edge[static_cast<std::size_t>(comp[x])] = 1;
  for (int c = 0; c < nc; ++c)
    if (has_edge[static_cast<std::size_t>(c)]) {
      v.reason = "oddness: an even-ranked cycle survives the period";
      return v;
    }
  v.valid = true;
  return v;
}

}  // namespace roa::rank

#endif  // ROA_RANK_HPP
