#ifndef ROA_MEMBER_HPP
#define ROA_MEMBER_HPP

#include <cstdint>
#include <optional>
#include <queue>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "core.hpp"
#include "profile.hpp"

// Membership of ultimately periodic words, emptiness, degeneralization and
// product-based run extraction.  Small automata (n <= 64) use the profile
// monoid for Buchi; everything else runs on an explicit product graph over
// period positions.

namespace roa {

// ---------------------------------------------------------------------------
// iterative Tarjan over plain adjacency; returns component id per vertex,
// components numbered in reverse topological order of discovery
inline int tarjan_scc(const std::vector<std::vector<int>>& adj, std::vector<int>& comp) {
  const int n = static_cast<int>(adj.size());
  comp.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  int next_index = 0, next_comp = 0;
  struct Frame {
    int v;
    std::size_t child;
  };
  std::vector<Frame> call;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& fr = call.back();
      int v = fr.v;
      if (fr.child == 0) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      bool descended = false;
      while (fr.child < adj[static_cast<std::size_t>(v)].size()) {
        int w = adj[static_cast<std::size_t>(v)][fr.child++];
        if (index[w] == -1) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      if (low[v] == index[v]) {
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = next_comp;
          if (w == v) break;
        }
        ++next_comp;
      }
      call.pop_back();
      if (!call.empty()) {
        int parent = call.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return next_comp;
}

// ---------------------------------------------------------------------------
// degeneralization (source-indexed counter; k=1 is isomorphic modulo the
// counter).  Input must have an explicit alphabet.
inline Automaton degeneralize(const Automaton& a) {
  if (a.acc.type != AccType::GenBuchi)
    throw std::invalid_argument("degeneralize: generalized Buchi input required");
  if (a.implicit_full)
    throw std::invalid_argument("degeneralize: explicit alphabet required");
  validate(a);
  const int k = static_cast<int>(a.acc.sets.size());
  std::vector<std::vector<char>> fs(a.acc.sets.size(), std::vector<char>(static_cast<std::size_t>(a.n), 0));
  for (std::size_t i = 0; i < a.acc.sets.size(); ++i)
    for (int q : a.acc.sets[i]) fs[i][static_cast<std::size_t>(q)] = 1;
  auto enc = [&](int q, int i) { return q * k + i; };
  auto step = [&](int q, int i) { return fs[static_cast<std::size_t>(i)][static_cast<std::size_t>(q)] ? (i + 1) % k : i; };
  Automaton d;
  d.n = a.n * k;
  for (int q : a.initial) d.initial.push_back(enc(q, 0));
  d.implicit_full = false;
  for (const auto& l : a.alphabet) {
    Letter nl;
    nl.name = l.name;
    for (auto [p, q] : l.rel)
      for (int i = 0; i < k; ++i) nl.rel.emplace_back(enc(p, i), enc(q, step(p, i)));
    normalize(nl.rel);
    d.alphabet.push_back(std::move(nl));
  }
  std::vector<int> fin;
  for (int q = 0; q < a.n; ++q)
    if (fs[static_cast<std::size_t>(k) - 1][static_cast<std::size_t>(q)]) fin.push_back(enc(q, k - 1));
  d.acc = Acceptance::buchi_acc(std::move(fin));
  return d;
}

// Explicit restriction of any automaton to the distinct letters of a word;
// lets implicit-full automata be degeneralized or product-checked against
// one word without materializing their alphabet.
inline std::pair<Automaton, std::vector<int>> restrict_to_word(const Automaton& a,
                                                               const FiniteWord& w) {
  Automaton r = a;
  r.implicit_full = false;
  r.alphabet.clear();
  std::vector<int> indices;
  for (const auto& l : w) {
    const Rel& rel = resolve(a, l);
    int found = -1;
    for (std::size_t i = 0; i < r.alphabet.size(); ++i)
      if (r.alphabet[i].rel == rel) found = static_cast<int>(i);
    if (found < 0) {
      Letter nl;
      nl.rel = rel;
      nl.name = l.name.empty() ? "w" + std::to_string(r.alphabet.size()) : l.name;
      r.alphabet.push_back(std::move(nl));
      found = static_cast<int>(r.alphabet.size()) - 1;
    }
    indices.push_back(found);
  }
  return {std::move(r), std::move(indices)};
}

// ---------------------------------------------------------------------------
// views: adjacency-indexed interface shared by explicit automata and
// lazily-built complements

class AutomatonView {
 public:
  explicit AutomatonView(const Automaton& a) : a_(&a) {
    if (a.implicit_full) throw std::invalid_argument("view: explicit alphabet required");
    if (a.acc.type != AccType::Buchi) throw std::invalid_argument("view: Buchi acceptance required");
    adj_.assign(a.alphabet.size(), {});
    for (std::size_t l = 0; l < a.alphabet.size(); ++l) {
      adj_[l].assign(static_cast<std::size_t>(a.n), {});
      for (auto [p, q] : a.alphabet[l].rel) adj_[l][static_cast<std::size_t>(p)].push_back(q);
    }
    acc_.assign(static_cast<std::size_t>(a.n), 0);
    for (int f : a.acc.buchi) acc_[static_cast<std::size_t>(f)] = 1;
  }
  int num_letters() const { return static_cast<int>(adj_.size()); }
  const std::vector<int>& initials() const { return a_->initial; }
  const std::vector<int>& succ(int s, int l) {
    return adj_[static_cast<std::size_t>(l)][static_cast<std::size_t>(s)];
  }
  bool accepting(int s) const { return acc_[static_cast<std::size_t>(s)] != 0; }

 private:
  const Automaton* a_;
  std::vector<std::vector<std::vector<int>>> adj_;
  std::vector<char> acc_;
};

// Buchi membership of prefix(period)^w on a view, by SCC analysis of the
// (state, period position) product restricted to what is reachable.
template <class V>
bool buchi_lasso_member_view(V& v, const std::vector<int>& prefix, const std::vector<int>& period) {
  if (period.empty()) throw std::invalid_argument("lasso: empty period");
  const int m = static_cast<int>(period.size());
  std::unordered_set<int> layer(v.initials().begin(), v.initials().end());
  for (int l : prefix) {
    std::unordered_set<int> next;
    for (int s : layer)
      for (int t : v.succ(s, l)) next.insert(t);
    layer = std::move(next);
    if (layer.empty()) return false;
  }
  // product BFS
  std::unordered_map<std::int64_t, int> id;
  std::vector<std::pair<int, int>> vert;  // (state, pos)
  std::vector<std::vector<int>> adj;
  auto key = [&](int s, int pos) { return static_cast<std::int64_t>(s) * m + pos; };
  std::queue<int> bfs;
  auto intern = [&](int s, int pos) {
    auto [it, fresh] = id.emplace(key(s, pos), static_cast<int>(vert.size()));
    if (fresh) {
      vert.emplace_back(s, pos);
      adj.emplace_back();
      bfs.push(it->second);
    }
    return it->second;
  };
  for (int s : layer) intern(s, 0);
  while (!bfs.empty()) {
    int x = bfs.front();
    bfs.pop();
    auto [s, pos] = vert[static_cast<std::size_t>(x)];
    for (int t : v.succ(s, period[static_cast<std::size_t>(pos)])) {
      int y = intern(t, (pos + 1) % m);
      adj[static_cast<std::size_t>(x)].push_back(y);
    }
  }
  std::vector<int> comp;
  int nc = tarjan_scc(adj, comp);
  std::vector<char> has_edge(static_cast<std::size_t>(nc), 0), has_acc(static_cast<std::size_t>(nc), 0);
  for (std::size_t x = 0; x < adj.size(); ++x) {
    for (int y : adj[x])
      if (comp[static_cast<std::size_t>(y)] == comp[x]) has_edge[static_cast<std::size_t>(comp[x])] = 1;
    if (v.accepting(vert[x].first)) has_acc[static_cast<std::size_t>(comp[x])] = 1;
  }
  for (int c = 0; c < nc; ++c)
    if (has_edge[static_cast<std::size_t>(c)] && has_acc[static_cast<std::size_t>(c)]) return true;
  return false;
}

// Buchi emptiness of a view (BFS over every letter + SCC).
template <class V>
bool buchi_empty_view(V& v) {
  std::vector<std::vector<int>> adj;
  std::unordered_map<int, int> id;
  std::vector<int> states;
  std::queue<int> bfs;
  auto intern = [&](int s) {
    auto [it, fresh] = id.emplace(s, static_cast<int>(states.size()));
    if (fresh) {
      states.push_back(s);
      adj.emplace_back();
      bfs.push(it->second);
    }
    return it->second;
  };
  for (int s : v.initials()) intern(s);
  while (!bfs.empty()) {
    int x = bfs.front();
    bfs.pop();
    int s = states[static_cast<std::size_t>(x)];
    for (int l = 0; l < v.num_letters(); ++l)
      for (int t : v.succ(s, l)) {
        int y = intern(t);  // may grow adj; index afterwards
        adj[static_cast<std::size_t>(x)].push_back(y);
      }
  }
  std::vector<int> comp;
  int nc = tarjan_scc(adj, comp);
  std::vector<char> has_edge(static_cast<std::size_t>(nc), 0), has_acc(static_cast<std::size_t>(nc), 0);
  for (std::size_t x = 0; x < adj.size(); ++x) {
    for (int y : adj[x])
      if (comp[static_cast<std::size_t>(y)] == comp[x]) has_edge[static_cast<std::size_t>(comp[x])] = 1;
    if (v.accepting(states[x])) has_acc[static_cast<std::size_t>(comp[x])] = 1;
  }
  for (int c = 0; c < nc; ++c)
    if (has_edge[static_cast<std::size_t>(c)] && has_acc[static_cast<std::size_t>(c)]) return false;
  return true;
}

// Emptiness of L(a) cap L(b) for Buchi a (explicit) and Buchi view b whose
// letter indexing is given by letter_map[a-letter] = b-letter.  Exact: the
// reachable product is explored in full.
template <class V>
bool intersect_empty_with(const Automaton& a, V& bv, const std::vector<int>& letter_map) {
  if (a.acc.type != AccType::Buchi || a.implicit_full)
    throw std::invalid_argument("intersect_empty: explicit Buchi required");
  AutomatonView av(a);
  // product with a two-stage counter: 0 awaits an a-final, 1 awaits a b-final
  struct PState {
    int s, t, flag;
  };
  std::unordered_map<std::int64_t, int> id;
  std::vector<PState> vert;
  std::vector<std::vector<int>> adj;
  std::queue<int> bfs;
  auto key = [&](int s, int t, int f) {
    return ((static_cast<std::int64_t>(s) * 2000003) + t) * 2 + f;
  };
  auto intern = [&](int s, int t, int f) {
    auto [it, fresh] = id.emplace(key(s, t, f), static_cast<int>(vert.size()));
    if (fresh) {
      vert.push_back({s, t, f});
      adj.emplace_back();
      bfs.push(it->second);
    }
    return it->second;
  };
  for (int s : a.initial)
    for (int t : bv.initials()) intern(s, t, 0);
  std::vector<char> accepting;
  while (!bfs.empty()) {
    int x = bfs.front();
    bfs.pop();
    PState ps = vert[static_cast<std::size_t>(x)];
    int nf = ps.flag == 0 ? (av.accepting(ps.s) ? 1 : 0) : (bv.accepting(ps.t) ? 0 : 1);
    for (int l = 0; l < av.num_letters(); ++l) {
      int bl = letter_map[static_cast<std::size_t>(l)];
      for (int s2 : av.succ(ps.s, l))
        for (int t2 : bv.succ(ps.t, bl)) {
          int y = intern(s2, t2, nf);  // may grow adj; index afterwards
          adj[static_cast<std::size_t>(x)].push_back(y);
        }
    }
  }
  std::vector<int> comp;
  int nc = tarjan_scc(adj, comp);
  std::vector<char> has_edge(static_cast<std::size_t>(nc), 0), has_acc(static_cast<std::size_t>(nc), 0);
  for (std::size_t x = 0; x < adj.size(); ++x) {
    for (int y : adj[x])
      if (comp[static_cast<std::size_t>(y)] == comp[x]) has_edge[static_cast<std::size_t>(comp[x])] = 1;
    if (vert[x].flag == 1 && bv.accepting(vert[x].t)) has_acc[static_cast<std::size_t>(comp[x])] = 1;
  }
  for (int c = 0; c < nc; ++c)
    if (has_edge[static_cast<std::size_t>(c)] && has_acc[static_cast<std::size_t>(c)]) return false;
  return true;
}

inline bool intersect_empty(const Automaton& a, const Automaton& b) {
  if (b.acc.type != AccType::Buchi || b.implicit_full)
    throw std::invalid_argument("intersect_empty: explicit Buchi required");
  std::vector<int> letter_map;
  for (const auto& l : a.alphabet) {
    int found = -1;
    for (std::size_t i = 0; i < b.alphabet.size(); ++i)
      if (b.alphabet[i].name == l.name) found = static_cast<int>(i);
    if (found < 0) throw std::invalid_argument("intersect_empty: alphabet mismatch at " + l.name);
    letter_map.push_back(found);
  }
  AutomatonView bv(b);
  return intersect_empty_with(a, bv, letter_map);
}

// ---------------------------------------------------------------------------
// lasso membership

namespace detail {

// Buchi via the profile monoid: accepted iff some state q reachable from
// the prefix image via v^* lies on a v^+ cycle through F.
inline bool buchi_lasso_profile(const Automaton& a, const LassoWord& w, Mask fmask) {
  Mask r0 = word_image(a, a.initial_mask(), w.prefix);
  if (r0 == 0) return false;
  Profile p = transition_profile(a, w.period, {fmask});
  Profile cl = p;
  while (true) {
    Profile next = profile_union(cl, compose(cl, p));
    if (next == cl) break;
    cl = std::move(next);
  }
  Mask candidates = r0;
  for (int s = 0; s < a.n; ++s)
    if (r0 & bit(s)) candidates |= cl.reach[s];
  for (int q = 0; q < a.n; ++q)
    if ((candidates & bit(q)) && cl.reaches_through(q, q, 0)) return true;
  return false;
}

struct ProductGraph {
  int m = 0;  // period length
  std::vector<std::pair<int, int>> vert;  // (state, pos)
  std::vector<std::vector<int>> adj;
  std::unordered_map<std::int64_t, int> id;

  int find(int s, int pos) const {
    auto it = id.find(static_cast<std::int64_t>(s) * m + pos);
    return it == id.end() ? -1 : it->second;
  }
};

// reachable (state, position) product over one period from the prefix image
inline ProductGraph build_product(const Automaton& a, const LassoWord& w,
                                  const std::vector<char>& r0) {
  ProductGraph g;
  g.m = static_cast<int>(w.period.size());
  std::vector<Rel> rels;
  for (const auto& l : w.period) rels.push_back(resolve(a, l));
  std::queue<int> bfs;
  auto intern = [&](int s, int pos) {
    auto [it, fresh] = g.id.emplace(static_cast<std::int64_t>(s) * g.m + pos,
                                    static_cast<int>(g.vert.size()));
    if (fresh) {
      g.vert.emplace_back(s, pos);
      g.adj.emplace_back();
      bfs.push(it->second);
    }
    return it->second;
  };
  for (int s = 0; s < a.n; ++s)
    if (r0[static_cast<std::size_t>(s)]) intern(s, 0);
  while (!bfs.empty()) {
    int x = bfs.front();
    bfs.pop();
    auto [s, pos] = g.vert[static_cast<std::size_t>(x)];
    for (auto [p, q] : rels[static_cast<std::size_t>(pos)])
      if (p == s) {
        int y = intern(q, (pos + 1) % g.m);  // may grow g.adj; index afterwards
        g.adj[static_cast<std::size_t>(x)].push_back(y);
      }
  }
  return g;
}

// Can some reachable closed walk have state projection exactly T, and if so
// return one strongly connected witness vertex set.
inline std::optional<std::vector<int>> achievable_exactly(const ProductGraph& g, Mask t) {
  std::vector<int> keep(g.vert.size(), 0);
  std::vector<int> sub_ids(g.vert.size(), -1);
  std::vector<int> verts;
  for (std::size_t x = 0; x < g.vert.size(); ++x)
    if (t & bit(g.vert[x].first)) {
      sub_ids[x] = static_cast<int>(verts.size());
      verts.push_back(static_cast<int>(x));
    }
  std::vector<std::vector<int>> sub(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (int y : g.adj[static_cast<std::size_t>(verts[i])])
      if (sub_ids[static_cast<std::size_t>(y)] >= 0)
        sub[i].push_back(sub_ids[static_cast<std::size_t>(y)]);
  std::vector<int> comp;
  int nc = tarjan_scc(sub, comp);
  std::vector<Mask> proj(static_cast<std::size_t>(nc), 0);
  std::vector<char> has_edge(static_cast<std::size_t>(nc), 0);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    proj[static_cast<std::size_t>(comp[i])] |= bit(g.vert[static_cast<std::size_t>(verts[i])].first);
    for (int y : sub[i])
      if (comp[static_cast<std::size_t>(y)] == comp[i]) has_edge[static_cast<std::size_t>(comp[i])] = 1;
  }
  for (int c = 0; c < nc; ++c) {
    if (!has_edge[static_cast<std::size_t>(c)] || proj[static_cast<std::size_t>(c)] != t) continue;
    std::vector<int> u;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (comp[i] == c) u.push_back(verts[i]);
    return u;
  }
  return std::nullopt;
}

}  // namespace detail

inline bool lasso_member(const Automaton& a, const LassoWord& w) {
  if (w.period.empty()) throw std::invalid_argument("lasso: empty period");
  validate(a);
  switch (a.acc.type) {
    case AccType::Buchi: {
      if (a.n <= 64) return detail::buchi_lasso_profile(a, w, to_mask(a.acc.buchi));
      FiniteWord all = w.prefix;
      all.insert(all.end(), w.period.begin(), w.period.end());
      auto [r, idx] = restrict_to_word(a, all);
      AutomatonView v(r);
      std::vector<int> pre(idx.begin(), idx.begin() + static_cast<long>(w.prefix.size()));
      std::vector<int> per(idx.begin() + static_cast<long>(w.prefix.size()), idx.end());
      return buchi_lasso_member_view(v, pre, per);
    }
    case AccType::GenBuchi: {
      FiniteWord all = w.prefix;
      all.insert(all.end(), w.period.begin(), w.period.end());
      auto [r, idx] = restrict_to_word(a, all);
      Automaton d = degeneralize(r);
      AutomatonView v(d);
      std::vector<int> pre(idx.begin(), idx.begin() + static_cast<long>(w.prefix.size()));
      std::vector<int> per(idx.begin() + static_cast<long>(w.prefix.size()), idx.end());
      return buchi_lasso_member_view(v, pre, per);
    }
    default: {
      if (a.n > 20) throw std::invalid_argument("lasso_member: cycle analysis needs n <= 20");
      Mask r0 = word_image(a, a.initial_mask(), w.prefix);
      if (r0 == 0) return false;
      std::vector<char> r0v(static_cast<std::size_t>(a.n), 0);
      for (int s = 0; s < a.n; ++s)
        if (r0 & bit(s)) r0v[static_cast<std::size_t>(s)] = 1;
      detail::ProductGraph g = detail::build_product(a, w, r0v);
      Mask present = 0;
      for (auto [s, pos] : g.vert) {
        (void)pos;
        present |= bit(s);
      }
      for (Mask t = 1; t <= present; ++t) {
        if ((t & ~present) != 0) continue;
        if (!accepts_inf(a.acc, t)) continue;
        if (detail::achievable_exactly(g, t)) return true;
      }
      return false;
    }
  }
}

// ---------------------------------------------------------------------------
// accepting run extraction (ultimately periodic run witnessing acceptance)

struct LassoRun {
  // run(t) = stem[t] for t < |stem|; afterwards the cycle repeats with
  // cycle.back() == stem.back() (the anchor).  |cycle| is a multiple of the
  // period length.
  std::vector<int> stem;
  std::vector<int> cycle;

  Mask inf() const {
    Mask m = 0;
    for (int s : cycle) m |= bit(s);
    return m;
  }
  Mask occ() const {
    Mask m = inf();
    for (int s : stem) m |= bit(s);
    return m;
  }
  int state_at(std::size_t t) const {
    if (t < stem.size()) return stem[t];
    return cycle[(t - stem.size()) % cycle.size()];
  }
};

inline bool lasso_run_valid(const Automaton& a, const LassoWord& w, const LassoRun& run) {
  if (run.stem.empty() || run.cycle.empty()) return false;
  if (run.cycle.back() != run.stem.back()) return false;
  if (run.cycle.size() % w.period.size() != 0) return false;
  if (std::find(a.initial.begin(), a.initial.end(), run.stem[0]) == a.initial.end()) return false;
  std::vector<Rel> pre, per;
  for (const auto& l : w.prefix) pre.push_back(resolve(a, l));
  for (const auto& l : w.period) per.push_back(resolve(a, l));
  std::size_t total = run.stem.size() + 2 * run.cycle.size();
  for (std::size_t t = 0; t + 1 < total; ++t) {
    const Rel& rel =
        t < pre.size() ? pre[t] : per[(t - pre.size()) % per.size()];
    int x = run.state_at(t), y = run.state_at(t + 1);
    if (!std::binary_search(rel.begin(), rel.end(), std::make_pair(x, y))) return false;
  }
  // alignment: the anchor must sit at a period boundary-consistent offset
  std::size_t s = run.stem.size() - 1;
  if (s < pre.size()) return false;
  return true;
}

namespace detail {

// path inside an induced vertex set of the product graph; when
// require_step, a nonempty path is returned even for from == to
inline std::optional<std::vector<int>> product_path(const ProductGraph& g,
                                                    const std::vector<char>& allowed, int from,
                                                    int to, bool require_step) {
  std::vector<int> parent(g.vert.size(), -2);
  std::queue<int> q;
  if (!require_step && from == to) return std::vector<int>{};
  for (int y : g.adj[static_cast<std::size_t>(from)]) {
    if (!allowed[static_cast<std::size_t>(y)]) continue;
    if (parent[static_cast<std::size_t>(y)] == -2) {
      parent[static_cast<std::size_t>(y)] = from;
      q.push(y);
    }
  }
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (x == to) {
      std::vector<int> path;  // vertices after `from`, ending at `to`
      int v = to;
      while (true) {
        path.push_back(v);
        int p = parent[static_cast<std::size_t>(v)];
        if (p == from) break;
        v = p;
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (int y : g.adj[static_cast<std::size_t>(x)]) {
      if (!allowed[static_cast<std::size_t>(y)]) continue;
      if (parent[static_cast<std::size_t>(y)] == -2) {
        parent[static_cast<std::size_t>(y)] = x;
        q.push(y);
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Find an accepting ultimately periodic run over w, if any.
inline std::optional<LassoRun> find_accepting_lasso_run(const Automaton& a, const LassoWord& w) {
  if (w.period.empty()) throw std::invalid_argument("lasso: empty period");
  const bool scc_acc = a.acc.type == AccType::Buchi || a.acc.type == AccType::GenBuchi;
  if (!scc_acc && a.n > 20)
    throw std::invalid_argument("find_accepting_lasso_run: n <= 20 required");
  // layered reach over the prefix, for later stem reconstruction
  std::vector<std::vector<char>> layers;
  layers.emplace_back(static_cast<std::size_t>(a.n), 0);
  for (int s : a.initial) layers.back()[static_cast<std::size_t>(s)] = 1;
  std::vector<Rel> pre;
  for (const auto& l : w.prefix) {
    pre.push_back(resolve(a, l));
    std::vector<char> next(static_cast<std::size_t>(a.n), 0);
    for (auto [p, q] : pre.back())
      if (layers.back()[static_cast<std::size_t>(p)]) next[static_cast<std::size_t>(q)] = 1;
    layers.push_back(std::move(next));
  }
  const std::vector<char>& r0 = layers.back();
  if (std::find(r0.begin(), r0.end(), char{1}) == r0.end()) return std::nullopt;
  detail::ProductGraph g = detail::build_product(a, w, r0);

  // pick an accepting strongly connected vertex set U
  std::optional<std::vector<int>> u;
  if (scc_acc) {
    const std::vector<std::vector<int>> sets =
        a.acc.type == AccType::Buchi ? std::vector<std::vector<int>>{a.acc.buchi} : a.acc.sets;
    const std::size_t k = sets.size();
    std::vector<std::vector<char>> memb(k, std::vector<char>(static_cast<std::size_t>(a.n), 0));
    for (std::size_t i = 0; i < k; ++i)
      for (int s : sets[i]) memb[i][static_cast<std::size_t>(s)] = 1;
    std::vector<int> comp;
    int nc = tarjan_scc(g.adj, comp);
    std::vector<std::vector<char>> hit(static_cast<std::size_t>(nc), std::vector<char>(k, 0));
    std::vector<char> has_edge(static_cast<std::size_t>(nc), 0);
    for (std::size_t x = 0; x < g.vert.size(); ++x) {
      for (std::size_t i = 0; i < k; ++i)
        if (memb[i][static_cast<std::size_t>(g.vert[x].first)])
          hit[static_cast<std::size_t>(comp[x])][i] = 1;
      for (int y : g.adj[x])
        if (comp[static_cast<std::size_t>(y)] == comp[x]) has_edge[static_cast<std::size_t>(comp[x])] = 1;
    }
    for (int c = 0; c < nc && !u; ++c) {
      if (!has_edge[static_cast<std::size_t>(c)]) continue;
      const auto& h = hit[static_cast<std::size_t>(c)];
      if (std::find(h.begin(), h.end(), char{0}) != h.end()) continue;
      std::vector<int> vs;
      for (std::size_t x = 0; x < g.vert.size(); ++x)
        if (comp[x] == c) vs.push_back(static_cast<int>(x));
      u = std::move(vs);
    }
  } else {
    Mask present = 0;
    for (auto [s, pos] : g.vert) {
      (void)pos;
      present |= bit(s);
    }
    for (Mask t = 1; t <= present && !u; ++t) {
      if ((t & ~present) != 0) continue;
      if (!accepts_inf(a.acc, t)) continue;
      u = detail::achievable_exactly(g, t);
    }
  }
  if (!u) return std::nullopt;

  // stem: concrete run over the prefix to a product start that reaches U
  std::vector<char> all(g.vert.size(), 1);
  int u0 = (*u)[0];
  // BFS from start vertices to u0 over the whole product
  std::vector<int> parent(g.vert.size(), -2);
  std::queue<int> q;
  for (int s = 0; s < a.n; ++s)
    if (r0[static_cast<std::size_t>(s)]) {
      int x = g.find(s, 0);
      if (x >= 0 && parent[static_cast<std::size_t>(x)] == -2) {
        parent[static_cast<std::size_t>(x)] = -1;
        q.push(x);
      }
    }
  while (!q.empty() && parent[static_cast<std::size_t>(u0)] == -2) {
    int x = q.front();
    q.pop();
    for (int y : g.adj[static_cast<std::size_t>(x)])
      if (parent[static_cast<std::size_t>(y)] == -2) {
        parent[static_cast<std::size_t>(y)] = x;
        q.push(y);
      }
  }
  if (parent[static_cast<std::size_t>(u0)] == -2) return std::nullopt;  // defensive
  std::vector<int> to_u0;
  for (int x = u0; x != -1; x = parent[static_cast<std::size_t>(x)]) to_u0.push_back(x);
  std::reverse(to_u0.begin(), to_u0.end());
  // prefix run ending at the state of to_u0.front()
  std::vector<int> stem(w.prefix.size() + 1);
  stem[w.prefix.size()] = g.vert[static_cast<std::size_t>(to_u0.front())].first;
  for (std::size_t t = w.prefix.size(); t > 0; --t) {
    int y = stem[t];
    int chosen = -1;
    for (auto [x2, y2] : pre[t - 1])
      if (y2 == y && layers[t - 1][static_cast<std::size_t>(x2)]) {
        chosen = x2;
        break;
      }
    stem[t - 1] = chosen;
  }
  for (std::size_t i = 1; i < to_u0.size(); ++i)
    stem.push_back(g.vert[static_cast<std::size_t>(to_u0[i])].first);

  // cycle: closed walk from u0 visiting every vertex of U
  std::vector<char> in_u(g.vert.size(), 0);
  for (int x : *u) in_u[static_cast<std::size_t>(x)] = 1;
  std::vector<int> cycle;
  int cur = u0;
  for (std::size_t i = 1; i < u->size(); ++i) {
    auto path = detail::product_path(g, in_u, cur, (*u)[i], false);
    if (!path) return std::nullopt;  // defensive
    for (int x : *path) cycle.push_back(x);
    cur = (*u)[i];
  }
  auto back = detail::product_path(g, in_u, cur, u0, true);
  if (!back) return std::nullopt;  // defensive
  for (int x : *back) cycle.push_back(x);

  LassoRun run;
  run.stem = std::move(stem);
  for (int x : cycle) run.cycle.push_back(g.vert[static_cast<std::size_t>(x)].first);
  return run;
}

// ---------------------------------------------------------------------------
// conversions (deterministic complementation and a Buchi fan-out)

inline Automaton buchi_to_type(const Automaton& a, AccType target) {
  if (a.acc.type != AccType::Buchi) throw std::invalid_argument("buchi_to_type: Buchi input required");
  validate(a);
  Automaton out = a;
  std::vector<int> f = a.acc.buchi;
  std::vector<int> all;
  for (int s = 0; s < a.n; ++s) all.push_back(s);
  switch (target) {
    case AccType::Buchi:
      break;
    case AccType::GenBuchi:
      out.acc = Acceptance::genbuchi_acc({f});
      break;
    case AccType::Rabin:
      out.acc = Acceptance::rabin_acc({AccPair{f, {}}});
      break;
    case AccType::Streett:
      out.acc = Acceptance::streett_acc({AccPair{f, all}});
      break;
    case AccType::Muller: {
      if (a.n > 16) throw std::invalid_argument("buchi_to_type: Muller fan-out needs n <= 16");
      Mask fm = to_mask(f);
      std::vector<std::vector<int>> family;
      for (Mask t = 1; t <= full_mask(a.n); ++t)
        if (t & fm) family.push_back(from_mask(t));
      out.acc = Acceptance::muller_acc(std::move(family));
      break;
    }
    case AccType::Parity: {
      Mask fm = to_mask(f);
      std::vector<int> colours(static_cast<std::size_t>(a.n), 1);
      for (int s = 0; s < a.n; ++s)
        if (fm & bit(s)) colours[static_cast<std::size_t>(s)] = 0;
      out.acc = Acceptance::parity_acc(std::move(colours));
      break;
    }
  }
  return out;
}

// Complement of a deterministic complete automaton by dualizing the
// acceptance condition; transitions are unchanged.
inline Automaton complement_det(const Automaton& a) {
  validate(a);
  if (a.acc.type == AccType::Buchi || a.acc.type == AccType::GenBuchi)
    throw std::invalid_argument("complement_det: Buchi/GenBuchi are not dualizable in place");
  if (!is_deterministic(a) || !is_complete(a))
    throw std::invalid_argument("complement_det: deterministic complete automaton required");
  Automaton out = a;
  switch (a.acc.type) {
    case AccType::Rabin:
    case AccType::Streett:
      // dual condition over the same pairs with G and B exchanged
      out.acc.type = a.acc.type == AccType::Rabin ? AccType::Streett : AccType::Rabin;
      for (auto& p : out.acc.pairs) std::swap(p.G, p.B);
      break;
    case AccType::Parity:
      for (auto& c : out.acc.parity) c += 1;
      break;
    case AccType::Muller: {
      if (a.n > 16) throw std::invalid_argument("complement_det: Muller dual needs n <= 16");
      std::vector<std::vector<int>> family;
      for (Mask t = 1; t <= full_mask(a.n); ++t) {
        bool in = false;
        for (const auto& s : a.acc.sets)
          if (to_mask(s) == t) in = true;
        if (!in) family.push_back(from_mask(t));
      }
      out.acc.sets = std::move(family);
      break;
    }
    default:
      break;
  }
  return out;
}

}  // namespace roa

#endif  // ROA_MEMBER_HPP
