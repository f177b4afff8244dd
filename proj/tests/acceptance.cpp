// End-to-end acceptance suite: one pass/fail line per criterion, nonzero
// exit when any criterion fails.  Each criterion is self-contained and
// timed; failures print a short reason.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <roa/roa.hpp>

#include "oracles.hpp"

using namespace roa;

namespace {

struct Criterion {
  const char* what;
  std::function<bool(std::string&)> run;
};

bool expect(bool cond, std::string& why, const std::string& msg) {
  if (!cond && why.empty()) why = msg;
  return cond;
}

// --- 1: exact ranking counts, enumeration vs formula -----------------------

bool crit_counting(std::string& why) {
  bool ok = true;
  ok &= expect(nbw::best_m(2).second == 1, why, "L(2) != 1");
  ok &= expect(nbw::best_m(3).second == 3, why, "L(3) != 3");
  ok &= expect(nbw::best_m(4).second == 18, why, "L(4) != 18");
  ok &= expect(analysis::L_max(2).second == 1, why, "formula L(2) != 1");
  ok &= expect(analysis::L_max(3).second == 3, why, "formula L(3) != 3");
  ok &= expect(analysis::L_max(4).second == 18, why, "formula L(4) != 18");
  for (int n = 2; n <= 7; ++n)
    for (int m = 1; m < n; ++m)
      ok &= expect(analysis::L_formula(n, m) ==
                       analysis::BigCount(nbw::count_q_rankings(n, m)),
                   why, "formula vs enumeration mismatch at n=" + std::to_string(n));
  return ok;
}

// --- 2: asymptotics ---------------------------------------------------------

bool crit_asymptotics(std::string& why) {
  bool ok = true;
  auto best = analysis::maximize_h();
  ok &= expect(std::abs(best.value - 0.7645) <= 1e-3, why, "maximum off target");
  ok &= expect(std::abs(best.beta - 0.7236) <= 1e-2, why, "beta off target");
  ok &= expect(std::abs(best.gamma - 0.5744) <= 1e-2, why, "gamma off target");
  ok &= expect(std::abs(analysis::growth_ratio(128) - 0.7645) <= 0.05, why,
               "exact growth at n=128 inconsistent");
  return ok;
}

// --- 3: ranking-pair word connectivity --------------------------------------

bool crit_pair_words(std::string& why) {
  bool ok = true;
  for (int n : {3, 4}) {
    Automaton fb = nbw::gen_fb(n);
    auto rs = nbw::q_rankings(n, nbw::best_m(n).first);
    for (const auto& fr : rs)
      for (const auto& gr : rs) {
        Profile pr = transition_profile(fb, nbw::w_word(fr, gr, n), {bit(n - 1)});
        for (int p = 0; p < n && ok; ++p)
          for (int q = 0; q < n && ok; ++q) {
            if (p == n - 1 || q == n - 1) {
              ok &= expect(!pr.reaches(p, q), why, "final-state endpoint reached");
              continue;
            }
            int fp = fr.r[static_cast<std::size_t>(p)];
            int gq = gr.r[static_cast<std::size_t>(q)];
            ok &= expect(pr.reaches(p, q) == (fp > gq || (fp == gq && fp % 2 == 1)), why,
                         "reach mismatch at n=" + std::to_string(n));
            ok &= expect(pr.reaches_through(p, q, 0) == (fp > gq), why,
                         "through-final mismatch at n=" + std::to_string(n));
          }
        if (!ok) return false;
      }
  }
  return ok;
}

// --- 4: hard-word rejection --------------------------------------------------

bool crit_hard_word(std::string& why) {
  bool ok = true;
  for (int n : {2, 3, 4}) {
    nbw::HardWord hw = nbw::hard_word(n);
    ok &= expect(!lasso_member(nbw::gen_fb(n), {{}, hw.period}), why,
                 "hard word accepted at n=" + std::to_string(n));
    Automaton b = nbw::gen_b(n);
    ok &= expect(b.alphabet.size() == 7, why, "restricted alphabet size != 7");
    FiniteWord sub = nbw::gamma_word(n, hw.period);
    ok &= expect(!lasso_member(b, {{}, sub}), why,
                 "substituted hard word accepted at n=" + std::to_string(n));
  }
  return ok;
}

// --- 5: the confuser exhausts undersized candidates --------------------------

Automaton small_candidate(std::mt19937& rng, const nbw::HardWord& hw, int cn) {
  std::uniform_int_distribution<int> coin(0, 1), st(0, cn - 1);
  Automaton ca;
  ca.n = cn;
  ca.initial = {st(rng)};
  std::vector<int> fin;
  for (int s = 0; s < cn; ++s)
    if (coin(rng)) fin.push_back(s);
  ca.acc = Acceptance::buchi_acc(std::move(fin));
  std::set<std::string> seen;
  for (const auto& l : hw.period) {
    if (!seen.insert(l.name).second) continue;
    Letter nl;
    nl.name = l.name;
    for (int p = 0; p < cn; ++p)
      for (int q = 0; q < cn; ++q)
        if (coin(rng)) nl.rel.emplace_back(p, q);
    ca.alphabet.push_back(std::move(nl));
  }
  return ca;
}

bool crit_confuser(std::string& why) {
  const int n = 3;
  nbw::HardWord hw = nbw::hard_word(n);
  std::mt19937 rng(9001);
  std::uniform_int_distribution<int> ns(1, static_cast<int>(hw.count) - 1);
  int accepted = 0, rejected = 0;
  bool ok = true;
  for (int it = 0; it < 2000 && accepted < 20; ++it) {
    Automaton ca = small_candidate(rng, hw, ns(rng));
    nbw::ConfusionOutcome out = nbw::confuse(ca, n);
    if (out.candidate_rejects) {
      ++rejected;
      ok &= expect(!out.applicable, why, "rejecting candidate marked applicable");
      ok &= expect(!lasso_member(ca, {{}, hw.period}), why, "direct-failure certificate wrong");
      continue;
    }
    ++accepted;
    ok &= expect(out.applicable, why, "outcome neither applicable nor rejecting");
    ok &= expect(out.verified(), why, "confusion not fully verified");
    ok &= expect(lasso_member(nbw::gen_fb(n), out.alpha_prime), why,
                 "alpha' outside the witness language");
    ok &= expect(lasso_member(ca, out.alpha_prime), why, "alpha' rejected by candidate");
  }
  ok &= expect(accepted >= 20, why, "fewer than 20 accepting candidates sampled");
  ok &= expect(rejected > 0, why, "no direct-failure candidates sampled");
  return ok;
}

// --- 6: rank complement correctness ------------------------------------------

// Exhaustive lasso-membership comparison, factorized: one backward winning
// computation per period word, one forward reach set per prefix, then each
// (prefix, period) pair is a set intersection.
struct LassoTable {
  int n = 0;
  std::vector<std::vector<std::vector<int>>> adj;  // [letter][state] -> succ
  std::vector<char> acc;
  std::vector<int> initial;

  LassoTable(const Automaton& a, const std::vector<std::string>& letter_order)
      : n(a.n), acc(static_cast<std::size_t>(a.n), 0), initial(a.initial) {
    for (const auto& name : letter_order) {
      const Letter* found = nullptr;
      for (const auto& l : a.alphabet)
        if (l.name == name) found = &l;
      if (!found) throw std::invalid_argument("letter missing: " + name);
      std::vector<std::vector<int>> rows(static_cast<std::size_t>(a.n));
      for (auto [p, q] : found->rel) rows[static_cast<std::size_t>(p)].push_back(q);
      adj.push_back(std::move(rows));
    }
    for (int f : a.acc.buchi) acc[static_cast<std::size_t>(f)] = 1;
  }

  std::vector<char> step(const std::vector<char>& from, int letter) const {
    std::vector<char> out(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s)
      if (from[static_cast<std::size_t>(s)])
        for (int q : adj[static_cast<std::size_t>(letter)][static_cast<std::size_t>(s)])
          out[static_cast<std::size_t>(q)] = 1;
    return out;
  }

  // states s such that v^w read from s admits an accepting run
  std::vector<char> winning(const std::vector<int>& v) const {
    const int len = static_cast<int>(v.size());
    const std::size_t nv = static_cast<std::size_t>(n) * static_cast<std::size_t>(len);
    auto vid = [&](int s, int pos) {
      return static_cast<std::size_t>(s) * static_cast<std::size_t>(len) +
             static_cast<std::size_t>(pos);
    };
    std::vector<std::vector<int>> prod(nv), rev(nv);
    for (int s = 0; s < n; ++s)
      for (int pos = 0; pos < len; ++pos)
        for (int q : adj[static_cast<std::size_t>(v[static_cast<std::size_t>(pos)])]
                        [static_cast<std::size_t>(s)]) {
          int x = static_cast<int>(vid(s, pos)), y = static_cast<int>(vid(q, (pos + 1) % len));
          prod[static_cast<std::size_t>(x)].push_back(y);
          rev[static_cast<std::size_t>(y)].push_back(x);
        }
    std::vector<int> comp;
    int nc = tarjan_scc(prod, comp);
    std::vector<char> scc_acc(static_cast<std::size_t>(nc), 0), scc_edge(static_cast<std::size_t>(nc), 0);
    for (std::size_t x = 0; x < nv; ++x) {
      if (acc[x / static_cast<std::size_t>(len)]) scc_acc[static_cast<std::size_t>(comp[x])] = 1;
      for (int y : prod[x])
        if (comp[static_cast<std::size_t>(y)] == comp[x]) scc_edge[static_cast<std::size_t>(comp[x])] = 1;
    }
    std::vector<char> win(nv, 0);
    std::vector<std::size_t> bfs;
    for (std::size_t x = 0; x < nv; ++x)
      if (scc_acc[static_cast<std::size_t>(comp[x])] && scc_edge[static_cast<std::size_t>(comp[x])]) {
        win[x] = 1;
        bfs.push_back(x);
      }
    while (!bfs.empty()) {
      std::size_t y = bfs.back();
      bfs.pop_back();
      for (int x : rev[y])
        if (!win[static_cast<std::size_t>(x)]) {
          win[static_cast<std::size_t>(x)] = 1;
          bfs.push_back(static_cast<std::size_t>(x));
        }
    }
    std::vector<char> w0(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) w0[static_cast<std::size_t>(s)] = win[vid(s, 0)];
    return w0;
  }
};

bool crit_complement(std::string& why) {
  std::mt19937 rng(9102);
  bool ok = true;
  for (int it = 0; it < 100 && ok; ++it) {
    int n = 2 + it % 3;
    int nl = 1 + it % 3;
    Automaton a = oracles::random_buchi(rng, n, nl);
    std::vector<std::string> names;
    for (const auto& l : a.alphabet) names.push_back(l.name);

    // all letter-index sequences up to length 5 (prefixes) / 6 (periods)
    std::vector<std::vector<int>> seqs{{}};
    for (std::size_t i = 0; i < seqs.size(); ++i) {
      if (seqs[i].size() >= 6) continue;
      for (int l = 0; l < nl; ++l) {
        auto e = seqs[i];
        e.push_back(l);
        seqs.push_back(std::move(e));
      }
    }

    LassoTable ta(a, names);
    std::vector<std::vector<char>> reach_a{std::vector<char>(static_cast<std::size_t>(a.n), 0)};
    for (int s : a.initial) reach_a[0][static_cast<std::size_t>(s)] = 1;

    for (bool tight : {true, false}) {
      Automaton c = rank::complement_rank(a, tight);
      ok &= expect(intersect_empty(a, c), why, "complement intersects the original");
      LassoTable tc(c, names);

      // forward reach per prefix; seqs are ordered so parents precede children
      std::vector<std::vector<char>> ra(seqs.size()), rc(seqs.size());
      ra[0] = reach_a[0];
      rc[0].assign(static_cast<std::size_t>(c.n), 0);
      for (int s : c.initial) rc[0][static_cast<std::size_t>(s)] = 1;
      std::vector<std::size_t> parent(seqs.size(), 0);
      for (std::size_t i = 1; i < seqs.size(); ++i) {
        // locate parent: the sequence minus its last letter (construction order)
        auto key = seqs[i];
        int last = key.back();
        key.pop_back();
        std::size_t p = 0;
        for (std::size_t j = 0; j < i; ++j)
          if (seqs[j] == key) {
            p = j;
            break;
          }
        parent[i] = p;
        ra[i] = ta.step(ra[p], last);
        rc[i] = tc.step(rc[p], last);
      }

      for (std::size_t vi = 0; vi < seqs.size(); ++vi) {
        const auto& v = seqs[vi];
        if (v.empty()) continue;
        std::vector<char> wa = ta.winning(v), wc = tc.winning(v);
        for (std::size_t ui = 0; ui < seqs.size(); ++ui) {
          if (seqs[ui].size() + v.size() > 6) continue;
          bool in_a = false, in_c = false;
          for (int s = 0; s < a.n && !in_a; ++s)
            in_a = ra[ui][static_cast<std::size_t>(s)] && wa[static_cast<std::size_t>(s)];
          for (int s = 0; s < c.n && !in_c; ++s)
            in_c = rc[ui][static_cast<std::size_t>(s)] && wc[static_cast<std::size_t>(s)];
          if (!expect(in_a != in_c, why, "membership XOR violated")) return false;
          // spot-check the factorized membership against the library routine
          if (it < 4 && tight && (vi + ui) % 97 == 0) {
            LassoWord lw;
            for (int l : seqs[ui]) lw.prefix.push_back(a.alphabet[static_cast<std::size_t>(l)]);
            for (int l : v) lw.period.push_back(a.alphabet[static_cast<std::size_t>(l)]);
            ok &= expect(lasso_member(a, lw) == in_a, why, "factorized membership mismatch");
          }
        }
      }
      if (!ok) return false;
    }
  }
  // the witness family's complement can never undercut the ranking count
  for (int n : {2, 3}) {
    Automaton c = rank::complement_rank(nbw::gen_b(n), true);
    ok &= expect(static_cast<long long>(c.n) >= nbw::best_m(n).second, why,
                 "complement smaller than the ranking count");
  }
  return ok;
}

// --- 7: fooling pairs and determinization ------------------------------------

bool crit_fooling(std::string& why) {
  bool ok = true;
  for (int n = 2; n <= 6; ++n)
    for (bool sub : {false, true}) {
      full::FoolingReport rep = full::fooling_report(n, sub);
      ok &= expect(rep.pass, why, "fooling pair failure at n=" + std::to_string(n));
      long long expect_pairs = 1LL << (2 * n);
      ok &= expect(rep.pairs_checked == expect_pairs, why, "pair count off");
    }
  for (int n = 2; n <= 10; ++n) {
    full::NfwWitness w = full::nfw_witness(n);
    ok &= expect(full::subset_reach_count(w.an) == (1LL << n), why,
                 "determinized subset count != 2^n at n=" + std::to_string(n));
  }
  return ok;
}

// --- 8: generalized-Buchi certification ---------------------------------------

bool crit_certification(std::string& why) {
  bool ok = true;
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {4, 3}}) {
    ngbw::StandardAcc acc = ngbw::build_acc(n, k);
    const int m = (n - 1) / 2;
    for (Mask f : acc.sets)
      ok &= expect(popcount(f) == m, why, "acceptance set size off");
    for (int q = 0; q < n - 1; ++q)
      ok &= expect(acc.avoid_count(q) >= k / 2, why, "balance invariant violated");

    Automaton fb = ngbw::gen_fb_nk(n, k);
    std::vector<Mask> fs(acc.sets.begin(), acc.sets.end());
    auto rankings = ngbw::pgcl_enumerate(acc);
    std::vector<FiniteWord> segs;
    for (const auto& rk : rankings) {
      FiniteWord w = ngbw::seg_word(acc, rk);
      for (int p = 0; p < n - 1 && ok; ++p) {
        Mask fp = acc.sets[static_cast<std::size_t>(rk.g[static_cast<std::size_t>(p)]) - 1];
        std::vector<Mask> others;
        for (Mask f : fs)
          if (f != fp) others.push_back(f);
        for (int q = 0; q < n - 1 && ok; ++q) {
          RunCount c;
          if (p == q)
            c = run_search(fb, w, p, p, others, fp).count;
          else if (rk.f[static_cast<std::size_t>(p)] > rk.f[static_cast<std::size_t>(q)])
            c = run_search(fb, w, p, q, fs).count;
          else {
            ok &= expect(run_search(fb, w, p, q).count == RunCount::None, why,
                         "unexpected climbing run");
            continue;
          }
          ok &= expect(c == RunCount::Unique, why, "run not unique");
        }
      }
      ok &= expect(ngbw::is_gc_segment(fb, w), why, "segment power accepted");
      segs.push_back(std::move(w));
      if (!ok) return false;
    }
    auto cert = ngbw::certify_conflict_set(fb, segs);
    ok &= expect(cert.certified, why, "certification failed");
    ok &= expect(static_cast<std::int64_t>(cert.bound) == ngbw::pgcl_count(acc), why,
                 "bound != exact ranking count");
    ok &= expect(ngbw::pgcl_count(acc) >= ngbw::pgcl_lower_bound(n, k), why,
                 "count below closed-form floor");
    if (!ok) return false;
  }
  return ok;
}

// --- 9: headline bounds covered by the constructive suites --------------------

bool crit_coverage(std::string& why) {
  // The general exponential growth statements are universally quantified over
  // all automata and are not experiments; their constructive ingredients are
  // exactly criteria 3, 4, 7 and 8, so this criterion re-asserts those.
  bool ok = true;
  ok &= expect(crit_pair_words(why), why, "pair-word ingredient failed");
  ok &= expect(crit_hard_word(why), why, "hard-word ingredient failed");
  ok &= expect(crit_fooling(why), why, "fooling ingredient failed");
  ok &= expect(crit_certification(why), why, "certification ingredient failed");
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"exact ranking counts (enumeration = formula)", crit_counting},
      {"asymptotic constant 0.7645 and exact-count consistency", crit_asymptotics},
      {"ranking-pair word connectivity (all pairs, n=3,4)", crit_pair_words},
      {"hard-word rejection, native and substituted alphabets", crit_hard_word},
      {"confuser exhausts undersized candidates", crit_confuser},
      {"rank complement correct on random instances", crit_complement},
      {"fooling pairs and subset determinization", crit_fooling},
      {"generalized-Buchi conflict-set certification", crit_certification},
      {"headline growth bounds covered constructively", crit_coverage},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string why;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criteria[i].run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    if (ok) {
      std::printf("PASS  %zu/9  %s  (%.2fs)\n", i + 1, criteria[i].what, secs);
    } else {
      ++failures;
      std::printf("FAIL  %zu/9  %s  (%.2fs)  %s\n", i + 1, criteria[i].what, secs,
                  why.empty() ? "unspecified" : why.c_str());
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
