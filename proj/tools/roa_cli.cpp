// command-line front end: generators, word builders, membership checks,
// rank-based complementation, certificate emission, and HOA export.
//
// exit codes: 0 success / property certified, 1 verified failure (a
// candidate was refuted and a witness emitted), 2 usage or format error.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "roa/analysis.hpp"
#include "roa/full.hpp"
#include "roa/io.hpp"
#include "roa/member.hpp"
#include "roa/nbw.hpp"
#include "roa/ngbw.hpp"
#include "roa/rank.hpp"

namespace {

using roa::Automaton;
using roa::FiniteWord;
using roa::LassoWord;
using json = nlohmann::ordered_json;

// All artifacts go through atomic_write so a crash never leaves a torn file.
void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (content.empty() || content.back() != '\n') std::cout << '\n';
  } else {
    roa::io::atomic_write(path, content);
  }
}

void emit_json(const std::string& path, const json& j) { emit(path, j.dump(2) + "\n"); }

Automaton load_automaton(const std::string& path) {
  return roa::io::automaton_from_json(json::parse(roa::io::read_file(path)));
}

LassoWord load_word(const std::string& path, const Automaton* resolve_against = nullptr) {
  LassoWord w = roa::io::word_from_json(json::parse(roa::io::read_file(path)));
  if (resolve_against) roa::io::resolve_word(w, *resolve_against);
  return w;
}

std::string file_hash(const std::string& path) {
  return roa::io::fnv1a_hex(roa::io::read_file(path));
}

// inline relations rather than name refs, so the word resolves against both
// implicit-full and explicit automata
json word_json(FiniteWord prefix, FiniteWord period) {
  for (auto& l : prefix) l.name.clear();
  for (auto& l : period) l.name.clear();
  return roa::io::word_to_json(LassoWord{std::move(prefix), std::move(period)});
}

json run_json(const roa::LassoRun& run) {
  return json{{"stem", run.stem}, {"cycle", run.cycle}};
}

// ---------------------------------------------------------------------------
// gen

int cmd_gen(const std::string& family, int n, int k, const std::string& out) {
  Automaton a;
  if (family == "fa") {
    a = roa::full::nfw_witness(n).fa;
  } else if (family == "fb") {
    a = roa::nbw::gen_fb(n);
  } else if (family == "fbnk") {
    a = roa::ngbw::gen_fb_nk(n, k);
  } else if (family == "b") {
    a = roa::nbw::gen_b(n);
  } else if (family == "gamma") {
    // the seven-letter restriction alphabet, emitted as a named letter list
    json letters = json::array();
    for (const roa::Letter& l : roa::nbw::gamma(n)) {
      json rel = json::array();
      for (auto [p, q] : l.rel) rel.push_back(json::array({p, q}));
      letters.push_back(json{{"name", l.name}, {"rel", rel}});
    }
    emit_json(out, json{{"format", "gamma-v1"}, {"n", n}, {"letters", letters}});
    return 0;
  }
  emit_json(out, roa::io::automaton_to_json(a));
  return 0;
}

// ---------------------------------------------------------------------------
// word

int cmd_word_hard(int n, const std::string& out) {
  roa::nbw::HardWord hw = roa::nbw::hard_word(n);
  emit_json(out, word_json({}, hw.period));
  return 0;
}

int cmd_word_wfg(int n, int fi, int gi, const std::string& out) {
  auto [m, count] = roa::nbw::best_m(n);
  auto rk = roa::nbw::q_rankings(n, m);
  if (fi < 0 || gi < 0 || fi >= static_cast<int>(rk.size()) || gi >= static_cast<int>(rk.size()))
    throw std::invalid_argument("word wfg: ranking index out of range (have " +
                                std::to_string(rk.size()) + ")");
  FiniteWord w = roa::nbw::w_word(rk[static_cast<std::size_t>(fi)],
                                  rk[static_cast<std::size_t>(gi)], n);
  emit_json(out, word_json(w, {}));
  return 0;
}

int cmd_word_seg(int n, int k, int index, const std::string& out) {
  roa::ngbw::StandardAcc acc = roa::ngbw::build_acc(n, k);
  auto rks = roa::ngbw::pgcl_enumerate(acc);
  if (index < 0 || index >= static_cast<int>(rks.size()))
    throw std::invalid_argument("word seg: ranking index out of range (have " +
                                std::to_string(rks.size()) + ")");
  emit_json(out, word_json(roa::ngbw::seg_word(acc, rks[static_cast<std::size_t>(index)]), {}));
  return 0;
}

int cmd_word_fooling(int n, std::uint64_t t1, std::uint64_t t2, bool substituted,
                     const std::string& out) {
  roa::full::NfwWitness w = roa::full::nfw_witness(n);
  roa::Mask all = roa::full_mask(n);
  if (t1 > all || t2 > all) throw std::invalid_argument("word fooling: subset out of range");
  FiniteWord word;
  if (substituted) {
    word = roa::full::ab_id_word(w, t1);
    FiniteWord v = roa::full::ab_id_word(w, all & ~t2);
    word.insert(word.end(), v.begin(), v.end());
  } else {
    word = roa::full::id_word(t1, n);
    FiniteWord v = roa::full::id_word(all & ~t2, n);
    word.insert(word.end(), v.begin(), v.end());
  }
  emit_json(out, word_json(word, {}));
  return 0;
}

// ---------------------------------------------------------------------------
// check

int cmd_check_member(const std::string& apath, const std::string& wpath) {
  Automaton a = load_automaton(apath);
  LassoWord w = load_word(wpath, &a);
  bool acc;
  if (w.period.empty())
    acc = roa::full::nfw_accepts(a, w.prefix);
  else
    acc = roa::lasso_member(a, w);
  std::cout << (acc ? "accepted" : "rejected") << '\n';
  return 0;
}

int cmd_check_equiv(const std::string& apath, const std::string& upath, const std::string& vpath,
                    const std::string& mode) {
  Automaton a = load_automaton(apath);
  LassoWord u = load_word(upath, &a);
  LassoWord v = load_word(vpath, &a);
  if (!u.period.empty() || !v.period.empty())
    throw std::invalid_argument("check equiv: finite words required (empty period)");
  roa::full::EquivMode m =
      mode == "approx" ? roa::full::EquivMode::Approx : roa::full::EquivMode::Sim;
  bool eq = roa::full::word_equiv(a, u.prefix, v.prefix, m);
  std::cout << (eq ? "equivalent" : "inequivalent") << '\n';
  return 0;
}

// segment word properties over FB_{n,k}: every segment is good-for-conflict
// and every ordered pair of distinct segments conflicts.
int cmd_check_seg_props(int n, int k, const std::vector<int>& exponents) {
  roa::ngbw::StandardAcc acc = roa::ngbw::build_acc(n, k);
  Automaton b = roa::ngbw::gen_fb_nk(n, k);
  auto ws = roa::ngbw::all_seg_words(acc);
  roa::ngbw::ConflictCertificate cert = roa::ngbw::certify_conflict_set(b, ws, exponents);
  std::cout << "segments=" << cert.segments_checked << " pairs=" << cert.pairs_checked << '\n';
  if (!cert.certified) {
    std::cout << "failed: " << cert.gc_failures.size() << " gc failures, "
              << cert.conflict_failures.size() << " conflict failures\n";
    return 1;
  }
  std::cout << "ok: bound " << cert.bound << '\n';
  return 0;
}

// pairwise w(f,g) connectivity over FB_n: state n-1 of class f reaches state
// n-1 of class g exactly when f covers g, and through a final state exactly
// when it strictly covers it.
int cmd_check_wfg_props(int n) {
  Automaton fb = roa::nbw::gen_fb(n);
  auto [m, count] = roa::nbw::best_m(n);
  auto rk = roa::nbw::q_rankings(n, m);
  roa::Mask fmask = roa::to_mask(fb.acc.buchi);
  long long pairs = 0;
  for (const auto& f : rk)
    for (const auto& g : rk) {
      FiniteWord w = roa::nbw::w_word(f, g, n);
      roa::Profile pr = roa::transition_profile(fb, w, {fmask});
      for (int p = 0; p < n - 1; ++p)
        for (int q = 0; q < n - 1; ++q) {
          bool reach = pr.reaches(p, q);
          bool thru = pr.reaches_through(p, q, 0);
          bool expect_reach = f.r[static_cast<std::size_t>(p)] > g.r[static_cast<std::size_t>(q)] ||
                              (f.r[static_cast<std::size_t>(p)] == g.r[static_cast<std::size_t>(q)] &&
                               f.r[static_cast<std::size_t>(p)] % 2 == 1);
          bool expect_thru = f.r[static_cast<std::size_t>(p)] > g.r[static_cast<std::size_t>(q)];
          if (reach != expect_reach || thru != expect_thru) {
            std::cout << "failed: pair (" << p << "," << q << ")\n";
            return 1;
          }
        }
      ++pairs;
    }
  std::cout << "ok: " << pairs << " ranking pairs\n";
  return 0;
}

// ---------------------------------------------------------------------------
// complement

int cmd_complement_rank(const std::string& apath, bool tight, const std::string& out) {
  Automaton a = load_automaton(apath);
  Automaton c = roa::rank::complement_rank(a, tight);
  emit_json(out, roa::io::automaton_to_json(c));
  std::cerr << "states: " << c.n << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// verify

// bounded cross-check: the claimed complement must disagree with the base
// automaton on every lasso word u v^omega with |u| + |v| <= len.
int cmd_verify_complement(const std::string& apath, const std::string& cpath, int len,
                          const std::string& out) {
  Automaton a = load_automaton(apath);
  Automaton c = load_automaton(cpath);
  json cert{{"format", "cert-v1"},
            {"kind", "complement-check"},
            {"inputs", {{"automaton", file_hash(apath)}, {"complement", file_hash(cpath)}}},
            {"length_bound", len}};
  bool disjoint = roa::intersect_empty(a, c);
  cert["disjoint"] = disjoint;
  long long checked = 0;
  std::optional<LassoWord> gap;  // word rejected by both
  std::vector<FiniteWord> level{{}};
  std::vector<FiniteWord> words;
  for (int l = 0; l <= len && !gap; ++l) {
    for (const FiniteWord& w : level) words.push_back(w);
    std::vector<FiniteWord> next;
    for (const FiniteWord& w : level)
      for (const roa::Letter& x : a.alphabet) {
        FiniteWord e = w;
        e.push_back(x);
        next.push_back(std::move(e));
      }
    level = std::move(next);
  }
  for (const FiniteWord& u : words) {
    for (const FiniteWord& v : words) {
      if (v.empty() || static_cast<int>(u.size() + v.size()) > len) continue;
      LassoWord w{u, v};
      ++checked;
      bool ina = roa::lasso_member(a, w);
      LassoWord wc = w;
      roa::io::resolve_word(wc, c);
      bool inc = roa::lasso_member(c, wc);
      if (ina == inc) {
        gap = w;
        cert["witness"] = {{"word", roa::io::word_to_json(w)},
                           {"base_accepts", ina},
                           {"candidate_accepts", inc}};
        break;
      }
    }
    if (gap) break;
  }
  cert["pairs_checked"] = checked;
  cert["verdict"] = (disjoint && !gap) ? "certified" : "refuted";
  emit_json(out, cert);
  return (disjoint && !gap) ? 0 : 1;
}

// pigeonhole confusion: any candidate with fewer states than the tight
// ranking count either rejects the hard word outright or accepts a cut-and
// -splice variant outside the complement language.  Both outcomes refute it.
int cmd_verify_confuse(int n, const std::string& cpath, const std::string& out) {
  Automaton ca = load_automaton(cpath);
  roa::nbw::ConfusionOutcome oc = roa::nbw::confuse(ca, n);
  json cert{{"format", "cert-v1"},
            {"kind", "confusion"},
            {"inputs", {{"candidate", file_hash(cpath)}, {"n", n}}}};
  if (oc.candidate_rejects) {
    cert["verdict"] = "refuted";
    cert["reason"] = "hard word rejected";
    emit_json(out, cert);
    return 1;
  }
  cert["reason"] = "confusion";
  cert["witness"] = {{"word", roa::io::word_to_json(oc.alpha_prime)},
                     {"run", run_json(oc.rebuilt_run)},
                     {"classes", json::array({oc.class_i, oc.class_j})},
                     {"pivot_state", oc.q_hat},
                     {"accepted_by_generator", oc.in_fb},
                     {"accepted_by_candidate", oc.accepted_by_candidate}};
  cert["verdict"] = oc.verified() ? "refuted" : "inconclusive";
  emit_json(out, cert);
  if (!oc.verified()) throw std::runtime_error("verify confuse: witness failed validation");
  return 1;
}

int cmd_verify_conflict_set(int n, int k, const std::vector<int>& exponents,
                            const std::string& cpath, const std::string& out) {
  Automaton b = roa::ngbw::gen_fb_nk(n, k);
  roa::ngbw::StandardAcc acc = roa::ngbw::build_acc(n, k);
  auto ws = roa::ngbw::all_seg_words(acc);
  json cert{{"format", "cert-v1"},
            {"kind", "conflict-set"},
            {"inputs", {{"n", n}, {"k", k}}},
            {"exponents", exponents}};
  if (cpath.empty()) {
    // certify the segment family itself: the certified size lower-bounds any
    // complement with union-closed acceptance
    roa::ngbw::ConflictCertificate c = roa::ngbw::certify_conflict_set(b, ws, exponents);
    cert["segments_checked"] = c.segments_checked;
    cert["pairs_checked"] = c.pairs_checked;
    cert["verdict"] = c.certified ? "certified" : "failed";
    if (c.certified) cert["bound"] = c.bound;
    emit_json(out, cert);
    return c.certified ? 0 : 1;
  }
  // with a candidate: find two segments it cannot distinguish and splice a
  // collision word, or observe a direct failure
  Automaton ca = load_automaton(cpath);
  cert["inputs"]["candidate"] = file_hash(cpath);
  if (ca.acc.type == roa::AccType::Buchi) {
    // view a Buchi candidate as generalized Buchi with one set
    ca.acc.sets = {ca.acc.buchi};
    ca.acc.buchi.clear();
    ca.acc.type = roa::AccType::GenBuchi;
  }
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = 0; j < ws.size(); ++j) {
      if (i == j) continue;
      roa::ngbw::CollisionOutcome oc = roa::ngbw::collision_extract(ca, b, ws[i], ws[j]);
      if (oc.kind == roa::ngbw::CollisionOutcome::Kind::DirectFailure) {
        cert["verdict"] = "refuted";
        cert["reason"] = "segment power rejected";
        cert["witness"] = {{"segment_index", oc.direct_failure_index == 0 ? i : j}};
        emit_json(out, cert);
        return 1;
      }
      if (oc.kind == roa::ngbw::CollisionOutcome::Kind::Collision && oc.verified()) {
        cert["verdict"] = "refuted";
        cert["reason"] = "collision";
        cert["witness"] = {{"segments", json::array({i, j})},
                           {"exponents", json::array({oc.k0, oc.k1, oc.k2})},
                           {"pivot_state", oc.q_hat},
                           {"word", roa::io::word_to_json(oc.alpha)},
                           {"candidate_accepts", oc.candidate_accepts},
                           {"base_accepts", oc.base_accepts}};
        emit_json(out, cert);
        return 1;
      }
    }
  cert["verdict"] = "no-collision";
  cert["pairs_checked"] = ws.size() * (ws.size() - 1);
  emit_json(out, cert);
  return 0;
}

// ---------------------------------------------------------------------------
// count / analyze

int cmd_count(const std::string& what, int n, int k, int m) {
  if (what == "qrank") {
    if (m > 0) {
      std::cout << "count=" << roa::nbw::count_q_rankings(n, m) << '\n';
    } else {
      auto [mb, c] = roa::nbw::best_m(n);
      std::cout << "m*=" << mb << " count=" << c << '\n';
    }
  } else if (what == "pgcl") {
    roa::ngbw::StandardAcc acc = roa::ngbw::build_acc(n, k);
    std::cout << "count=" << roa::ngbw::pgcl_count(acc)
              << " lower_bound=" << roa::ngbw::pgcl_lower_bound(n, k) << '\n';
  } else if (what == "tight") {
    Automaton fb = roa::nbw::gen_fb(n);
    auto per_m = roa::rank::count_tight(n, roa::to_mask(fb.acc.buchi));
    unsigned long long total = 0;
    for (std::size_t i = 0; i < per_m.size(); ++i) {
      std::cout << "m=" << (i + 1) << " count=" << per_m[i] << '\n';
      total += per_m[i];
    }
    std::cout << "total=" << total << '\n';
  } else if (what == "L") {
    auto [mb, c] = roa::nbw::best_m(n);
    std::cout << "m*=" << mb << " L=" << c << '\n';
  }
  return 0;
}

int cmd_analyze_asymptotic(double grid, int growth_n) {
  roa::analysis::AsymptoticPoint p = roa::analysis::maximize_h(grid);
  std::printf("beta=%.6f gamma=%.6f value=%.6f\n", p.beta, p.gamma, p.value);
  if (growth_n > 0)
    std::printf("growth_ratio(%d)=%.6f michel_baseline=%.6f\n", growth_n,
                roa::analysis::growth_ratio(growth_n), roa::analysis::michel_baseline());
  return 0;
}

// ---------------------------------------------------------------------------
// export

int cmd_export_hoa(const std::string& apath, const std::string& out) {
  emit(out, roa::io::export_hoa(load_automaton(apath)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relation-alphabet omega-automata toolkit"};
  app.require_subcommand(1);

  int n = 3, k = 2, m = 0, index = 0, fi = 0, gi = 0, len = 5, growth_n = 0;
  std::uint64_t t1 = 0, t2 = 0;
  double grid = 1e-3;
  bool tight = true, substituted = false;
  std::string out, apath, wpath, vpath, cpath, mode = "sim", format = "roa";
  std::vector<int> exponents = {1, 2};

  auto* gen = app.add_subcommand("gen", "generate an automaton family member");
  std::string family;
  gen->add_option("family", family, "one of: fa fb fbnk b gamma")
      ->required()
      ->check(CLI::IsMember({"fa", "fb", "fbnk", "b", "gamma"}));
  gen->add_option("--n", n, "state count")->required();
  gen->add_option("--k", k, "acceptance set count (fbnk)");
  gen->add_option("--out", out, "output path (default stdout)");

  auto* word = app.add_subcommand("word", "build a witness word");
  std::string wkind;
  word->add_option("kind", wkind, "one of: hard wfg seg fooling")
      ->required()
      ->check(CLI::IsMember({"hard", "wfg", "seg", "fooling"}));
  word->add_option("--n", n, "state count")->required();
  word->add_option("--k", k, "acceptance set count (seg)");
  word->add_option("--f", fi, "first ranking index (wfg)");
  word->add_option("--g", gi, "second ranking index (wfg)");
  word->add_option("--index", index, "ranking index (seg)");
  word->add_option("--t1", t1, "first subset mask (fooling)");
  word->add_option("--t2", t2, "second subset mask (fooling)");
  word->add_flag("--sub", substituted, "use the two-letter substitution (fooling)");
  word->add_option("--out", out, "output path (default stdout)");

  auto* check = app.add_subcommand("check", "decide a membership or structural property");
  std::string ckind;
  check->add_option("kind", ckind, "one of: member equiv seg-props wfg-props")
      ->required()
      ->check(CLI::IsMember({"member", "equiv", "seg-props", "wfg-props"}));
  check->add_option("--automaton", apath, "automaton file");
  check->add_option("--word", wpath, "word file");
  check->add_option("--word2", vpath, "second word file (equiv)");
  check->add_option("--mode", mode, "equiv mode: sim or approx")
      ->check(CLI::IsMember({"sim", "approx"}));
  check->add_option("--n", n, "state count (seg-props, wfg-props)");
  check->add_option("--k", k, "acceptance set count (seg-props)");
  check->add_option("--exponents", exponents, "splice exponents")->delimiter(',');

  auto* comp = app.add_subcommand("complement", "complement an automaton");
  std::string compkind;
  comp->add_option("kind", compkind, "one of: rank")
      ->required()
      ->check(CLI::IsMember({"rank"}));
  comp->add_option("--automaton", apath, "input automaton file")->required();
  comp->add_flag("--tight,!--no-tight", tight, "restrict to tight rankings (default on)");
  comp->add_option("--out", out, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "check a claim and emit a certificate");
  std::string vkind;
  verify->add_option("kind", vkind, "one of: complement confuse conflict-set")
      ->required()
      ->check(CLI::IsMember({"complement", "confuse", "conflict-set"}));
  verify->add_option("--automaton", apath, "base automaton file (complement)");
  verify->add_option("--complement", cpath, "claimed complement file (complement)");
  verify->add_option("--candidate", cpath, "candidate complement file (confuse, conflict-set)");
  verify->add_option("--n", n, "state count");
  verify->add_option("--k", k, "acceptance set count (conflict-set)");
  verify->add_option("--len", len, "lasso length bound (complement)");
  verify->add_option("--exponents", exponents, "splice exponents")->delimiter(',');
  verify->add_option("--out", out, "certificate path (default stdout)");

  auto* count = app.add_subcommand("count", "count witness structures");
  std::string cntkind;
  count->add_option("kind", cntkind, "one of: qrank pgcl tight L")
      ->required()
      ->check(CLI::IsMember({"qrank", "pgcl", "tight", "L"}));
  count->add_option("--n", n, "state count")->required();
  count->add_option("--k", k, "acceptance set count (pgcl)");
  count->add_option("--m", m, "tightness class (qrank; default best)");

  auto* analyze = app.add_subcommand("analyze", "numeric growth analysis");
  std::string akind;
  analyze->add_option("kind", akind, "one of: asymptotic")
      ->required()
      ->check(CLI::IsMember({"asymptotic"}));
  analyze->add_option("--grid", grid, "grid step for the optimizer");
  analyze->add_option("--growth", growth_n, "also report the finite growth ratio at this n");

  auto* exp = app.add_subcommand("export", "convert to an external format");
  std::string ekind;
  exp->add_option("kind", ekind, "one of: hoa")->required()->check(CLI::IsMember({"hoa"}));
  exp->add_option("--automaton", apath, "input automaton file")->required();
  exp->add_option("--out", out, "output path (default stdout)");
  exp->add_option("--format", format, "output format")->check(CLI::IsMember({"hoa"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;  // --help exits 0, anything else is a usage error
  }

  try {
    if (gen->parsed()) return cmd_gen(family, n, k, out);
    if (word->parsed()) {
      if (wkind == "hard") return cmd_word_hard(n, out);
      if (wkind == "wfg") return cmd_word_wfg(n, fi, gi, out);
      if (wkind == "seg") return cmd_word_seg(n, k, index, out);
      return cmd_word_fooling(n, t1, t2, substituted, out);
    }
    if (check->parsed()) {
      if (ckind == "member") {
        if (apath.empty() || wpath.empty())
          throw CLI::RequiredError("check member: --automaton and --word");
        return cmd_check_member(apath, wpath);
      }
      if (ckind == "equiv") {
        if (apath.empty() || wpath.empty() || vpath.empty())
          throw CLI::RequiredError("check equiv: --automaton, --word and --word2");
        return cmd_check_equiv(apath, wpath, vpath, mode);
      }
      if (ckind == "seg-props") return cmd_check_seg_props(n, k, exponents);
      return cmd_check_wfg_props(n);
    }
    if (comp->parsed()) return cmd_complement_rank(apath, tight, out);
    if (verify->parsed()) {
      if (vkind == "complement") {
        if (apath.empty() || cpath.empty())
          throw CLI::RequiredError("verify complement: --automaton and --complement");
        return cmd_verify_complement(apath, cpath, len, out);
      }
      if (vkind == "confuse") {
        if (cpath.empty()) throw CLI::RequiredError("verify confuse: --candidate");
        return cmd_verify_confuse(n, cpath, out);
      }
      return cmd_verify_conflict_set(n, k, exponents, cpath, out);
    }
    if (count->parsed()) return cmd_count(cntkind, n, k, m);
    if (analyze->parsed()) return cmd_analyze_asymptotic(grid, growth_n);
    if (exp->parsed()) return cmd_export_hoa(apath, out);
  } catch (const CLI::RequiredError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
