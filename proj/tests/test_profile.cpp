#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "oracles.hpp"
#include "roa/full.hpp"
#include "roa/nbw.hpp"
#include "roa/profile.hpp"
#include "roa/search.hpp"

using namespace roa;

namespace {

Automaton fb(int n) { return nbw::gen_fb(n); }

FiniteWord random_word(std::mt19937& rng, int n, int len) {
  FiniteWord w;
  std::uniform_int_distribution<int> coin(0, 2);
  for (int t = 0; t < len; ++t) {
    Letter l;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (coin(rng) == 0) l.rel.emplace_back(p, q);
    normalize(l.rel);
    w.push_back(std::move(l));
  }
  return w;
}

// all 16 relation letters of the 2-state full automaton
std::vector<Letter> all_letters_2() {
  std::vector<Letter> out;
  for (int m = 0; m < 16; ++m) {
    Letter l;
    int i = 0;
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q, ++i)
        if (m & (1 << i)) l.rel.emplace_back(p, q);
    out.push_back(std::move(l));
  }
  return out;
}

}  // namespace

TEST_CASE("empty word profile is the identity with empty marks") {
  Automaton a = fb(3);
  Profile p = transition_profile(a, {}, {to_mask(a.acc.buchi)});
  for (int s = 0; s < 3; ++s) {
    CHECK(p.reaches(s, s));
    CHECK(p.marks[static_cast<std::size_t>(s) * 3 + s] == std::vector<std::uint32_t>{0});
  }
  CHECK_FALSE(p.reaches(0, 1));
}

TEST_CASE("identity letter restricted to a subset") {
  Automaton a = fb(3);
  Profile p = transition_profile(a, {id_letter(bit(0), 3)}, {to_mask(a.acc.buchi)});
  CHECK(p.reaches(0, 0));
  CHECK_FALSE(p.reaches_through(0, 0, 0));
  for (int s = 1; s < 3; ++s) CHECK_FALSE(p.reaches(s, s));
}

TEST_CASE("bridge round trip sets the final-visit bit") {
  Automaton a = fb(3);
  FiniteWord w{nbw::ttof_letter(bit(0), 3), nbw::ftot_letter(bit(1), 3)};
  Profile p = transition_profile(a, w, {to_mask(a.acc.buchi)});
  CHECK(p.reaches(0, 1));
  CHECK(p.reaches_through(0, 1, 0));
  // staying on the identity backbone never touches the final state
  CHECK(p.reaches(0, 0));
  CHECK_FALSE(p.reaches_through(0, 0, 0));
}

TEST_CASE("composition is a homomorphism on random words") {
  Automaton a = fb(3);
  std::mt19937 rng(7);
  Mask f = to_mask(a.acc.buchi);
  for (int it = 0; it < 50; ++it) {
    FiniteWord u = random_word(rng, 3, 2), v = random_word(rng, 3, 3);
    FiniteWord uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    Profile pu = transition_profile(a, u, {f}, f);
    Profile pv = transition_profile(a, v, {f}, f);
    CHECK(compose(pu, pv) == transition_profile(a, uv, {f}, f));
  }
}

TEST_CASE("composition is associative and mark bits follow midpoints, exhaustively at n=2") {
  Automaton a = fb(2);
  Mask f = to_mask(a.acc.buchi);
  auto letters = all_letters_2();
  std::vector<Profile> ps;
  for (const auto& l : letters) ps.push_back(transition_profile(a, {l}, {f}));
  for (const auto& pu : ps)
    for (const auto& pv : ps) {
      Profile uv = compose(pu, pv);
      for (const auto& pw : ps)
        CHECK(compose(uv, pw) == compose(pu, compose(pv, pw)));
      // decomposition of the visit bit at the midpoint
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
          bool expect = false;
          for (int mid = 0; mid < 2; ++mid) {
            if (!pu.reaches(p, mid) || !pv.reaches(mid, q)) continue;
            if (pu.reaches_through(p, mid, 0) || pv.reaches_through(mid, q, 0) ||
                (f & bit(mid)))
              expect = true;
          }
          CHECK(uv.reaches_through(p, q, 0) == expect);
        }
    }
}

TEST_CASE("profile reach agrees with run enumeration on short words at n=2") {
  Automaton a = fb(2);
  auto letters = all_letters_2();
  Mask f = to_mask(a.acc.buchi);
  std::vector<FiniteWord> words;
  FiniteWord cur;
  std::function<void()> gen = [&]() {
    words.push_back(cur);
    if (cur.size() == 3) return;
    for (const auto& l : letters) {
      cur.push_back(l);
      gen();
      cur.pop_back();
    }
  };
  gen();
  for (const auto& w : words) {
    Profile p = transition_profile(a, w, {f});
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t) {
        int runs = static_cast<int>(oracles::all_runs(a, w, s, t).size());
        CHECK(p.reaches(s, t) == (runs > 0));
        auto rs = run_search(a, w, s, t);
        CHECK((rs.count != RunCount::None) == (runs > 0));
        CHECK((rs.count == RunCount::Unique) == (runs == 1));
      }
  }
}

TEST_CASE("run_search respects visit and avoid constraints") {
  Automaton a = fb(3);
  std::mt19937 rng(21);
  for (int it = 0; it < 40; ++it) {
    FiniteWord w = random_word(rng, 3, 3);
    std::vector<Mask> visit{to_mask(a.acc.buchi)};
    Mask avoid = bit(1);
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) {
        int expect = oracles::constrained_run_count(a, w, p, q, visit, avoid);
        auto rs = run_search(a, w, p, q, visit, avoid);
        if (expect == 0) CHECK(rs.count == RunCount::None);
        if (expect == 1) CHECK(rs.count == RunCount::Unique);
        if (expect > 1) CHECK(rs.count == RunCount::Multiple);
        if (expect > 0) {
          REQUIRE(rs.witness.size() == w.size() + 1);
          CHECK(rs.witness.front() == p);
          CHECK(rs.witness.back() == q);
        }
      }
  }
}

TEST_CASE("unconstrained run_search equals the profile reach bit") {
  Automaton a = fb(3);
  std::mt19937 rng(5);
  for (int it = 0; it < 30; ++it) {
    FiniteWord w = random_word(rng, 3, 4);
    Profile p = transition_profile(a, w);
    for (int s = 0; s < 3; ++s)
      for (int t = 0; t < 3; ++t)
        CHECK(p.reaches(s, t) == (run_search(a, w, s, t).count != RunCount::None));
  }
}

TEST_CASE("avoidance flag matches constrained enumeration") {
  Automaton a = fb(3);
  std::mt19937 rng(11);
  Mask avoid = bit(2);
  for (int it = 0; it < 30; ++it) {
    FiniteWord w = random_word(rng, 3, 3);
    Profile p = transition_profile(a, w, {}, avoid);
    for (int s = 0; s < 3; ++s)
      for (int t = 0; t < 3; ++t)
        CHECK(p.reaches_avoiding(s, t) ==
              (oracles::constrained_run_count(a, w, s, t, {}, avoid) > 0));
  }
}
