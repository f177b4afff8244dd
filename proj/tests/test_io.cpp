#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <random>

#include <roa/roa.hpp>

#include "oracles.hpp"

using namespace roa;

namespace {

bool same_automaton(const Automaton& a, const Automaton& b) {
  if (a.n != b.n || a.initial != b.initial || a.implicit_full != b.implicit_full) return false;
  if (a.acc.type != b.acc.type || a.acc.buchi != b.acc.buchi || a.acc.sets != b.acc.sets ||
      a.acc.parity != b.acc.parity)
    return false;
  if (a.acc.pairs.size() != b.acc.pairs.size()) return false;
  for (std::size_t i = 0; i < a.acc.pairs.size(); ++i)
    if (a.acc.pairs[i].G != b.acc.pairs[i].G || a.acc.pairs[i].B != b.acc.pairs[i].B) return false;
  if (a.alphabet.size() != b.alphabet.size()) return false;
  for (const auto& l : a.alphabet) {
    bool found = false;
    for (const auto& m : b.alphabet)
      if (m.name == l.name && m.rel == l.rel) found = true;
    if (!found) return false;
  }
  return true;
}

Automaton base_tnfa() {
  Automaton a;
  a.n = 3;
  a.initial = {0, 2};
  Letter x, y;
  x.name = "x";
  x.rel = {{0, 1}, {1, 2}};
  y.name = "y";
  y.rel = {{2, 0}, {2, 2}};
  a.alphabet = {x, y};
  a.acc = Acceptance::buchi_acc({1});
  return a;
}

}  // namespace

TEST_CASE("automaton json round trips across every acceptance type") {
  Automaton a = base_tnfa();
  std::vector<Acceptance> accs = {
      Acceptance::buchi_acc({1, 2}),
      Acceptance::genbuchi_acc({{0}, {1, 2}}),
      Acceptance::muller_acc({{0, 1}}),
      Acceptance::rabin_acc({{{0}, {1}}, {{2}, {}}}),
      Acceptance::streett_acc({{{1}, {0, 2}}}),
      Acceptance::parity_acc({0, 1, 2}),
  };
  for (const auto& acc : accs) {
    a.acc = acc;
    io::json j = io::automaton_to_json(a);
    CHECK(j["format"] == "roa-v1");
    Automaton back = io::automaton_from_json(j);
    CHECK(same_automaton(a, back));
    // serialization is canonical: a second trip is byte-identical
    CHECK(io::automaton_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("implicit-full alphabets survive the round trip") {
  Automaton fb = ngbw::gen_fb_nk(3, 2);
  Automaton back = io::automaton_from_json(io::automaton_to_json(fb));
  CHECK(back.implicit_full);
  CHECK(same_automaton(fb, back));
}

TEST_CASE("serialization rejects malformed input") {
  Automaton a = base_tnfa();
  a.alphabet[0].name.clear();
  CHECK_THROWS_AS(io::automaton_to_json(a), std::invalid_argument);

  io::json j = io::automaton_to_json(base_tnfa());
  j["format"] = "roa-v2";
  CHECK_THROWS_AS(io::automaton_from_json(j), std::invalid_argument);
  j = io::automaton_to_json(base_tnfa());
  j["acceptance"]["type"] = "cobuchi";
  CHECK_THROWS_AS(io::automaton_from_json(j), std::invalid_argument);
  j = io::automaton_to_json(base_tnfa());
  j["alphabet"]["kind"] = "mystery";
  CHECK_THROWS_AS(io::automaton_from_json(j), std::invalid_argument);
  j = io::automaton_to_json(base_tnfa());
  j["initial"] = {7};
  CHECK_THROWS_AS(io::automaton_from_json(j), std::invalid_argument);
}

TEST_CASE("word json round trip and name resolution") {
  Automaton a = base_tnfa();
  LassoWord w;
  Letter byname;
  byname.name = "x";
  Letter inline_rel;
  inline_rel.rel = {{0, 0}, {1, 1}};
  w.prefix = {byname};
  w.period = {inline_rel, byname};

  io::json j = io::word_to_json(w);
  CHECK(j["format"] == "row-v1");
  LassoWord back = io::word_from_json(j);
  REQUIRE(back.prefix.size() == 1);
  REQUIRE(back.period.size() == 2);
  CHECK(back.prefix[0].name == "x");
  CHECK(back.prefix[0].rel.empty());  // names stay unresolved until asked
  CHECK(back.period[0].rel == inline_rel.rel);

  io::resolve_word(back, a);
  CHECK(back.prefix[0].rel == a.alphabet[0].rel);
  CHECK(back.period[1].rel == a.alphabet[0].rel);
  CHECK(back.period[0].rel == inline_rel.rel);  // inline refs untouched

  LassoWord stray;
  Letter missing;
  missing.name = "zz";
  stray.period = {missing};
  CHECK_THROWS_AS(io::resolve_word(stray, a), std::invalid_argument);

  io::json bad = io::word_to_json(w);
  bad["format"] = "row-v0";
  CHECK_THROWS_AS(io::word_from_json(bad), std::invalid_argument);
}

TEST_CASE("content hashes are stable") {
  CHECK(io::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(io::fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(io::fnv1a_hex("roa") == io::fnv1a_hex("roa"));
  CHECK(io::fnv1a_hex("roa") != io::fnv1a_hex("rob"));
}

TEST_CASE("hoa export/import preserves membership") {
  std::mt19937 rng(7101);
  std::uniform_int_distribution<std::size_t> pick;
  for (int it = 0; it < 40; ++it) {
    Automaton a = it % 2 == 0 ? oracles::random_buchi(rng, 2 + it % 4, 1 + it % 3)
                              : oracles::random_genbuchi(rng, 2 + it % 4, 1 + it % 3, 1 + it % 2);
    std::vector<std::string> names;
    for (const auto& l : a.alphabet) names.push_back(l.name);
    Automaton back = io::import_hoa(io::export_hoa(a), names);
    CHECK(back.n == a.n);
    CHECK(back.acc.type == a.acc.type);
    for (int trial = 0; trial < 10; ++trial) {
      LassoWord w;
      std::uniform_int_distribution<std::size_t> lp(0, 2), lv(1, 3), li(0, a.alphabet.size() - 1);
      for (std::size_t i = lp(rng); i > 0; --i) w.prefix.push_back(a.alphabet[li(rng)]);
      for (std::size_t i = lv(rng); i > 0; --i) w.period.push_back(a.alphabet[li(rng)]);
      CHECK(lasso_member(a, w) == lasso_member(back, w));
    }
  }
}

TEST_CASE("hoa export rejects unsupported shapes") {
  CHECK_THROWS_AS(io::export_hoa(ngbw::gen_fb_nk(3, 2)), std::invalid_argument);
  Automaton a = base_tnfa();
  a.acc = Acceptance::parity_acc({0, 1, 0});
  CHECK_THROWS_AS(io::export_hoa(a), std::invalid_argument);
  CHECK_THROWS_AS(io::import_hoa("HOA: v1\n--BODY--\n--END--\n"), std::invalid_argument);
}

TEST_CASE("atomic writes land complete") {
  const std::string path = "/tmp/roa_io_test.json";
  io::atomic_write(path, "first");
  CHECK(io::read_file(path) == "first");
  io::atomic_write(path, "second");  // overwrite goes through the same rename
  CHECK(io::read_file(path) == "second");
  std::remove(path.c_str());
  CHECK_THROWS_AS(io::read_file(path), std::runtime_error);
  CHECK_THROWS_AS(io::atomic_write("/nonexistent-dir/x/y.json", "z"), std::runtime_error);
}
