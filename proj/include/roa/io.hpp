#ifndef ROA_IO_HPP
#define ROA_IO_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "core.hpp"

// Serialization: the native JSON formats ("roa-v1" automata, "row-v1"
// words), a HOA exporter/importer for explicit-alphabet Buchi and
// generalized Buchi automata, content hashing, and atomic file writes.

namespace roa::io {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// roa-v1 automata

inline json rel_to_json(const Rel& r) {
  json j = json::array();
  for (auto [p, q] : r) j.push_back(json::array({p, q}));
  return j;
}

inline Rel rel_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("relation: array expected");
  Rel r;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("relation: pair expected");
    r.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  normalize(r);
  return r;
}

inline json automaton_to_json(const Automaton& a) {
  json j;
  j["format"] = "roa-v1";
  j["states"] = a.n;
  j["initial"] = a.initial;
  json acc;
  acc["type"] = acc_type_name(a.acc.type);
  switch (a.acc.type) {
    case AccType::Buchi:
      acc["data"] = a.acc.buchi;
      break;
    case AccType::GenBuchi:
    case AccType::Muller:
      acc["data"] = a.acc.sets;
      break;
    case AccType::Rabin:
    case AccType::Streett: {
      json ps = json::array();
      for (const auto& p : a.acc.pairs) ps.push_back(json::array({json(p.G), json(p.B)}));
      acc["data"] = ps;
      break;
    }
    case AccType::Parity:
      acc["data"] = a.acc.parity;
      break;
  }
  j["acceptance"] = acc;
  json alpha;
  if (a.implicit_full) {
    alpha["kind"] = "implicit-full";
  } else {
    alpha["kind"] = "named";
    json letters = json::object();
    for (const auto& l : a.alphabet) {
      if (l.name.empty()) throw std::invalid_argument("serialize: named letters required");
      letters[l.name] = rel_to_json(l.rel);
    }
    alpha["letters"] = letters;
  }
  j["alphabet"] = alpha;
  return j;
}

inline Automaton automaton_from_json(const json& j) {
  if (j.value("format", "") != "roa-v1") throw std::invalid_argument("automaton: format roa-v1 expected");
  Automaton a;
  a.n = j.at("states").get<int>();
  a.initial = j.at("initial").get<std::vector<int>>();
  const json& acc = j.at("acceptance");
  const std::string type = acc.at("type").get<std::string>();
  const json& data = acc.at("data");
  if (type == "buchi")
    a.acc = Acceptance::buchi_acc(data.get<std::vector<int>>());
  else if (type == "genbuchi")
    a.acc = Acceptance::genbuchi_acc(data.get<std::vector<std::vector<int>>>());
  else if (type == "muller")
    a.acc = Acceptance::muller_acc(data.get<std::vector<std::vector<int>>>());
  else if (type == "rabin" || type == "streett") {
    std::vector<AccPair> ps;
    for (const auto& e : data)
      ps.push_back({e.at(0).get<std::vector<int>>(), e.at(1).get<std::vector<int>>()});
    a.acc = type == "rabin" ? Acceptance::rabin_acc(std::move(ps))
                            : Acceptance::streett_acc(std::move(ps));
  } else if (type == "parity")
    a.acc = Acceptance::parity_acc(data.get<std::vector<int>>());
  else
    throw std::invalid_argument("automaton: unknown acceptance type " + type);
  const json& alpha = j.at("alphabet");
  const std::string kind = alpha.at("kind").get<std::string>();
  if (kind == "implicit-full") {
    a.implicit_full = true;
  } else if (kind == "named") {
    for (const auto& [name, rel] : alpha.at("letters").items()) {
      Letter l;
      l.name = name;
      l.rel = rel_from_json(rel);
      a.alphabet.push_back(std::move(l));
    }
  } else {
    throw std::invalid_argument("automaton: unknown alphabet kind " + kind);
  }
  validate(a);
  return a;
}

// ---------------------------------------------------------------------------
// row-v1 words (letter refs are names or inline relations)

inline json letter_ref_to_json(const Letter& l) {
  if (!l.name.empty()) return json(l.name);
  return rel_to_json(l.rel);
}

inline Letter letter_ref_from_json(const json& j) {
  Letter l;
  if (j.is_string()) {
    l.name = j.get<std::string>();
  } else {
    l.rel = rel_from_json(j);
  }
  return l;
}

inline json word_to_json(const LassoWord& w) {
  json j;
  j["format"] = "row-v1";
  json pre = json::array(), per = json::array();
  for (const auto& l : w.prefix) pre.push_back(letter_ref_to_json(l));
  for (const auto& l : w.period) per.push_back(letter_ref_to_json(l));
  j["prefix"] = pre;
  j["period"] = per;
  return j;
}

inline LassoWord word_from_json(const json& j) {
  if (j.value("format", "") != "row-v1") throw std::invalid_argument("word: format row-v1 expected");
  LassoWord w;
  for (const auto& e : j.at("prefix")) w.prefix.push_back(letter_ref_from_json(e));
  for (const auto& e : j.at("period")) w.period.push_back(letter_ref_from_json(e));
  return w;
}

// resolve name-only refs against a companion automaton's alphabet
inline void resolve_word(LassoWord& w, const Automaton& a) {
  auto fix = [&](Letter& l) {
    if (l.name.empty() || !l.rel.empty()) return;
    for (const auto& al : a.alphabet)
      if (al.name == l.name) {
        l.rel = al.rel;
        return;
      }
    throw std::invalid_argument("word: unresolvable letter " + l.name);
  };
  for (auto& l : w.prefix) fix(l);
  for (auto& l : w.period) fix(l);
}

// ---------------------------------------------------------------------------
// content hashing (FNV-1a, 64-bit)

inline std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

// ---------------------------------------------------------------------------
// HOA (explicit alphabets only; Buchi and generalized Buchi)

namespace detail {

inline int ap_count(std::size_t letters) {
  int k = 0;
  while ((1u << k) < letters) ++k;
  return k;
}

inline std::string label_expr(std::size_t index, int aps) {
  if (aps == 0) return "t";
  std::string s;
  for (int b = 0; b < aps; ++b) {
    if (b) s += "&";
    if (!(index & (1u << b))) s += "!";
    s += std::to_string(b);
  }
  return s;
}

}  // namespace detail

inline std::string export_hoa(const Automaton& a) {
  if (a.implicit_full) throw std::invalid_argument("hoa: explicit alphabet required");
  if (a.acc.type != AccType::Buchi && a.acc.type != AccType::GenBuchi)
    throw std::invalid_argument("hoa: Buchi or GenBuchi required");
  const int aps = detail::ap_count(a.alphabet.size());
  std::ostringstream os;
  os << "HOA: v1\n";
  os << "States: " << a.n << "\n";
  for (int s : a.initial) os << "Start: " << s << "\n";
  os << "AP: " << aps;
  for (int b = 0; b < aps; ++b) os << " \"l" << b << "\"";
  os << "\n";
  const std::size_t nsets = a.acc.type == AccType::Buchi ? 1 : a.acc.sets.size();
  if (a.acc.type == AccType::Buchi) {
    os << "acc-name: Buchi\n";
    os << "Acceptance: 1 Inf(0)\n";
  } else {
    os << "acc-name: generalized-Buchi " << nsets << "\n";
    os << "Acceptance: " << nsets;
    for (std::size_t i = 0; i < nsets; ++i) os << (i ? "&" : " ") << "Inf(" << i << ")";
    os << "\n";
  }
  os << "--BODY--\n";
  for (int s = 0; s < a.n; ++s) {
    os << "State: " << s;
    std::string sets;
    if (a.acc.type == AccType::Buchi) {
      if (std::find(a.acc.buchi.begin(), a.acc.buchi.end(), s) != a.acc.buchi.end()) sets = "0";
    } else {
      for (std::size_t i = 0; i < a.acc.sets.size(); ++i)
        if (std::find(a.acc.sets[i].begin(), a.acc.sets[i].end(), s) != a.acc.sets[i].end()) {
          if (!sets.empty()) sets += " ";
          sets += std::to_string(i);
        }
    }
    if (!sets.empty()) os << " {" << sets << "}";
    os << "\n";
    for (std::size_t li = 0; li < a.alphabet.size(); ++li)
      for (auto [p, q] : a.alphabet[li].rel)
        if (p == s) os << "[" << detail::label_expr(li, aps) << "] " << q << "\n";
  }
  os << "--END--\n";
  return os.str();
}

// parses the subset of HOA emitted above (one conjunction per edge label)
inline Automaton import_hoa(const std::string& text, const std::vector<std::string>& letter_names = {}) {
  std::istringstream is(text);
  std::string line;
  Automaton a;
  int aps = 0;
  std::vector<std::vector<int>> sets;
  bool genbuchi = false;
  std::size_t nsets = 1;
  while (std::getline(is, line)) {
    if (line.rfind("States:", 0) == 0) a.n = std::stoi(line.substr(7));
    else if (line.rfind("Start:", 0) == 0) a.initial.push_back(std::stoi(line.substr(6)));
    else if (line.rfind("AP:", 0) == 0) aps = std::stoi(line.substr(3));
    else if (line.rfind("acc-name: generalized-Buchi", 0) == 0) {
      genbuchi = true;
      nsets = static_cast<std::size_t>(std::stoul(line.substr(27)));
    } else if (line == "--BODY--")
      break;
  }
  if (a.n <= 0) throw std::invalid_argument("hoa: missing States header");
  sets.assign(nsets, {});
  const std::size_t nletters = aps == 0 ? 1 : (1u << aps);
  std::vector<Letter> alphabet(nletters);
  for (std::size_t i = 0; i < nletters; ++i)
    alphabet[i].name = i < letter_names.size() ? letter_names[i] : "l" + std::to_string(i);
  int cur = -1;
  while (std::getline(is, line)) {
    if (line == "--END--") break;
    if (line.rfind("State:", 0) == 0) {
      std::istringstream ls(line.substr(6));
      ls >> cur;
      auto lb = line.find('{');
      if (lb != std::string::npos) {
        std::istringstream ss(line.substr(lb + 1, line.find('}') - lb - 1));
        int i;
        while (ss >> i) sets[static_cast<std::size_t>(i)].push_back(cur);
      }
    } else if (!line.empty() && line[0] == '[') {
      auto rb = line.find(']');
      if (rb == std::string::npos || cur < 0) throw std::invalid_argument("hoa: bad edge line");
      std::string expr = line.substr(1, rb - 1);
      std::size_t index = 0;
      if (expr != "t") {
        std::istringstream es(expr);
        std::string atom;
        while (std::getline(es, atom, '&')) {
          if (atom.empty()) throw std::invalid_argument("hoa: bad label");
          if (atom[0] == '!') continue;
          index |= (1u << std::stoi(atom));
        }
      }
      if (index >= nletters) throw std::invalid_argument("hoa: label out of range");
      int dest = std::stoi(line.substr(rb + 1));
      alphabet[index].rel.emplace_back(cur, dest);
    }
  }
  for (auto& l : alphabet) normalize(l.rel);
  a.alphabet = std::move(alphabet);
  a.acc = genbuchi ? Acceptance::genbuchi_acc(std::move(sets)) : Acceptance::buchi_acc(sets.at(0));
  validate(a);
  return a;
}

// ---------------------------------------------------------------------------
// atomic file output (temp + rename)

inline void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp);
    f << content;
    if (!f.good()) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed: " + path);
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace roa::io

#endif  // ROA_IO_HPP
