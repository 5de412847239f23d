#include "ppw/instances.h"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ppw/errors.h"

namespace ppw {

void X3CInstance::validate() const {
  if (q < 0 || q % 3 != 0) throw InvalidInstance("q must be a non-negative multiple of 3");
  for (const auto& s : sets) {
    for (int v : s)
      if (v < 0 || v >= q) throw InvalidInstance("set element out of range");
    if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2])
      throw InvalidInstance("set repeats an element");
  }
}

void ThreeSatInstance::validate() const {
  if (q < 0) throw InvalidInstance("negative variable count");
  for (const auto& cl : clauses) {
    for (const auto& l : cl)
      if (l.var < 0 || l.var >= q) throw InvalidInstance("literal variable out of range");
    if (cl[0].var == cl[1].var || cl[0].var == cl[2].var || cl[1].var == cl[2].var)
      throw InvalidInstance("clause repeats a variable");
  }
}

bool covers(const X3CInstance& inst, const std::vector<int>& chosen) {
  std::vector<int> hit(inst.q, 0);
  for (int i : chosen) {
    if (i < 0 || i >= inst.t()) return false;
    for (int v : inst.sets[i]) ++hit[v];
  }
  return std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; });
}

bool satisfies(const ThreeSatInstance& inst, const std::vector<bool>& a) {
  if (static_cast<int>(a.size()) != inst.q) return false;
  for (const auto& cl : inst.clauses) {
    bool sat = false;
    for (const auto& l : cl) sat = sat || a[l.var] == l.positive;
    if (!sat) return false;
  }
  return true;
}

std::optional<std::vector<int>> solve_x3c(const X3CInstance& inst) {
  inst.validate();
  std::vector<char> covered(inst.q, 0);
  std::vector<int> chosen;
  std::function<bool()> go = [&]() -> bool {
    int first = -1;
    for (int v = 0; v < inst.q && first < 0; ++v)
      if (!covered[v]) first = v;
    if (first < 0) return true;
    for (int i = 0; i < inst.t(); ++i) {
      const auto& s = inst.sets[i];
      if (std::find(s.begin(), s.end(), first) == s.end()) continue;
      if (covered[s[0]] || covered[s[1]] || covered[s[2]]) continue;
      for (int v : s) covered[v] = 1;
      chosen.push_back(i);
      if (go()) return true;
      chosen.pop_back();
      for (int v : s) covered[v] = 0;
    }
    return false;
  };
  if (!go()) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::optional<std::vector<bool>> solve_3sat(const ThreeSatInstance& inst) {
  inst.validate();
  if (inst.q > 30) throw InvalidInstance("too many variables for exhaustive search");
  std::vector<bool> a(inst.q);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inst.q); ++mask) {
    for (int i = 0; i < inst.q; ++i) a[i] = (mask >> i) & 1u;
    if (satisfies(inst, a)) return a;
  }
  return std::nullopt;
}

X3CInstance parse_x3c(std::istream& in) {
  X3CInstance inst;
  bool have_q = false;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto colon = line.find(':');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (colon == std::string::npos) fail("expected 'key: value'");
    std::istringstream key_in(line.substr(0, colon)), rest(line.substr(colon + 1));
    std::string key;
    key_in >> key;
    if (key == "q") {
      if (!(rest >> inst.q)) fail("bad element count");
      have_q = true;
    } else if (key == "set") {
      if (!have_q) fail("set before q");
      std::array<int, 3> s{};
      for (int& v : s) {
        std::string tok;
        if (!(rest >> tok) || tok.size() < 2 || tok[0] != 'v') fail("expected v<i>");
        try {
          v = std::stoi(tok.substr(1)) - 1;
        } catch (const std::exception&) {
          fail("bad element '" + tok + "'");
        }
      }
      std::string extra;
      if (rest >> extra) fail("set has more than three elements");
      inst.sets.push_back(s);
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (!have_q) throw ParseError("missing q line");
  try {
    inst.validate();
  } catch (const InvalidInstance& e) {
    throw ParseError(e.what());
  }
  return inst;
}

std::string format_x3c(const X3CInstance& inst) {
  std::string s = "q: " + std::to_string(inst.q) + "\n";
  for (const auto& set : inst.sets) {
    s += "set:";
    for (int v : set) s += " v" + std::to_string(v + 1);
    s += '\n';
  }
  return s;
}

ThreeSatInstance parse_dimacs(std::istream& in) {
  ThreeSatInstance inst;
  bool header = false;
  int expected = 0;
  std::vector<Literal> cur;
  std::string tok;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "p") {
      std::string fmt;
      if (!(ls >> fmt >> inst.q >> expected) || fmt != "cnf")
        throw ParseError("bad DIMACS header");
      header = true;
      continue;
    }
    if (!header) throw ParseError("clause before DIMACS header");
    ls.seekg(0);
    while (ls >> tok) {
      int x = 0;
      try {
        x = std::stoi(tok);
      } catch (const std::exception&) {
        throw ParseError("bad literal '" + tok + "'");
      }
      if (x == 0) {
        if (cur.size() != 3) throw ParseError("clause does not have three literals");
        inst.clauses.push_back({cur[0], cur[1], cur[2]});
        cur.clear();
      } else {
        cur.push_back({std::abs(x) - 1, x > 0});
      }
    }
  }
  if (!header) throw ParseError("missing DIMACS header");
  if (!cur.empty()) throw ParseError("unterminated clause");
  if (inst.t() != expected) throw ParseError("clause count differs from header");
  try {
    inst.validate();
  } catch (const InvalidInstance& e) {
    throw ParseError(e.what());
  }
  return inst;
}

std::string format_dimacs(const ThreeSatInstance& inst) {
  std::string s = "p cnf " + std::to_string(inst.q) + " " + std::to_string(inst.t()) + "\n";
  for (const auto& cl : inst.clauses) {
    for (const auto& l : cl) s += std::to_string(l.positive ? l.var + 1 : -(l.var + 1)) + " ";
    s += "0\n";
  }
  return s;
}

}  // namespace ppw
