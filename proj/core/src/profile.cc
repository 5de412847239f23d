#include "ppw/profile.h"

#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "ppw/errors.h"

namespace ppw {

std::vector<std::string> default_labels(int m) {
  std::vector<std::string> out;
  out.reserve(m);
  for (int i = 1; i <= m; ++i) out.push_back("c" + std::to_string(i));
  return out;
}

PosetProfile::PosetProfile(int m, std::vector<std::string> labels)
    : m_(m), labels_(std::move(labels)) {
  if (labels_.empty()) labels_ = default_labels(m);
  if (static_cast<int>(labels_.size()) != m)
    throw LengthMismatch("label count differs from alternative count");
  std::unordered_map<std::string, int> seen;
  for (const auto& l : labels_)
    if (!seen.emplace(l, 0).second) throw DuplicateElement("label " + l);
}

std::vector<Alternative> PosetProfile::alternatives() const {
  std::vector<Alternative> out;
  for (int i = 0; i < m_; ++i) out.push_back({i, labels_[i]});
  return out;
}

int PosetProfile::index_of(const std::string& label) const {
  for (int i = 0; i < m_; ++i)
    if (labels_[i] == label) return i;
  return -1;
}

void PosetProfile::add(PartialOrder o) {
  if (o.m() != m_) throw LengthMismatch("ballot over a different alternative count");
  ballots_.push_back(std::move(o));
}

PosetProfile PosetProfile::from_linear(const LinearProfile& p,
                                       std::vector<std::string> labels) {
  PosetProfile out(p.m, std::move(labels));
  for (const auto& v : p.votes) out.add(v);
  return out;
}

bool PosetProfile::is_linear() const {
  for (const auto& b : ballots_)
    if (!b.is_linear()) return false;
  return true;
}

LinearProfile PosetProfile::as_linear() const {
  LinearProfile p{m_, {}};
  for (const auto& b : ballots_) {
    if (!b.is_linear()) throw Error("ballot is not a linear order");
    auto ext = linear_extensions(b, 1);
    p.votes.push_back(ext.front());
  }
  return p;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_chain(const std::string& tok) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : tok) {
    if (ch == '>') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

PosetProfile parse_profile(std::istream& in) {
  std::optional<PosetProfile> prof;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  };
  auto lookup = [&](const std::string& l) {
    int i = prof->index_of(l);
    if (i < 0) fail("unknown label '" + l + "'");
    return i;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) fail("expected 'key: value'");
    std::string key = trim(line.substr(0, colon));
    std::istringstream rest(line.substr(colon + 1));
    std::vector<std::string> toks;
    for (std::string t; rest >> t;) toks.push_back(t);

    if (key == "alternatives") {
      if (prof) fail("alternatives declared twice");
      if (toks.empty()) fail("no alternatives");
      try {
        prof.emplace(static_cast<int>(toks.size()), toks);
      } catch (const Error& e) {
        fail(e.what());
      }
      continue;
    }
    if (!prof) fail("vote before alternatives line");
    if (key == "vote") {
      std::vector<Pair> pairs;
      for (const auto& t : toks) {
        auto chain = split_chain(t);
        if (chain.size() < 2) fail("expected a>b in '" + t + "'");
        for (size_t i = 0; i + 1 < chain.size(); ++i)
          pairs.emplace_back(lookup(chain[i]), lookup(chain[i + 1]));
      }
      try {
        prof->add(transitive_close(pairs, prof->m()));
      } catch (const CycleError& e) {
        fail(std::string("cyclic ballot: ") + e.what());
      }
    } else if (key == "vote-linear") {
      if (toks.size() != 1) fail("vote-linear takes one chain");
      LinearOrder v;
      for (const auto& l : split_chain(toks[0])) v.ranking.push_back(lookup(l));
      if (v.m() != prof->m() || !v.is_permutation())
        fail("vote-linear must rank every alternative once");
      prof->add(v);
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (!prof) throw ParseError("missing alternatives line");
  return *prof;
}

PosetProfile parse_profile_text(const std::string& text) {
  std::istringstream in(text);
  return parse_profile(in);
}

PosetProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_profile(in);
}

std::string format_linear(const LinearOrder& v,
                          const std::vector<std::string>& labels) {
  std::string s;
  for (int i = 0; i < v.m(); ++i) {
    if (i) s += '>';
    s += labels[v.ranking[i]];
  }
  return s;
}

std::string format_profile(const PosetProfile& p) {
  std::string s = "alternatives:";
  for (const auto& l : p.labels()) s += " " + l;
  s += '\n';
  for (const auto& b : p.ballots()) {
    if (b.is_linear() && p.m() > 1) {
      s += "vote-linear: " + format_linear(linear_extensions(b, 1).front(),
                                           p.labels()) + '\n';
      continue;
    }
    s += "vote:";
    for (auto [a, c] : b.cover_pairs()) s += " " + p.label(a) + ">" + p.label(c);
    s += '\n';
  }
  return s;
}

}  // namespace ppw
