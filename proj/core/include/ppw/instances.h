#ifndef PPW_INSTANCES_H_
#define PPW_INSTANCES_H_

#include <array>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace ppw {

// Exact cover by 3-sets over elements 0..q-1.
struct X3CInstance {
  int q = 0;
  std::vector<std::array<int, 3>> sets;

  int t() const { return static_cast<int>(sets.size()); }
  // Throws InvalidInstance.
  void validate() const;
};

struct Literal {
  int var = 0;  // 0-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct ThreeSatInstance {
  int q = 0;  // variables
  std::vector<std::array<Literal, 3>> clauses;

  int t() const { return static_cast<int>(clauses.size()); }
  void validate() const;
};

// Indices of q/3 disjoint sets covering every element, or nothing.
std::optional<std::vector<int>> solve_x3c(const X3CInstance& inst);
// assignment[i] is the value of variable i.
std::optional<std::vector<bool>> solve_3sat(const ThreeSatInstance& inst);

bool covers(const X3CInstance& inst, const std::vector<int>& chosen);
bool satisfies(const ThreeSatInstance& inst, const std::vector<bool>& assignment);

// "q: 6" then one "set: v1 v2 v3" per line; '#' comments.
X3CInstance parse_x3c(std::istream& in);
std::string format_x3c(const X3CInstance& inst);
// DIMACS: "p cnf <vars> <clauses>", clause lines ending in 0, 'c' comments.
ThreeSatInstance parse_dimacs(std::istream& in);
std::string format_dimacs(const ThreeSatInstance& inst);

}  // namespace ppw

#endif  // PPW_INSTANCES_H_
