#ifndef PPW_PROFILE_H_
#define PPW_PROFILE_H_

#include <istream>
#include <string>
#include <vector>

#include "ppw/order.h"

namespace ppw {

struct Alternative {
  int index = 0;
  std::string label;
};

struct LinearProfile {
  int m = 0;
  std::vector<LinearOrder> votes;

  int n() const { return static_cast<int>(votes.size()); }
};

class PosetProfile {
 public:
  PosetProfile() = default;
  // Labels default to c1..cm when empty.
  explicit PosetProfile(int m, std::vector<std::string> labels = {});

  int m() const { return m_; }
  int n() const { return static_cast<int>(ballots_.size()); }
  const std::vector<PartialOrder>& ballots() const { return ballots_; }
  const PartialOrder& ballot(int j) const { return ballots_[j]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int a) const { return labels_[a]; }
  std::vector<Alternative> alternatives() const;
  // -1 when absent.
  int index_of(const std::string& label) const;

  void add(PartialOrder o);
  void add(const LinearOrder& v) { add(PartialOrder::from_linear(v)); }

  static PosetProfile from_linear(const LinearProfile& p,
                                  std::vector<std::string> labels = {});
  bool is_linear() const;
  // Throws when some ballot is not a linear order.
  LinearProfile as_linear() const;

 private:
  int m_ = 0;
  std::vector<std::string> labels_;
  std::vector<PartialOrder> ballots_;
};

// Text format:
//   alternatives: a b c d
//   vote: a>b c>d        strict pairs, chains allowed, closure applied
//   vote-linear: a>b>c>d
// '#' starts a comment.
PosetProfile parse_profile(std::istream& in);
PosetProfile parse_profile_text(const std::string& text);
PosetProfile load_profile(const std::string& path);
std::string format_profile(const PosetProfile& p);
std::string format_linear(const LinearOrder& v,
                          const std::vector<std::string>& labels);

std::vector<std::string> default_labels(int m);

}  // namespace ppw

#endif  // PPW_PROFILE_H_
