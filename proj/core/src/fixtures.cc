#include "ppw/fixtures.h"

#include "ppw/errors.h"

namespace ppw {

namespace {

PosetProfile profile_of(const std::vector<PartialOrder>& ballots) {
  PosetProfile p(ballots.front().m());
  for (const auto& b : ballots) p.add(b);
  return p;
}

}  // namespace

PartialOrder three_ballot(int i) {
  switch (i) {
    case 1: return transitive_close({{0, 1}, {0, 2}}, 3);
    case 2: return transitive_close({{0, 2}, {1, 2}}, 3);
    case 3: return transitive_close({{1, 2}}, 3);
  }
  throw Error("three-ballot fixtures are numbered 1 to 3");
}

PosetProfile three_ballot_profile() {
  return profile_of({three_ballot(1), three_ballot(2), three_ballot(3)});
}

PosetProfile repeated_first_profile() {
  return profile_of({three_ballot(1), three_ballot(1), three_ballot(2)});
}

PartialOrder five_alternative_order() {
  return transitive_close({{0, 1}, {1, 2}, {2, 3}, {4, 3}}, 5);
}

PartialOrder top_ballot(const AltSet& tops) {
  if (tops == AltSet{0}) return PartialOrder::from_linear({{0, 1, 2}});
  if (tops == AltSet{1}) return PartialOrder::from_linear({{1, 0, 2}});
  if (tops == AltSet{2}) return PartialOrder::from_linear({{2, 0, 1}});
  if (tops == AltSet{0, 1}) return transitive_close({{0, 2}, {1, 2}}, 3);
  if (tops == AltSet{0, 2}) return transitive_close({{0, 1}, {2, 1}}, 3);
  if (tops == AltSet{1, 2}) return transitive_close({{1, 0}, {2, 0}}, 3);
  throw Error("no fixture ballot for that top set");
}

std::vector<IndependenceCase> independence_fixtures() {
  using Q = QueryKind;
  PartialOrder o1 = top_ballot({0}), o2 = top_ballot({1}), o3 = top_ballot({2});
  PartialOrder o12 = top_ballot({0, 1}), o13 = top_ballot({0, 2}),
               o23 = top_ballot({1, 2});
  std::vector<IndependenceCase> out;
  out.push_back({"(PW,NW) and (PW,NcW)",
                 {{Q::kPW, Q::kNW}, {Q::kPW, Q::kNcW}},
                 profile_of({o1, o1, o1, o1, o1}),
                 profile_of({o1, o2, o2, o13, o13}),
                 {{Q::kNW, true, false}, {Q::kNcW, true, false}, {Q::kPW, true, true}}});
  out.push_back({"(PW,PcW)",
                 {{Q::kPW, Q::kPcW}},
                 profile_of({o1, o2}),
                 profile_of({o2, o3}),
                 {{Q::kPcW, true, false}, {Q::kPW, false, false}}});
  out.push_back({"(NcW,NW)",
                 {{Q::kNcW, Q::kNW}},
                 profile_of({o1, o1}),
                 profile_of({o1, o12}),
                 {{Q::kNW, true, false}, {Q::kNcW, true, true}}});
  out.push_back({"(PcW,PW) and (PcW,NcW)",
                 {{Q::kPcW, Q::kPW}, {Q::kPcW, Q::kNcW}},
                 profile_of({o12, o12}),
                 profile_of({o1, o2}),
                 {{Q::kPW, true, false}, {Q::kNcW, false, true}, {Q::kPcW, true, true}}});
  out.push_back({"(NW,PW), (NW,PcW), (NcW,PW) and (NcW,PcW)",
                 {{Q::kNW, Q::kPW}, {Q::kNW, Q::kPcW}, {Q::kNcW, Q::kPW}, {Q::kNcW, Q::kPcW}},
                 profile_of({o12, o12}),
                 profile_of({o23, o23}),
                 {{Q::kPW, true, false},
                  {Q::kPcW, true, false},
                  {Q::kNW, false, false},
                  {Q::kNcW, false, false}}});
  out.push_back({"(NW,NcW)",
                 {{Q::kNW, Q::kNcW}},
                 profile_of({o1, o2}),
                 profile_of({o2, o12}),
                 {{Q::kNcW, true, false}, {Q::kNW, false, false}}});
  return out;
}

}  // namespace ppw
