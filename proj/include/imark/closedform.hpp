#pragma once

// O(log n) evaluators for the solved i-Mark families and classic Mark.
//
// Every evaluator is immutable after construction. Small heaps are answered
// from a prefix of exact oracle values; larger heaps use residue rules plus a
// trailing-digit characterization of the one irregular residue column.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "imark/engine.hpp"

namespace imark {

// Mark = SD({1},{2}) with floor division n -> n/2; not expressible as a GameSpec.
struct MarkFamily {};
// i-Mark({1},{2}).
struct IMark12Family {};
// i-Mark([1,t-1],{d}), d != 1 (mod t): outcomes only.
struct RangeOutcomeFamily {
  Heap t;
  Heap d;
};
// i-Mark([1,t-1],{t}), t >= 2.
struct RangeDivTFamily {
  Heap t;
};
// i-Mark([1,t-1],{2}), t >= 3.
struct RangeDiv2Family {
  Heap t;
};
// i-Mark({a,2a},{2}): full g-values for a in {1,2,4}, odd heaps for any even a.
struct A2AFamily {
  Heap a;
};
// Misere i-Mark([1,t-1],D), every d != 1 (mod t).
struct MiRangeFamily {
  Heap t;
  std::vector<Heap> divisors;
};
// Misere i-Mark({a,2a},{2}), a = 2 or a odd.
struct MiA2AFamily {
  Heap a;
};

using Family = std::variant<MarkFamily, IMark12Family, RangeOutcomeFamily, RangeDivTFamily,
                            RangeDiv2Family, A2AFamily, MiRangeFamily, MiA2AFamily>;

struct BootstrapCache {
  // Exact oracle g-values for heaps 0..prefix.size()-1 (empty when unused).
  std::vector<std::uint8_t> prefix;
  // Div-t only: stripped base-t values v < t^2 whose column entries v*t^z reach
  // g = t exactly when z is odd (for the rest, when z is even).
  std::vector<Heap> stripped_set;
  // Div-2 and {a,2a} only: column entries at or above this heap follow the
  // halving recursion with regular subtraction options.
  Heap column_floor = 0;
};

class FamilyEvaluator {
 public:
  // Builds the bootstrap; throws OutsideDomain when the parameters fall outside
  // the family's hypotheses and LimitExceeded when the bootstrap overflows budget.
  explicit FamilyEvaluator(Family family, Heap budget = kDefaultOracleBudget);

  const Family& family() const { return family_; }
  const BootstrapCache& bootstrap() const { return *boot_; }
  Convention convention() const;
  // The i-Mark game being evaluated; nullopt for classic Mark.
  std::optional<GameSpec> spec() const;
  // e.g. "IMarkRange_Div2(t=3)"
  std::string name() const;

  bool has_grundy() const;
  bool in_grundy_domain(Heap n) const;
  bool in_outcome_domain(Heap n) const;

  // Throw OutsideDomain off-domain.
  Grundy grundy(Heap n) const;
  Outcome outcome(Heap n) const;

 private:
  Family family_;
  std::shared_ptr<const BootstrapCache> boot_;
};

// Most specific evaluator whose hypotheses cover (spec, convention), if any.
std::optional<FamilyEvaluator> family_for(const GameSpec& spec, Convention convention,
                                          Heap budget = kDefaultOracleBudget);

inline Grundy fast_grundy(const FamilyEvaluator& ev, Heap n) { return ev.grundy(n); }
inline Outcome fast_outcome(const FamilyEvaluator& ev, Heap n) { return ev.outcome(n); }

// Mark P-positions are b_0, b_1, ...; N-positions a_1, a_2, ....
struct MarkSequences {
  std::vector<Heap> a_values;  // a_1 .. a_count
  std::vector<Heap> b_values;  // b_0 .. b_{count-1}
};

MarkSequences gen_mark_sequences(std::size_t count);

namespace rules {

// i-Mark({1},{2}), even n >= 4: g = 2 iff the binary digits left after
// stripping trailing zeros are 11 and the zero count is odd, or they are
// anything else and the zero count is even.
bool imark12_is_two(Heap n);

// i-Mark([1,t-1],{t}), n = qt with q >= t: whether g(n) = t, decided from the
// stripped base-t value and the parity of the base-t trailing-zero count.
bool div_t_is_t(std::span<const Heap> stripped_set, Heap t, Heap n);

// The stripped set above, read off an oracle table covering heaps up to t^3.
std::vector<Heap> div_t_stripped_set(Heap t, const GrundyTable& table);

// i-Mark([1,2],{2}), n = 3q with q >= 6: whether g(n) = 3.
bool div2_t3_is_three(Heap n);
// i-Mark({2,4},{2}), n = 6q with q >= 2: whether g(n) = 3.
bool a2_is_three(Heap n);
// i-Mark({4,8},{2}), n = 12q with q >= 2: whether g(n) = 3.
bool a4_is_three(Heap n);

// Misere i-Mark({a,2a},{2}), a odd, on one period 0 <= r < 3a.
Outcome mimark_a2a_base(Heap a, Heap r);

}  // namespace rules

}  // namespace imark
