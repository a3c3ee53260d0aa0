#include "imark/closedform.hpp"

#include <algorithm>
#include <numeric>

#include "imark/digits.hpp"
#include "imark/errors.hpp"

namespace imark {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::vector<std::int64_t> range_set(Heap t) {
  std::vector<std::int64_t> s(t - 1);
  std::iota(s.begin(), s.end(), 1);
  return s;
}

GameSpec range_spec(Heap t, std::vector<Heap> divisors) {
  std::vector<std::int64_t> d(divisors.begin(), divisors.end());
  return GameSpec::make(range_set(t), d);
}

GameSpec a2a_spec(Heap a) {
  std::vector<std::int64_t> s{static_cast<std::int64_t>(a), static_cast<std::int64_t>(2 * a)};
  std::vector<std::int64_t> d{2};
  return GameSpec::make(s, d);
}

[[noreturn]] void outside(const std::string& what) { throw Error(ErrorCode::OutsideDomain, what); }

std::vector<std::uint8_t> oracle_prefix(const GameSpec& spec, Heap limit, Heap budget) {
  auto table = build_table(spec, limit, budget);
  return {table.values().begin(), table.values().end()};
}

// Beyond the preperiod, the non-zero residues of i-Mark([1,t-1],{2}).
Grundy div2_residue(Heap t, Heap r) {
  if (t == 3) return r == 1 ? 0 : 1;
  switch (r) {
    case 1: return 0;
    case 2: return 2;
    case 3: return 1;
    default: return static_cast<Grundy>(r - 1);
  }
}

// Column n = qt of i-Mark([1,t-1],{2}). At or above column_floor a column
// entry x has subtraction options valued {0..t-2}, so g(x) = t exactly when x
// is even and g(x/2) = t-1. Walking up the halving chain v, 2v, 4v, ... from
// the first entry m >= column_floor fixes the answer by a single parity.
Grundy div2_column(Heap t, const BootstrapCache& boot, Heap n) {
  const Grundy lo = static_cast<Grundy>(t - 1);
  const Grundy hi = static_cast<Grundy>(t);
  const Heap v = digits::stripped(n, 2);
  const unsigned z = digits::trailing_zeros(n, 2);

  unsigned k = 0;
  while ((v << k) < boot.column_floor) ++k;
  const Heap m = v << k;

  Grundy base;
  if (m < boot.prefix.size())
    base = boot.prefix[m];
  else if (m % t != 0)
    base = div2_residue(t, m % t);
  else
    base = lo;  // odd column entry: no halving option

  if (base != lo && base != hi) {
    // m is off the column (t even). The first column entry above it halves to
    // a value other than t-1, hence equals t-1 itself.
    do {
      ++k;
    } while ((v << k) % t != 0);
    base = lo;
  }
  const bool flip = (z - k) % 2 == 1;
  return flip ? (base == lo ? hi : lo) : base;
}

Outcome p_set_outcome(Heap t, Heap d, Heap n) {
  const Heap q = n / t;
  const Heap r = n % t;
  bool p = (r == 0 && q < d) || (r == 1 && q >= d);
  return p ? Outcome::P : Outcome::N;
}

Outcome from_grundy(Grundy g) { return g == 0 ? Outcome::P : Outcome::N; }

}  // namespace

namespace rules {

bool imark12_is_two(Heap n) {
  auto p = digits::profile(n, 2);
  bool odd_zeros = p.trailing_zeros % 2 == 1;
  return p.stripped == 0b11 ? odd_zeros : !odd_zeros;
}

bool div_t_is_t(std::span<const Heap> stripped_set, Heap t, Heap n) {
  auto p = digits::profile(n, t);
  bool listed = std::binary_search(stripped_set.begin(), stripped_set.end(), p.stripped);
  bool odd_zeros = p.trailing_zeros % 2 == 1;
  return listed ? odd_zeros : !odd_zeros;
}

std::vector<Heap> div_t_stripped_set(Heap t, const GrundyTable& table) {
  std::vector<Heap> set;
  for (Heap v = 1; v < t * t; ++v) {
    if (v % t == 0) continue;
    // v < t: v*t lies in the preperiod, so read v*t^2 (g = t-1 puts v in the set).
    bool listed = v < t ? table.at(v * t * t) == t - 1 : table.at(v * t) == t;
    if (listed) set.push_back(v);
  }
  return set;
}

bool div2_t3_is_three(Heap n) {
  Heap q = n / 3;
  if (q % 2 == 1) return false;
  auto p = digits::profile(q, 2);
  bool special = p.stripped == 0b1 || p.stripped == 0b101;
  bool even_zeros = p.trailing_zeros % 2 == 0;
  return special ? even_zeros : !even_zeros;
}

bool a2_is_three(Heap n) {
  Heap q = n / 6;
  if (q % 2 == 1 || q < 4) return false;
  auto p = digits::profile(q, 2);
  bool even_zeros = p.trailing_zeros % 2 == 0;
  return p.stripped == 1 ? even_zeros : !even_zeros;
}

bool a4_is_three(Heap n) { return digits::trailing_zeros(n / 12, 2) % 2 == 1; }

Outcome mimark_a2a_base(Heap a, Heap r) {
  auto zeros = [](Heap x) { return digits::trailing_zeros(x, 2); };
  auto p_if = [](bool p) { return p ? Outcome::P : Outcome::N; };
  if (r < a) {
    // Only halving moves exist; odd heaps are terminal (N under misere).
    return p_if(r != 0 && zeros(r) % 2 == 1);
  }
  if (r < 2 * a) {
    if (r == a) return Outcome::P;
    if (r % 2 == 1) return p_if(zeros(r - a) % 2 == 0);
    return p_if(zeros(r) % 2 == 1);
  }
  if (r == 2 * a || r % 2 == 0) return Outcome::N;
  return p_if(zeros(r - a) % 2 == 0);
}

}  // namespace rules

FamilyEvaluator::FamilyEvaluator(Family family, Heap budget) : family_(std::move(family)) {
  auto boot = std::make_shared<BootstrapCache>();
  std::visit(
      Overloaded{
          [](const MarkFamily&) {},
          [&](const IMark12Family&) {
            boot->prefix = oracle_prefix(GameSpec::make({1}, {2}), 7, budget);
          },
          [](const RangeOutcomeFamily& f) {
            if (f.t < 2 || f.d < 2 || f.d % f.t == 1)
              outside("range outcome family needs t >= 2, d >= 2, d != 1 (mod t)");
          },
          [&](const RangeDivTFamily& f) {
            if (f.t < 2) outside("Div-t family needs t >= 2");
            if (f.t > 1024) throw Error(ErrorCode::LimitExceeded, "Div-t bootstrap needs t^3 entries");
            auto table = build_table(range_spec(f.t, {f.t}), f.t * f.t * f.t + f.t, budget);
            boot->stripped_set = rules::div_t_stripped_set(f.t, table);
            boot->prefix.assign(table.values().begin(), table.values().end());
          },
          [&](const RangeDiv2Family& f) {
            if (f.t < 3) outside("Div-2 family needs t >= 3");
            boot->column_floor = 4 * f.t + 24;
            boot->prefix =
                oracle_prefix(range_spec(f.t, {2}), 2 * boot->column_floor + f.t, budget);
          },
          [&](const A2AFamily& f) {
            if (f.a == 0 || (f.a % 2 == 1 && f.a != 1))
              outside("{a,2a} family needs a in {1,2,4} or a even");
            if (f.a <= 4) boot->prefix = oracle_prefix(a2a_spec(f.a), 64, budget);
          },
          [](const MiRangeFamily& f) {
            if (f.t < 2) outside("misere range family needs t >= 2");
            for (Heap d : f.divisors)
              if (d < 2 || d % f.t == 1) outside("misere range family needs every d != 1 (mod t)");
          },
          [](const MiA2AFamily& f) {
            if (f.a == 0 || (f.a != 2 && f.a % 2 == 0))
              outside("misere {a,2a} family needs a = 2 or a odd");
          },
      },
      family_);
  boot_ = std::move(boot);
}

Convention FamilyEvaluator::convention() const {
  return std::holds_alternative<MiRangeFamily>(family_) || std::holds_alternative<MiA2AFamily>(family_)
             ? Convention::Misere
             : Convention::Normal;
}

std::optional<GameSpec> FamilyEvaluator::spec() const {
  return std::visit(
      Overloaded{
          [](const MarkFamily&) -> std::optional<GameSpec> { return std::nullopt; },
          [](const IMark12Family&) -> std::optional<GameSpec> { return GameSpec::make({1}, {2}); },
          [](const RangeOutcomeFamily& f) -> std::optional<GameSpec> { return range_spec(f.t, {f.d}); },
          [](const RangeDivTFamily& f) -> std::optional<GameSpec> { return range_spec(f.t, {f.t}); },
          [](const RangeDiv2Family& f) -> std::optional<GameSpec> { return range_spec(f.t, {2}); },
          [](const A2AFamily& f) -> std::optional<GameSpec> { return a2a_spec(f.a); },
          [](const MiRangeFamily& f) -> std::optional<GameSpec> { return range_spec(f.t, f.divisors); },
          [](const MiA2AFamily& f) -> std::optional<GameSpec> { return a2a_spec(f.a); },
      },
      family_);
}

std::string FamilyEvaluator::name() const {
  auto num = [](Heap v) { return std::to_string(v); };
  return std::visit(
      Overloaded{
          [](const MarkFamily&) -> std::string { return "Mark"; },
          [](const IMark12Family&) -> std::string { return "IMark_1_2"; },
          [&](const RangeOutcomeFamily& f) {
            return "IMarkRange_Outcome(t=" + num(f.t) + ",d=" + num(f.d) + ")";
          },
          [&](const RangeDivTFamily& f) { return "IMarkRange_DivT(t=" + num(f.t) + ")"; },
          [&](const RangeDiv2Family& f) { return "IMarkRange_Div2(t=" + num(f.t) + ")"; },
          [&](const A2AFamily& f) { return "IMark_A2A(a=" + num(f.a) + ")"; },
          [&](const MiRangeFamily& f) {
            std::string d;
            for (Heap x : f.divisors) d += (d.empty() ? "" : ",") + num(x);
            return "MiMarkRange(t=" + num(f.t) + ",D={" + d + "})";
          },
          [&](const MiA2AFamily& f) { return "MiMark_A2A(a=" + num(f.a) + ")"; },
      },
      family_);
}

bool FamilyEvaluator::has_grundy() const {
  return !std::holds_alternative<RangeOutcomeFamily>(family_) && convention() == Convention::Normal;
}

bool FamilyEvaluator::in_grundy_domain(Heap n) const {
  if (!has_grundy()) return false;
  if (const auto* f = std::get_if<A2AFamily>(&family_); f && f->a > 4) return n % 2 == 1;
  return true;
}

bool FamilyEvaluator::in_outcome_domain(Heap n) const {
  if (const auto* f = std::get_if<A2AFamily>(&family_); f && f->a > 4) return n % 2 == 1;
  return true;
}

Grundy FamilyEvaluator::grundy(Heap n) const {
  if (!in_grundy_domain(n))
    outside(name() + " does not define the g-value of heap " + std::to_string(n));
  const BootstrapCache& boot = *boot_;
  if (n < boot.prefix.size()) return boot.prefix[n];

  return std::visit(
      Overloaded{
          [&](const MarkFamily&) -> Grundy {
            if (n == 0) return 0;
            auto p = digits::profile(n, 2);
            if (p.trailing_zeros % 2 == 1) return 0;
            return p.one_digits % 2 == 1 ? 1 : 2;
          },
          [&](const IMark12Family&) -> Grundy {
            if (n % 2 == 1) return 0;
            return rules::imark12_is_two(n) ? 2 : 1;
          },
          [&](const RangeDivTFamily& f) -> Grundy {
            const Heap r = n % f.t;
            if (r == 1) return 0;
            if (r > 1) return static_cast<Grundy>(r - 1);
            return static_cast<Grundy>(rules::div_t_is_t(boot.stripped_set, f.t, n) ? f.t : f.t - 1);
          },
          [&](const RangeDiv2Family& f) -> Grundy {
            const Heap r = n % f.t;
            if (r != 0) return div2_residue(f.t, r);
            return div2_column(f.t, boot, n);
          },
          [&](const A2AFamily& f) -> Grundy {
            if (f.a == 1) {
              const Heap r = n % 3;
              if (r != 0) return r == 1 ? 0 : 1;
              return rules::div2_t3_is_three(n) ? 3 : 2;
            }
            if (f.a == 2) {
              switch (n % 6) {
                case 1: case 4: return 0;
                case 2: case 3: return 1;
                case 5: return 2;
                default: return rules::a2_is_three(n) ? 3 : 2;
              }
            }
            if (f.a == 4) {
              switch (n % 12) {
                case 1: case 3: case 4: case 10: return 0;
                case 5: case 6: case 7: case 8: return 1;
                case 2: case 9: case 11: return 2;
                default: return rules::a4_is_three(n) ? 3 : 2;
              }
            }
            // Odd heaps of an even a: pure period 3a.
            const Heap r = n % (3 * f.a);
            if (r < f.a) return 0;
            return r < 2 * f.a ? 1 : 2;
          },
          [&](const auto&) -> Grundy { outside(name() + " has no g-values"); },
      },
      family_);
}

Outcome FamilyEvaluator::outcome(Heap n) const {
  if (!in_outcome_domain(n))
    outside(name() + " does not define the outcome of heap " + std::to_string(n));
  return std::visit(
      Overloaded{
          [&](const MarkFamily&) {
            return n != 0 && digits::vile(n) ? Outcome::N : Outcome::P;
          },
          [&](const IMark12Family&) { return p_set_outcome(2, 2, n); },
          [&](const RangeOutcomeFamily& f) { return p_set_outcome(f.t, f.d, n); },
          [&](const RangeDivTFamily& f) { return p_set_outcome(f.t, f.t, n); },
          [&](const RangeDiv2Family& f) { return p_set_outcome(f.t, 2, n); },
          [&](const A2AFamily&) { return from_grundy(grundy(n)); },
          [&](const MiRangeFamily& f) { return n % f.t == 1 ? Outcome::P : Outcome::N; },
          [&](const MiA2AFamily& f) {
            if (f.a == 2) return n % 6 == 2 || n % 6 == 3 ? Outcome::P : Outcome::N;
            return rules::mimark_a2a_base(f.a, n % (3 * f.a));
          },
      },
      family_);
}

std::optional<FamilyEvaluator> family_for(const GameSpec& spec, Convention convention,
                                          Heap budget) {
  const auto& s = spec.subtractions();
  const auto& d = spec.divisors();

  bool is_range = !s.empty();
  for (std::size_t i = 0; i < s.size() && is_range; ++i) is_range = s[i] == i + 1;
  const Heap t = s.size() + 1;
  const bool is_a2a = s.size() == 2 && s[1] == 2 * s[0];
  const bool d_is_2 = d.size() == 1 && d[0] == 2;

  if (convention == Convention::Normal) {
    if (s.size() == 1 && s[0] == 1 && d_is_2) return FamilyEvaluator(IMark12Family{}, budget);
    if (is_range && d.size() == 1) {
      if (d[0] == t) return FamilyEvaluator(RangeDivTFamily{t}, budget);
      if (d[0] == 2 && t >= 3) return FamilyEvaluator(RangeDiv2Family{t}, budget);
      if (d[0] % t != 1) return FamilyEvaluator(RangeOutcomeFamily{t, d[0]}, budget);
    }
    if (is_a2a && d_is_2 && s[0] % 2 == 0) return FamilyEvaluator(A2AFamily{s[0]}, budget);
    return std::nullopt;
  }

  if (is_range && std::none_of(d.begin(), d.end(), [t](Heap x) { return x % t == 1; }))
    return FamilyEvaluator(MiRangeFamily{t, d}, budget);
  if (is_a2a && d_is_2 && (s[0] == 2 || s[0] % 2 == 1))
    return FamilyEvaluator(MiA2AFamily{s[0]}, budget);
  return std::nullopt;
}

MarkSequences gen_mark_sequences(std::size_t count) {
  MarkSequences seq;
  if (count == 0) return seq;
  std::vector<bool> used(4 * count + 8);
  seq.b_values.push_back(0);
  used[0] = true;
  Heap next = 0;
  for (std::size_t i = 1; i <= count; ++i) {
    while (used[next]) ++next;
    seq.a_values.push_back(next);
    used[next] = true;
    if (i < count) {
      seq.b_values.push_back(2 * next);
      used[2 * next] = true;
    }
  }
  return seq;
}

}  // namespace imark
