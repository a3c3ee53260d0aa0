#include "imark/sweep.hpp"

#include <algorithm>
#include <bitset>
#include <limits>

#include "imark/errors.hpp"

namespace imark::sweep {

namespace {

constexpr Heap kNone = std::numeric_limits<Heap>::max();

MismatchReport make_report(std::uint64_t checked, std::uint64_t bad, Heap first) {
  MismatchReport r;
  r.checked = checked;
  r.mismatches = bad;
  if (first != kNone) r.first = first;
  return r;
}

void check_range(const FamilyEvaluator& ev, Heap lo, Heap hi) {
  if (lo > hi) throw Error(ErrorCode::OutsideDomain, "empty or reversed heap range");
  if (!ev.has_grundy()) throw Error(ErrorCode::OutsideDomain, ev.name() + " has no g-values");
}

// Options of n in the evaluator's own game (floor halving for classic Mark).
template <class F>
void each_option(const std::optional<GameSpec>& spec, Heap n, F&& f) {
  if (spec) {
    for_each_option(*spec, n, f);
  } else if (n > 0) {
    f(n - 1);
    f(n / 2);
  }
}

bool mex_ok(const FamilyEvaluator& ev, const std::optional<GameSpec>& spec, Heap n) {
  std::bitset<kMaxMoveRules + 2> seen;
  each_option(spec, n, [&](Heap m) {
    Grundy g = ev.grundy(m);
    if (g < seen.size()) seen.set(g);
  });
  Grundy m = 0;
  while (seen.test(m)) ++m;
  return ev.grundy(n) == m;
}

}  // namespace

std::vector<Grundy> grundy_range(const FamilyEvaluator& ev, Heap lo, Heap hi) {
  check_range(ev, lo, hi);
  std::vector<Grundy> out(hi - lo);
  const std::int64_t count = static_cast<std::int64_t>(hi - lo);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) out[i] = ev.grundy(lo + static_cast<Heap>(i));
  return out;
}

std::vector<Grundy> grundy_range_serial(const FamilyEvaluator& ev, Heap lo, Heap hi) {
  check_range(ev, lo, hi);
  std::vector<Grundy> out;
  out.reserve(hi - lo);
  for (Heap n = lo; n < hi; ++n) out.push_back(ev.grundy(n));
  return out;
}

MismatchReport compare_grundy(const FamilyEvaluator& ev, const GrundyTable& table, Heap upto) {
  check_range(ev, 0, upto);
  table.at(upto);
  std::uint64_t checked = 0, bad = 0;
  Heap first = kNone;
  const std::int64_t count = static_cast<std::int64_t>(upto) + 1;
#pragma omp parallel for schedule(static) reduction(+ : checked, bad) reduction(min : first)
  for (std::int64_t i = 0; i < count; ++i) {
    const Heap n = static_cast<Heap>(i);
    if (!ev.in_grundy_domain(n)) continue;
    ++checked;
    if (ev.grundy(n) != table[n]) {
      ++bad;
      first = std::min(first, n);
    }
  }
  return make_report(checked, bad, first);
}

MismatchReport compare_grundy_serial(const FamilyEvaluator& ev, const GrundyTable& table,
                                     Heap upto) {
  check_range(ev, 0, upto);
  table.at(upto);
  std::uint64_t checked = 0, bad = 0;
  Heap first = kNone;
  for (Heap n = 0; n <= upto; ++n) {
    if (!ev.in_grundy_domain(n)) continue;
    ++checked;
    if (ev.grundy(n) != table[n]) {
      ++bad;
      if (first == kNone) first = n;
    }
  }
  return make_report(checked, bad, first);
}

MismatchReport compare_outcomes(const FamilyEvaluator& ev, std::span<const Outcome> outcomes,
                                Heap upto) {
  if (upto >= outcomes.size()) throw Error(ErrorCode::LimitExceeded, "outcome table too short");
  std::uint64_t checked = 0, bad = 0;
  Heap first = kNone;
  const std::int64_t count = static_cast<std::int64_t>(upto) + 1;
#pragma omp parallel for schedule(static) reduction(+ : checked, bad) reduction(min : first)
  for (std::int64_t i = 0; i < count; ++i) {
    const Heap n = static_cast<Heap>(i);
    if (!ev.in_outcome_domain(n)) continue;
    ++checked;
    if (ev.outcome(n) != outcomes[n]) {
      ++bad;
      first = std::min(first, n);
    }
  }
  return make_report(checked, bad, first);
}

MismatchReport compare_outcomes_serial(const FamilyEvaluator& ev,
                                       std::span<const Outcome> outcomes, Heap upto) {
  if (upto >= outcomes.size()) throw Error(ErrorCode::LimitExceeded, "outcome table too short");
  std::uint64_t checked = 0, bad = 0;
  Heap first = kNone;
  for (Heap n = 0; n <= upto; ++n) {
    if (!ev.in_outcome_domain(n)) continue;
    ++checked;
    if (ev.outcome(n) != outcomes[n]) {
      ++bad;
      if (first == kNone) first = n;
    }
  }
  return make_report(checked, bad, first);
}

MismatchReport mex_violations(const FamilyEvaluator& ev, std::span<const Heap> samples) {
  check_range(ev, 0, 0);
  const auto spec = ev.spec();
  std::uint64_t checked = 0, bad = 0;
  Heap first = kNone;
  const std::int64_t count = static_cast<std::int64_t>(samples.size());
#pragma omp parallel for schedule(static) reduction(+ : checked, bad) reduction(min : first)
  for (std::int64_t i = 0; i < count; ++i) {
    const Heap n = samples[i];
    if (!ev.in_grundy_domain(n)) continue;
    ++checked;
    if (!mex_ok(ev, spec, n)) {
      ++bad;
      first = std::min(first, n);
    }
  }
  return make_report(checked, bad, first);
}

MismatchReport mex_violations_serial(const FamilyEvaluator& ev, std::span<const Heap> samples) {
  check_range(ev, 0, 0);
  const auto spec = ev.spec();
  std::uint64_t checked = 0, bad = 0;
  Heap first = kNone;
  for (Heap n : samples) {
    if (!ev.in_grundy_domain(n)) continue;
    ++checked;
    if (!mex_ok(ev, spec, n)) {
      ++bad;
      first = std::min(first, n);
    }
  }
  return make_report(checked, bad, first);
}

std::vector<std::vector<std::int64_t>> mismatch_profiles(std::span<const Value> seq,
                                                         std::size_t max_period) {
  std::vector<std::vector<std::int64_t>> out(max_period);
  const std::int64_t count = static_cast<std::int64_t>(max_period);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i)
    out[i] = last_mismatch_by_residue(seq, static_cast<std::size_t>(i) + 1);
  return out;
}

std::vector<std::vector<std::int64_t>> mismatch_profiles_serial(std::span<const Value> seq,
                                                                std::size_t max_period) {
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(max_period);
  for (std::size_t p = 1; p <= max_period; ++p) out.push_back(last_mismatch_by_residue(seq, p));
  return out;
}

}  // namespace imark::sweep
