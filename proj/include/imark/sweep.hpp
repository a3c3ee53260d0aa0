#pragma once

// Data-parallel kernels over heap ranges and candidate periods.
//
// Each kernel comes as an OpenMP version and a plain serial loop with the
// same contract. The serial versions are the reference the tests compare
// against; results never depend on thread count or scheduling.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "imark/closedform.hpp"
#include "imark/periodicity.hpp"

namespace imark::sweep {

struct MismatchReport {
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  std::optional<Heap> first;  // smallest mismatching heap
};

// Fast g-values for heaps [lo, hi); every heap must be in the evaluator's domain.
std::vector<Grundy> grundy_range(const FamilyEvaluator& ev, Heap lo, Heap hi);
std::vector<Grundy> grundy_range_serial(const FamilyEvaluator& ev, Heap lo, Heap hi);

// Fast evaluator against oracle values on [0, upto]. Heaps outside the
// evaluator's domain are skipped. Grundy families compare g-values against
// `table`; outcome-only families compare outcomes against `outcomes`.
MismatchReport compare_grundy(const FamilyEvaluator& ev, const GrundyTable& table, Heap upto);
MismatchReport compare_grundy_serial(const FamilyEvaluator& ev, const GrundyTable& table, Heap upto);
MismatchReport compare_outcomes(const FamilyEvaluator& ev, std::span<const Outcome> outcomes,
                                Heap upto);
MismatchReport compare_outcomes_serial(const FamilyEvaluator& ev, std::span<const Outcome> outcomes,
                                       Heap upto);

// Heaps n among `samples` with fast_grundy(n) != mex{fast_grundy(m) : m option of n}.
// No oracle involved.
MismatchReport mex_violations(const FamilyEvaluator& ev, std::span<const Heap> samples);
MismatchReport mex_violations_serial(const FamilyEvaluator& ev, std::span<const Heap> samples);

// last_mismatch_by_residue for every p in [1, max_period]; entry p-1 holds period p.
std::vector<std::vector<std::int64_t>> mismatch_profiles(std::span<const Value> seq,
                                                         std::size_t max_period);
std::vector<std::vector<std::int64_t>> mismatch_profiles_serial(std::span<const Value> seq,
                                                                std::size_t max_period);

}  // namespace imark::sweep
