#pragma once

// Normal-play sums of i-Mark heaps. Misere sums are out of scope.

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "imark/closedform.hpp"
#include "imark/engine.hpp"

namespace imark {

struct HeapPosition {
  GameSpec spec;
  Heap size;
};

using SumPosition = std::vector<HeapPosition>;

struct MoveAdvice {
  std::size_t heap_index = 0;
  Heap from = 0;
  Heap to = 0;
  Grundy total_after = 0;
};

Grundy nim_sum(std::span<const Grundy> values);

// Per-heap g-values from the closed-form evaluator when one covers the heap,
// else from an oracle table grown on demand. Not thread-safe (caches mutate).
class SumEvaluator {
 public:
  explicit SumEvaluator(Heap oracle_budget = kDefaultOracleBudget)
      : budget_(oracle_budget) {}

  Grundy heap_grundy(const GameSpec& spec, Heap n);

  // Throws Unsupported for Misere, LimitExceeded past the oracle budget.
  Grundy sum_grundy(const SumPosition& pos, Convention convention = Convention::Normal);

  // nullopt when the sum is already 0 (a P-position). Ties: lowest heap index,
  // then smallest resulting heap.
  std::optional<MoveAdvice> optimal_move(const SumPosition& pos,
                                         Convention convention = Convention::Normal);

 private:
  const FamilyEvaluator* evaluator(const GameSpec& spec);

  Heap budget_;
  std::map<GameSpec, std::optional<FamilyEvaluator>> evaluators_;
  std::map<GameSpec, GrundyTable> tables_;
};

Grundy sum_grundy(const SumPosition& pos, Convention convention = Convention::Normal);
std::optional<MoveAdvice> optimal_move(const SumPosition& pos,
                                       Convention convention = Convention::Normal);

}  // namespace imark
