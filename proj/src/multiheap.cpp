#include "imark/multiheap.hpp"

#include <algorithm>

#include "imark/errors.hpp"

namespace imark {

namespace {

void require_normal(Convention convention) {
  if (convention != Convention::Normal)
    throw Error(ErrorCode::Unsupported, "sums of heaps are only supported under normal play");
}

}  // namespace

Grundy nim_sum(std::span<const Grundy> values) {
  Grundy x = 0;
  for (Grundy v : values) x ^= v;
  return x;
}

const FamilyEvaluator* SumEvaluator::evaluator(const GameSpec& spec) {
  auto it = evaluators_.find(spec);
  if (it == evaluators_.end())
    it = evaluators_.emplace(spec, family_for(spec, Convention::Normal, budget_)).first;
  return it->second ? &*it->second : nullptr;
}

Grundy SumEvaluator::heap_grundy(const GameSpec& spec, Heap n) {
  if (const auto* ev = evaluator(spec); ev && ev->in_grundy_domain(n)) return ev->grundy(n);
  auto it = tables_.find(spec);
  if (it == tables_.end() || it->second.limit() < n) {
    // Grow geometrically so repeated queries stay linear overall.
    Heap want = n;
    if (it != tables_.end()) want = std::max(n, std::min(budget_ - 1, 2 * it->second.limit()));
    GrundyTable table = build_table(spec, want, budget_);
    it = tables_.insert_or_assign(spec, std::move(table)).first;
  }
  return it->second[n];
}

Grundy SumEvaluator::sum_grundy(const SumPosition& pos, Convention convention) {
  require_normal(convention);
  Grundy total = 0;
  for (const auto& h : pos) total ^= heap_grundy(h.spec, h.size);
  return total;
}

std::optional<MoveAdvice> SumEvaluator::optimal_move(const SumPosition& pos,
                                                     Convention convention) {
  const Grundy total = sum_grundy(pos, convention);
  if (total == 0) return std::nullopt;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    const auto& h = pos[i];
    const Grundy target = heap_grundy(h.spec, h.size) ^ total;
    for (Heap m : options(h.spec, h.size)) {
      if (heap_grundy(h.spec, m) == target) return MoveAdvice{i, h.size, m, 0};
    }
  }
  // Unreachable for a correct evaluator: some heap has g_i ^ total < g_i.
  throw Error(ErrorCode::OutsideDomain, "no move reaches total 0; evaluator inconsistent");
}

Grundy sum_grundy(const SumPosition& pos, Convention convention) {
  return SumEvaluator().sum_grundy(pos, convention);
}

std::optional<MoveAdvice> optimal_move(const SumPosition& pos, Convention convention) {
  return SumEvaluator().optimal_move(pos, convention);
}

}  // namespace imark
