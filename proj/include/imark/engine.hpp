#pragma once

// Exact game semantics for i-Mark(S, D): from a heap of n tokens a player may
// move to n - s (s in S, s <= n) or to n / d (d in D, d divides n, n > 0).

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace imark {

using Heap = std::uint64_t;
using Grundy = std::uint32_t;

enum class Convention { Normal, Misere };
enum class Outcome { N, P };

inline char to_char(Outcome o) { return o == Outcome::N ? 'N' : 'P'; }
const char* to_string(Convention c);

// Default cap on dense oracle tables (entries).
inline constexpr Heap kDefaultOracleBudget = 100'000'000;

// Largest |S| + |D| the oracle accepts; g-values are stored one byte each.
inline constexpr std::size_t kMaxMoveRules = 255;

class GameSpec {
 public:
  // Sorts both sets; throws EmptySpec, BadElement or Duplicate.
  static GameSpec make(std::span<const std::int64_t> subtractions,
                       std::span<const std::int64_t> divisors);
  static GameSpec make(std::initializer_list<std::int64_t> subtractions,
                       std::initializer_list<std::int64_t> divisors);

  const std::vector<Heap>& subtractions() const { return subtractions_; }
  const std::vector<Heap>& divisors() const { return divisors_; }
  std::size_t rule_count() const { return subtractions_.size() + divisors_.size(); }

  // "({1,2},{2})"
  std::string to_string() const;

  friend bool operator==(const GameSpec&, const GameSpec&) = default;
  friend auto operator<=>(const GameSpec&, const GameSpec&) = default;

 private:
  GameSpec() = default;
  std::vector<Heap> subtractions_;
  std::vector<Heap> divisors_;
};

GameSpec validate_spec(std::span<const std::int64_t> subtractions,
                       std::span<const std::int64_t> divisors);

// Calls f(m) for every option m of n, possibly with repeats when n - s == n / d.
template <class F>
void for_each_option(const GameSpec& spec, Heap n, F&& f) {
  for (Heap s : spec.subtractions()) {
    if (s > n) break;
    f(n - s);
  }
  if (n == 0) return;
  for (Heap d : spec.divisors())
    if (n % d == 0) f(n / d);
}

// Deduplicated, ascending.
std::vector<Heap> options(const GameSpec& spec, Heap n);

// Dense g-values for heaps 0..limit. Immutable once built.
class GrundyTable {
 public:
  GrundyTable(GameSpec spec, std::vector<std::uint8_t> values);

  const GameSpec& spec() const { return spec_; }
  Heap limit() const { return values_.size() - 1; }
  std::span<const std::uint8_t> values() const { return values_; }

  Grundy operator[](Heap n) const { return values_[n]; }
  // Throws LimitExceeded past limit().
  Grundy at(Heap n) const;

 private:
  GameSpec spec_;
  std::vector<std::uint8_t> values_;
};

// Single ascending pass; O(limit * |S|+|D|) time, limit + 1 bytes.
GrundyTable build_table(const GameSpec& spec, Heap limit, Heap budget = kDefaultOracleBudget);

// Outcomes of heaps 0..limit by the win/loss recursion (no g-values involved).
// Under misere play every terminal heap is an N-position.
std::vector<Outcome> outcome_table(const GameSpec& spec, Convention convention, Heap limit,
                                   Heap budget = kDefaultOracleBudget);

// Oracle outcome of a single heap; costs O(n) like the table it builds.
Outcome outcome(const GameSpec& spec, Convention convention, Heap n,
                Heap budget = kDefaultOracleBudget);

Grundy mex(std::span<const Grundy> values);

// First n whose stored value differs from mex over its options, recomputed
// from the stored values alone.
std::optional<Heap> first_mex_violation(const GrundyTable& table);

}  // namespace imark
