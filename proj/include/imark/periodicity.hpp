#pragma once

// Finite-prefix evidence about (almost) periodic sequences.
//
// A certificate (q, p, E) claims s[i] == s[i + p] for every q <= i with
// i + p inside the prefix and (i mod p) not in E. It only ever speaks about
// the prefix it was checked against.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "imark/engine.hpp"

namespace imark {

using Value = std::uint32_t;

struct PeriodicityCertificate {
  std::size_t preperiod = 0;
  std::size_t period = 1;
  std::vector<std::size_t> exceptions;  // sorted residues, each < period
  std::size_t checked_prefix = 0;

  std::size_t ell() const { return exceptions.size(); }
  bool exact() const { return exceptions.empty(); }
};

struct DetectOptions {
  std::size_t max_period = 64;
  std::size_t ell_max = 1;
  std::size_t min_reps = 3;
};

// Certificate minimizing (ell, period, preperiod) lexicographically, or
// nullopt. A candidate must leave min_reps + 1 periods after its preperiod and
// the preperiod may cover at most half the prefix. Needs
// seq.size() >= (min_reps + 1) * max_period (PrefixTooShort).
std::optional<PeriodicityCertificate> detect(std::span<const Value> seq,
                                             const DetectOptions& opts = {});

bool validate(std::span<const Value> seq, const PeriodicityCertificate& cert);

// For each residue c < p, the largest i = c (mod p) with i + p < size and
// seq[i] != seq[i + p]; -1 when there is none.
std::vector<std::int64_t> last_mismatch_by_residue(std::span<const Value> seq, std::size_t p);

struct ExceptionCensus {
  std::size_t period = 1;
  std::vector<Value> pattern;  // eventual value of each residue
  std::vector<std::size_t> exception_positions;
  // Distinct residues (mod period) among exception_positions, sorted.
  std::vector<std::size_t> exception_residues;
  std::size_t preperiod_length = 0;

  // Counts exception columns, so repeated misses in one residue count once.
  std::size_t exception_count() const { return exception_residues.size(); }
};

// Pattern from the final tail_reps periods, then every earlier disagreement.
// Throws PrefixTooShort (fewer than tail_reps + 3 periods) or InconsistentTail.
ExceptionCensus census(std::span<const Value> seq, std::size_t period, std::size_t tail_reps = 10);

struct RefutationWitness {
  Heap n = 0;
  Heap dn = 0;
  Heap d = 0;
  Grundy g_n = 0;
  Grundy g_dn = 0;
};

// Against a claimed (q, p) period of the g-sequence: n is the least positive
// multiple of p with n >= q, d = min(D), so dn = n (mod p) while dn -> n is a
// move. The table must reach dn (LimitExceeded otherwise).
RefutationWitness refute_grundy_period(const GrundyTable& table, Heap preperiod, Heap period);
RefutationWitness refute_grundy_period(const GameSpec& spec, Heap preperiod, Heap period,
                                       Heap budget = kDefaultOracleBudget);

// Sequence helpers for feeding the detector.
std::vector<Value> grundy_sequence(const GrundyTable& table);
std::vector<Value> outcome_sequence(std::span<const Outcome> outcomes);

// "NNPNNPPNPP NNNNN": one letter per residue, a space after every ten.
std::string period_string(std::span<const Value> outcome_seq, std::size_t start, std::size_t period);

}  // namespace imark
