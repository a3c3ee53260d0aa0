#include "imark/periodicity.hpp"

#include <algorithm>
#include <numeric>

#include "imark/errors.hpp"
#include "imark/sweep.hpp"

namespace imark {

std::vector<std::int64_t> last_mismatch_by_residue(std::span<const Value> seq, std::size_t p) {
  std::vector<std::int64_t> last(p, -1);
  if (seq.size() <= p) return last;
  for (std::size_t i = seq.size() - p; i-- > 0;) {
    if (seq[i] != seq[i + p] && last[i % p] < 0) last[i % p] = static_cast<std::int64_t>(i);
  }
  return last;
}

std::optional<PeriodicityCertificate> detect(std::span<const Value> seq, const DetectOptions& opts) {
  const std::size_t len = seq.size();
  if (opts.max_period == 0 || len < (opts.min_reps + 1) * opts.max_period) {
    throw Error(ErrorCode::PrefixTooShort,
                "prefix of " + std::to_string(len) + " needs at least " +
                    std::to_string((opts.min_reps + 1) * opts.max_period) + " terms");
  }
  const auto profiles = sweep::mismatch_profiles(seq, opts.max_period);

  for (std::size_t ell = 0; ell <= opts.ell_max; ++ell) {
    for (std::size_t p = 1; p <= opts.max_period; ++p) {
      if (ell >= p) continue;
      const auto& last = profiles[p - 1];
      // Excluding the ell residues with the latest mismatches minimizes q.
      std::vector<std::size_t> order(p);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return last[a] > last[b]; });
      std::int64_t q = 0;
      for (std::size_t k = ell; k < p; ++k) q = std::max(q, last[order[k]] + 1);
      if (len - static_cast<std::size_t>(q) < (opts.min_reps + 1) * p) continue;
      if (2 * static_cast<std::size_t>(q) > len) continue;

      PeriodicityCertificate cert;
      cert.preperiod = static_cast<std::size_t>(q);
      cert.period = p;
      cert.exceptions.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(ell));
      std::sort(cert.exceptions.begin(), cert.exceptions.end());
      cert.checked_prefix = len;
      return cert;
    }
  }
  return std::nullopt;
}

bool validate(std::span<const Value> seq, const PeriodicityCertificate& cert) {
  const std::size_t p = cert.period;
  if (p == 0 || cert.ell() >= p) return false;
  std::vector<bool> skip(p);
  for (std::size_t e : cert.exceptions) {
    if (e >= p || skip[e]) return false;
    skip[e] = true;
  }
  for (std::size_t i = cert.preperiod; i + p < seq.size(); ++i)
    if (!skip[i % p] && seq[i] != seq[i + p]) return false;
  return true;
}

ExceptionCensus census(std::span<const Value> seq, std::size_t period, std::size_t tail_reps) {
  if (period == 0 || tail_reps == 0 || seq.size() < (tail_reps + 3) * period) {
    throw Error(ErrorCode::PrefixTooShort, "census needs at least tail_reps + 3 periods");
  }
  const std::size_t len = seq.size();
  const std::size_t tail_start = len - tail_reps * period;

  ExceptionCensus c;
  c.period = period;
  c.pattern.resize(period);
  for (std::size_t i = tail_start; i < tail_start + period; ++i) c.pattern[i % period] = seq[i];
  for (std::size_t i = tail_start + period; i < len; ++i) {
    if (seq[i] != c.pattern[i % period]) {
      throw Error(ErrorCode::InconsistentTail, "tail disagrees with period " +
                                                   std::to_string(period) + " at index " +
                                                   std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < tail_start; ++i)
    if (seq[i] != c.pattern[i % period]) c.exception_positions.push_back(i);
  for (std::size_t i : c.exception_positions) c.exception_residues.push_back(i % period);
  std::sort(c.exception_residues.begin(), c.exception_residues.end());
  c.exception_residues.erase(std::unique(c.exception_residues.begin(), c.exception_residues.end()),
                             c.exception_residues.end());
  c.preperiod_length = c.exception_positions.empty() ? 0 : c.exception_positions.back() + 1;
  return c;
}

RefutationWitness refute_grundy_period(const GrundyTable& table, Heap preperiod, Heap period) {
  const auto& divisors = table.spec().divisors();
  if (divisors.empty())
    throw Error(ErrorCode::Unsupported, "refutation needs a division move");
  if (period == 0) throw Error(ErrorCode::OutsideDomain, "period must be positive");
  RefutationWitness w;
  w.d = divisors.front();
  const Heap k = std::max<Heap>(1, (preperiod + period - 1) / period);
  w.n = k * period;
  w.dn = w.d * w.n;
  w.g_n = table.at(w.n);
  w.g_dn = table.at(w.dn);
  return w;
}

RefutationWitness refute_grundy_period(const GameSpec& spec, Heap preperiod, Heap period,
                                       Heap budget) {
  if (spec.divisors().empty())
    throw Error(ErrorCode::Unsupported, "refutation needs a division move");
  if (period == 0) throw Error(ErrorCode::OutsideDomain, "period must be positive");
  const Heap k = std::max<Heap>(1, (preperiod + period - 1) / period);
  const Heap dn = spec.divisors().front() * k * period;
  return refute_grundy_period(build_table(spec, dn, budget), preperiod, period);
}

std::vector<Value> grundy_sequence(const GrundyTable& table) {
  return {table.values().begin(), table.values().end()};
}

std::vector<Value> outcome_sequence(std::span<const Outcome> outcomes) {
  std::vector<Value> v;
  v.reserve(outcomes.size());
  for (Outcome o : outcomes) v.push_back(o == Outcome::P ? 0 : 1);
  return v;
}

std::string period_string(std::span<const Value> outcome_seq, std::size_t start, std::size_t period) {
  std::string s;
  for (std::size_t i = 0; i < period; ++i) {
    if (i > 0 && i % 10 == 0) s += ' ';
    s += outcome_seq[start + i] == 0 ? 'P' : 'N';
  }
  return s;
}

}  // namespace imark
