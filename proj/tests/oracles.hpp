#pragma once

// Test-only reference computations, kept independent of the library's
// ascending-pass oracle and closed forms.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "imark/engine.hpp"
#include "imark/periodicity.hpp"

namespace oracle {

inline unsigned mex_of(const std::set<unsigned>& s) {
  unsigned m = 0;
  while (s.count(m)) ++m;
  return m;
}

// Top-down memoized recursion straight from the move definition.
class Recursive {
 public:
  Recursive(std::vector<std::uint64_t> s, std::vector<std::uint64_t> d, bool floor_division = false)
      : s_(std::move(s)), d_(std::move(d)), floor_(floor_division) {}

  std::vector<std::uint64_t> moves(std::uint64_t n) const {
    std::vector<std::uint64_t> out;
    for (auto s : s_)
      if (s <= n) out.push_back(n - s);
    if (n > 0)
      for (auto d : d_)
        if (floor_ || n % d == 0) out.push_back(n / d);
    return out;
  }

  unsigned g(std::uint64_t n) {
    if (auto it = g_.find(n); it != g_.end()) return it->second;
    std::set<unsigned> vals;
    for (auto m : moves(n)) vals.insert(g(m));
    return g_[n] = mex_of(vals);
  }

  // true = P-position. Misere: terminal heaps are N.
  bool is_p(std::uint64_t n, bool misere) {
    auto& memo = misere ? mis_ : nor_;
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    auto opts = moves(n);
    bool p;
    if (opts.empty()) {
      p = !misere;
    } else {
      p = true;
      for (auto m : opts) p = p && !is_p(m, misere);
    }
    return memo[n] = p;
  }

  // Fill ascending so deep recursion never happens.
  void warm(std::uint64_t upto) {
    for (std::uint64_t n = 0; n <= upto; ++n) {
      g(n);
      is_p(n, false);
      is_p(n, true);
    }
  }

 private:
  std::vector<std::uint64_t> s_, d_;
  bool floor_;
  std::map<std::uint64_t, unsigned> g_;
  std::map<std::uint64_t, bool> nor_, mis_;
};

// True when no certificate smaller than `found` in (ell, p, q) order validates,
// by exhaustive search over residue subsets. Small inputs only.
inline bool no_smaller_certificate(std::span<const imark::Value> seq,
                                   const imark::PeriodicityCertificate& found,
                                   std::size_t max_period, std::size_t min_reps) {
  auto fits = [&](std::size_t q, std::size_t p) {
    return 2 * q <= seq.size() && seq.size() - q >= (min_reps + 1) * p;
  };
  auto any_valid = [&](std::size_t ell, std::size_t p, std::size_t q_end) {
    std::vector<std::size_t> pick(ell);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t at, std::size_t from) {
      if (at == ell) {
        for (std::size_t q = 0; q < q_end; ++q) {
          if (!fits(q, p)) continue;
          imark::PeriodicityCertificate c{q, p, pick, seq.size()};
          if (imark::validate(seq, c)) return true;
        }
        return false;
      }
      for (std::size_t r = from; r < p; ++r) {
        pick[at] = r;
        if (rec(at + 1, r + 1)) return true;
      }
      return false;
    };
    return rec(0, 0);
  };
  for (std::size_t ell = 0; ell <= found.ell(); ++ell) {
    for (std::size_t p = ell + 1; p <= max_period; ++p) {
      std::size_t q_end = seq.size();
      if (ell == found.ell()) {
        if (p > found.period) break;
        if (p == found.period) q_end = found.preperiod;
      }
      if (any_valid(ell, p, q_end)) return false;
    }
  }
  return true;
}

}  // namespace oracle
