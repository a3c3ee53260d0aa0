#include "imark/engine.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

#include "imark/errors.hpp"

namespace imark {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySpec: return "EmptySpec";
    case ErrorCode::BadElement: return "BadElement";
    case ErrorCode::Duplicate: return "Duplicate";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::BadBase: return "BadBase";
    case ErrorCode::OutsideDomain: return "OutsideDomain";
    case ErrorCode::PrefixTooShort: return "PrefixTooShort";
    case ErrorCode::InconsistentTail: return "InconsistentTail";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::BadCacheFile: return "BadCacheFile";
  }
  return "Unknown";
}

const char* to_string(Convention c) { return c == Convention::Normal ? "normal" : "misere"; }

namespace {

std::vector<Heap> normalize(std::span<const std::int64_t> values, std::int64_t min_value,
                            const char* what) {
  std::vector<Heap> out;
  out.reserve(values.size());
  for (std::int64_t v : values) {
    if (v < min_value) {
      throw Error(ErrorCode::BadElement, std::string(what) + " element " + std::to_string(v) +
                                             " is below " + std::to_string(min_value));
    }
    out.push_back(static_cast<Heap>(v));
  }
  std::sort(out.begin(), out.end());
  if (auto dup = std::adjacent_find(out.begin(), out.end()); dup != out.end())
    throw Error(ErrorCode::Duplicate, std::string(what) + " repeats " + std::to_string(*dup));
  return out;
}

void check_limit(Heap limit, Heap budget) {
  if (limit >= budget) {
    throw Error(ErrorCode::LimitExceeded, "oracle table of " + std::to_string(limit) +
                                              "+1 entries exceeds budget " +
                                              std::to_string(budget));
  }
}

// 256-bit membership set for option g-values.
struct SmallSet {
  std::array<std::uint64_t, 4> words{};

  void insert(unsigned v) { words[v >> 6] |= std::uint64_t{1} << (v & 63); }
  unsigned mex() const {
    for (unsigned w = 0; w < words.size(); ++w)
      if (~words[w] != 0) return w * 64 + static_cast<unsigned>(std::countr_one(words[w]));
    return 256;
  }
};

}  // namespace

GameSpec GameSpec::make(std::span<const std::int64_t> subtractions,
                        std::span<const std::int64_t> divisors) {
  if (subtractions.empty() && divisors.empty())
    throw Error(ErrorCode::EmptySpec, "subtraction and division sets are both empty");
  GameSpec spec;
  spec.subtractions_ = normalize(subtractions, 1, "subtraction set");
  spec.divisors_ = normalize(divisors, 2, "division set");
  return spec;
}

GameSpec GameSpec::make(std::initializer_list<std::int64_t> subtractions,
                        std::initializer_list<std::int64_t> divisors) {
  return make(std::span(subtractions.begin(), subtractions.size()),
              std::span(divisors.begin(), divisors.size()));
}

std::string GameSpec::to_string() const {
  std::ostringstream os;
  auto put = [&os](const std::vector<Heap>& v) {
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << '}';
  };
  os << '(';
  put(subtractions_);
  os << ',';
  put(divisors_);
  os << ')';
  return os.str();
}

GameSpec validate_spec(std::span<const std::int64_t> subtractions,
                       std::span<const std::int64_t> divisors) {
  return GameSpec::make(subtractions, divisors);
}

std::vector<Heap> options(const GameSpec& spec, Heap n) {
  std::vector<Heap> out;
  for_each_option(spec, n, [&out](Heap m) { out.push_back(m); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GrundyTable::GrundyTable(GameSpec spec, std::vector<std::uint8_t> values)
    : spec_(std::move(spec)), values_(std::move(values)) {
  if (values_.empty()) values_.push_back(0);
}

Grundy GrundyTable::at(Heap n) const {
  if (n > limit()) {
    throw Error(ErrorCode::LimitExceeded,
                "heap " + std::to_string(n) + " is past table limit " + std::to_string(limit()));
  }
  return values_[n];
}

GrundyTable build_table(const GameSpec& spec, Heap limit, Heap budget) {
  check_limit(limit, budget);
  if (spec.rule_count() > kMaxMoveRules) {
    throw Error(ErrorCode::LimitExceeded,
                "at most " + std::to_string(kMaxMoveRules) + " move rules fit a byte table");
  }
  std::vector<std::uint8_t> g(limit + 1);
  for (Heap n = 0; n <= limit; ++n) {
    SmallSet seen;
    for_each_option(spec, n, [&](Heap m) { seen.insert(g[m]); });
    g[n] = static_cast<std::uint8_t>(seen.mex());
  }
  return GrundyTable(spec, std::move(g));
}

std::vector<Outcome> outcome_table(const GameSpec& spec, Convention convention, Heap limit,
                                   Heap budget) {
  check_limit(limit, budget);
  std::vector<Outcome> o(limit + 1);
  for (Heap n = 0; n <= limit; ++n) {
    bool any_option = false;
    bool reaches_p = false;
    for_each_option(spec, n, [&](Heap m) {
      any_option = true;
      reaches_p = reaches_p || o[m] == Outcome::P;
    });
    if (!any_option)
      o[n] = convention == Convention::Normal ? Outcome::P : Outcome::N;
    else
      o[n] = reaches_p ? Outcome::N : Outcome::P;
  }
  return o;
}

Outcome outcome(const GameSpec& spec, Convention convention, Heap n, Heap budget) {
  return outcome_table(spec, convention, n, budget)[n];
}

Grundy mex(std::span<const Grundy> values) {
  std::vector<bool> seen(values.size() + 1);
  for (Grundy v : values)
    if (v < seen.size()) seen[v] = true;
  Grundy m = 0;
  while (seen[m]) ++m;
  return m;
}

std::optional<Heap> first_mex_violation(const GrundyTable& table) {
  std::vector<Grundy> vals;
  for (Heap n = 0; n <= table.limit(); ++n) {
    vals.clear();
    for (Heap m : options(table.spec(), n)) vals.push_back(table[m]);
    if (mex(vals) != table[n]) return n;
  }
  return std::nullopt;
}

}  // namespace imark
