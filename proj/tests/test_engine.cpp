#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "imark/engine.hpp"
#include "imark/errors.hpp"
#include "oracles.hpp"

using namespace imark;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected imark::Error");
  return ErrorCode::Unsupported;
}

std::vector<unsigned> prefix(const GrundyTable& t, std::size_t count) {
  return {t.values().begin(), t.values().begin() + static_cast<std::ptrdiff_t>(count)};
}

}  // namespace

TEST_CASE("validate_spec normalizes and rejects bad sets") {
  auto spec = GameSpec::make({4, 2}, {2});
  CHECK(spec.subtractions() == std::vector<Heap>{2, 4});
  CHECK(spec.to_string() == "({2,4},{2})");
  CHECK(GameSpec::make({1}, {2}).rule_count() == 2);
  CHECK(GameSpec::make({}, {3}).subtractions().empty());

  CHECK(code_of([] { GameSpec::make({}, {}); }) == ErrorCode::EmptySpec);
  CHECK(code_of([] { GameSpec::make({0}, {2}); }) == ErrorCode::BadElement);
  CHECK(code_of([] { GameSpec::make({-3}, {}); }) == ErrorCode::BadElement);
  CHECK(code_of([] { GameSpec::make({1}, {1}); }) == ErrorCode::BadElement);
  CHECK(code_of([] { GameSpec::make({1, 1}, {2}); }) == ErrorCode::Duplicate);
  CHECK(code_of([] { GameSpec::make({1}, {3, 2, 3}); }) == ErrorCode::Duplicate);
}

TEST_CASE("options") {
  CHECK(options(GameSpec::make({1}, {2}), 4) == std::vector<Heap>{2, 3});
  CHECK(options(GameSpec::make({2, 4}, {2}), 7) == std::vector<Heap>{3, 5});
  CHECK(options(GameSpec::make({2, 4}, {2}), 0).empty());
  CHECK(options(GameSpec::make({1}, {2, 3}), 0).empty());
  // 2 - 1 == 2 / 2: the duplicate collapses
  CHECK(options(GameSpec::make({1}, {2}), 2) == std::vector<Heap>{1});
  CHECK(options(GameSpec::make({1, 2}, {3}), 9) == std::vector<Heap>{3, 7, 8});
}

TEST_CASE("build_table reproduces the reference tables") {
  auto t12 = build_table(GameSpec::make({1}, {2}), 31);
  CHECK(prefix(t12, 32) == fixtures::kIMark12);
  CHECK(prefix(build_table(GameSpec::make({1, 2}, {2}), 21), 22) == fixtures::kIMarkRange3Div2);
  CHECK(prefix(build_table(GameSpec::make({2, 4}, {2}), 23), 24) == fixtures::kIMark24);
  auto t48 = build_table(GameSpec::make({4, 8}, {2}), 47);
  CHECK(prefix(t48, 36) == fixtures::kIMark48);
  // mex{g(32), g(28), g(18)} = mex{1, 0, 1} = 2.
  CHECK(t48[36] == 2);
  CHECK(build_table(GameSpec::make({4, 8}, {2}), 0).values().size() == 1);
  CHECK(build_table(GameSpec::make({4, 8}, {2}), 0)[0] == 0);
}

TEST_CASE("build_table agrees with an independent top-down recursion") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::int64_t> s, d;
    for (std::int64_t v = 1; v <= 9; ++v)
      if (rng() % 3 == 0) s.push_back(v);
    for (std::int64_t v = 2; v <= 7; ++v)
      if (rng() % 3 == 0) d.push_back(v);
    if (s.empty() && d.empty()) s.push_back(1);
    auto spec = GameSpec::make(s, d);
    auto table = build_table(spec, 400);
    oracle::Recursive rec({spec.subtractions().begin(), spec.subtractions().end()},
                          {spec.divisors().begin(), spec.divisors().end()});
    rec.warm(400);
    auto normal = outcome_table(spec, Convention::Normal, 400);
    auto misere = outcome_table(spec, Convention::Misere, 400);
    for (Heap n = 0; n <= 400; ++n) {
      REQUIRE(table[n] == rec.g(n));
      REQUIRE((normal[n] == Outcome::P) == rec.is_p(n, false));
      REQUIRE((misere[n] == Outcome::P) == rec.is_p(n, true));
    }
  }
}

TEST_CASE("table invariants") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::int64_t> s, d;
    for (std::int64_t v = 1; v <= 12; ++v)
      if (rng() % 4 == 0) s.push_back(v);
    for (std::int64_t v = 2; v <= 9; ++v)
      if (rng() % 4 == 0) d.push_back(v);
    if (d.empty()) d.push_back(2);
    auto spec = GameSpec::make(s, d);
    auto table = build_table(spec, 3000);
    auto normal = outcome_table(spec, Convention::Normal, 3000);
    auto misere = outcome_table(spec, Convention::Misere, 3000);

    CHECK_FALSE(first_mex_violation(table).has_value());
    for (Heap n = 0; n <= 3000; ++n) {
      REQUIRE(table[n] <= spec.rule_count());
      REQUIRE((normal[n] == Outcome::P) == (table[n] == 0));
      for (Heap m : options(spec, n)) REQUIRE(table[m] != table[n]);
      // Misere differs from normal recursion only through terminal heaps.
      if (options(spec, n).empty()) REQUIRE(misere[n] == Outcome::N);
    }
    if (!spec.subtractions().empty() && spec.subtractions().front() == 1)
      CHECK(misere[0] != misere[1]);
  }
}

TEST_CASE("outcome oracle") {
  auto s12 = GameSpec::make({1}, {2});
  CHECK(outcome(s12, Convention::Normal, 9) == Outcome::P);
  CHECK(outcome(s12, Convention::Misere, 7) == Outcome::P);
  CHECK(outcome(s12, Convention::Misere, 0) == Outcome::N);
  CHECK(outcome(GameSpec::make({4, 8}, {2}), Convention::Misere, 0) == Outcome::N);
  CHECK(outcome(s12, Convention::Normal, 0) == Outcome::P);
  // Odd heaps below a are terminal in i-Mark({a,2a},{2}).
  CHECK(outcome(GameSpec::make({6, 12}, {2}), Convention::Misere, 5) == Outcome::N);
  CHECK(outcome(GameSpec::make({6, 12}, {2}), Convention::Normal, 5) == Outcome::P);
}

TEST_CASE("budget guard") {
  auto spec = GameSpec::make({1}, {2});
  CHECK(code_of([&] { build_table(spec, 1000, 1000); }) == ErrorCode::LimitExceeded);
  CHECK(build_table(spec, 999, 1000).limit() == 999);
  CHECK(code_of([&] { outcome(spec, Convention::Misere, 50, 10); }) == ErrorCode::LimitExceeded);
  auto table = build_table(spec, 10);
  CHECK(code_of([&] { table.at(11); }) == ErrorCode::LimitExceeded);
}

TEST_CASE("mex") {
  std::vector<Grundy> v{0, 1, 3};
  CHECK(mex(v) == 2);
  CHECK(mex(std::vector<Grundy>{}) == 0);
  CHECK(mex(std::vector<Grundy>{1, 2}) == 0);
}

TEST_CASE("first_mex_violation finds a tampered entry") {
  auto good = build_table(GameSpec::make({1}, {2}), 100);
  std::vector<std::uint8_t> vals(good.values().begin(), good.values().end());
  vals[40] ^= 3;
  GrundyTable bad(good.spec(), vals);
  auto v = first_mex_violation(bad);
  REQUIRE(v.has_value());
  CHECK(*v <= 40);
}
