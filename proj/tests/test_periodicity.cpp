#include <doctest.h>

#include <random>

#include "imark/errors.hpp"
#include "imark/periodicity.hpp"
#include "imark/report.hpp"
#include "oracles.hpp"

using namespace imark;

namespace {

std::vector<Value> g_seq(std::initializer_list<std::int64_t> s, std::initializer_list<std::int64_t> d,
                         Heap len) {
  return grundy_sequence(build_table(GameSpec::make(s, d), len - 1));
}

std::vector<Value> o_seq(std::initializer_list<std::int64_t> s, std::initializer_list<std::int64_t> d,
                         Convention c, Heap len) {
  return outcome_sequence(outcome_table(GameSpec::make(s, d), c, len - 1));
}

}  // namespace

TEST_CASE("detect") {
  auto outs = o_seq({1}, {2}, Convention::Normal, 64);
  DetectOptions short_prefix;
  short_prefix.max_period = 16;
  auto c = detect(outs, short_prefix);
  REQUIRE(c.has_value());
  CHECK(c->preperiod == 4);
  CHECK(c->period == 2);
  CHECK(c->exact());

  auto g = g_seq({2, 4}, {2}, 600);
  DetectOptions opts;
  opts.ell_max = 1;
  c = detect(g, opts);
  REQUIRE(c.has_value());
  CHECK(c->preperiod == 11);
  CHECK(c->period == 6);
  CHECK(c->exceptions == std::vector<std::size_t>{0});

  std::vector<Value> zeros(300, 0);
  c = detect(zeros);
  REQUIRE(c.has_value());
  CHECK(c->preperiod == 0);
  CHECK(c->period == 1);
  CHECK(c->exact());
}

TEST_CASE("detect needs enough data") {
  std::vector<Value> tiny(20, 0);
  CHECK_THROWS_AS(detect(tiny), Error);
  DetectOptions small;
  small.max_period = 5;
  CHECK(detect(tiny, small).has_value());
}

TEST_CASE("detect returns nothing on aperiodic data") {
  std::mt19937 rng(1);
  std::vector<Value> noise(400);
  for (auto& v : noise) v = rng() % 5;
  DetectOptions opts;
  opts.max_period = 30;
  CHECK_FALSE(detect(noise, opts).has_value());
}

TEST_CASE("detected certificates are minimal") {
  std::mt19937 rng(21);
  DetectOptions opts;
  opts.max_period = 6;
  opts.ell_max = 2;
  opts.min_reps = 2;
  int found = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t p = 1 + rng() % 5, q = rng() % 12;
    std::vector<Value> base(p);
    for (auto& v : base) v = rng() % 3;
    std::vector<Value> seq(60);
    for (std::size_t i = 0; i < seq.size(); ++i) seq[i] = i < q ? rng() % 3 : base[i % p];
    // Occasionally disturb one residue throughout.
    if (rng() % 3 == 0) {
      const std::size_t r = rng() % p;
      for (std::size_t i = r; i < seq.size(); i += p) seq[i] = rng() % 3;
    }
    auto c = detect(seq, opts);
    if (!c) continue;
    ++found;
    REQUIRE(validate(seq, *c));
    REQUIRE(oracle::no_smaller_certificate(seq, *c, opts.max_period, opts.min_reps));
  }
  CHECK(found > 50);
}

TEST_CASE("validate") {
  // g(15) = 3 while g(19) = 2, so the column-free claim starts at 16.
  auto g = g_seq({1, 2, 3}, {4}, 10'000);
  CHECK(validate(g, {16, 4, {0}, g.size()}));
  CHECK_FALSE(validate(g, {15, 4, {0}, g.size()}));
  CHECK_FALSE(validate(g, {16, 4, {}, g.size()}));

  auto outs = o_seq({1}, {2}, Convention::Normal, 10'000);
  CHECK_FALSE(validate(outs, {0, 2, {}, outs.size()}));
  CHECK(validate(outs, {4, 2, {}, outs.size()}));

  auto g48 = g_seq({4, 8}, {2}, 10'000);
  CHECK(validate(g48, {17, 12, {0}, g48.size()}));
  CHECK_FALSE(validate(g48, {16, 12, {0}, g48.size()}));

  CHECK_FALSE(validate(g48, {0, 3, {3}, g48.size()}));
  CHECK_FALSE(validate(g48, {0, 2, {0, 1}, g48.size()}));
}

TEST_CASE("refute_grundy_period") {
  auto s12 = GameSpec::make({1}, {2});
  auto w = refute_grundy_period(s12, 0, 2);
  CHECK(w.n == 2);
  CHECK(w.dn == 4);
  CHECK(w.g_n == 0);
  CHECK(w.g_dn == 2);

  w = refute_grundy_period(s12, 0, 1);
  CHECK(w.n == 1);
  CHECK(w.dn == 2);
  CHECK(w.g_n == 1);
  CHECK(w.g_dn == 0);

  w = refute_grundy_period(GameSpec::make({2, 4}, {2}), 6, 3);
  CHECK(w.n == 6);
  CHECK(w.dn == 12);
  CHECK(w.g_n == 0);
  CHECK(w.g_dn == 2);

  w = refute_grundy_period(s12, 10, 3);
  CHECK(w.n == 12);
  CHECK(w.dn == 24);
  CHECK(w.g_n != w.g_dn);

  CHECK_THROWS_AS(refute_grundy_period(GameSpec::make({1, 2}, {}), 0, 2), Error);
  auto small = build_table(s12, 10);
  CHECK_THROWS_AS(refute_grundy_period(small, 8, 4), Error);
}

TEST_CASE("census") {
  auto mis4 = o_seq({4, 8}, {2}, Convention::Misere, 10'000);
  auto c = census(mis4, 12);
  CHECK(c.preperiod_length == 7);
  CHECK(c.exception_count() == 2);

  auto mis10 = o_seq({10, 20}, {2}, Convention::Misere, 10'000);
  c = census(mis10, 30);
  CHECK(c.preperiod_length == 193);
  CHECK(c.exception_count() == 6);
  CHECK(c.exception_positions.size() == 22);
  CHECK(c.exception_residues == std::vector<std::size_t>{2, 6, 8, 12, 16, 18});

  std::vector<Value> pure(500);
  for (std::size_t i = 0; i < pure.size(); ++i) pure[i] = (i % 7) / 3;
  c = census(pure, 7);
  CHECK(c.preperiod_length == 0);
  CHECK(c.exception_count() == 0);

  CHECK_THROWS_AS(census(pure, 6), Error);
  CHECK_THROWS_AS(census(std::span<const Value>(pure).first(50), 7), Error);
}

TEST_CASE("period strings") {
  std::vector<Value> seq{1, 1, 0, 1, 1, 0, 0, 1, 0, 0, 1, 1, 1, 1, 1};
  CHECK(period_string(seq, 0, 15) == "NNPNNPPNPP NNNNN");
  CHECK(period_string(seq, 0, 3) == "NNP");
}

TEST_CASE("json") {
  PeriodicityCertificate c{17, 12, {0}, 10'000};
  auto doc = to_json(c);
  CHECK(doc["kind"] == "almost");
  CHECK(doc["preperiod"] == 17);
  auto back = certificate_from_json(doc);
  CHECK(back.preperiod == 17);
  CHECK(back.period == 12);
  CHECK(back.exceptions == c.exceptions);
  CHECK(back.checked_prefix == 10'000);
  CHECK(to_json(PeriodicityCertificate{4, 2, {}, 64})["kind"] == "exact");

  ExceptionCensus census_doc{12, {}, {2, 6, 18}, {2, 6}, 19};
  auto j = to_json(census_doc);
  CHECK(j["preperiod_length"] == 19);
  CHECK(j["exception_count"] == 2);
  CHECK(j["exception_positions"].size() == 3);
}

TEST_CASE("a constant run at the end of the prefix is not mistaken for period 1") {
  auto seq = o_seq({5, 10}, {2}, Convention::Misere, 1800);
  auto c = detect(seq);
  REQUIRE(c.has_value());
  CHECK(c->period == 15);
  CHECK(c->preperiod == 0);
}
