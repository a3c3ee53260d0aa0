#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "imark/closedform.hpp"
#include "imark/engine.hpp"
#include "imark/errors.hpp"
#include "imark/multiheap.hpp"
#include "imark/periodicity.hpp"
#include "imark/report.hpp"
#include "imark/sweep.hpp"
#include "imark/table_io.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace imark;

namespace {

enum Exit : int { kOk = 0, kMismatch = 1, kUsage = 2, kNoFamily = 3, kLimit = 4 };

struct ExitWith {
  int code;
  std::string message;
};

struct RunConfig {
  std::string s_list = "1";
  std::string d_list = "2";
  bool mark = false;
  std::string convention = "normal";
  std::string mode = "oracle";
  std::string format = "csv";
  std::string cache_dir;
  Heap budget = 10'000'000;
};

std::vector<std::int64_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::int64_t v = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
      throw ExitWith{kUsage, std::string("cannot parse ") + what + " list '" + text + "'"};
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

Convention convention_of(const RunConfig& cfg) {
  return cfg.convention == "misere" ? Convention::Misere : Convention::Normal;
}

GameSpec spec_of(const RunConfig& cfg) {
  return GameSpec::make(parse_list(cfg.s_list, "S"), parse_list(cfg.d_list, "D"));
}

FamilyEvaluator require_family(const RunConfig& cfg) {
  if (cfg.mark) {
    if (convention_of(cfg) == Convention::Misere)
      throw ExitWith{kNoFamily, "no misere evaluator for Mark"};
    return FamilyEvaluator(MarkFamily{}, cfg.budget);
  }
  auto spec = spec_of(cfg);
  auto ev = family_for(spec, convention_of(cfg), cfg.budget);
  if (!ev)
    throw ExitWith{kNoFamily, "no closed form covers " + spec.to_string() + " under " +
                                  to_string(convention_of(cfg)) + " play"};
  return *ev;
}

// Floor-division Mark has no GameSpec, so its oracle lives here.
std::vector<std::uint8_t> mark_values(Heap limit, Heap budget) {
  if (limit >= budget) throw Error(ErrorCode::LimitExceeded, "limit exceeds the oracle budget");
  std::vector<std::uint8_t> g(limit + 1);
  for (Heap n = 1; n <= limit; ++n) {
    const unsigned x = g[n - 1], y = g[n / 2];
    unsigned m = 0;
    while (m == x || m == y) ++m;
    g[n] = static_cast<std::uint8_t>(m);
  }
  return g;
}

GrundyTable oracle_table(const RunConfig& cfg, const GameSpec& spec, Heap limit) {
  if (!cfg.cache_dir.empty()) {
    const fs::path path = fs::path(cfg.cache_dir) / cache_file_name(spec);
    if (fs::exists(path)) {
      auto cached = load_table(path);
      if (cached.spec() == spec && cached.limit() >= limit) return cached;
    }
    auto table = build_table(spec, limit, cfg.budget);
    fs::create_directories(cfg.cache_dir);
    save_table(path, table);
    return table;
  }
  return build_table(spec, limit, cfg.budget);
}

// One value per heap in [lo, hi]: g-values, or 0/1 for P/N when `outcomes`.
std::vector<unsigned> oracle_values(const RunConfig& cfg, Heap lo, Heap hi, bool outcomes) {
  std::vector<unsigned> out;
  if (cfg.mark) {
    if (convention_of(cfg) == Convention::Misere)
      throw ExitWith{kUsage, "Mark is only supported under normal play"};
    auto g = mark_values(hi, cfg.budget);
    for (Heap n = lo; n <= hi; ++n) out.push_back(outcomes ? (g[n] != 0) : g[n]);
    return out;
  }
  const auto spec = spec_of(cfg);
  if (outcomes) {
    auto o = outcome_table(spec, convention_of(cfg), hi, cfg.budget);
    for (Heap n = lo; n <= hi; ++n) out.push_back(o[n] == Outcome::N);
    return out;
  }
  if (convention_of(cfg) == Convention::Misere)
    throw ExitWith{kUsage, "g-values are normal-play only; use outcome for misere"};
  auto table = oracle_table(cfg, spec, hi);
  for (Heap n = lo; n <= hi; ++n) out.push_back(table[n]);
  return out;
}

std::vector<unsigned> fast_values(const FamilyEvaluator& ev, Heap lo, Heap hi, bool outcomes) {
  std::vector<unsigned> out;
  for (Heap n = lo; n <= hi; ++n) {
    if (outcomes) {
      if (!ev.in_outcome_domain(n)) throw Error(ErrorCode::OutsideDomain, ev.name() + " does not cover n=" + std::to_string(n));
      out.push_back(ev.outcome(n) == Outcome::N);
    } else {
      out.push_back(ev.grundy(n));
    }
  }
  return out;
}

void print_values(const RunConfig& cfg, Heap lo, const std::vector<unsigned>& vals, bool outcomes,
                  bool single) {
  auto render = [&](unsigned v) -> json {
    if (outcomes) return std::string(1, v ? 'N' : 'P');
    return v;
  };
  if (single) {
    if (cfg.format == "json") {
      std::cout << json{{"n", lo}, {outcomes ? "outcome" : "g", render(vals[0])}}.dump() << '\n';
    } else {
      std::cout << (outcomes ? std::string(1, vals[0] ? 'N' : 'P') : std::to_string(vals[0]))
                << '\n';
    }
    return;
  }
  if (cfg.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < vals.size(); ++i)
      rows.push_back({{"n", lo + i}, {outcomes ? "outcome" : "g", render(vals[i])}});
    std::cout << rows.dump() << '\n';
    return;
  }
  std::ostringstream out;
  out << "n," << (outcomes ? "outcome" : "g") << '\n';
  for (std::size_t i = 0; i < vals.size(); ++i) {
    out << lo + i << ',';
    if (outcomes) out << (vals[i] ? 'N' : 'P');
    else out << vals[i];
    out << '\n';
  }
  std::cout << out.str();
}

struct QueryArgs {
  std::optional<Heap> n;
  Heap from = 0;
  Heap to = 0;
  bool outcome = false;
};

int cmd_query(const RunConfig& cfg, const QueryArgs& q) {
  const bool single = q.n.has_value();
  const Heap lo = single ? *q.n : q.from;
  const Heap hi = single ? *q.n : q.to;
  if (hi < lo) throw ExitWith{kUsage, "--to must not be below --from"};
  const bool outcomes = q.outcome || convention_of(cfg) == Convention::Misere;

  if (cfg.mode == "oracle") {
    print_values(cfg, lo, oracle_values(cfg, lo, hi, outcomes), outcomes, single);
    return kOk;
  }
  auto ev = require_family(cfg);
  if (!outcomes && !ev.has_grundy())
    throw ExitWith{kNoFamily, ev.name() + " only determines outcomes"};
  auto fast = fast_values(ev, lo, hi, outcomes);
  if (cfg.mode == "verify") {
    auto slow = oracle_values(cfg, lo, hi, outcomes);
    for (std::size_t i = 0; i < fast.size(); ++i) {
      if (fast[i] != slow[i]) {
        std::cout << "mismatch at n=" << lo + i << ": fast " << fast[i] << ", oracle " << slow[i]
                  << '\n';
        return kMismatch;
      }
    }
  }
  print_values(cfg, lo, fast, outcomes, single);
  return kOk;
}

int cmd_sequence(const RunConfig& cfg, Heap upto, bool outcome, std::size_t count) {
  if (cfg.mark && count > 0) {
    auto seqs = gen_mark_sequences(count + 1);
    if (cfg.format == "json") {
      seqs.a_values.pop_back();
      json doc{{"a", seqs.a_values}, {"b", seqs.b_values}};
      std::cout << doc.dump() << '\n';
      return kOk;
    }
    std::ostringstream out;
    out << "n,a,b\n";
    for (std::size_t i = 0; i <= count; ++i) {
      out << i << ',';
      if (i > 0) out << seqs.a_values[i - 1];
      out << ',' << seqs.b_values[i] << '\n';
    }
    std::cout << out.str();
    return kOk;
  }
  QueryArgs q;
  q.from = 0;
  q.to = upto;
  q.outcome = outcome;
  return cmd_query(cfg, q);
}

int cmd_verify(const RunConfig& cfg, Heap upto) {
  auto ev = require_family(cfg);
  sweep::MismatchReport report;
  if (cfg.mark) {
    auto g = mark_values(upto, cfg.budget);
    report.checked = upto + 1;
    for (Heap n = 0; n <= upto; ++n) {
      if (ev.grundy(n) != g[n]) {
        if (report.mismatches++ == 0) report.first = n;
      }
    }
  } else if (ev.has_grundy()) {
    report = sweep::compare_grundy(ev, oracle_table(cfg, *ev.spec(), upto), upto);
    auto o = sweep::compare_outcomes(ev, outcome_table(*ev.spec(), ev.convention(), upto, cfg.budget), upto);
    report.mismatches += o.mismatches;
    if (o.first && (!report.first || *o.first < *report.first)) report.first = o.first;
  } else {
    report = sweep::compare_outcomes(ev, outcome_table(*ev.spec(), ev.convention(), upto, cfg.budget), upto);
  }

  if (cfg.format == "json") {
    json doc{{"family", ev.name()}, {"upto", upto}, {"checked", report.checked},
             {"mismatches", report.mismatches}};
    doc["first_mismatch"] = report.first ? json(*report.first) : json(nullptr);
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << ev.name() << ": " << report.checked << " heaps checked\n";
    std::cout << report.mismatches << " mismatches";
    if (report.first) std::cout << ", first at n=" << *report.first;
    std::cout << '\n';
  }
  return report.mismatches == 0 ? kOk : kMismatch;
}

struct PeriodArgs {
  Heap prefix = 1000;
  bool grundy = false;
  bool census = false;
  std::size_t period = 0;
  std::size_t max_period = 0;
  std::size_t ell_max = 1;
  std::size_t min_reps = 3;
  std::size_t tail_reps = 10;
};

int cmd_period(const RunConfig& cfg, const PeriodArgs& a) {
  if (a.prefix == 0) throw ExitWith{kUsage, "--prefix must be positive"};
  const bool outcomes = !a.grundy || convention_of(cfg) == Convention::Misere;
  const auto raw = oracle_values(cfg, 0, a.prefix - 1, outcomes);
  const std::vector<Value> seq(raw.begin(), raw.end());

  json doc;
  if (a.census) {
    if (a.period == 0) throw ExitWith{kUsage, "--census needs --period"};
    doc = to_json(census(seq, a.period, a.tail_reps));
  } else {
    DetectOptions opts;
    opts.ell_max = a.ell_max;
    opts.min_reps = a.min_reps;
    opts.max_period = a.max_period;
    if (opts.max_period == 0)
      opts.max_period = std::max<std::size_t>(1, std::min<std::size_t>(64, seq.size() / (a.min_reps + 1)));
    auto cert = detect(seq, opts);
    if (!cert) {
      std::cout << json{{"kind", "none"}, {"checked_prefix", seq.size()}}.dump() << '\n';
      return kMismatch;
    }
    doc = to_json(*cert);
    if (outcomes) doc["period_string"] = period_string(seq, cert->preperiod, cert->period);
  }
  doc["values"] = outcomes ? "outcome" : "grundy";
  doc["convention"] = to_string(convention_of(cfg));
  std::cout << doc.dump() << '\n';
  return kOk;
}

int cmd_refute(const RunConfig& cfg, const std::string& claim) {
  auto parts = parse_list(claim, "claim");
  if (parts.size() != 2 || parts[0] < 0 || parts[1] <= 0)
    throw ExitWith{kUsage, "--claim expects q,p with q >= 0 and p >= 1"};
  auto w = refute_grundy_period(spec_of(cfg), static_cast<Heap>(parts[0]),
                                static_cast<Heap>(parts[1]), cfg.budget);
  if (cfg.format == "json") {
    std::cout << json{{"n", w.n}, {"dn", w.dn}, {"d", w.d}, {"g_n", w.g_n}, {"g_dn", w.g_dn}}.dump()
              << '\n';
  } else {
    std::cout << "n=" << w.n << " g=" << w.g_n << ", dn=" << w.dn << " g=" << w.g_dn << '\n';
  }
  return w.g_n != w.g_dn ? kOk : kMismatch;
}

int cmd_move(const RunConfig& cfg, const std::string& heaps) {
  const auto spec = spec_of(cfg);
  SumPosition pos;
  for (auto h : parse_list(heaps, "heap")) {
    if (h < 0) throw ExitWith{kUsage, "heap sizes must be non-negative"};
    pos.push_back({spec, static_cast<Heap>(h)});
  }
  SumEvaluator ev(cfg.budget);
  const Grundy total = ev.sum_grundy(pos, convention_of(cfg));
  auto m = ev.optimal_move(pos, convention_of(cfg));
  if (cfg.format == "json") {
    json doc{{"total", total}};
    doc["move"] = m ? json{{"heap", m->heap_index}, {"from", m->from}, {"to", m->to},
                           {"total_after", m->total_after}}
                    : json(nullptr);
    std::cout << doc.dump() << '\n';
  } else if (m) {
    std::cout << "total " << total << ": move heap " << m->heap_index << " from " << m->from
              << " to " << m->to << ", total after " << m->total_after << '\n';
  } else {
    std::cout << "total 0: no winning move\n";
  }
  return kOk;
}

struct BenchArgs {
  std::size_t queries = 100'000;
  Heap oracle_n = 1'000'000;
  std::size_t samples = 10'000;
};

int cmd_bench(const RunConfig& cfg, const BenchArgs& b) {
  using Clock = std::chrono::steady_clock;
  auto ev = require_family(cfg);
  const bool outcomes = !ev.has_grundy();
  auto query = [&](Heap n) -> unsigned {
    return outcomes ? static_cast<unsigned>(ev.outcome(n)) : ev.grundy(n);
  };
  auto fit = [&](Heap n) {
    if (outcomes ? ev.in_outcome_domain(n) : ev.in_grundy_domain(n)) return n;
    return n | 1;
  };

  std::mt19937_64 rng(1);
  unsigned sink = 0;
  auto t0 = Clock::now();
  sink += query(fit(Heap{1} << 60));
  const double single_us = std::chrono::duration<double, std::micro>(Clock::now() - t0).count();

  std::vector<Heap> ns(b.queries);
  for (auto& n : ns) n = fit(rng() & ((Heap{1} << 60) - 1));
  t0 = Clock::now();
  for (Heap n : ns) sink += query(n);
  const double fast_secs = std::chrono::duration<double>(Clock::now() - t0).count();

  t0 = Clock::now();
  std::vector<unsigned> slow = oracle_values(cfg, 0, b.oracle_n, outcomes);
  const double oracle_secs = std::chrono::duration<double>(Clock::now() - t0).count();

  std::size_t disagreements = 0, checked = 0;
  for (std::size_t i = 0; i < b.samples; ++i) {
    const Heap n = rng() % (b.oracle_n + 1);
    if (outcomes ? !ev.in_outcome_domain(n) : !ev.in_grundy_domain(n)) continue;
    ++checked;
    const unsigned fast = outcomes ? (ev.outcome(n) == Outcome::N) : ev.grundy(n);
    if (fast != slow[n]) ++disagreements;
  }

  const double qps = fast_secs > 0 ? static_cast<double>(b.queries) / fast_secs : 0.0;
  const double rate = oracle_secs > 0 ? static_cast<double>(b.oracle_n + 1) / oracle_secs : 0.0;
  if (cfg.format == "json") {
    std::cout << json{{"family", ev.name()},
                      {"single_query_us_at_2^60", single_us},
                      {"fast_queries_per_s", qps},
                      {"oracle_entries", b.oracle_n + 1},
                      {"oracle_entries_per_s", rate},
                      {"agreement_checked", checked},
                      {"agreement", disagreements == 0 ? "ok" : "mismatch"},
                      {"checksum", sink}}
                     .dump()
              << '\n';
  } else {
    std::cout << "family: " << ev.name() << '\n'
              << "single query at n=2^60: " << single_us << " us\n"
              << "fast lane: " << qps << " queries/s\n"
              << "oracle lane: " << rate << " entries/s over " << b.oracle_n + 1 << " heaps\n"
              << "agreement: " << (disagreements == 0 ? "ok" : "mismatch") << " (" << checked
              << " samples)\n";
  }
  return disagreements == 0 ? kOk : kMismatch;
}

int cmd_cache(const RunConfig& cfg, const std::string& action, Heap upto) {
  if (cfg.cache_dir.empty()) throw ExitWith{kUsage, "cache needs --cache-dir or IMARK_CACHE_DIR"};
  const auto spec = spec_of(cfg);
  const fs::path path = fs::path(cfg.cache_dir) / cache_file_name(spec);
  if (action == "build") {
    auto table = build_table(spec, upto, cfg.budget);
    fs::create_directories(cfg.cache_dir);
    save_table(path, table);
    std::cout << "wrote " << path.string() << " (" << table.limit() + 1 << " entries)\n";
    return kOk;
  }
  if (!fs::exists(path)) throw ExitWith{kUsage, "no cached table at " + path.string()};
  auto table = load_table(path);
  if (action == "verify") {
    auto bad = first_mex_violation(table);
    if (bad) {
      std::cout << path.string() << ": mex violation at n=" << *bad << '\n';
      return kMismatch;
    }
    std::cout << path.string() << ": " << table.limit() + 1 << " entries, consistent\n";
    return kOk;
  }
  write_table_csv(std::cout, table);
  return kOk;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::LimitExceeded:
    case ErrorCode::PrefixTooShort:
    case ErrorCode::BadCacheFile:
      return kLimit;
    case ErrorCode::InconsistentTail:
      return kMismatch;
    default:
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  if (const char* env = std::getenv("IMARK_ORACLE_BUDGET")) {
    try {
      cfg.budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: IMARK_ORACLE_BUDGET must be a positive integer\n";
      return kUsage;
    }
  }
  if (const char* env = std::getenv("IMARK_CACHE_DIR")) cfg.cache_dir = env;

  CLI::App app{"Grundy values, outcomes and periodicity for i-Mark(S,D) heap games"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--s", cfg.s_list, "subtraction set, comma separated (may be empty)");
    sub->add_option("--d", cfg.d_list, "division set, comma separated (may be empty)");
    sub->add_flag("--mark", cfg.mark, "classic Mark (floor halving) instead of i-Mark");
    sub->add_option("--convention", cfg.convention)->check(CLI::IsMember({"normal", "misere"}));
    sub->add_option("--mode", cfg.mode)->check(CLI::IsMember({"oracle", "fast", "verify"}));
    sub->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--cache-dir", cfg.cache_dir, "directory for cached oracle tables");
    sub->add_option("--budget", cfg.budget, "oracle table entry budget")->check(CLI::PositiveNumber);
  };

  QueryArgs qa;
  auto* grundy = app.add_subcommand("grundy", "g-value (or outcome) of one heap or a range");
  add_common(grundy);
  grundy->add_option("--n", qa.n, "single heap size");
  grundy->add_option("--from", qa.from);
  grundy->add_option("--to", qa.to);
  grundy->add_flag("--outcome", qa.outcome, "print N/P instead of g");

  QueryArgs oa;
  auto* outcome_cmd = app.add_subcommand("outcome", "N/P outcome of one heap or a range");
  add_common(outcome_cmd);
  outcome_cmd->add_option("--n", oa.n);
  outcome_cmd->add_option("--from", oa.from);
  outcome_cmd->add_option("--to", oa.to);

  Heap seq_upto = 31;
  bool seq_outcome = false;
  std::size_t seq_count = 0;
  auto* sequence = app.add_subcommand("sequence", "values for heaps 0..upto");
  add_common(sequence);
  sequence->add_option("--upto", seq_upto);
  sequence->add_flag("--outcome", seq_outcome);
  sequence->add_option("--count", seq_count, "with --mark: the a/b sequences up to this index");

  Heap verify_upto = 100'000;
  auto* verify = app.add_subcommand("verify", "closed form against the oracle on [0, upto]");
  add_common(verify);
  verify->add_option("--upto", verify_upto);

  PeriodArgs pa;
  auto* period = app.add_subcommand("period", "detect a periodicity certificate or run a census");
  add_common(period);
  period->add_option("--prefix", pa.prefix, "number of heaps examined");
  period->add_flag("--grundy", pa.grundy, "analyse g-values instead of outcomes");
  period->add_flag("--census", pa.census);
  period->add_option("--period", pa.period);
  period->add_option("--max-period", pa.max_period);
  period->add_option("--ell-max", pa.ell_max);
  period->add_option("--min-reps", pa.min_reps);
  period->add_option("--tail-reps", pa.tail_reps);

  std::string claim;
  auto* refute = app.add_subcommand("refute", "witness against a claimed g-value period");
  add_common(refute);
  refute->add_option("--claim", claim, "q,p")->required();

  std::string heaps;
  auto* move = app.add_subcommand("move", "winning move in a sum of heaps");
  add_common(move);
  move->add_option("--heaps", heaps, "heap sizes, comma separated")->required();

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "fast lane against oracle lane timings");
  add_common(bench);
  bench->add_option("--queries", ba.queries);
  bench->add_option("--oracle-n", ba.oracle_n);
  bench->add_option("--samples", ba.samples);

  std::string cache_action;
  Heap cache_upto = 1'000'000;
  auto* cache = app.add_subcommand("cache", "build, verify or export a cached oracle table");
  add_common(cache);
  cache->add_option("action", cache_action)->required()->check(CLI::IsMember({"build", "verify", "csv"}));
  cache->add_option("--upto", cache_upto);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*grundy) {
      if (!qa.n && !grundy->count("--to")) throw ExitWith{kUsage, "give --n or --from/--to"};
      return cmd_query(cfg, qa);
    }
    if (*outcome_cmd) {
      if (!oa.n && !outcome_cmd->count("--to")) throw ExitWith{kUsage, "give --n or --from/--to"};
      oa.outcome = true;
      return cmd_query(cfg, oa);
    }
    if (*sequence) return cmd_sequence(cfg, seq_upto, seq_outcome, seq_count);
    if (*verify) return cmd_verify(cfg, verify_upto);
    if (*period) return cmd_period(cfg, pa);
    if (*refute) return cmd_refute(cfg, claim);
    if (*move) return cmd_move(cfg, heaps);
    if (*bench) return cmd_bench(cfg, ba);
    if (*cache) return cmd_cache(cfg, cache_action, cache_upto);
  } catch (const ExitWith& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
