#include "asq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>

#include "asq/analysis.hpp"
#include "asq/core.hpp"
#include "asq/oracle.hpp"

namespace asq::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

// Upper bounds on how much a single command may print.
constexpr unsigned long kMaxListed = 10'000'000;
constexpr unsigned long kMaxPioneers = 1'000'000;
constexpr std::uint64_t kMaxOracleLimit = 10'000'000;

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw InvalidArgument("--format: expected text, json or csv, got '" + s + "'");
}

BigInt positive(const std::string& text, const std::string& what, const std::string& message) {
  BigInt v = parse_decimal(text, what);
  if (v < 1) throw InvalidArgument(what + ": " + message);
  return v;
}

const char* parity_name(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

std::string dims(const Rectangle& r) { return to_decimal(r.width) + " x " + to_decimal(r.length); }

json record_json(const AlmostSquareRecord& rec) {
  return json{{"value", to_decimal(rec.value)},
              {"width", to_decimal(rec.rect.width)},
              {"length", to_decimal(rec.rect.length)},
              {"semiperimeter", to_decimal(rec.semiperimeter)},
              {"flock", to_decimal(rec.flock.k())}};
}

constexpr const char* kRecordCsvHeader = "value,width,length,semiperimeter,flock\n";

void record_csv(std::ostream& out, const AlmostSquareRecord& rec) {
  out << to_decimal(rec.value) << ',' << to_decimal(rec.rect.width) << ','
      << to_decimal(rec.rect.length) << ',' << to_decimal(rec.semiperimeter) << ','
      << to_decimal(rec.flock.k()) << '\n';
}

void record_text(std::ostream& out, const AlmostSquareRecord& rec) {
  out << to_decimal(rec.value) << " = " << dims(rec.rect) << '\n';
}

void print_records(std::ostream& out, Format fmt, const std::vector<AlmostSquareRecord>& recs) {
  switch (fmt) {
    case Format::Text:
      for (const auto& r : recs) record_text(out, r);
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& r : recs) arr.push_back(record_json(r));
      out << arr.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << kRecordCsvHeader;
      for (const auto& r : recs) record_csv(out, r);
      break;
  }
}

int do_check(const std::string& arg, Format fmt, std::ostream& out) {
  const BigInt n = positive(arg, "N", "must be >= 1");
  const auto rect = is_almost_square(n);
  switch (fmt) {
    case Format::Text:
      if (rect) {
        out << to_decimal(n) << " is an almost-square: " << dims(*rect) << " (semiperimeter "
            << to_decimal(rect->semiperimeter()) << ")\n";
      } else {
        out << to_decimal(n) << " is not an almost-square\n";
      }
      break;
    case Format::Json: {
      json j{{"n", to_decimal(n)}, {"member", rect.has_value()}};
      if (rect) {
        j["width"] = to_decimal(rect->width);
        j["length"] = to_decimal(rect->length);
        j["semiperimeter"] = to_decimal(rect->semiperimeter());
      }
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "n,member,width,length,semiperimeter\n" << to_decimal(n) << ',';
      if (rect) {
        out << "true," << to_decimal(rect->width) << ',' << to_decimal(rect->length) << ','
            << to_decimal(rect->semiperimeter()) << '\n';
      } else {
        out << "false,,,\n";
      }
      break;
  }
  return kOk;
}

int do_single(const char* key, const BigInt& input, const AlmostSquareRecord& rec, Format fmt,
              std::ostream& out) {
  switch (fmt) {
    case Format::Text:
      record_text(out, rec);
      break;
    case Format::Json: {
      json j = record_json(rec);
      j[key] = to_decimal(input);
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << key << ',' << kRecordCsvHeader << to_decimal(input) << ',';
      record_csv(out, rec);
      break;
  }
  return kOk;
}

int do_count(const std::string& arg, Format fmt, std::ostream& out) {
  const BigInt n = positive(arg, "N", "must be >= 1");
  const BigInt c = count_le(n);
  switch (fmt) {
    case Format::Text:
      out << to_decimal(c) << '\n';
      break;
    case Format::Json:
      out << json{{"n", to_decimal(n)}, {"count", to_decimal(c)}}.dump() << '\n';
      break;
    case Format::Csv:
      out << "n,count\n" << to_decimal(n) << ',' << to_decimal(c) << '\n';
      break;
  }
  return kOk;
}

int do_list(const std::string& lo_s, const std::string& hi_s, Format fmt, std::ostream& out) {
  const BigInt lo = positive(lo_s, "LO", "must be >= 1");
  const BigInt hi = positive(hi_s, "HI", "must be >= 1");
  if (lo > hi) throw InvalidArgument("LO: must not exceed HI");
  const BigInt rows = count_le(hi) - (lo > 1 ? count_le(lo - 1) : BigInt(0));
  if (rows > kMaxListed) {
    throw InvalidArgument("HI: range holds " + to_decimal(rows) + " almost-squares; the listing cap is " +
                          std::to_string(kMaxListed));
  }
  print_records(out, fmt, enumerate_range(lo, hi));
  return kOk;
}

int do_flock(const std::string& arg, Format fmt, std::ostream& out) {
  const FlockId flock(positive(arg, "K", "flock index must be >= 1"));
  const auto members = flock_members(flock);
  switch (fmt) {
    case Format::Text:
      out << "flock " << to_decimal(flock.k()) << ": " << parity_name(flock.parity()) << ", m = "
          << to_decimal(flock.m()) << ", " << members.size() << " members\n";
      for (const auto& r : members) record_text(out, r);
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& r : members) arr.push_back(record_json(r));
      out << json{{"flock", to_decimal(flock.k())},
                  {"parity", parity_name(flock.parity())},
                  {"m", to_decimal(flock.m())},
                  {"members", arr}}
                 .dump()
          << '\n';
      break;
    }
    case Format::Csv:
      print_records(out, fmt, members);
      break;
  }
  return kOk;
}

int do_pioneers(const std::string& arg, Format fmt, std::ostream& out) {
  const BigInt count = positive(arg, "J", "must be >= 1");
  if (count > kMaxPioneers) throw InvalidArgument("J: at most " + std::to_string(kMaxPioneers) + " pioneers");
  const unsigned long n = count.get_ui();
  json arr = json::array();
  if (fmt == Format::Csv) out << "j,value,flock\n";
  for (unsigned long j = 1; j <= n; ++j) {
    const Pioneer p = pioneer(BigInt(j));
    switch (fmt) {
      case Format::Text:
        out << j << ": " << to_decimal(p.value) << " (flock " << to_decimal(p.flock.k()) << ")\n";
        break;
      case Format::Json:
        arr.push_back(json{{"j", std::to_string(j)}, {"value", to_decimal(p.value)}, {"flock", to_decimal(p.flock.k())}});
        break;
      case Format::Csv:
        out << j << ',' << to_decimal(p.value) << ',' << to_decimal(p.flock.k()) << '\n';
        break;
    }
  }
  if (fmt == Format::Json) out << arr.dump() << '\n';
  return kOk;
}

int do_oracle_verify(const std::string& limit_s, Format fmt, std::ostream& out, std::ostream& err) {
  const BigInt limit_big = positive(limit_s, "--limit", "must be >= 1");
  if (limit_big > kMaxOracleLimit) {
    throw InvalidArgument("--limit: brute force is capped at " + std::to_string(kMaxOracleLimit));
  }
  const std::uint64_t limit = limit_big.get_ui();
  // Trial division dominates: roughly limit^1.5 / 4e8 seconds on a desktop.
  const double estimate = std::pow(static_cast<double>(limit), 1.5) / 4e8;
  err << "oracle-verify: brute force up to " << limit << ", estimated " << std::max(estimate, 0.01)
      << " s\n";

  const auto start = std::chrono::steady_clock::now();
  const oracle::RecordSet set = oracle::brute_record_set(limit);
  std::uint64_t membership_bad = 0, count_bad = 0, round_trip_bad = 0;
  std::uint64_t running = 0;
  std::size_t next = 0;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const bool brute = next < set.members.size() && set.members[next] == n;
    if (brute) {
      ++next;
      ++running;
    }
    const BigInt v = n;
    if (is_almost_square(v).has_value() != brute) ++membership_bad;
    if (count_le(v) != running) ++count_bad;
    if (brute && nth(BigInt(running)).value != v) ++round_trip_bad;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = membership_bad == 0 && count_bad == 0 && round_trip_bad == 0;

  switch (fmt) {
    case Format::Text:
      out << "limit " << limit << ", " << set.members.size() << " almost-squares\n"
          << "membership: " << limit - membership_bad << " pass, " << membership_bad << " fail\n"
          << "count: " << limit - count_bad << " pass, " << count_bad << " fail\n"
          << "nth round trip: " << set.members.size() - round_trip_bad << " pass, " << round_trip_bad
          << " fail\n"
          << (pass ? "PASS" : "FAIL") << '\n';
      break;
    case Format::Json:
      out << json{{"limit", std::to_string(limit)},
                  {"members", std::to_string(set.members.size())},
                  {"membership_fail", std::to_string(membership_bad)},
                  {"count_fail", std::to_string(count_bad)},
                  {"round_trip_fail", std::to_string(round_trip_bad)},
                  {"pass", pass}}
                 .dump()
          << '\n';
      break;
    case Format::Csv:
      out << "check,pass,fail\n"
          << "membership," << limit - membership_bad << ',' << membership_bad << '\n'
          << "count," << limit - count_bad << ',' << count_bad << '\n'
          << "round_trip," << set.members.size() - round_trip_bad << ',' << round_trip_bad << '\n';
      break;
  }
  err << "oracle-verify: finished in " << seconds << " s\n";
  return pass ? kOk : kInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Almost-squares: membership, counting, ranking and remainder analysis"};
  app.name("asq");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "Output format: text, json or csv");

  std::string a1, a2;
  std::string limit = std::to_string(oracle::kDefaultLimit);
  std::string series = "R", from = "1", to = "1", step;

  auto* check = app.add_subcommand("check", "Is N an almost-square? Prints the optimal rectangle");
  check->add_option("N", a1)->required();
  auto* floor_cmd = app.add_subcommand("floor", "Largest almost-square <= N");
  floor_cmd->add_option("N", a1)->required();
  auto* count = app.add_subcommand("count", "A(N), the number of almost-squares <= N");
  count->add_option("N", a1)->required();
  auto* nth_cmd = app.add_subcommand("nth", "The J-th almost-square");
  nth_cmd->add_option("J", a1)->required();
  auto* list = app.add_subcommand("list", "All almost-squares in [LO, HI]");
  list->add_option("LO", a1)->required();
  list->add_option("HI", a2)->required();
  auto* flock = app.add_subcommand("flock", "Members of flock K (semiperimeter K)");
  flock->add_option("K", a1)->required();
  auto* pioneers = app.add_subcommand("pioneers", "The first J pioneers");
  pioneers->add_option("J", a1)->required();
  auto* analyze = app.add_subcommand("analyze", "CSV series of A(x) or R(x)");
  analyze->add_option("--series", series, "A, R or R-norm");
  analyze->add_option("--from", from, "First x");
  analyze->add_option("--to", to, "Last x");
  analyze->add_option("--step", step, "Sampling step; 0 samples at almost-squares (default for R, R-norm; A defaults to 1)");
  auto* trigrid = app.add_subcommand("trigrid", "CSV grid of whether t_m t_n is an almost-square");
  trigrid->add_option("M", a1)->required();
  auto* verify = app.add_subcommand("oracle-verify", "Check the fast algorithms against brute force");
  verify->add_option("--limit", limit, "Brute-force scan limit");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "asq: " << e.what() << '\n';
    return kUsage;
  }

  try {
    const Format fmt = parse_format(format);
    if (check->parsed()) return do_check(a1, fmt, out);
    if (floor_cmd->parsed()) {
      const BigInt n = positive(a1, "N", "must be >= 1");
      return do_single("n", n, floor_almost_square(n), fmt, out);
    }
    if (count->parsed()) return do_count(a1, fmt, out);
    if (nth_cmd->parsed()) {
      const BigInt j = positive(a1, "J", "index must be ≥ 1");
      return do_single("index", j, nth(j), fmt, out);
    }
    if (list->parsed()) return do_list(a1, a2, fmt, out);
    if (flock->parsed()) return do_flock(a1, fmt, out);
    if (pioneers->parsed()) return do_pioneers(a1, fmt, out);
    if (analyze->parsed()) {
      analysis::SeriesPlan plan;
      plan.kind = analysis::parse_series_kind(series);
      if (plan.kind == analysis::SeriesKind::TriGrid) {
        throw InvalidArgument("--series: use the trigrid command for the triangular grid");
      }
      plan.lo = parse_decimal(from, "--from");
      plan.hi = parse_decimal(to, "--to");
      plan.step = step.empty() ? BigInt(plan.kind == analysis::SeriesKind::AOfX ? 1 : 0)
                               : parse_decimal(step, "--step");
      analysis::emit_series(plan, out);
      return kOk;
    }
    if (trigrid->parsed()) {
      analysis::SeriesPlan plan;
      plan.kind = analysis::SeriesKind::TriGrid;
      plan.hi = parse_decimal(a1, "M");
      analysis::emit_series(plan, out);
      return kOk;
    }
    if (verify->parsed()) return do_oracle_verify(limit, fmt, out, err);
  } catch (const InvalidArgument& e) {
    err << "asq: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "asq: internal error: " << e.what() << '\n';
    return kInternal;
  }
  err << "asq: no command given\n";
  return kUsage;
}

}  // namespace asq::cli
