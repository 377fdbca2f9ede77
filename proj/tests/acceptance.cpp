// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Timing limits are part of each criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "asq/analysis.hpp"
#include "asq/cli.hpp"
#include "asq/core.hpp"
#include "asq/oracle.hpp"
#include "known_values.hpp"

using asq::BigInt;
namespace an = asq::analysis;
namespace oracle = asq::oracle;

namespace {

// Failure detail for the criterion currently running.
std::string g_detail;

bool fail(std::string why) {
  if (g_detail.empty()) g_detail = std::move(why);
  return false;
}

std::string cli(std::vector<std::string> args, int* status = nullptr) {
  std::ostringstream out, err;
  const int s = asq::cli::run(args, out, err);
  if (status) *status = s;
  return out.str();
}

bool crit1() {
  const std::string floor190 = cli({"floor", "190"});
  const std::string count200 = cli({"count", "200"});
  const std::string floorbig = cli({"floor", "8675309"});
  if (floor190 != "182 = 13 x 14\n") return fail("floor 190 gave " + floor190);
  if (count200 != "59\n") return fail("count 200 gave " + count200);
  if (floorbig != "8675268 = 2919 x 2972\n") return fail("floor 8675309 gave " + floorbig);
  return true;
}

bool crit2() {
  const auto recs = asq::enumerate_range(1, 200);
  if (recs.size() != asq::testing::kFirst59.size()) {
    return fail("got " + std::to_string(recs.size()) + " records");
  }
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto [w, l] = asq::testing::kFirst59[i];
    if (recs[i].value != asq::testing::kFirst59Values[i] || recs[i].rect.width != w ||
        recs[i].rect.length != l) {
      return fail("mismatch at index " + std::to_string(i + 1));
    }
  }
  return true;
}

bool crit3() {
  const std::uint64_t limit = oracle::kDefaultLimit;
  const auto set = oracle::brute_record_set(limit);
  std::uint64_t running = 0;
  std::size_t next = 0;
  std::uint64_t mismatches = 0;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const bool brute = next < set.members.size() && set.members[next] == n;
    if (brute) {
      ++next;
      ++running;
    }
    if (asq::is_almost_square(n).has_value() != brute) ++mismatches;
    if (asq::count_le(n) != running) ++mismatches;
  }
  if (mismatches) return fail(std::to_string(mismatches) + " mismatches");
  return true;
}

bool crit4() {
  constexpr unsigned long kM = 1'000'000;
  BigInt prev = asq::count_at_square(1);
  for (unsigned long m = 2; m <= kM; ++m) {
    const BigInt M = m;
    const BigInt a = asq::seq_a(M);
    const BigInt b = asq::seq_b(M);
    if (!(a <= b && b <= a + 1)) return fail("a_m <= b_m <= a_m + 1 fails at m = " + std::to_string(m));
    if (a + b != asq::isqrt(2 * M) - 1) return fail("a_m + b_m fails at m = " + std::to_string(m));
    if (!(b * b * (2 * M - 1) <= M * M && (b + 1) * (b + 1) * (2 * M - 1) > M * M)) {
      return fail("b_m bound fails at m = " + std::to_string(m));
    }
    const BigInt cur = asq::count_at_square(M);
    if (cur - prev != 1 + asq::isqrt(2 * M)) return fail("flock cardinality fails at m = " + std::to_string(m));
    prev = cur;
  }

  std::uint64_t count = 0;
  std::uint64_t next_t = 0;
  std::uint64_t i = 1;
  for (std::uint64_t x = 0; x <= kM; ++x) {
    while (next_t <= x) {
      ++count;
      ++i;
      next_t = i * (i - 1) / 2;
    }
    if (asq::count_triangular_le(BigInt(static_cast<unsigned long>(x))) != count) {
      return fail("T(x) fails at x = " + std::to_string(x));
    }
  }

  for (unsigned long n = 1; n <= oracle::kDefaultLimit; ++n) {
    const unsigned long r = oracle::isqrt_u64(n);
    bool family = false;
    for (unsigned long m = r; m <= r + 1; ++m) {
      family = family || n == m * m || n == m * (m - 1) || (m >= 2 && n == m * m - 1);
    }
    if ((n % r == 0) != family) return fail("floor(sqrt n) | n fails at n = " + std::to_string(n));
    if (family && !asq::is_almost_square(n)) return fail("family member rejected: " + std::to_string(n));
  }
  return true;
}

bool crit5() {
  for (unsigned long j = 1; j <= 20; ++j) {
    const auto p = asq::pioneer(j);
    const BigInt t1 = j * (j + 1) / 2;
    const BigInt t2 = (j + 1) * (j + 2) / 2;
    if (p.value != t1 * t2) return fail("pioneer value at j = " + std::to_string(j));
    if (p.flock.k() != (j + 1) * (j + 1)) return fail("pioneer flock at j = " + std::to_string(j));
    if (asq::flock_members(p.flock).front().value != p.value) {
      return fail("pioneer not first of its flock at j = " + std::to_string(j));
    }
  }

  // Brute-force pioneers: first member of each flock longer than the previous
  // flock of the same parity. Flocks up to 89 are complete below 2000. Flock 1
  // is empty, so flocks below 4 are skipped.
  const auto set = oracle::brute_record_set(2000);
  std::map<std::uint64_t, std::vector<std::uint64_t>> flocks;
  for (const auto n : set.members) flocks[oracle::brute_semiperimeter(n)].push_back(n);
  std::vector<std::uint64_t> brute_pioneers;
  for (std::uint64_t k = 4; k <= 89; ++k) {
    if (flocks[k].size() > flocks[k - 2].size()) brute_pioneers.push_back(flocks[k].front());
  }
  if (brute_pioneers.size() < 8) return fail("brute force found too few pioneers");
  for (unsigned long j = 1; j <= 8; ++j) {
    if (asq::pioneer(j).value != brute_pioneers[j - 1]) {
      return fail("brute-force pioneer mismatch at j = " + std::to_string(j));
    }
  }

  const auto recs = asq::enumerate_range(1, oracle::kDefaultLimit);
  std::vector<BigInt> ties;
  for (std::size_t i = 1; i < recs.size(); ++i) {
    const asq::RatioValue prev(recs[i - 1].value, recs[i - 1].semiperimeter);
    const asq::RatioValue cur(recs[i].value, recs[i].semiperimeter);
    if (cur < prev) return fail("ratio decreased");
    if (cur == prev) ties.push_back(recs[i].value);
  }
  std::vector<BigInt> even_pioneers;
  for (unsigned long j = 2;; j += 2) {
    const auto p = asq::pioneer(j);
    if (p.value > oracle::kDefaultLimit) break;
    even_pioneers.push_back(p.value);
  }
  if (ties != even_pioneers) return fail("ties differ from even pioneers");
  return true;
}

bool crit6() {
  for (unsigned long M = 1; M <= 10'000; ++M) {
    const an::Real exact = asq::to_long_double(asq::count_at_square(M));
    const an::Real b = an::b_value(static_cast<an::Real>(M) * M).b;
    if (std::fabs(b - exact) > 1e-6L * exact) return fail("B(M^2) off at M = " + std::to_string(M));
  }

  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> dist(1.0, 1e12);
  for (int i = 0; i < 100'000; ++i) {
    const an::Real b1 = an::b_value(dist(rng)).b1;
    if (b1 < -2 || b1 > -1) return fail("B1 out of [-2, -1]");
  }

  for (std::uint64_t j = 6; j <= 10'000; ++j) {
    if (!an::z_bracket(j).ok) return fail("z bracket fails at j = " + std::to_string(j));
  }

  const auto probe = an::limit_probe(1000);
  if (std::fabs(probe.low - an::kLimInf) > 0.01L) return fail("lim inf probe " + an::format_real(probe.low));
  if (std::fabs(probe.high - an::kLimSup) > 0.01L) return fail("lim sup probe " + an::format_real(probe.high));
  return true;
}

bool crit7() {
  constexpr unsigned kM = 60;
  const auto grid = an::tri_product_grid(kM);
  unsigned inside = 0;
  for (unsigned m = 1; m <= kM; ++m) {
    for (unsigned n = 1; n <= kM; ++n) {
      if (!an::TriGrid::in_kite(m, n)) continue;
      ++inside;
      if (grid.at(m, n) != ((n - m) % 2 == 0)) {
        return fail("parity fails at (" + std::to_string(m) + ", " + std::to_string(n) + ")");
      }
    }
  }
  if (inside == 0) return fail("kite region empty");
  return true;
}

bool crit8() {
  const std::vector<unsigned> expected = {1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 13, 15};
  if (oracle::factorial_membership_scan(100) != expected) return fail("scan result differs");
  return true;
}

bool crit9() {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    std::string n(1000, '0');
    n[0] = static_cast<char>('1' + rng() % 9);
    for (std::size_t i = 1; i < n.size(); ++i) n[i] = static_cast<char>('0' + rng() % 10);
    for (const char* verb : {"check", "floor", "count"}) {
      const auto start = std::chrono::steady_clock::now();
      int status = 0;
      const std::string out = cli({verb, n}, &status);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (status != 0 || out.empty()) return fail(std::string(verb) + " failed on 1000 digits");
      if (secs >= 1.0) return fail(std::string(verb) + " took " + std::to_string(secs) + " s");
    }
  }
  return true;
}

struct Criterion {
  int id;
  const char* description;
  double limit_seconds;  // 0 = untimed
  std::function<bool()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "CLI regressions: floor 190, count 200, floor 8675309", 1.0, crit1},
      {2, "enumerate_range(1, 200) equals the 59 known almost-squares and rectangles", 0, crit2},
      {3, "fast membership and count match brute force for n <= 200000", 300.0, crit3},
      {4, "a_m/b_m identities, T(x), floor(sqrt n) | n family, flock cardinality", 60.0, crit4},
      {5, "pioneers for j <= 20, brute-force pioneers for j <= 8, ties at even pioneers", 0, crit5},
      {6, "B at squares, B1 range, z bracket, limit probe at j = 1000", 120.0, crit6},
      {7, "triangular-product grid follows n - m parity inside the kite (m_max = 60)", 0, crit7},
      {8, "factorial scan to 100 gives {1..8, 10, 11, 13, 15}", 10.0, crit8},
      {9, "check/floor/count on 1000-digit inputs, each under 1 s", 0, crit9},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    g_detail.clear();
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      ok = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.limit_seconds > 0 && secs >= c.limit_seconds) {
      ok = fail("over time limit of " + std::to_string(c.limit_seconds) + " s");
    }
    if (!ok) ++failures;
    std::printf("[%s] %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.description, secs,
                ok ? "" : " -- ", ok ? "" : g_detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
