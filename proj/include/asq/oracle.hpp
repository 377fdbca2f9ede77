#pragma once

// Brute-force ground truth. Everything here works on machine integers and
// trial division, straight from the definitions, and shares no code path
// with asq-core's flock formulas. Use it to check the fast algorithms, not
// to answer queries.

#include <cstdint>
#include <vector>

#include "asq/errors.hpp"

namespace asq::oracle {

/// Default scan limit for record-set construction.
inline constexpr std::uint64_t kDefaultLimit = 200'000;

/// d(n) x d'(n): the largest divisor of n not exceeding sqrt(n), and its
/// cofactor.
struct DivisorPair {
  std::uint64_t small;
  std::uint64_t large;
};

/// Exact n / s ratio over machine integers.
struct Ratio {
  std::uint64_t num;
  std::uint64_t den;
};

/// Cross-multiplied comparison; -1, 0 or 1.
int compare(const Ratio& a, const Ratio& b);

struct RecordSet {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> members;
  std::vector<Ratio> ratios;
};

/// floor(sqrt(n)) by Newton iteration on 64-bit integers.
std::uint64_t isqrt_u64(std::uint64_t n);

/// Descending trial division from isqrt(n). Rejects n = 0.
DivisorPair brute_divisor_pair(std::uint64_t n);

/// s(n) = min over cd = n of c + d. Rejects n = 0.
std::uint64_t brute_semiperimeter(std::uint64_t n);

/// Record-breakers (ties included) of F(n) = n / s(n) for n <= limit.
RecordSet brute_record_set(std::uint64_t limit);

/// Rejects n > set.limit.
bool brute_is_member(std::uint64_t n, const RecordSet& set);

/// n <= n_max with n! an almost-square, via the fast core membership test.
/// Factorials are far outside trial-division range, so this is a regression
/// check rather than an independent oracle.
std::vector<unsigned> factorial_membership_scan(unsigned n_max);

}  // namespace asq::oracle
