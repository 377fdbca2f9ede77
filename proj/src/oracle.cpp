#include "asq/oracle.hpp"

#include <algorithm>

#include "asq/core.hpp"

namespace asq::oracle {

__extension__ typedef unsigned __int128 u128;

int compare(const Ratio& a, const Ratio& b) {
  const auto lhs = static_cast<u128>(a.num) * b.den;
  const auto rhs = static_cast<u128>(b.num) * a.den;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n < 2) return n;
  std::uint64_t x = n;
  std::uint64_t y = (x >> 1) + (x & 1);  // ceil(x/2) without overflow
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

DivisorPair brute_divisor_pair(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("brute_divisor_pair: n must be >= 1");
  for (std::uint64_t d = isqrt_u64(n); d > 1; --d) {
    if (n % d == 0) return {d, n / d};
  }
  return {1, n};
}

std::uint64_t brute_semiperimeter(std::uint64_t n) {
  const auto [small, large] = brute_divisor_pair(n);
  return small + large;
}

RecordSet brute_record_set(std::uint64_t limit) {
  RecordSet set;
  set.limit = limit;
  Ratio best{0, 1};
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const Ratio r{n, brute_semiperimeter(n)};
    if (compare(r, best) >= 0) {
      set.members.push_back(n);
      set.ratios.push_back(r);
      best = r;
    }
  }
  return set;
}

bool brute_is_member(std::uint64_t n, const RecordSet& set) {
  if (n > set.limit) throw InvalidArgument("brute_is_member: n exceeds the record set limit");
  return std::binary_search(set.members.begin(), set.members.end(), n);
}

std::vector<unsigned> factorial_membership_scan(unsigned n_max) {
  std::vector<unsigned> out;
  BigInt factorial = 1;
  for (unsigned n = 1; n <= n_max; ++n) {
    factorial *= n;
    if (is_almost_square(factorial)) out.push_back(n);
  }
  return out;
}

}  // namespace asq::oracle
