#pragma once

// Exact arithmetic on almost-squares: integers n whose ratio
// F(n) = n / s(n) (area over least integer semiperimeter) is at least F(k)
// for every k <= n.
//
// Nothing in this header factors an integer. Every query is answered from
// the flock structure: between (m-1)^2 and m^2 the members are
//
//   odd flock  (semiperimeter 2m-1): (m-a-1)(m+a) for 0 <= a <= a_m
//   even flock (semiperimeter 2m):   (m-b)(m+b)   for 0 <= b <= b_m
//
// with a_m = floor((sqrt(2m-1)-1)/2) and b_m = floor(sqrt(m/2)).

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "asq/bigint.hpp"

namespace asq {

/// Optimal integer rectangle d(n) x d'(n); width <= length.
struct Rectangle {
  BigInt width;
  BigInt length;

  BigInt area() const { return width * length; }
  BigInt semiperimeter() const { return width + length; }

  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

enum class Parity { Odd, Even };

/// The k-th flock: almost-squares of semiperimeter k.
///
/// k = 2m-1 covers ((m-1)^2, m(m-1)], k = 2m covers (m(m-1), m^2].
class FlockId {
 public:
  /// Throws InvalidArgument for k < 1.
  explicit FlockId(BigInt k);

  static FlockId odd(const BigInt& m) { return FlockId(2 * m - 1); }
  static FlockId even(const BigInt& m) { return FlockId(2 * m); }

  const BigInt& k() const { return k_; }
  const BigInt& m() const { return m_; }
  Parity parity() const { return parity_; }

  /// Open lower end of the value interval the flock lives in.
  BigInt lower_exclusive() const;
  /// Closed upper end of the value interval.
  BigInt upper_inclusive() const;

  /// 1 + a_m or 1 + b_m; zero for the first flock.
  BigInt size() const;

  friend bool operator==(const FlockId& a, const FlockId& b) { return a.k_ == b.k_; }

 private:
  BigInt k_;
  BigInt m_;
  Parity parity_;
};

struct AlmostSquareRecord {
  BigInt value;
  Rectangle rect;
  BigInt semiperimeter;
  FlockId flock;
};

/// Exact F(n) = numerator / denominator, ordered by cross-multiplication.
class RatioValue {
 public:
  RatioValue(BigInt numerator, BigInt denominator);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  friend std::strong_ordering operator<=>(const RatioValue& a, const RatioValue& b);
  friend bool operator==(const RatioValue& a, const RatioValue& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  BigInt num_;
  BigInt den_;
};

// Sequences.

/// t_i = i(i-1)/2, so t_1 = 0. Rejects i < 1.
BigInt triangular(const BigInt& i);

/// T(x): number of i >= 1 with t_i <= x.
BigInt count_triangular_le(const BigInt& x);

/// a_m = floor((sqrt(2m-1)-1)/2). Rejects m < 2.
BigInt seq_a(const BigInt& m);

/// b_m = floor(sqrt(m/2)). Rejects m < 2.
BigInt seq_b(const BigInt& m);

// Flocks.

/// Members of flock k in increasing order. Flock 1 is empty.
std::vector<AlmostSquareRecord> flock_members(const FlockId& flock);

/// The flock whose value interval contains n (n >= 1).
FlockId flock_containing(const BigInt& n);

// Queries. All reject n = 0 / j = 0 with InvalidArgument.

/// Membership test. Returns the optimal rectangle for members.
std::optional<Rectangle> is_almost_square(const BigInt& n);

/// n = k(k+h) with k = d(n) and 0 <= h <= T(k). Rejects non-members.
std::pair<BigInt, BigInt> tri_decompose(const BigInt& n);

/// A(M^2) from the closed form in M and mu = floor(sqrt(2M)).
BigInt count_at_square(const BigInt& M);

/// 12 * A(M^2) before division; exposed so callers can check integrality.
BigInt count_at_square_times12(const BigInt& M);

/// A(n): number of almost-squares <= n.
BigInt count_le(const BigInt& n);

/// The j-th almost-square, 1-based.
AlmostSquareRecord nth(const BigInt& j);

/// Largest almost-square <= n.
AlmostSquareRecord floor_almost_square(const BigInt& n);

struct Pioneer {
  BigInt value;
  FlockId flock;
};

/// j-th pioneer: t_{j+1} t_{j+2}, first member of flock (j+1)^2.
Pioneer pioneer(const BigInt& j);

/// All almost-squares in [lo, hi]. Rejects lo = 0 and lo > hi.
std::vector<AlmostSquareRecord> enumerate_range(const BigInt& lo, const BigInt& hi);

/// Builds the full record (semiperimeter, flock) for a member rectangle.
AlmostSquareRecord make_record(Rectangle rect);

}  // namespace asq
