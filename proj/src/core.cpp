#include "asq/core.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace asq {

namespace {

void require_positive(const BigInt& n, const char* what) {
  if (sgn(n) <= 0) throw InvalidArgument(std::string(what) + " must be >= 1");
}

// a_m and b_m without the m >= 2 guard; the formulas give a_1 = b_1 = 0,
// which is what flocks 1 and 2 need.
BigInt a_of(const BigInt& m) { return (isqrt(2 * m - 1) - 1) / 2; }
BigInt b_of(const BigInt& m) { return isqrt(m / 2); }

AlmostSquareRecord odd_member(const BigInt& m, const BigInt& a) {
  return make_record(Rectangle{m - a - 1, m + a});
}

AlmostSquareRecord even_member(const BigInt& m, const BigInt& b) {
  return make_record(Rectangle{m - b, m + b});
}

// Smallest M >= 1 with count_at_square(M) >= j, searched outward from seed.
BigInt square_bracket(const BigInt& j, BigInt M) {
  if (M < 1) M = 1;
  while (count_at_square(M) < j) ++M;
  while (M > 1 && count_at_square(M - 1) >= j) --M;
  return M;
}

// Seed for the square bracket of j: ceil(z_j) - 2 where
// z_j = (3j)^(2/3)/2 - (3j)^(1/3)/4.
BigInt bracket_seed(const BigInt& j) {
  const BigInt three_j = 3 * j;
  if (three_j.fits_ulong_p() && three_j.get_ui() < (1UL << 60)) {
    const long double u = std::cbrt(static_cast<long double>(three_j.get_ui()));
    const long double z = u * u / 2 - u / 4;
    return BigInt(static_cast<unsigned long>(std::ceil(z))) - 2;
  }
  // Both roots are within 1 of the real values, so the seed is off by at
  // most a couple of steps; square_bracket absorbs that.
  const BigInt u2 = iroot(three_j * three_j, 3);
  const BigInt u = iroot(three_j, 3);
  return u2 / 2 - u / 4 - 1;
}

// First almost-squares, indexed from 1.
constexpr std::array<unsigned, 5> kSmallTable = {1, 2, 3, 4, 6};

}  // namespace

FlockId::FlockId(BigInt k) : k_(std::move(k)) {
  if (k_ < 1) throw InvalidArgument("flock index must be >= 1");
  if (mpz_odd_p(k_.get_mpz_t())) {
    parity_ = Parity::Odd;
    m_ = (k_ + 1) / 2;
  } else {
    parity_ = Parity::Even;
    m_ = k_ / 2;
  }
}

BigInt FlockId::lower_exclusive() const {
  return parity_ == Parity::Odd ? BigInt((m_ - 1) * (m_ - 1)) : BigInt(m_ * (m_ - 1));
}

BigInt FlockId::upper_inclusive() const {
  return parity_ == Parity::Odd ? BigInt(m_ * (m_ - 1)) : BigInt(m_ * m_);
}

BigInt FlockId::size() const {
  if (k_ == 1) return 0;
  return 1 + (parity_ == Parity::Odd ? a_of(m_) : b_of(m_));
}

RatioValue::RatioValue(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_ < 1 || den_ < 1) throw InvalidArgument("ratio terms must be positive");
}

std::strong_ordering operator<=>(const RatioValue& a, const RatioValue& b) {
  const int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt triangular(const BigInt& i) {
  require_positive(i, "triangular index");
  return i * (i - 1) / 2;
}

BigInt count_triangular_le(const BigInt& x) {
  if (x < 0) throw InvalidArgument("count_triangular_le: x must be >= 0");
  // t_i <= x  <=>  (2i-1)^2 <= 8x+1
  return (1 + isqrt(8 * x + 1)) / 2;
}

BigInt seq_a(const BigInt& m) {
  if (m < 2) throw InvalidArgument("a_m: m must be >= 2");
  return a_of(m);
}

BigInt seq_b(const BigInt& m) {
  if (m < 2) throw InvalidArgument("b_m: m must be >= 2");
  return b_of(m);
}

AlmostSquareRecord make_record(Rectangle rect) {
  BigInt value = rect.area();
  BigInt s = rect.semiperimeter();
  FlockId flock(s);
  return AlmostSquareRecord{std::move(value), std::move(rect), std::move(s), std::move(flock)};
}

std::vector<AlmostSquareRecord> flock_members(const FlockId& flock) {
  std::vector<AlmostSquareRecord> out;
  if (flock.k() == 1) return out;
  const BigInt& m = flock.m();
  if (flock.parity() == Parity::Odd) {
    for (BigInt a = a_of(m); a >= 0; --a) out.push_back(odd_member(m, a));
  } else {
    for (BigInt b = b_of(m); b >= 0; --b) out.push_back(even_member(m, b));
  }
  return out;
}

FlockId flock_containing(const BigInt& n) {
  require_positive(n, "n");
  const BigInt M = ceil_sqrt(n);
  return n > M * (M - 1) ? FlockId::even(M) : FlockId::odd(M);
}

std::optional<Rectangle> is_almost_square(const BigInt& n) {
  require_positive(n, "n");
  const BigInt M = ceil_sqrt(n);
  const BigInt pronic = M * (M - 1);
  if (n > pronic) {
    const BigInt gap = M * M - n;
    BigInt b = isqrt(gap);
    if (b * b != gap || b > b_of(M)) return std::nullopt;
    return Rectangle{M - b, M + b};
  }
  const BigInt gap = pronic - n;
  BigInt a = pronic_floor_root(gap);
  if (a * (a + 1) != gap || a > a_of(M)) return std::nullopt;
  return Rectangle{M - a - 1, M + a};
}

std::pair<BigInt, BigInt> tri_decompose(const BigInt& n) {
  auto rect = is_almost_square(n);
  if (!rect) throw InvalidArgument("tri_decompose: " + to_decimal(n) + " is not an almost-square");
  BigInt h = rect->length - rect->width;
  return {std::move(rect->width), std::move(h)};
}

BigInt count_at_square_times12(const BigInt& M) {
  require_positive(M, "M");
  const BigInt mu = isqrt(2 * M);
  return 12 * M * (mu + 1) + 6 * mu - 12 - mu * (mu + 1) * (2 * mu + 1) + 6 * (mu / 2);
}

BigInt count_at_square(const BigInt& M) {
  const BigInt twelve = count_at_square_times12(M);
  if (!mpz_divisible_ui_p(twelve.get_mpz_t(), 12)) {
    throw InternalError("count_at_square: closed form not divisible by 12 at M = " + to_decimal(M));
  }
  return twelve / 12;
}

BigInt count_le(const BigInt& n) {
  require_positive(n, "n");
  const BigInt M = ceil_sqrt(n);
  const BigInt at_square = count_at_square(M);
  const BigInt pronic = M * (M - 1);
  const BigInt bM = b_of(M);
  if (n > pronic) {
    const BigInt b = ceil_sqrt(M * M - n);
    return b <= bM ? BigInt(at_square - b) : BigInt(at_square - bM - 1);
  }
  const BigInt gap = pronic - n;
  BigInt a = pronic_floor_root(gap);
  if (a * (a + 1) < gap) ++a;
  if (a <= a_of(M)) return at_square - bM - 1 - a;
  return count_at_square(M - 1);
}

AlmostSquareRecord nth(const BigInt& j) {
  require_positive(j, "index");
  if (j <= static_cast<unsigned long>(kSmallTable.size())) {
    const BigInt v = kSmallTable[j.get_ui() - 1];
    return make_record(*is_almost_square(v));
  }
  const BigInt M = square_bracket(j, bracket_seed(j));
  const BigInt from_top = count_at_square(M) - j;
  const BigInt bM = b_of(M);
  if (from_top <= bM) return even_member(M, from_top);
  const BigInt a = from_top - bM - 1;
  if (a > a_of(M)) throw InternalError("nth: index " + to_decimal(j) + " fell outside its bracket");
  return odd_member(M, a);
}

AlmostSquareRecord floor_almost_square(const BigInt& n) { return nth(count_le(n)); }

Pioneer pioneer(const BigInt& j) {
  require_positive(j, "pioneer index");
  return Pioneer{triangular(j + 1) * triangular(j + 2), FlockId((j + 1) * (j + 1))};
}

std::vector<AlmostSquareRecord> enumerate_range(const BigInt& lo, const BigInt& hi) {
  require_positive(lo, "lo");
  if (lo > hi) throw InvalidArgument("enumerate_range: lo must not exceed hi");
  std::vector<AlmostSquareRecord> out;
  for (FlockId flock = flock_containing(lo); flock.lower_exclusive() < hi;
       flock = FlockId(flock.k() + 1)) {
    for (auto& rec : flock_members(flock)) {
      if (rec.value >= lo && rec.value <= hi) out.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace asq
