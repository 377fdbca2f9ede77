#pragma once

// Real-valued view of the counting function A(x).
//
//   A(x) = (2 sqrt2 / 3) x^(3/4) + x^(1/2) / 2 + R(x)
//
// B(x) = B0(x) + B1(x) agrees with A exactly at perfect squares; R(x) is
// split into a large-scale term g(sqrt2 x^(1/4)) and a small-scale term
// h(2 sqrt x), plus a bounded residual.
//
// All reals are long double (80-bit on x86-64). Counts always come from
// asq-core's exact integers.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "asq/bigint.hpp"

namespace asq::analysis {

using Real = long double;

inline constexpr Real kSqrt2 = 1.41421356237309504880168872420969808L;
inline constexpr Real kMainCoeff = 2 * kSqrt2 / 3;
/// lim inf of R(x) / x^(1/4).
inline constexpr Real kLimInf = 5 / (6 * kSqrt2);
/// lim sup of R(x) / x^(1/4).
inline constexpr Real kLimSup = 19 / (12 * kSqrt2);

/// Ceiling on |R1(x)| over every almost-square x <= 10^7, where
/// R1 = R - (2 sqrt2/3 + g - h) x^(1/4). Measured (observed max 1.9914, at
/// x = 3041^2), not proved; tests assert it does not regress.
inline constexpr Real kResidualBound1e7 = 2.0L;

struct BTerms {
  Real x;
  Real gamma;  // {sqrt2 x^(1/4)}
  Real delta;  // {x^(1/4) / sqrt2}
  Real b0;
  Real b1;
  Real b;
};

/// Rejects x < 1. Every root is taken as sqrt of an exactly representable
/// value, so at x = M^2 the fractional parts gamma and delta are exactly 0
/// whenever 2M or M/2 is a perfect square.
BTerms b_value(Real x);

Real frac(Real t);
Real g_func(Real t);
Real h_func(Real t);

struct AnalysisSample {
  Real x;
  BigInt a_of_x;
  Real r;
  Real r_normalized;
  Real g_val;
  Real h_val;

  /// R1 = R - (2 sqrt2/3 + g - h) x^(1/4).
  Real residual() const;
};

/// Exact A(n) with the real-valued main term subtracted. Rejects n = 0.
AnalysisSample remainder(const BigInt& n);

struct LimitProbe {
  Real low;   // R(y)/y^(1/4), y = 4j^4 + j^2
  Real high;  // R(z)/z^(1/4), z = (2j^2 + j)^2
};

/// Rejects j = 0.
LimitProbe limit_probe(std::uint64_t j);

struct ZBracket {
  Real z;
  bool ok;
};

/// z_j = (3j)^(2/3)/2 - (3j)^(1/3)/4 and the check B((z-1)^2) < j < B(z^2).
/// Rejects j <= 5.
ZBracket z_bracket(std::uint64_t j);

/// (m, n) -> whether t_m t_n is an almost-square, 1 <= m, n <= m_max.
class TriGrid {
 public:
  explicit TriGrid(unsigned m_max);

  unsigned m_max() const { return m_max_; }
  bool at(unsigned m, unsigned n) const;

  /// Strictly inside n-1 > m > 3n - sqrt(8n(n-1)) - 1; decided exactly.
  static bool in_kite(unsigned m, unsigned n);

 private:
  unsigned m_max_;
  std::vector<char> cells_;
};

/// Rejects m_max < 2.
TriGrid tri_product_grid(unsigned m_max);

enum class SeriesKind { AOfX, ROfX, RNormalized, TriGrid };

/// Parses "A", "R", "R-norm", "trigrid" (and the long spellings
/// "A-of-x", "R-of-x", "R-normalized", "tri-grid").
SeriesKind parse_series_kind(const std::string& name);

/// What to sample. For the x-series, step = 0 samples at almost-squares in
/// [lo, hi]; step > 0 samples lo, lo+step, ... . For TriGrid, hi is m_max
/// and lo/step are ignored.
struct SeriesPlan {
  SeriesKind kind = SeriesKind::AOfX;
  BigInt lo = 1;
  BigInt hi = 1;
  BigInt step = 1;
};

inline constexpr std::uint64_t kMaxSeriesRows = 20'000'000;
/// Largest x the long double pipeline resolves gamma/delta to ~1e-9.
inline constexpr std::uint64_t kMaxSeriesX = 1'000'000'000'000'000ULL;
inline constexpr unsigned kMaxGrid = 5000;

/// Throws InvalidArgument, before writing anything, when the plan exceeds
/// the caps above.
void validate_plan(const SeriesPlan& plan);

/// Writes CSV: header, then one row per sample. LF endings, 17 significant
/// digits for reals. An empty range yields just the header.
void emit_series(const SeriesPlan& plan, std::ostream& out);

/// Formats a real with 17 significant digits.
std::string format_real(Real v);

}  // namespace asq::analysis
