#include "asq/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "asq/core.hpp"

namespace asq::analysis {

__extension__ typedef unsigned __int128 u128;

Real frac(Real t) { return t - std::floor(t); }

BTerms b_value(Real x) {
  if (!(x >= 1)) throw InvalidArgument("b_value: x must be >= 1");
  const Real root2 = std::sqrt(x);       // x^(1/2)
  const Real root4 = std::sqrt(root2);   // x^(1/4)
  const Real gamma = frac(std::sqrt(2 * root2));
  const Real delta = frac(std::sqrt(root2 / 2));
  const Real b0 = kMainCoeff * root2 * root4 + root2 / 2 +
                  (kMainCoeff + gamma * (1 - gamma) / kSqrt2) * root4;
  const Real b1 = gamma * gamma * gamma / 6 - gamma * gamma / 4 - 5 * gamma / 12 - delta / 2 - 1;
  return BTerms{x, gamma, delta, b0, b1, b0 + b1};
}

Real g_func(Real t) {
  const Real f = frac(t);
  return f * (1 - f) / kSqrt2;
}

Real h_func(Real t) {
  const Real f = frac(t);
  if (f <= 0.5L) return f / kSqrt2;
  return std::sqrt(1 - f) - (1 - f) / kSqrt2;
}

Real AnalysisSample::residual() const {
  return r - (kMainCoeff + g_val - h_val) * std::sqrt(std::sqrt(x));
}

AnalysisSample remainder(const BigInt& n) {
  AnalysisSample s;
  s.a_of_x = count_le(n);
  s.x = to_long_double(n);
  const Real root2 = std::sqrt(s.x);
  const Real root4 = std::sqrt(root2);
  s.r = to_long_double(s.a_of_x) - kMainCoeff * root2 * root4 - root2 / 2;
  s.r_normalized = s.r / root4;
  s.g_val = g_func(std::sqrt(2 * root2));
  s.h_val = h_func(2 * root2);
  return s;
}

LimitProbe limit_probe(std::uint64_t j) {
  if (j == 0) throw InvalidArgument("limit_probe: j must be >= 1");
  const BigInt jj = j;
  const BigInt y = 4 * jj * jj * jj * jj + jj * jj;
  const BigInt t = 2 * jj * jj + jj;
  return LimitProbe{remainder(y).r_normalized, remainder(t * t).r_normalized};
}

ZBracket z_bracket(std::uint64_t j) {
  if (j <= 5) throw InvalidArgument("z_bracket: j must be > 5");
  const Real u = std::cbrt(3 * static_cast<Real>(j));
  const Real z = u * u / 2 - u / 4;
  const Real target = static_cast<Real>(j);
  const bool ok = b_value((z - 1) * (z - 1)).b < target && target < b_value(z * z).b;
  return ZBracket{z, ok};
}

TriGrid::TriGrid(unsigned m_max) : m_max_(m_max), cells_(static_cast<std::size_t>(m_max) * m_max, 0) {
  for (unsigned m = 1; m <= m_max; ++m) {
    const BigInt tm = triangular(BigInt(m));
    for (unsigned n = m; n <= m_max; ++n) {
      const BigInt product = tm * triangular(BigInt(n));
      const char member = product > 0 && is_almost_square(product).has_value();
      cells_[static_cast<std::size_t>(m - 1) * m_max + (n - 1)] = member;
      cells_[static_cast<std::size_t>(n - 1) * m_max + (m - 1)] = member;
    }
  }
}

bool TriGrid::at(unsigned m, unsigned n) const {
  if (m < 1 || n < 1 || m > m_max_ || n > m_max_) {
    throw InvalidArgument("TriGrid::at: index out of range");
  }
  return cells_[static_cast<std::size_t>(m - 1) * m_max_ + (n - 1)] != 0;
}

bool TriGrid::in_kite(unsigned m, unsigned n) {
  if (!(n >= 1 && n - 1 > m)) return false;
  // m > 3n - sqrt(8n(n-1)) - 1  <=>  sqrt(8n(n-1)) > 3n - 1 - m
  const long long rhs = 3LL * n - 1 - m;
  if (rhs < 0) return true;
  const auto lhs_sq = static_cast<u128>(8) * n * (n - 1);
  return lhs_sq > static_cast<u128>(rhs) * rhs;
}

TriGrid tri_product_grid(unsigned m_max) {
  if (m_max < 2) throw InvalidArgument("tri_product_grid: m_max must be >= 2");
  return TriGrid(m_max);
}

SeriesKind parse_series_kind(const std::string& name) {
  if (name == "A" || name == "A-of-x") return SeriesKind::AOfX;
  if (name == "R" || name == "R-of-x") return SeriesKind::ROfX;
  if (name == "R-norm" || name == "R-normalized") return SeriesKind::RNormalized;
  if (name == "trigrid" || name == "tri-grid") return SeriesKind::TriGrid;
  throw InvalidArgument("unknown series '" + name + "' (expected A, R, R-norm or trigrid)");
}

std::string format_real(Real v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17Lg", v);
  return buf;
}

namespace {

BigInt row_count(const SeriesPlan& plan) {
  if (plan.lo > plan.hi) return 0;
  if (plan.step == 0) return count_le(plan.hi) - (plan.lo > 1 ? count_le(plan.lo - 1) : BigInt(0));
  return (plan.hi - plan.lo) / plan.step + 1;
}

void write_remainder_row(std::ostream& out, const BigInt& x, const AnalysisSample& s) {
  out << to_decimal(x) << ',' << to_decimal(s.a_of_x) << ',' << format_real(s.r) << ','
      << format_real(s.r_normalized) << ',' << format_real(s.g_val) << ',' << format_real(s.h_val)
      << '\n';
}

void write_x_row(std::ostream& out, SeriesKind kind, const BigInt& x) {
  if (kind == SeriesKind::AOfX) {
    out << to_decimal(x) << ',' << to_decimal(count_le(x)) << '\n';
  } else {
    write_remainder_row(out, x, remainder(x));
  }
}

}  // namespace

void validate_plan(const SeriesPlan& plan) {
  if (plan.kind == SeriesKind::TriGrid) {
    if (plan.hi < 2 || plan.hi > kMaxGrid) {
      throw InvalidArgument("trigrid size must be in [2, " + std::to_string(kMaxGrid) + "]");
    }
    return;
  }
  if (plan.step < 0) throw InvalidArgument("step must be >= 0");
  if (plan.lo > plan.hi) return;
  if (plan.lo < 1) throw InvalidArgument("series start must be >= 1");
  if (plan.hi > BigInt(std::to_string(kMaxSeriesX))) {
    throw InvalidArgument("series end exceeds the analysis cap of " + std::to_string(kMaxSeriesX));
  }
  if (row_count(plan) > BigInt(std::to_string(kMaxSeriesRows))) {
    throw InvalidArgument("series would exceed " + std::to_string(kMaxSeriesRows) + " rows");
  }
}

void emit_series(const SeriesPlan& plan, std::ostream& out) {
  validate_plan(plan);
  switch (plan.kind) {
    case SeriesKind::TriGrid: {
      const auto m_max = static_cast<unsigned>(plan.hi.get_ui());
      const TriGrid grid(m_max);
      out << "m,n,is_member\n";
      for (unsigned m = 1; m <= m_max; ++m) {
        for (unsigned n = 1; n <= m_max; ++n) out << m << ',' << n << ',' << (grid.at(m, n) ? 1 : 0) << '\n';
      }
      return;
    }
    case SeriesKind::AOfX:
      out << "x,A\n";
      break;
    case SeriesKind::ROfX:
    case SeriesKind::RNormalized:
      out << "x,A,R,R_norm,g,h\n";
      break;
  }
  if (plan.lo > plan.hi) return;

  if (plan.step > 0) {
    for (BigInt x = plan.lo; x <= plan.hi; x += plan.step) write_x_row(out, plan.kind, x);
    return;
  }
  // Sample at members, walking flocks and carrying the count forward.
  BigInt count = plan.lo > 1 ? count_le(plan.lo - 1) : BigInt(0);
  for (FlockId flock = flock_containing(plan.lo); flock.lower_exclusive() < plan.hi;
       flock = FlockId(flock.k() + 1)) {
    for (const auto& rec : flock_members(flock)) {
      if (rec.value < plan.lo || rec.value > plan.hi) continue;
      ++count;
      if (plan.kind == SeriesKind::AOfX) {
        out << to_decimal(rec.value) << ',' << to_decimal(count) << '\n';
      } else {
        AnalysisSample s = remainder(rec.value);
        if (s.a_of_x != count) throw InternalError("emit_series: running count diverged from count_le");
        write_remainder_row(out, rec.value, s);
      }
    }
  }
}

}  // namespace asq::analysis
