#include "asq/bigint.hpp"

#include <cstdlib>

namespace asq {

namespace {

void require_nonnegative(const BigInt& n, const char* op) {
  if (sgn(n) < 0) {
    throw InvalidArgument(std::string(op) + ": argument must be nonnegative");
  }
}

}  // namespace

BigInt isqrt(const BigInt& n) {
  require_nonnegative(n, "isqrt");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

BigInt ceil_sqrt(const BigInt& n) {
  BigInt r = isqrt(n);
  if (r * r != n) ++r;
  return r;
}

BigInt iroot(const BigInt& n, unsigned long k) {
  require_nonnegative(n, "iroot");
  if (k == 0) throw InvalidArgument("iroot: degree must be >= 1");
  BigInt r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

bool is_perfect_square(const BigInt& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

BigInt pronic_floor_root(const BigInt& e) {
  require_nonnegative(e, "pronic_floor_root");
  // a(a+1) <= e  <=>  (2a+1)^2 <= 4e+1
  BigInt a = (isqrt(4 * e + 1) - 1) / 2;
  return a;
}

BigInt parse_decimal(std::string_view text, std::string_view what) {
  if (text.empty()) {
    throw InvalidArgument(std::string(what) + ": expected a nonnegative decimal integer, got an empty string");
  }
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw InvalidArgument(std::string(what) + ": expected a nonnegative decimal integer, got '" +
                            std::string(text) + "'");
    }
  }
  return BigInt(std::string(text), 10);
}

std::string to_decimal(const BigInt& n) { return n.get_str(10); }

long double to_long_double(const BigInt& n) {
  if (n.fits_ulong_p()) return static_cast<long double>(n.get_ui());
  if (n.fits_slong_p()) return static_cast<long double>(n.get_si());
  return std::strtold(n.get_str(10).c_str(), nullptr);
}

}  // namespace asq
