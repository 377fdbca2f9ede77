#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "asq/errors.hpp"

namespace asq {

/// Arbitrary-precision signed integer. Every value crossing the asq-core
/// boundary is one of these.
using BigInt = mpz_class;

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

/// ceil(sqrt(n)) for n >= 0.
BigInt ceil_sqrt(const BigInt& n);

/// floor(n^(1/k)) for n >= 0, k >= 1.
BigInt iroot(const BigInt& n, unsigned long k);

bool is_perfect_square(const BigInt& n);

/// Largest a >= 0 with a(a+1) <= e, for e >= 0.
BigInt pronic_floor_root(const BigInt& e);

/// Strict decimal parse of [0-9]+ (no sign, no whitespace). Throws
/// InvalidArgument naming `what` on failure.
BigInt parse_decimal(std::string_view text, std::string_view what);

std::string to_decimal(const BigInt& n);

/// Nearest long double; exact for |n| < 2^64.
long double to_long_double(const BigInt& n);

}  // namespace asq
