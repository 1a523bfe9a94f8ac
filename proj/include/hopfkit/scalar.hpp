#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hopfkit {

// Exact rational scalar. mpq_class keeps values canonical after every
// arithmetic operation; parse_scalar canonicalizes its input.
using Scalar = mpq_class;

// Accepts "p", "-p", "p/q" with q != 0. Throws std::invalid_argument otherwise.
Scalar parse_scalar(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string format_scalar(const Scalar& x);

inline Scalar sign_of(int exponent) { return (exponent % 2 == 0) ? Scalar(1) : Scalar(-1); }

inline bool is_odd(long n) { return (n % 2) != 0; }

}  // namespace hopfkit
