#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace linf {

/// Exact rational ground field. Values produced by this library are always
/// canonical: lowest terms, positive denominator.
using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q" with decimal integers. Rejects decimals,
/// exponents, whitespace and zero denominators. Throws std::invalid_argument.
Scalar parse_scalar(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

}  // namespace linf
