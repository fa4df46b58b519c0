#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polyslice {

/// Exact rational number. gmpxx keeps every arithmetic result canonical
/// (gcd(|p|, q) = 1, q >= 1).
using Scalar = mpq_class;

/// Parses "p/q" or "p" (optional leading sign). Throws InvalidArgument on
/// malformed text or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Formats as "p/q"; integers keep the "/1" suffix so every value has one shape.
std::string format_scalar(const Scalar& value);

double to_double(const Scalar& value);

/// Decimal rendering for human-readable report columns.
std::string format_decimal(const Scalar& value, int digits = 12);

}  // namespace polyslice
