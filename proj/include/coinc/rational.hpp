#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace coinc {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator.
using Scalar = mpq_class;
using BigInt = mpz_class;

/// Parses an integer or "p/q" literal (optional sign, surrounding spaces
/// allowed). Throws InvalidInput on malformed text or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Parses a comma-separated list of scalars.
std::vector<Scalar> parse_scalar_list(std::string_view text);

/// "p/q" or "p" when the denominator is one.
std::string to_string(const Scalar& value);

/// Decimal rendering with `digits` fractional digits, rounded half away
/// from zero. Used only for display output.
std::string to_decimal(const Scalar& value, int digits = 6);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

}  // namespace coinc
