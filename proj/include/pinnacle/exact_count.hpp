#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pinnacle {

/// Arbitrary-precision integer used for every count in the library.
using ExactCount = mpz_class;

ExactCount pow2(unsigned long exponent);

/// value * 2^exponent for a possibly negative exponent. A negative exponent
/// must divide exactly; std::logic_error otherwise.
ExactCount scale_pow2(const ExactCount& value, long exponent);

/// Exact quotient; throws std::logic_error if divisor does not divide value.
ExactCount exact_divide(const ExactCount& value, const ExactCount& divisor);

ExactCount factorial(unsigned long n);

std::string to_decimal(const ExactCount& value);

/// Parses a decimal string (optional leading '-'). std::invalid_argument on
/// anything else.
ExactCount from_decimal(std::string_view text);

}  // namespace pinnacle
