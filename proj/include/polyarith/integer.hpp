#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polyarith {

/// Exact signed integer used for every value, index and modulus.
using Integer = mpz_class;

/// Plain decimal text, no separators.
std::string to_decimal(const Integer& x);

/// Strict decimal parse: optional sign followed by at least one digit.
/// Throws Error(InvalidArgument) on anything else.
Integer parse_integer(std::string_view text);

Integer ipow(const Integer& base, std::uint64_t exponent);

inline bool divides(const Integer& divisor, const Integer& x) {
  return mpz_divisible_p(x.get_mpz_t(), divisor.get_mpz_t()) != 0;
}

/// x / divisor, caller guarantees divisibility.
Integer exact_quotient(const Integer& x, const Integer& divisor);

/// Non-negative remainder in [0, |modulus|).
Integer mod_floor(const Integer& x, const Integer& modulus);

std::optional<std::int64_t> to_int64(const Integer& x);
std::optional<std::uint64_t> to_uint64(const Integer& x);

}  // namespace polyarith
