#include "polyarith/integer.hpp"

#include <cctype>

#include "polyarith/error.hpp"

namespace polyarith {

std::string to_decimal(const Integer& x) { return x.get_str(10); }

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) {
    throw Error(ErrorKind::InvalidArgument, "not an integer: '" + std::string(text) + "'");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::InvalidArgument, "not an integer: '" + std::string(text) + "'");
    }
  }
  Integer result;
  // mpz_set_str rejects a leading '+'.
  std::string normalized(text.front() == '+' ? text.substr(1) : text);
  result.set_str(normalized, 10);
  return result;
}

Integer ipow(const Integer& base, std::uint64_t exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return result;
}

Integer exact_quotient(const Integer& x, const Integer& divisor) {
  Integer result;
  mpz_divexact(result.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
  return result;
}

Integer mod_floor(const Integer& x, const Integer& modulus) {
  Integer result;
  mpz_mod(result.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  return result;
}

std::optional<std::int64_t> to_int64(const Integer& x) {
  static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 target expected");
  if (!x.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(x.get_si());
}

std::optional<std::uint64_t> to_uint64(const Integer& x) {
  if (sgn(x) < 0 || !x.fits_ulong_p()) return std::nullopt;
  return static_cast<std::uint64_t>(x.get_ui());
}

}  // namespace polyarith
