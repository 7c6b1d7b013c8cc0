#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyarith/ring_ops.hpp"

namespace polyarith {

/// Place-value numeral over a polyadic ring.
///
/// Digits are indices k_y into the class, most significant first, and must
/// satisfy 0 <= k_y <= k_p - 1 where base = x_{k_p}. The digit at position i
/// (counting from the least significant, i = 0) carries weight p^{i(n-1)}.
struct Numeral {
  PolyadicRing ring;
  RingElement base;
  std::vector<Integer> digits;
  std::uint64_t lnu = 1;
  std::uint64_t lmu = 0;
};

/// Numeral whose digits are arbitrary ring elements (no alphabet bound), as
/// produced by digit-wise addition.
struct GeneralizedNumeral {
  PolyadicRing ring;
  RingElement base;
  std::vector<RingElement> digits;
  std::uint64_t lnu = 1;
  std::uint64_t lmu = 0;
};

/// ell_mu = ell_nu (m - 1) + 1.
std::uint64_t length_plan(const ArityShape& shape, std::uint64_t lnu);

/// Fewest digits a numeral can have: m.
std::uint64_t min_digits(const ArityShape& shape);

/// Builds a numeral from digit indices, deriving (ell_nu, ell_mu) from the
/// digit count. Throws InconsistentLengths, DigitOutOfRange, InvalidBase,
/// ClassMismatch.
Numeral make_numeral(const PolyadicRing& ring, const RingElement& base, std::vector<Integer> digits);

/// As make_numeral, with digits given as class values (e.g. 2,5,8,11).
/// Throws NotInClass for a value outside the class.
Numeral make_numeral_from_values(const PolyadicRing& ring, const RingElement& base,
                                 std::span<const Integer> digit_values);

std::vector<RingElement> digit_elements(const Numeral& numeral);

/// Evaluates nu_m^{ell_nu}[ mu_n^{i}[y(i), p, ..., p] for i = ell_mu-1 .. 1, y(0) ].
/// Throws InconsistentLengths, DigitOutOfRange, InvalidBase, ClassMismatch.
RingElement evaluate(const Numeral& numeral);
RingElement evaluate(const GeneralizedNumeral& numeral);

/// The same number as a flat polynomial sum y(i) p^{i(n-1)}; no operation
/// compositions involved.
Integer place_value_polynomial(const RingElement& base, std::uint64_t n,
                               std::span<const RingElement> digits);

/// Numeral with the fewest admissible digits that evaluates to value, or
/// nullopt if value is not representable in this base.
std::optional<Numeral> try_decode(const PolyadicRing& ring, const RingElement& base,
                                  const RingElement& value);

/// Throws NotRepresentable.
Numeral decode(const PolyadicRing& ring, const RingElement& base, const RingElement& value);

inline constexpr std::uint64_t kDefaultCatalogCap = 1'000'000;

struct EnumerateOptions {
  std::uint64_t cap = kDefaultCatalogCap;
  /// Stop after this many records (the cap applies to what is produced).
  std::optional<std::uint64_t> limit;
};

struct NumeralRecord {
  std::vector<Integer> digits;  // indices, most significant first
  RingElement value;
};

struct Catalog {
  PolyadicRing ring;
  RingElement base;
  std::uint64_t lnu;
  std::uint64_t lmu;
  std::vector<NumeralRecord> records;
};

/// All k_p^{ell_mu} numerals of the given length in lexicographic digit order.
/// Throws CatalogTooLarge when the produced record count would exceed the cap.
Catalog enumerate(const PolyadicRing& ring, const RingElement& base, std::uint64_t lnu,
                  const EnumerateOptions& options = {});

/// Digit-wise m-ary addition of m numerals. Throws ArityMismatch, BaseMismatch,
/// InconsistentLengths.
GeneralizedNumeral add_numerals(const PolyadicRing& ring, std::span<const Numeral> numerals);

struct NumeralProduct {
  RingElement product;
  std::optional<Numeral> encoding;
};

/// n-ary product of n numerals, re-encoded in the shared base when representable.
NumeralProduct mul_numerals(const PolyadicRing& ring, std::span<const Numeral> numerals);

/// E(p) = p^{s/p}, the count of numbers describable with s symbols in base p.
double efficiency(std::uint64_t symbols, std::uint64_t base);

/// Integer base in [2, s] maximizing E(p); ties go to the smaller base.
/// Compared exactly: E(p) > E(q) iff p^q > q^p.
std::uint64_t best_integer_base(std::uint64_t symbols);

/// "(2,5,5,2)_8": digit values, base value as suffix.
std::string format_numeral(const Numeral& numeral);

/// Parses the text form above; digits and base are class values.
Numeral parse_numeral(const PolyadicRing& ring, std::string_view text);

}  // namespace polyarith
