#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polyarith/ring_ops.hpp"

namespace polyarith {

/// Ordinary mixed-radix scheme. bases[0] is p(1), the base between the two
/// least significant digits; a scheme with N_p bases takes N_p + 1 digits.
struct MixedBaseScheme {
  std::vector<Integer> bases;
};

/// Throws InvalidBase unless every base is >= 2.
MixedBaseScheme make_mixed_scheme(std::vector<Integer> bases);

/// Composition counts (ell_nu, ell_mu) of a binary mixed numeral with the given
/// digit count: one addition per digit after the first, ell_mu = ell_nu + 1.
struct BinaryLengths {
  std::uint64_t lnu;
  std::uint64_t lmu;
};
BinaryLengths binary_mixed_lengths(std::size_t digit_count);

/// digits are y(N_y-1) .. y(0), most significant first. Digit i is weighted by
/// p(1) * ... * p(i); every digit but the top one must lie in [0, p(i+1)).
/// Throws LengthMismatch, DigitOutOfRange.
Integer eval_binary_mixed(std::span<const Integer> digits, const MixedBaseScheme& scheme);

/// Inverse of eval_binary_mixed for value >= 0; the top digit takes the final quotient.
std::vector<Integer> decode_binary_mixed(const Integer& value, const MixedBaseScheme& scheme);

/// p(i+1) = p(i) p(i-1) ... p(1).
Integer recurrent_bases(std::span<const Integer> seed);

/// Polyadic mixed scheme: towers[i-1] holds the i(n-1) bases p_1(i) .. p_{i(n-1)}(i)
/// of digit position i, for i = 1 .. N_y - 1.
struct PolyadicMixedScheme {
  PolyadicRing ring;
  std::vector<std::vector<RingElement>> towers;

  std::size_t digit_count() const noexcept { return towers.size() + 1; }
};

/// Throws TowerShapeMismatch, ClassMismatch.
PolyadicMixedScheme make_polyadic_scheme(const PolyadicRing& ring,
                                         std::vector<std::vector<RingElement>> towers);

/// Every tower entry set to base, for digit_count digits.
PolyadicMixedScheme uniform_polyadic_scheme(const PolyadicRing& ring, const RingElement& base,
                                            std::size_t digit_count);

/// nu_m^{ell_nu}[ mu_n^{i}[y(i), p_1(i), ..., p_{i(n-1)}(i)] ..., y(0) ], digits
/// most significant first. Digits are checked for class membership only.
/// Throws TowerShapeMismatch, ClassMismatch, InconsistentLengths.
RingElement eval_polyadic_mixed(std::span<const RingElement> digits, const PolyadicMixedScheme& scheme,
                                std::uint64_t lnu);

/// N_p = N_y (N_y - 1)(n - 1) / 2.
Integer base_count(std::uint64_t digit_count, std::uint64_t n);

}  // namespace polyarith
