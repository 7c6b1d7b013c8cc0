#include "polyarith/mixed_base.hpp"

#include <stdexcept>

#include "polyarith/error.hpp"
#include "polyarith/numeral.hpp"

namespace polyarith {

MixedBaseScheme make_mixed_scheme(std::vector<Integer> bases) {
  for (const auto& p : bases) {
    if (p < 2) throw Error(ErrorKind::InvalidBase, "mixed base must be >= 2, got " + to_decimal(p));
  }
  return MixedBaseScheme{std::move(bases)};
}

BinaryLengths binary_mixed_lengths(std::size_t digit_count) {
  if (digit_count < 2) {
    throw Error(ErrorKind::LengthMismatch, "a composition form needs at least two digits");
  }
  return BinaryLengths{digit_count - 1, digit_count};
}

Integer eval_binary_mixed(std::span<const Integer> digits, const MixedBaseScheme& scheme) {
  const std::size_t count = digits.size();
  if (count != scheme.bases.size() + 1) {
    throw Error(ErrorKind::LengthMismatch, std::to_string(scheme.bases.size()) + " bases need " +
                                               std::to_string(scheme.bases.size() + 1) + " digits, got " +
                                               std::to_string(count));
  }
  for (std::size_t pos = 0; pos < count; ++pos) {
    const std::size_t i = count - 1 - pos;
    const bool top = pos == 0;
    if (digits[pos] < 0 || (!top && digits[pos] >= scheme.bases[i])) {
      throw Error(ErrorKind::DigitOutOfRange,
                  "digit " + to_decimal(digits[pos]) + " at position " + std::to_string(i) +
                      (top ? " must be >= 0" : " must lie in [0, " + to_decimal(scheme.bases[i]) + ")"));
    }
  }
  if (count == 1) return digits.front();

  // Composition form over the ordinary integers Z_{2,2}^[0,1]: term i is
  // mu^{i}[y(i), p(i), ..., p(1)], and ell_nu = N_y - 1 additions join the terms.
  const PolyadicRing integers = PolyadicRing::minimal(make_class(0, 1));
  std::vector<RingElement> terms;
  std::vector<RingElement> word;
  for (std::size_t pos = 0; pos < count; ++pos) {
    const std::size_t i = count - 1 - pos;
    if (i == 0) {
      terms.push_back(integers.element(digits[pos]));
      continue;
    }
    word.assign(1, integers.element(digits[pos]));
    for (std::size_t j = i; j-- > 0;) word.push_back(integers.element(scheme.bases[j]));
    terms.push_back(mu_iter(integers, i, word));
  }
  const Integer value = nu_iter(integers, binary_mixed_lengths(count).lnu, terms).value();

  Integer flat = 0;
  Integer weight = 1;
  for (std::size_t i = 0; i < count; ++i) {
    flat += digits[count - 1 - i] * weight;
    if (i < scheme.bases.size()) weight *= scheme.bases[i];
  }
  if (flat != value) throw std::logic_error("eval_binary_mixed: composition and flat sum disagree");
  return value;
}

std::vector<Integer> decode_binary_mixed(const Integer& value, const MixedBaseScheme& scheme) {
  if (value < 0) throw Error(ErrorKind::InvalidArgument, "mixed-base value must be >= 0");
  std::vector<Integer> digits(scheme.bases.size() + 1);
  Integer rest = value;
  for (std::size_t i = 0; i < scheme.bases.size(); ++i) {
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), scheme.bases[i].get_mpz_t());
    digits[digits.size() - 1 - i] = r;
    rest = q;
  }
  digits.front() = rest;
  return digits;
}

Integer recurrent_bases(std::span<const Integer> seed) {
  if (seed.empty()) throw Error(ErrorKind::InvalidArgument, "recurrent bases need a non-empty seed");
  Integer product = 1;
  for (const auto& p : seed) {
    if (p < 2) throw Error(ErrorKind::InvalidBase, "base must be >= 2, got " + to_decimal(p));
    product *= p;
  }
  return product;
}

PolyadicMixedScheme make_polyadic_scheme(const PolyadicRing& ring,
                                         std::vector<std::vector<RingElement>> towers) {
  for (std::size_t idx = 0; idx < towers.size(); ++idx) {
    const std::uint64_t position = idx + 1;
    const std::uint64_t expected = position * (ring.n() - 1);
    if (towers[idx].size() != expected) {
      throw Error(ErrorKind::TowerShapeMismatch,
                  "tower at position " + std::to_string(position) + " needs " + std::to_string(expected) +
                      " bases, got " + std::to_string(towers[idx].size()));
    }
    for (const auto& p : towers[idx]) ring.require_member(p);
  }
  return PolyadicMixedScheme{ring, std::move(towers)};
}

PolyadicMixedScheme uniform_polyadic_scheme(const PolyadicRing& ring, const RingElement& base,
                                            std::size_t digit_count) {
  std::vector<std::vector<RingElement>> towers;
  for (std::size_t position = 1; position < digit_count; ++position) {
    towers.emplace_back(position * (ring.n() - 1), base);
  }
  return make_polyadic_scheme(ring, std::move(towers));
}

RingElement eval_polyadic_mixed(std::span<const RingElement> digits, const PolyadicMixedScheme& scheme,
                                std::uint64_t lnu) {
  const PolyadicRing& ring = scheme.ring;
  // Re-validate: the scheme may have been assembled by hand.
  make_polyadic_scheme(ring, scheme.towers);
  if (digits.size() != scheme.digit_count()) {
    throw Error(ErrorKind::TowerShapeMismatch, std::to_string(scheme.towers.size()) + " towers need " +
                                                   std::to_string(scheme.digit_count()) + " digits, got " +
                                                   std::to_string(digits.size()));
  }
  if (lnu < 1 || digits.size() != length_plan(ring.shape(), lnu)) {
    throw Error(ErrorKind::InconsistentLengths,
                std::to_string(digits.size()) + " digits do not match ell_nu = " + std::to_string(lnu) +
                    " (need ell_nu(m-1)+1 with m = " + std::to_string(ring.m()) + ")");
  }
  for (const auto& d : digits) ring.require_member(d);

  const std::size_t count = digits.size();
  std::vector<RingElement> terms;
  std::vector<RingElement> word;
  Integer flat = 0;
  for (std::size_t pos = 0; pos < count; ++pos) {
    const std::size_t i = count - 1 - pos;
    if (i == 0) {
      terms.push_back(digits[pos]);
      flat += digits[pos].value();
      continue;
    }
    const auto& tower = scheme.towers[i - 1];
    word.assign(1, digits[pos]);
    word.insert(word.end(), tower.begin(), tower.end());
    terms.push_back(mu_iter(ring, i, word));
    Integer product = digits[pos].value();
    for (const auto& p : tower) product *= p.value();
    flat += product;
  }
  RingElement result = nu_iter(ring, lnu, terms);
  if (result.value() != flat) throw std::logic_error("eval_polyadic_mixed: composition and flat sum disagree");
  return result;
}

Integer base_count(std::uint64_t digit_count, std::uint64_t n) {
  if (digit_count < 1 || n < 2) throw Error(ErrorKind::InvalidArgument, "base_count needs N_y >= 1, n >= 2");
  const Integer ny(static_cast<unsigned long>(digit_count));
  return exact_quotient(Integer(ny * (ny - 1) * static_cast<unsigned long>(n - 1)), Integer(2));
}

}  // namespace polyarith
