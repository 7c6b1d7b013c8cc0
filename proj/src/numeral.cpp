#include "polyarith/numeral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "polyarith/error.hpp"

namespace polyarith {

std::uint64_t length_plan(const ArityShape& shape, std::uint64_t lnu) {
  if (lnu < 1) throw Error(ErrorKind::InvalidArgument, "ell_nu must be >= 1");
  return lnu * (shape.m - 1) + 1;
}

std::uint64_t min_digits(const ArityShape& shape) { return length_plan(shape, 1); }

namespace {

void validate_base(const PolyadicRing& ring, const RingElement& base) {
  ring.require_member(base);
  if (base.k() < 2) {
    throw Error(ErrorKind::InvalidBase,
                "base index k_p must be >= 2, got " + to_decimal(base.k()));
  }
}

void validate_lengths(const PolyadicRing& ring, std::size_t digit_count, std::uint64_t lnu,
                      std::uint64_t lmu) {
  if (lnu < 1 || lmu != length_plan(ring.shape(), lnu) || digit_count != lmu) {
    throw Error(ErrorKind::InconsistentLengths,
                "need ell_mu = ell_nu(m-1)+1 digits with m = " + std::to_string(ring.m()) +
                    ", got ell_nu = " + std::to_string(lnu) + ", ell_mu = " + std::to_string(lmu) +
                    ", " + std::to_string(digit_count) + " digits");
  }
}

void validate_alphabet(const RingElement& base, std::span<const Integer> digits) {
  for (const auto& d : digits) {
    if (d < 0 || d >= base.k()) {
      throw Error(ErrorKind::DigitOutOfRange, "digit index " + to_decimal(d) + " outside [0, " +
                                                  to_decimal(base.k() - 1) + "]");
    }
  }
}

RingElement evaluate_by_composition(const PolyadicRing& ring, const RingElement& base,
                                    std::span<const RingElement> digits, std::uint64_t lnu) {
  const std::uint64_t n = ring.n();
  const std::size_t lmu = digits.size();
  std::vector<RingElement> terms;
  terms.reserve(lmu);
  std::vector<RingElement> word;
  for (std::size_t pos = 0; pos < lmu; ++pos) {
    const std::uint64_t i = lmu - 1 - pos;
    if (i == 0) {
      terms.push_back(digits[pos]);
      continue;
    }
    word.assign(1, digits[pos]);
    word.insert(word.end(), i * (n - 1), base);
    terms.push_back(mu_iter(ring, i, word));
  }
  return nu_iter(ring, lnu, terms);
}

RingElement evaluate_checked(const PolyadicRing& ring, const RingElement& base,
                             std::span<const RingElement> digits, std::uint64_t lnu) {
  RingElement result = evaluate_by_composition(ring, base, digits, lnu);
#ifdef POLYARITH_SHADOW_CHECKS
  if (result.value() != place_value_polynomial(base, ring.n(), digits)) {
    throw std::logic_error("evaluate: composition path disagrees with place-value polynomial");
  }
#endif
  return result;
}

}  // namespace

Numeral make_numeral(const PolyadicRing& ring, const RingElement& base, std::vector<Integer> digits) {
  validate_base(ring, base);
  auto wl = word_length_for(ring.m(), digits.size());
  if (!wl) {
    throw Error(ErrorKind::InconsistentLengths,
                std::to_string(digits.size()) + " digits is not of the form ell_nu(m-1)+1 with m = " +
                    std::to_string(ring.m()));
  }
  validate_alphabet(base, digits);
  return Numeral{ring, base, std::move(digits), wl->compositions, wl->width};
}

Numeral make_numeral_from_values(const PolyadicRing& ring, const RingElement& base,
                                 std::span<const Integer> digit_values) {
  std::vector<Integer> indices;
  indices.reserve(digit_values.size());
  for (const auto& v : digit_values) indices.push_back(ring.from_value(v).k());
  return make_numeral(ring, base, std::move(indices));
}

std::vector<RingElement> digit_elements(const Numeral& numeral) {
  std::vector<RingElement> out;
  out.reserve(numeral.digits.size());
  for (const auto& d : numeral.digits) out.push_back(numeral.ring.element(d));
  return out;
}

RingElement evaluate(const Numeral& numeral) {
  validate_base(numeral.ring, numeral.base);
  validate_lengths(numeral.ring, numeral.digits.size(), numeral.lnu, numeral.lmu);
  validate_alphabet(numeral.base, numeral.digits);
  return evaluate_checked(numeral.ring, numeral.base, digit_elements(numeral), numeral.lnu);
}

RingElement evaluate(const GeneralizedNumeral& numeral) {
  validate_base(numeral.ring, numeral.base);
  validate_lengths(numeral.ring, numeral.digits.size(), numeral.lnu, numeral.lmu);
  for (const auto& d : numeral.digits) numeral.ring.require_member(d);
  return evaluate_checked(numeral.ring, numeral.base, numeral.digits, numeral.lnu);
}

Integer place_value_polynomial(const RingElement& base, std::uint64_t n,
                               std::span<const RingElement> digits) {
  const Integer weight_step = ipow(base.value(), n - 1);
  Integer acc = 0;
  for (const auto& d : digits) acc = acc * weight_step + d.value();
  return acc;
}

std::optional<Numeral> try_decode(const PolyadicRing& ring, const RingElement& base,
                                  const RingElement& value) {
  validate_base(ring, base);
  ring.require_member(value);
  const auto& cls = ring.congruence_class();
  const Integer step = ipow(base.value(), ring.n() - 1);  // P >= 2 since p >= 2
  const Integer& target = value.value();

  // value = a (P^l - 1)/(P - 1) + b T with T = sum t_i P^i, 0 <= t_i <= k_p - 1.
  for (std::uint64_t lnu = 1;; ++lnu) {
    const std::uint64_t lmu = length_plan(ring.shape(), lnu);
    const Integer top = ipow(step, lmu);
    const Integer floor_value = cls.a * exact_quotient(Integer(top - 1), Integer(step - 1));
    if (floor_value > target) return std::nullopt;
    const Integer diff = target - floor_value;
    if (!divides(cls.b, diff)) continue;
    Integer rest = exact_quotient(diff, cls.b);
    if (rest >= top) continue;

    std::vector<Integer> digits(lmu);
    bool in_alphabet = true;
    for (std::size_t pos = lmu; pos-- > 0;) {
      Integer q, r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), step.get_mpz_t());
      if (r >= base.k()) {
        in_alphabet = false;
        break;
      }
      digits[pos] = r;
      rest = q;
    }
    if (in_alphabet) return Numeral{ring, base, std::move(digits), lnu, lmu};
    // With a = 0 longer strings only add leading zero digits.
    if (cls.a == 0) return std::nullopt;
  }
}

Numeral decode(const PolyadicRing& ring, const RingElement& base, const RingElement& value) {
  auto numeral = try_decode(ring, base, value);
  if (!numeral) {
    throw Error(ErrorKind::NotRepresentable, to_decimal(value.value()) + " has no base-" +
                                                 to_decimal(base.value()) + " numeral in " +
                                                 to_string(ring));
  }
  return std::move(*numeral);
}

Catalog enumerate(const PolyadicRing& ring, const RingElement& base, std::uint64_t lnu,
                  const EnumerateOptions& options) {
  validate_base(ring, base);
  const std::uint64_t lmu = length_plan(ring.shape(), lnu);
  const Integer total = ipow(base.k(), lmu);
  Integer count = total;
  if (options.limit && Integer(static_cast<unsigned long>(*options.limit)) < count) {
    count = static_cast<unsigned long>(*options.limit);
  }
  if (count > Integer(static_cast<unsigned long>(options.cap))) {
    throw Error(ErrorKind::CatalogTooLarge, "catalog of " + to_decimal(count) +
                                                " records exceeds cap " + std::to_string(options.cap));
  }

  Catalog catalog{ring, base, lnu, lmu, {}};
  const std::uint64_t produce = *to_uint64(count);
  catalog.records.reserve(produce);
  std::vector<Integer> digits(lmu, Integer(0));
  for (std::uint64_t r = 0; r < produce; ++r) {
    Numeral numeral{ring, base, digits, lnu, lmu};
    catalog.records.push_back(NumeralRecord{digits, evaluate(numeral)});
    // Odometer: least significant digit turns fastest.
    for (std::size_t pos = lmu; pos-- > 0;) {
      if (++digits[pos] < base.k()) break;
      digits[pos] = 0;
    }
  }
  return catalog;
}

GeneralizedNumeral add_numerals(const PolyadicRing& ring, std::span<const Numeral> numerals) {
  if (numerals.size() != ring.m()) {
    throw Error(ErrorKind::ArityMismatch, "digit-wise addition takes " + std::to_string(ring.m()) +
                                              " numerals, got " + std::to_string(numerals.size()));
  }
  const Numeral& first = numerals.front();
  for (const auto& num : numerals) {
    if (!(num.ring == ring)) throw Error(ErrorKind::ClassMismatch, "numeral over " + to_string(num.ring));
    if (!(num.base == first.base)) {
      throw Error(ErrorKind::BaseMismatch, "bases " + to_decimal(first.base.value()) + " and " +
                                               to_decimal(num.base.value()) + " differ");
    }
    if (num.lnu != first.lnu || num.lmu != first.lmu || num.digits.size() != first.digits.size()) {
      throw Error(ErrorKind::InconsistentLengths, "numerals of different lengths");
    }
  }
  GeneralizedNumeral sum{ring, first.base, {}, first.lnu, first.lmu};
  std::vector<RingElement> column;
  for (std::size_t pos = 0; pos < first.digits.size(); ++pos) {
    column.clear();
    for (const auto& num : numerals) column.push_back(ring.element(num.digits[pos]));
    sum.digits.push_back(nu(ring, column));
  }
  return sum;
}

NumeralProduct mul_numerals(const PolyadicRing& ring, std::span<const Numeral> numerals) {
  if (numerals.size() != ring.n()) {
    throw Error(ErrorKind::ArityMismatch, "numeral product takes " + std::to_string(ring.n()) +
                                              " numerals, got " + std::to_string(numerals.size()));
  }
  std::vector<RingElement> factors;
  for (const auto& num : numerals) {
    if (!(num.ring == ring)) throw Error(ErrorKind::ClassMismatch, "numeral over " + to_string(num.ring));
    if (!(num.base == numerals.front().base)) {
      throw Error(ErrorKind::BaseMismatch, "bases " + to_decimal(numerals.front().base.value()) +
                                               " and " + to_decimal(num.base.value()) + " differ");
    }
    factors.push_back(evaluate(num));
  }
  RingElement product = mu(ring, factors);
  auto encoding = try_decode(ring, numerals.front().base, product);
  return NumeralProduct{std::move(product), std::move(encoding)};
}

double efficiency(std::uint64_t symbols, std::uint64_t base) {
  if (base < 2 || symbols < base) {
    throw Error(ErrorKind::InvalidArgument, "efficiency needs s >= p >= 2");
  }
  return std::pow(static_cast<double>(base), static_cast<double>(symbols) / static_cast<double>(base));
}

std::uint64_t best_integer_base(std::uint64_t symbols) {
  if (symbols < 2) throw Error(ErrorKind::InvalidArgument, "best_integer_base needs s >= 2");
  // p^(s/p) > q^(s/q)  <=>  p^q > q^p  (raise both sides to pq/s > 0).
  std::uint64_t best = 2;
  for (std::uint64_t p = 3; p <= symbols; ++p) {
    const Integer candidate(static_cast<unsigned long>(p));
    const Integer incumbent(static_cast<unsigned long>(best));
    if (ipow(candidate, best) > ipow(incumbent, p)) best = p;
  }
  return best;
}

std::string format_numeral(const Numeral& numeral) {
  std::string out = "(";
  for (std::size_t i = 0; i < numeral.digits.size(); ++i) {
    if (i) out += ",";
    out += to_decimal(numeral.ring.element(numeral.digits[i]).value());
  }
  return out + ")_" + to_decimal(numeral.base.value());
}

Numeral parse_numeral(const PolyadicRing& ring, std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (c != ' ') compact.push_back(c);
  }
  const auto close = compact.find(')');
  if (compact.size() < 4 || compact.front() != '(' || close == std::string::npos ||
      close + 1 >= compact.size() || compact[close + 1] != '_') {
    throw Error(ErrorKind::InvalidArgument, "expected numeral text like (2,5,5,2)_8, got '" +
                                                std::string(text) + "'");
  }
  std::vector<Integer> values;
  std::string_view body(compact.data() + 1, close - 1);
  while (true) {
    const auto comma = body.find(',');
    values.push_back(parse_integer(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  const RingElement base = ring.from_value(parse_integer(std::string_view(compact).substr(close + 2)));
  return make_numeral_from_values(ring, base, values);
}

}  // namespace polyarith
