#include "polyarith/congruence.hpp"

#include <set>

#include "polyarith/error.hpp"

namespace polyarith {

std::string to_string(const CongruenceClass& cls) {
  return "[[" + to_decimal(cls.a) + "]]_" + to_decimal(cls.b);
}

RingElement::RingElement(CongruenceClass cls, Integer k)
    : class_(std::move(cls)), k_(std::move(k)), value_(class_.a + class_.b * k_) {}

CongruenceClass make_class(const Integer& a, const Integer& b) {
  if (b < 1) throw Error(ErrorKind::BadModulus, "modulus must be >= 1, got " + to_decimal(b));
  if (a < 0 || a >= b) {
    throw Error(ErrorKind::ResidueOutOfRange,
                "residue must satisfy 0 <= a <= b - 1, got a = " + to_decimal(a) +
                    ", b = " + to_decimal(b));
  }
  return CongruenceClass{a, b};
}

RingElement element_from_k(const CongruenceClass& cls, const Integer& k) {
  return RingElement(cls, k);
}

bool contains(const CongruenceClass& cls, const Integer& v) {
  return divides(cls.b, Integer(v - cls.a));
}

RingElement element_from_value(const CongruenceClass& cls, const Integer& v) {
  const Integer shifted = v - cls.a;
  if (!divides(cls.b, shifted)) {
    throw Error(ErrorKind::NotInClass, to_decimal(v) + " is not in " + to_string(cls));
  }
  return RingElement(cls, exact_quotient(shifted, cls.b));
}

std::optional<Integer> additive_invariant(const CongruenceClass& cls, std::uint64_t m) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "addition arity must be >= 2");
  const Integer numerator = Integer(static_cast<unsigned long>(m - 1)) * cls.a;
  if (!divides(cls.b, numerator)) return std::nullopt;
  return exact_quotient(numerator, cls.b);
}

std::optional<Integer> multiplicative_invariant(const CongruenceClass& cls, std::uint64_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "multiplication arity must be >= 2");
  const Integer numerator = ipow(cls.a, n) - cls.a;
  if (!divides(cls.b, numerator)) return std::nullopt;
  return exact_quotient(numerator, cls.b);
}

namespace {

std::uint64_t minimal_addition_arity(const CongruenceClass& cls) {
  if (cls.a == 0) return 2;
  Integer g;
  mpz_gcd(g.get_mpz_t(), cls.a.get_mpz_t(), cls.b.get_mpz_t());
  const auto m = to_uint64(1 + exact_quotient(cls.b, g));
  if (!m) throw Error(ErrorKind::InvalidArgument, "addition arity exceeds 64 bits for " + to_string(cls));
  return *m;
}

std::optional<std::uint64_t> minimal_multiplication_arity(const CongruenceClass& cls) {
  const Integer start = mod_floor(cls.a, cls.b);
  std::set<Integer> seen;
  Integer residue = start;
  for (std::uint64_t n = 2;; ++n) {
    residue = mod_floor(Integer(residue * cls.a), cls.b);
    if (residue == start) return n;
    if (!seen.insert(residue).second) return std::nullopt;
  }
}

}  // namespace

std::optional<ArityShape> solve_arity_shape(const CongruenceClass& cls) {
  const auto n = minimal_multiplication_arity(cls);
  if (!n) return std::nullopt;
  const std::uint64_t m = minimal_addition_arity(cls);
  ArityShape shape{m, *n, *additive_invariant(cls, m), *multiplicative_invariant(cls, *n)};
  return shape;
}

ArityShape minimal_arity_shape(const CongruenceClass& cls) {
  auto shape = solve_arity_shape(cls);
  if (!shape) {
    throw Error(ErrorKind::NoAritySolution,
                "no multiplication arity n >= 2 with a^n = a (mod b) for " + to_string(cls));
  }
  return *shape;
}

std::vector<ShapeRow> arity_shape_table(std::uint64_t b_max) {
  if (b_max < 1) throw Error(ErrorKind::InvalidArgument, "b_max must be >= 1");
  std::vector<ShapeRow> rows;
  for (std::uint64_t b = 1; b <= b_max; ++b) {
    for (std::uint64_t a = 0; a < b; ++a) {
      CongruenceClass cls{Integer(static_cast<unsigned long>(a)), Integer(static_cast<unsigned long>(b))};
      auto shape = solve_arity_shape(cls);
      rows.push_back(ShapeRow{std::move(cls), std::move(shape)});
    }
  }
  return rows;
}

}  // namespace polyarith
