#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyarith/integer.hpp"

namespace polyarith {

/// The congruence class [[a]]_b = { a + b k : k in Z } with 0 <= a < b.
struct CongruenceClass {
  Integer a;
  Integer b;

  friend bool operator==(const CongruenceClass& lhs, const CongruenceClass& rhs) {
    return lhs.a == rhs.a && lhs.b == rhs.b;
  }
};

/// "[[a]]_b"
std::string to_string(const CongruenceClass& cls);

/// Addition arity m, multiplication arity n and their invariants
/// I = (m-1)a/b, J = (a^n - a)/b.
struct ArityShape {
  std::uint64_t m = 2;
  std::uint64_t n = 2;
  Integer I;
  Integer J;

  friend bool operator==(const ArityShape&, const ArityShape&) = default;
};

/// One representative x_k = a + b k of a class. Two elements are equal
/// exactly when their classes and indices coincide.
class RingElement {
 public:
  RingElement(CongruenceClass cls, Integer k);

  const CongruenceClass& congruence_class() const noexcept { return class_; }
  const Integer& k() const noexcept { return k_; }
  const Integer& value() const noexcept { return value_; }

  friend bool operator==(const RingElement& lhs, const RingElement& rhs) {
    return lhs.class_ == rhs.class_ && lhs.k_ == rhs.k_;
  }

 private:
  CongruenceClass class_;
  Integer k_;
  Integer value_;
};

/// Throws ResidueOutOfRange unless 0 <= a < b, BadModulus unless b >= 1.
CongruenceClass make_class(const Integer& a, const Integer& b);

RingElement element_from_k(const CongruenceClass& cls, const Integer& k);

/// Throws NotInClass when v is not congruent to a modulo b.
RingElement element_from_value(const CongruenceClass& cls, const Integer& v);

bool contains(const CongruenceClass& cls, const Integer& v);

/// I = (m-1)a/b when it is an integer.
std::optional<Integer> additive_invariant(const CongruenceClass& cls, std::uint64_t m);

/// J = (a^n - a)/b when a^n = a (mod b).
std::optional<Integer> multiplicative_invariant(const CongruenceClass& cls, std::uint64_t n);

/// Minimal admissible (m, n), or nullopt when no n >= 2 satisfies a^n = a (mod b).
///
/// m has the closed form 2 for a = 0 and 1 + b/gcd(a, b) otherwise. n is found
/// by walking the residues a^k mod b for k = 2, 3, ...: hitting a again gives n,
/// revisiting any other residue first means the orbit has entered a cycle that
/// excludes a, so no n exists. The walk takes at most b steps.
std::optional<ArityShape> solve_arity_shape(const CongruenceClass& cls);

/// As solve_arity_shape, but throws NoAritySolution.
ArityShape minimal_arity_shape(const CongruenceClass& cls);

struct ShapeRow {
  CongruenceClass cls;
  std::optional<ArityShape> shape;
};

/// Every class 0 <= a < b <= b_max, ordered by b then a.
std::vector<ShapeRow> arity_shape_table(std::uint64_t b_max);

}  // namespace polyarith
