#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyarith/congruence.hpp"

namespace polyarith {

/// Commutative (m,n)-ring Z_{m,n}^{[a,b]}: the class [[a]]_b with m-ary
/// addition nu_m and n-ary multiplication mu_n inherited from Z.
class PolyadicRing {
 public:
  /// Ring with the minimal arity shape; throws NoAritySolution.
  static PolyadicRing minimal(const CongruenceClass& cls);

  /// Ring with caller-chosen arities; throws InadmissibleArity unless both
  /// quantization conditions hold for (m, n).
  static PolyadicRing with_arities(const CongruenceClass& cls, std::uint64_t m, std::uint64_t n);

  const CongruenceClass& congruence_class() const noexcept { return class_; }
  const ArityShape& shape() const noexcept { return shape_; }
  std::uint64_t m() const noexcept { return shape_.m; }
  std::uint64_t n() const noexcept { return shape_.n; }

  RingElement element(const Integer& k) const { return RingElement(class_, k); }
  /// Throws NotInClass.
  RingElement from_value(const Integer& v) const { return element_from_value(class_, v); }

  /// Throws ClassMismatch if x belongs to another class.
  void require_member(const RingElement& x) const;

  friend bool operator==(const PolyadicRing&, const PolyadicRing&) = default;

 private:
  PolyadicRing(CongruenceClass cls, ArityShape shape);

  CongruenceClass class_;
  ArityShape shape_;
};

/// "Z_{m,n}^[a,b]"
std::string to_string(const PolyadicRing& ring);

/// ell compositions of an arity-ary operation consume ell*(arity-1)+1 operands.
struct WordLength {
  std::uint64_t compositions;
  std::uint64_t arity;
  std::uint64_t width;
};

std::uint64_t admissible_width(std::uint64_t arity, std::uint64_t compositions);

/// The composition count for a word of this width, if the width is admissible
/// (width >= arity and width = 1 mod arity-1).
std::optional<WordLength> word_length_for(std::uint64_t arity, std::uint64_t width);

/// m-ary addition. Throws ArityMismatch, ClassMismatch.
RingElement nu(const PolyadicRing& ring, std::span<const RingElement> xs);

/// n-ary multiplication. Throws ArityMismatch, ClassMismatch.
RingElement mu(const PolyadicRing& ring, std::span<const RingElement> xs);

/// Index decomposition r0 = s + J of an n-ary product.
struct ProductIndex {
  Integer s;
  Integer J;
  Integer r0;
};

/// s(r1, r2, r3; a, b) for ternary products:
/// a^2(r1+r2+r3) + ab(r1r2 + r1r3 + r2r3) + b^2 r1r2r3.
Integer ternary_index_polynomial(const Integer& r1, const Integer& r2, const Integer& r3,
                                 const Integer& a, const Integer& b);

/// For n = 3 s comes from the closed form; otherwise s = r0 - J with r0 read
/// off the exact product.
ProductIndex product_index(const PolyadicRing& ring, std::span<const RingElement> xs);

/// ell_nu left-nested m-ary additions over ell_nu(m-1)+1 operands.
/// Throws NonAdmissibleWordLength.
RingElement nu_iter(const PolyadicRing& ring, std::uint64_t compositions,
                    std::span<const RingElement> xs);

/// ell_mu left-nested n-ary multiplications over ell_mu(n-1)+1 operands.
RingElement mu_iter(const PolyadicRing& ring, std::uint64_t compositions,
                    std::span<const RingElement> xs);

/// nu_iter with the composition count derived from the operand count.
RingElement nu_word(const PolyadicRing& ring, std::span<const RingElement> xs);
RingElement mu_word(const PolyadicRing& ring, std::span<const RingElement> xs);

/// x^<ell> = mu_n^{ell}[x, ..., x] over ell(n-1)+1 copies.
RingElement polyadic_power(const PolyadicRing& ring, const RingElement& x, std::uint64_t ell);

/// Additive querelement: the unique xbar with nu_m[xbar, x, ..., x] = x,
/// i.e. xbar = (2 - m) x.
RingElement add_querelement(const PolyadicRing& ring, const RingElement& x);

inline constexpr std::uint64_t kDefaultSpecialWindow = 1000;

struct SpecialElements {
  std::uint64_t k_window = kDefaultSpecialWindow;
  /// Multiplicative zero, present iff a = 0.
  std::optional<RingElement> zero;
  /// Identities e with mu_n[x, e, ..., e] = x.
  std::vector<RingElement> identities;
  /// x^<1> = x within the window.
  std::vector<RingElement> mu_idempotents;
  /// nu_m[x, ..., x] = x within the window.
  std::vector<RingElement> nu_idempotents;
  /// nullopt when the ring has no zero (the definition does not apply).
  std::optional<std::vector<RingElement>> nilpotents;
  /// Neutral (n-1)-polyads, as sorted multisets.
  std::vector<std::vector<RingElement>> neutral_polyads;
};

SpecialElements find_special_elements(const PolyadicRing& ring,
                                      std::uint64_t k_window = kDefaultSpecialWindow);

struct LawCheck {
  std::string law;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::optional<std::string> counterexample;

  bool passed() const noexcept { return failures == 0; }
};

struct LawReport {
  std::string prng = "xorshift64*";
  std::uint64_t seed = 0;
  std::uint64_t sample_count = 0;
  std::uint64_t k_range = 0;
  std::vector<LawCheck> checks;

  bool all_passed() const noexcept;
  const LawCheck* find(std::string_view law) const noexcept;
};

/// Randomized check of commutativity, total associativity, distributivity,
/// the index formulas and the querelement law on indices drawn uniformly from
/// [-k_range, k_range]. Deterministic in (seed, sample_count, k_range).
LawReport verify_ring_laws(const PolyadicRing& ring, std::uint64_t sample_count,
                           std::uint64_t k_range, std::uint64_t seed);

}  // namespace polyarith
