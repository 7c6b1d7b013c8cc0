#include "polyarith/ring_ops.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "polyarith/error.hpp"
#include "polyarith/prng.hpp"

namespace polyarith {

PolyadicRing::PolyadicRing(CongruenceClass cls, ArityShape shape)
    : class_(std::move(cls)), shape_(std::move(shape)) {}

PolyadicRing PolyadicRing::minimal(const CongruenceClass& cls) {
  return PolyadicRing(cls, minimal_arity_shape(cls));
}

PolyadicRing PolyadicRing::with_arities(const CongruenceClass& cls, std::uint64_t m, std::uint64_t n) {
  if (m < 2 || n < 2) {
    throw Error(ErrorKind::InadmissibleArity, "arities must be >= 2");
  }
  auto I = additive_invariant(cls, m);
  auto J = multiplicative_invariant(cls, n);
  if (!I || !J) {
    throw Error(ErrorKind::InadmissibleArity,
                "(m,n) = (" + std::to_string(m) + "," + std::to_string(n) +
                    ") violates the quantization conditions for " + to_string(cls));
  }
  return PolyadicRing(cls, ArityShape{m, n, *I, *J});
}

void PolyadicRing::require_member(const RingElement& x) const {
  if (!(x.congruence_class() == class_)) {
    throw Error(ErrorKind::ClassMismatch, "element of " + to_string(x.congruence_class()) +
                                              " used in ring over " + to_string(class_));
  }
}

std::string to_string(const PolyadicRing& ring) {
  return "Z_{" + std::to_string(ring.m()) + "," + std::to_string(ring.n()) + "}^[" +
         to_decimal(ring.congruence_class().a) + "," + to_decimal(ring.congruence_class().b) + "]";
}

std::uint64_t admissible_width(std::uint64_t arity, std::uint64_t compositions) {
  return compositions * (arity - 1) + 1;
}

std::optional<WordLength> word_length_for(std::uint64_t arity, std::uint64_t width) {
  if (arity < 2 || width < arity || (width - 1) % (arity - 1) != 0) return std::nullopt;
  return WordLength{(width - 1) / (arity - 1), arity, width};
}

namespace {

void require_arity(std::span<const RingElement> xs, std::uint64_t arity, const char* op) {
  if (xs.size() != arity) {
    throw Error(ErrorKind::ArityMismatch, std::string(op) + " takes " + std::to_string(arity) +
                                              " operands, got " + std::to_string(xs.size()));
  }
}

void require_members(const PolyadicRing& ring, std::span<const RingElement> xs) {
  for (const auto& x : xs) ring.require_member(x);
}

[[noreturn]] void non_admissible(std::uint64_t arity, std::uint64_t width) {
  std::ostringstream msg;
  msg << "width " << width << " is not admissible for arity " << arity
      << "; nearest admissible widths: ";
  if (width < arity) {
    msg << arity;
  } else {
    const std::uint64_t lower = width - (width - 1) % (arity - 1);
    msg << lower << ", " << lower + (arity - 1);
  }
  throw Error(ErrorKind::NonAdmissibleWordLength, msg.str());
}

std::uint64_t checked_compositions(std::uint64_t arity, std::size_t width) {
  auto wl = word_length_for(arity, width);
  if (!wl) non_admissible(arity, width);
  return wl->compositions;
}

}  // namespace

RingElement nu(const PolyadicRing& ring, std::span<const RingElement> xs) {
  require_arity(xs, ring.m(), "nu");
  require_members(ring, xs);
  Integer sum = 0;
  Integer index_sum = 0;
  for (const auto& x : xs) {
    sum += x.value();
    index_sum += x.k();
  }
  RingElement result = ring.from_value(sum);
  if (result.k() != index_sum + ring.shape().I) {
    throw std::logic_error("nu: index formula k0 = sum k_i + I disagrees with direct sum");
  }
  return result;
}

Integer ternary_index_polynomial(const Integer& r1, const Integer& r2, const Integer& r3,
                                 const Integer& a, const Integer& b) {
  return a * a * (r1 + r2 + r3) + a * b * (r1 * r2 + r1 * r3 + r2 * r3) + b * b * r1 * r2 * r3;
}

ProductIndex product_index(const PolyadicRing& ring, std::span<const RingElement> xs) {
  require_arity(xs, ring.n(), "mu");
  require_members(ring, xs);
  const auto& cls = ring.congruence_class();
  const Integer& J = ring.shape().J;
  if (ring.n() == 3) {
    Integer s = ternary_index_polynomial(xs[0].k(), xs[1].k(), xs[2].k(), cls.a, cls.b);
    Integer r0 = s + J;
    return ProductIndex{std::move(s), J, std::move(r0)};
  }
  Integer product = 1;
  for (const auto& x : xs) product *= x.value();
  Integer r0 = element_from_value(cls, product).k();
  return ProductIndex{r0 - J, J, r0};
}

RingElement mu(const PolyadicRing& ring, std::span<const RingElement> xs) {
  require_arity(xs, ring.n(), "mu");
  require_members(ring, xs);
  Integer product = 1;
  for (const auto& x : xs) product *= x.value();
  RingElement result = ring.from_value(product);
  if (ring.n() == 3 && result.k() != product_index(ring, xs).r0) {
    throw std::logic_error("mu: index formula r0 = s + J disagrees with direct product");
  }
  return result;
}

namespace {

template <typename Op>
RingElement compose(const PolyadicRing& ring, std::uint64_t arity, std::uint64_t compositions,
                    std::span<const RingElement> xs, Op op) {
  if (!word_length_for(arity, xs.size())) non_admissible(arity, xs.size());
  if (compositions < 1 || xs.size() != admissible_width(arity, compositions)) {
    throw Error(ErrorKind::NonAdmissibleWordLength,
                std::to_string(compositions) + " compositions of arity " + std::to_string(arity) +
                    " take " + std::to_string(admissible_width(arity, compositions)) +
                    " operands, got " + std::to_string(xs.size()));
  }
  RingElement acc = op(ring, xs.first(arity));
  std::vector<RingElement> word;
  word.reserve(arity);
  for (std::size_t pos = arity; pos < xs.size(); pos += arity - 1) {
    word.clear();
    word.push_back(acc);
    word.insert(word.end(), xs.begin() + pos, xs.begin() + pos + (arity - 1));
    acc = op(ring, word);
  }
  return acc;
}

}  // namespace

RingElement nu_iter(const PolyadicRing& ring, std::uint64_t compositions,
                    std::span<const RingElement> xs) {
  return compose(ring, ring.m(), compositions, xs,
                 [](const PolyadicRing& r, std::span<const RingElement> w) { return nu(r, w); });
}

RingElement mu_iter(const PolyadicRing& ring, std::uint64_t compositions,
                    std::span<const RingElement> xs) {
  return compose(ring, ring.n(), compositions, xs,
                 [](const PolyadicRing& r, std::span<const RingElement> w) { return mu(r, w); });
}

RingElement nu_word(const PolyadicRing& ring, std::span<const RingElement> xs) {
  return nu_iter(ring, checked_compositions(ring.m(), xs.size()), xs);
}

RingElement mu_word(const PolyadicRing& ring, std::span<const RingElement> xs) {
  return mu_iter(ring, checked_compositions(ring.n(), xs.size()), xs);
}

RingElement polyadic_power(const PolyadicRing& ring, const RingElement& x, std::uint64_t ell) {
  ring.require_member(x);
  if (ell < 1) throw Error(ErrorKind::InvalidArgument, "polyadic power needs ell >= 1");
  return ring.from_value(ipow(x.value(), admissible_width(ring.n(), ell)));
}

RingElement add_querelement(const PolyadicRing& ring, const RingElement& x) {
  ring.require_member(x);
  const Integer factor = 2 - Integer(static_cast<unsigned long>(ring.m()));
  RingElement quer = ring.from_value(factor * x.value());
  std::vector<RingElement> word(ring.m(), x);
  word.front() = quer;
  if (!(nu(ring, word) == x)) throw std::logic_error("querelement law failed");
  return quer;
}

namespace {

constexpr std::uint64_t kSpecialSeed = 0x5EC1A1;
constexpr std::size_t kSpecialSamples = 100;

std::vector<RingElement> sample_window(const PolyadicRing& ring, std::uint64_t k_window,
                                       std::size_t count, Xorshift64Star& rng) {
  std::vector<RingElement> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(ring.element(rng.symmetric(k_window)));
  return out;
}

// Window elements with value in {-1, 0, 1}. Any x with |x| >= 2 has
// |x^n| > |x| and |m x| > |x|, and cannot divide 1, so no other element can be
// an idempotent, zero, nilpotent or part of a neutral polyad.
std::vector<RingElement> small_elements(const PolyadicRing& ring, std::uint64_t k_window) {
  const Integer window(static_cast<unsigned long>(k_window));
  std::vector<RingElement> out;
  for (int v = -1; v <= 1; ++v) {
    const Integer value(v);
    if (!contains(ring.congruence_class(), value)) continue;
    RingElement x = ring.from_value(value);
    if (abs(x.k()) <= window) out.push_back(std::move(x));
  }
  return out;
}

bool acts_as_neutral(const PolyadicRing& ring, const std::vector<RingElement>& polyad,
                     const std::vector<RingElement>& samples) {
  std::vector<RingElement> word;
  for (const auto& x : samples) {
    word.assign(1, x);
    word.insert(word.end(), polyad.begin(), polyad.end());
    if (!(mu(ring, word) == x)) return false;
    // x in the last place as well.
    word.assign(polyad.begin(), polyad.end());
    word.push_back(x);
    if (!(mu(ring, word) == x)) return false;
  }
  return true;
}

}  // namespace

SpecialElements find_special_elements(const PolyadicRing& ring, std::uint64_t k_window) {
  SpecialElements report;
  report.k_window = k_window;
  const auto& cls = ring.congruence_class();
  const std::uint64_t n = ring.n();
  const std::uint64_t m = ring.m();

  Xorshift64Star rng(kSpecialSeed);
  const auto samples = sample_window(ring, k_window, kSpecialSamples, rng);
  const auto candidates = small_elements(ring, k_window);

  // Zero: analytically 0, present iff a = 0; confirmed on sampled polyads.
  if (cls.a == 0) {
    RingElement z = ring.from_value(0);
    bool ok = true;
    std::vector<RingElement> word;
    for (std::size_t i = 0; i < kSpecialSamples && ok; ++i) {
      word.assign(1, z);
      for (std::uint64_t j = 1; j < n; ++j) word.push_back(ring.element(rng.symmetric(k_window)));
      ok = mu(ring, word) == z;
      std::rotate(word.begin(), word.begin() + 1, word.end());
      ok = ok && mu(ring, word) == z;
    }
    if (ok) report.zero = z;
  }

  // Identities: +1 iff 1 = a (mod b); -1 iff -1 = a (mod b) and n odd.
  for (int e : {1, -1}) {
    if (!contains(cls, Integer(e))) continue;
    if (e == -1 && n % 2 == 0) continue;
    RingElement candidate = ring.from_value(e);
    if (acts_as_neutral(ring, std::vector<RingElement>(n - 1, candidate), samples)) {
      report.identities.push_back(candidate);
    }
  }

  for (const auto& x : candidates) {
    if (polyadic_power(ring, x, 1) == x) report.mu_idempotents.push_back(x);
    if (nu(ring, std::vector<RingElement>(m, x)) == x) report.nu_idempotents.push_back(x);
  }

  if (report.zero) {
    std::vector<RingElement> nil;
    for (const auto& x : candidates) {
      if (polyadic_power(ring, x, 1) == *report.zero) nil.push_back(x);
    }
    report.nilpotents = std::move(nil);
  }

  // Neutral polyads: factors must be units, so enumerate multisets of the
  // unit candidates of size n-1 (commutativity makes order irrelevant).
  std::vector<RingElement> units;
  for (const auto& x : candidates) {
    if (abs(x.value()) == 1) units.push_back(x);
  }
  // At most two units (+1, -1): polyads are (+1)^c (-1)^(n-1-c).
  if (!units.empty()) {
    const std::uint64_t max_first = units.size() == 1 ? n - 1 : 0;
    for (std::uint64_t c = max_first; c <= n - 1; ++c) {
      std::vector<RingElement> polyad(c, units.front());
      if (units.size() == 2) polyad.insert(polyad.end(), n - 1 - c, units.back());
      if (acts_as_neutral(ring, polyad, samples)) report.neutral_polyads.push_back(std::move(polyad));
    }
  }

  return report;
}

bool LawReport::all_passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.passed(); });
}

const LawCheck* LawReport::find(std::string_view law) const noexcept {
  for (const auto& c : checks) {
    if (c.law == law) return &c;
  }
  return nullptr;
}

namespace {

std::string describe(std::span<const RingElement> xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += to_decimal(xs[i].value());
  }
  return out + "]";
}

class LawRecorder {
 public:
  explicit LawRecorder(std::string law) { check_.law = std::move(law); }

  void record(bool ok, const std::function<std::string()>& witness) {
    ++check_.trials;
    if (ok) return;
    ++check_.failures;
    if (!check_.counterexample) check_.counterexample = witness();
  }

  template <typename F>
  void trial(F&& body, const std::function<std::string()>& witness) {
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception& e) {
      record(false, [&] { return witness() + " threw: " + e.what(); });
      return;
    }
    record(ok, witness);
  }

  LawCheck take() { return std::move(check_); }

 private:
  LawCheck check_;
};

// Every placement of an inner op inside an outer op over 2*arity-1 operands.
template <typename Op>
bool all_placements_agree(const PolyadicRing& ring, std::uint64_t arity,
                          const std::vector<RingElement>& xs, Op op) {
  std::optional<RingElement> reference;
  std::vector<RingElement> outer;
  for (std::uint64_t pos = 0; pos < arity; ++pos) {
    std::span<const RingElement> all(xs);
    RingElement inner = op(ring, all.subspan(pos, arity));
    outer.assign(xs.begin(), xs.begin() + pos);
    outer.push_back(inner);
    outer.insert(outer.end(), xs.begin() + pos + arity, xs.end());
    RingElement result = op(ring, outer);
    if (!reference) {
      reference = result;
    } else if (!(result == *reference)) {
      return false;
    }
  }
  return true;
}

}  // namespace

LawReport verify_ring_laws(const PolyadicRing& ring, std::uint64_t sample_count,
                           std::uint64_t k_range, std::uint64_t seed) {
  if (sample_count < 1) throw Error(ErrorKind::InvalidArgument, "sample_count must be >= 1");
  const std::uint64_t m = ring.m();
  const std::uint64_t n = ring.n();
  const auto& cls = ring.congruence_class();
  Xorshift64Star rng(seed);
  auto draw = [&](std::uint64_t count) {
    std::vector<RingElement> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(ring.element(rng.symmetric(k_range)));
    return out;
  };
  auto shuffled = [&](std::vector<RingElement> xs) {
    for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[rng.below(i)]);
    return xs;
  };
  const auto nu_op = [](const PolyadicRing& r, std::span<const RingElement> w) { return nu(r, w); };
  const auto mu_op = [](const PolyadicRing& r, std::span<const RingElement> w) { return mu(r, w); };

  LawRecorder closure("closure");
  LawRecorder nu_comm("nu_commutativity");
  LawRecorder mu_comm("mu_commutativity");
  LawRecorder nu_assoc("nu_total_associativity");
  LawRecorder mu_assoc("mu_total_associativity");
  LawRecorder distrib("total_distributivity");
  LawRecorder nu_index("nu_index_formula");
  LawRecorder mu_index("mu_index_formula");
  LawRecorder quer("add_querelement");

  for (std::uint64_t sample = 0; sample < sample_count; ++sample) {
    const auto xs = draw(m);
    const auto ys = draw(n);

    closure.trial(
        [&] {
          Integer sum = 0, product = 1;
          for (const auto& x : xs) sum += x.value();
          for (const auto& y : ys) product *= y.value();
          return contains(cls, sum) && contains(cls, product);
        },
        [&] { return "sum " + describe(xs) + " / product " + describe(ys); });

    const auto xs_perm = shuffled(xs);
    nu_comm.trial([&] { return nu(ring, xs) == nu(ring, xs_perm); },
                  [&] { return describe(xs) + " vs " + describe(xs_perm); });
    const auto ys_perm = shuffled(ys);
    mu_comm.trial([&] { return mu(ring, ys) == mu(ring, ys_perm); },
                  [&] { return describe(ys) + " vs " + describe(ys_perm); });

    const auto add_word = draw(2 * m - 1);
    nu_assoc.trial([&] { return all_placements_agree(ring, m, add_word, nu_op); },
                   [&] { return describe(add_word); });
    const auto mul_word = draw(2 * n - 1);
    mu_assoc.trial([&] { return all_placements_agree(ring, n, mul_word, mu_op); },
                   [&] { return describe(mul_word); });

    // mu_n[..., nu_m[x_1..x_m] at place i, ...] = nu_m[mu_n[..., x_j at place i, ...] over j].
    for (std::uint64_t place = 0; place < n; ++place) {
      distrib.trial(
          [&] {
            auto lhs_word = ys;
            lhs_word[place] = nu(ring, xs);
            std::vector<RingElement> terms;
            for (const auto& x : xs) {
              auto term_word = ys;
              term_word[place] = x;
              terms.push_back(mu(ring, term_word));
            }
            return mu(ring, lhs_word) == nu(ring, terms);
          },
          [&] { return "place " + std::to_string(place) + " x=" + describe(xs) + " y=" + describe(ys); });
    }

    nu_index.trial(
        [&] {
          Integer sum = 0, index_sum = 0;
          for (const auto& x : xs) {
            sum += x.value();
            index_sum += x.k();
          }
          return element_from_value(cls, sum).k() == index_sum + ring.shape().I;
        },
        [&] { return describe(xs); });
    mu_index.trial(
        [&] {
          Integer product = 1;
          for (const auto& y : ys) product *= y.value();
          return element_from_value(cls, product).k() == product_index(ring, ys).r0;
        },
        [&] { return describe(ys); });

    quer.trial(
        [&] {
          const auto& x = xs.front();
          std::vector<RingElement> word(m, x);
          word.front() = ring.from_value((2 - Integer(static_cast<unsigned long>(m))) * x.value());
          return nu(ring, word) == x;
        },
        [&] { return describe(std::span(xs).first(1)); });
  }

  LawReport report;
  report.seed = seed;
  report.sample_count = sample_count;
  report.k_range = k_range;
  for (auto* rec : {&closure, &nu_comm, &mu_comm, &nu_assoc, &mu_assoc, &distrib, &nu_index, &mu_index, &quer}) {
    report.checks.push_back(rec->take());
  }
  return report;
}

}  // namespace polyarith
