#pragma once

// Brute-force reference computations used only by tests. Nothing here calls
// into the library's arithmetic; values are built from plain loops.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

struct Shape {
  std::int64_t m;
  std::int64_t n;
  friend bool operator==(const Shape&, const Shape&) = default;
};

/// Smallest m in [2, m_limit] with (m-1)a = 0 (mod b) and smallest n in
/// [2, b+1] with a^n = a (mod b), by exhaustive scan.
inline std::optional<Shape> arity_shape(std::int64_t a, std::int64_t b, std::int64_t m_limit = 10'000) {
  std::optional<std::int64_t> m;
  for (std::int64_t cand = 2; cand <= m_limit && !m; ++cand) {
    if (((cand - 1) * a) % b == 0) m = cand;
  }
  std::optional<std::int64_t> n;
  for (std::int64_t cand = 2; cand <= b + 1 && !n; ++cand) {
    std::int64_t power = 1;
    for (std::int64_t i = 0; i < cand; ++i) power = (power * a) % b;
    if (power == a % b) n = cand;
  }
  if (!m || !n) return std::nullopt;
  return Shape{*m, *n};
}

inline mpz_class power(const mpz_class& x, std::uint64_t e) {
  mpz_class r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r *= x;
  return r;
}

/// sum_i y(i) p^{i(n-1)}, digits as values, most significant first.
inline mpz_class place_value(const std::vector<mpz_class>& digit_values, const mpz_class& p, std::uint64_t n) {
  mpz_class total = 0;
  const std::size_t len = digit_values.size();
  for (std::size_t pos = 0; pos < len; ++pos) {
    total += digit_values[pos] * power(p, (len - 1 - pos) * (n - 1));
  }
  return total;
}

/// Every digit-index string of the admissible lengths m, 2m-1, ... up to
/// max_digits, keyed by value. Shortest string wins on collisions.
inline std::map<mpz_class, std::vector<std::int64_t>> all_numerals(std::int64_t a, std::int64_t b, std::int64_t m,
                                                                   std::int64_t n, std::int64_t k_p,
                                                                   std::int64_t max_digits) {
  std::map<mpz_class, std::vector<std::int64_t>> out;
  const mpz_class p = a + b * k_p;
  for (std::int64_t len = m; len <= max_digits; len += m - 1) {
    std::vector<std::int64_t> idx(len, 0);
    while (true) {
      std::vector<mpz_class> values;
      for (auto k : idx) values.push_back(mpz_class(a + b * k));
      out.emplace(place_value(values, p, n), idx);
      std::int64_t pos = len - 1;
      while (pos >= 0 && ++idx[pos] == k_p) idx[pos--] = 0;
      if (pos < 0) break;
    }
    if (m == 1) break;
  }
  return out;
}

}  // namespace oracle
