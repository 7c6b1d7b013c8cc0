#pragma once

#include <cstdint>

#include "polyarith/integer.hpp"

namespace polyarith {

/// xorshift64* generator (Vigna 2014). The seed is first passed through one
/// splitmix64 step so that seed 0 yields a valid non-zero state.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed) noexcept;

  std::uint64_t next() noexcept;

  /// Uniform in [0, bound), rejection sampled. bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;

  /// Uniform integer in [-radius, radius].
  Integer symmetric(std::uint64_t radius);

 private:
  std::uint64_t state_;
};

}  // namespace polyarith
