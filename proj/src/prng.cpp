#include "polyarith/prng.hpp"

#include <limits>

namespace polyarith {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

Xorshift64Star::Xorshift64Star(std::uint64_t seed) noexcept : state_(splitmix64(seed)) {
  if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t Xorshift64Star::next() noexcept {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

std::uint64_t Xorshift64Star::below(std::uint64_t bound) noexcept {
  // Reject the partial bucket at the top of the range.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

Integer Xorshift64Star::symmetric(std::uint64_t radius) {
  constexpr std::uint64_t kMaxRadius = (std::numeric_limits<std::uint64_t>::max() - 1) / 2;
  if (radius > kMaxRadius) radius = kMaxRadius;
  const std::uint64_t offset = below(2 * radius + 1);
  return Integer(static_cast<unsigned long>(offset)) - Integer(static_cast<unsigned long>(radius));
}

}  // namespace polyarith
