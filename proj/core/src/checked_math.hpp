#pragma once

#include <cstdint>
#include <stdexcept>

namespace phorma {

// Path counts grow combinatorially; a wrapped count would silently break the
// bijection, so additions abort instead.
inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("path count exceeds 64 bits");
  }
  return out;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("product exceeds 64 bits");
  }
  return out;
}

}  // namespace phorma
