#pragma once

#include <cstdint>

namespace imark::digits {

// Base-b view of n: n = stripped * base^trailing_zeros with base not dividing
// stripped. n = 0 maps to (0, 0). one_digits is only filled for base 2.
struct DigitProfile {
  std::uint64_t n = 0;
  std::uint64_t base = 2;
  unsigned trailing_zeros = 0;
  std::uint64_t stripped = 0;
  unsigned one_digits = 0;
};

DigitProfile profile(std::uint64_t n, std::uint64_t base);

// Equality of the values left after deleting trailing base-b zeros.
bool stripped_equal(std::uint64_t n, std::uint64_t m, std::uint64_t base);

unsigned trailing_zeros(std::uint64_t n, std::uint64_t base);
std::uint64_t stripped(std::uint64_t n, std::uint64_t base);

inline bool vile(std::uint64_t n) { return trailing_zeros(n, 2) % 2 == 0; }

}  // namespace imark::digits
