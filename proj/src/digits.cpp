#include "imark/digits.hpp"

#include <bit>
#include <string>

#include "imark/errors.hpp"

namespace imark::digits {

namespace {

void check_base(std::uint64_t base) {
  if (base < 2)
    throw Error(ErrorCode::BadBase, "digit base must be >= 2, got " + std::to_string(base));
}

}  // namespace

unsigned trailing_zeros(std::uint64_t n, std::uint64_t base) {
  check_base(base);
  if (n == 0) return 0;
  if (base == 2) return static_cast<unsigned>(std::countr_zero(n));
  unsigned z = 0;
  while (n % base == 0) {
    n /= base;
    ++z;
  }
  return z;
}

std::uint64_t stripped(std::uint64_t n, std::uint64_t base) {
  check_base(base);
  if (n == 0) return 0;
  if (base == 2) return n >> std::countr_zero(n);
  while (n % base == 0) n /= base;
  return n;
}

DigitProfile profile(std::uint64_t n, std::uint64_t base) {
  check_base(base);
  DigitProfile p;
  p.n = n;
  p.base = base;
  if (n == 0) return p;
  p.trailing_zeros = trailing_zeros(n, base);
  p.stripped = stripped(n, base);
  if (base == 2) p.one_digits = static_cast<unsigned>(std::popcount(n));
  return p;
}

bool stripped_equal(std::uint64_t n, std::uint64_t m, std::uint64_t base) {
  return stripped(n, base) == stripped(m, base);
}

}  // namespace imark::digits
