#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>

#include "mincode/errors.hpp"

namespace mincode {

/// Largest extension degree accepted; irreducibility is decided by trial division.
inline constexpr int kMaxFieldDegree = 12;

/// Element of GF(2^t): a polynomial over F_2 of degree < t, bit k is the x^k coefficient.
struct GF2tElement {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(GF2tElement, GF2tElement) = default;
};

/// Degree of a nonzero polynomial packed as an integer; -1 for the zero polynomial.
constexpr int poly_degree(std::uint32_t p) noexcept { return p == 0 ? -1 : std::bit_width(p) - 1; }

/// Carry-less product of two polynomials of degree < 16.
constexpr std::uint32_t clmul(std::uint32_t a, std::uint32_t b) noexcept {
  std::uint32_t r = 0;
  while (b != 0) {
    if (b & 1U) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

/// Remainder of a modulo m over F_2.
constexpr std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) noexcept {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
  return a;
}

/// Trial division by every polynomial of degree 1..deg/2.
constexpr bool is_irreducible(std::uint32_t p) noexcept {
  const int d = poly_degree(p);
  if (d < 1) return false;
  for (int k = 1; 2 * k <= d; ++k) {
    for (std::uint32_t q = 1U << k; q < (2U << k); ++q) {
      if (poly_mod(p, q) == 0) return false;
    }
  }
  return true;
}

/// a * b mod modulus; modulus must be irreducible of degree t and a, b < 2^t.
constexpr GF2tElement gf2t_mul(GF2tElement a, GF2tElement b, std::uint32_t modulus) noexcept {
  const int t = poly_degree(modulus);
  std::uint32_t x = a.value;
  std::uint32_t r = 0;
  for (std::uint32_t y = b.value; y != 0; y >>= 1) {
    if (y & 1U) r ^= x;
    x <<= 1;
    if ((x >> t) & 1U) x ^= modulus;
  }
  return {r};
}

/// Standard primitive polynomials used when no modulus is given.
constexpr std::uint32_t default_modulus(int t) {
  switch (t) {
    case 2: return 0x7;      // x^2+x+1
    case 3: return 0xB;      // x^3+x+1
    case 4: return 0x13;     // x^4+x+1
    case 5: return 0x25;     // x^5+x^2+1
    case 6: return 0x43;     // x^6+x+1
    case 7: return 0x83;     // x^7+x+1
    case 8: return 0x11D;    // x^8+x^4+x^3+x^2+1
    case 9: return 0x211;    // x^9+x^4+1
    case 10: return 0x409;   // x^10+x^3+1
    case 11: return 0x805;   // x^11+x^2+1
    case 12: return 0x1053;  // x^12+x^6+x^4+x+1
    default: throw PreconditionError("default_modulus: degree " + std::to_string(t) + " unsupported");
  }
}

class GF2tField {
 public:
  GF2tField(int degree, std::uint32_t modulus) : degree_(degree), modulus_(modulus) {
    if (degree < 1 || degree > kMaxFieldDegree) {
      throw PreconditionError("GF2tField: degree must lie in [1, " + std::to_string(kMaxFieldDegree) + "]");
    }
    if (poly_degree(modulus) != degree) throw PreconditionError("GF2tField: modulus degree differs from t");
    if (!is_irreducible(modulus)) throw PreconditionError("GF2tField: modulus is reducible");
  }

  explicit GF2tField(int degree) : GF2tField(degree, default_modulus(degree)) {}

  int degree() const noexcept { return degree_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t size() const noexcept { return 1U << degree_; }

  bool contains(GF2tElement a) const noexcept { return a.value < size(); }

  GF2tElement add(GF2tElement a, GF2tElement b) const noexcept { return {a.value ^ b.value}; }
  GF2tElement mul(GF2tElement a, GF2tElement b) const noexcept { return gf2t_mul(a, b, modulus_); }

  GF2tElement pow(GF2tElement a, std::uint64_t e) const noexcept {
    GF2tElement r{1};
    while (e != 0) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// a^(2^t - 2); the inverse for nonzero a.
  GF2tElement inv(GF2tElement a) const {
    if (a.value == 0) throw PreconditionError("GF2tField::inv: zero has no inverse");
    return pow(a, size() - 2);
  }

 private:
  int degree_;
  std::uint32_t modulus_;
};

}  // namespace mincode
