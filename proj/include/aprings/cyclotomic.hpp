#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aprings/integer.hpp"
#include "aprings/polynomial.hpp"

namespace aprings {

unsigned euler_phi(unsigned m);

// Phi_m, computed by dividing X^m - 1 by the Phi_d of the proper divisors.
// Results are memoized process-wide.
IntPolynomial cyclotomic_polynomial(unsigned m);

unsigned lcm_order(unsigned a, unsigned b);

// Element of Z[zeta_m] in the power basis 1, zeta, ..., zeta^(d-1) with
// d = deg Phi_m. Coordinates are always fully reduced, so two values of the
// same order are equal iff their coordinate vectors are. Binary operations
// on mixed orders lift both sides to the lcm of the orders.
class CyclotomicInteger {
 public:
  CyclotomicInteger();  // 0 in Z[zeta_1] = Z
  CyclotomicInteger(unsigned order, std::vector<Integer> coords);

  static CyclotomicInteger from_integer(const Integer& value, unsigned order = 1);
  // zeta_m^j; j may be negative.
  static CyclotomicInteger root_of_unity(unsigned m, long long j);
  // Value of p(zeta_m), reduced.
  static CyclotomicInteger from_zeta_polynomial(unsigned order, std::vector<Integer> coeffs);

  unsigned order() const { return order_; }
  const std::vector<Integer>& coords() const { return coords_; }
  bool is_zero() const;

  CyclotomicInteger lifted(unsigned target_order) const;
  std::optional<Integer> as_rational_integer() const;

  CyclotomicInteger& operator+=(const CyclotomicInteger& other);
  CyclotomicInteger& operator-=(const CyclotomicInteger& other);
  CyclotomicInteger& operator*=(const CyclotomicInteger& other);

  friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) { return a += b; }
  friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) { return a -= b; }
  friend CyclotomicInteger operator*(CyclotomicInteger a, const CyclotomicInteger& b) { return a *= b; }
  friend CyclotomicInteger operator-(CyclotomicInteger a);

  friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b);
  // Lexicographic on coordinates at the common order.
  friend std::strong_ordering operator<=>(const CyclotomicInteger& a, const CyclotomicInteger& b);

  // "1 - 2*z8 + z8^3"; plain decimal for rational integers.
  std::string to_string() const;

 private:
  unsigned order_;
  std::vector<Integer> coords_;
};

CyclotomicInteger pow(const CyclotomicInteger& base, unsigned exponent);

// p(x) with exact cyclotomic arithmetic.
CyclotomicInteger evaluate(const IntPolynomial& p, const CyclotomicInteger& x);

// Expands prod (X - r) over the roots and descends every coefficient to Z.
// Roots are lifted to a common order first. Throws NonIntegerCoefficient
// when a coefficient is not rational (root set not Galois stable).
IntPolynomial poly_from_roots(std::span<const CyclotomicInteger> roots);

}  // namespace aprings
