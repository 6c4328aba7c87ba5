#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aprings/integer.hpp"

namespace aprings {

// Dense polynomial over the integers, coefficients in ascending degree.
// The zero polynomial has no coefficients; otherwise the leading
// coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, std::size_t degree);
  // X - root
  static IntPolynomial linear_factor(const Integer& root);
  // Product of (X - r) over the given integer roots.
  static IntPolynomial from_integer_roots(std::span<const Integer> roots);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(std::size_t i) const;
  Integer leading() const;

  Integer evaluate(const Integer& x) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(IntPolynomial a);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // Polynomial long division. The divisor's leading coefficient must be
  // a unit (+-1); returns (quotient, remainder).
  static std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& num,
                                                              const IntPolynomial& den);
  // Quotient when `den` divides `num` exactly over Z, nullopt otherwise.
  static std::optional<IntPolynomial> exact_quotient(const IntPolynomial& num,
                                                     const IntPolynomial& den);

  IntPolynomial derivative() const;

  // "X^3 - 4*X"
  std::string to_string(char variable = 'X') const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

IntPolynomial power(const IntPolynomial& base, unsigned exponent);

// gcd over Q made primitive with positive leading coefficient; used for
// squarefree checks.
IntPolynomial primitive_gcd(IntPolynomial a, IntPolynomial b);

bool is_squarefree(const IntPolynomial& p);

}  // namespace aprings
