#include "aprings/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "aprings/error.hpp"

namespace aprings {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::linear_factor(const Integer& root) {
  return IntPolynomial(std::vector<Integer>{-root, Integer(1)});
}

IntPolynomial IntPolynomial::from_integer_roots(std::span<const Integer> roots) {
  std::vector<Integer> coeffs{1};
  coeffs.reserve(roots.size() + 1);
  for (const Integer& r : roots) {
    coeffs.emplace_back(0);
    for (std::size_t i = coeffs.size() - 1; i > 0; --i) {
      coeffs[i] = coeffs[i - 1] - r * coeffs[i];
    }
    coeffs[0] = -r * coeffs[0];
  }
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

Integer IntPolynomial::leading() const { return coeffs_.empty() ? Integer(0) : coeffs_.back(); }

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) { return *this = *this * other; }

IntPolynomial operator-(IntPolynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod_monic(const IntPolynomial& num,
                                                                    const IntPolynomial& den) {
  if (den.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  const Integer lead = den.leading();
  if (lead != 1 && lead != -1) throw Error(ErrorKind::InvalidArgument, "divisor leading coefficient is not a unit");
  if (num.degree() < den.degree()) return {IntPolynomial{}, num};
  std::vector<Integer> rem = num.coeffs_;
  const std::size_t dd = den.coeffs_.size() - 1;
  std::vector<Integer> quot(rem.size() - dd);
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    Integer q = rem[k] * lead;  // lead is its own inverse
    quot[k - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * den.coeffs_[j];
  }
  rem.resize(dd);
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

std::optional<IntPolynomial> IntPolynomial::exact_quotient(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  if (num.is_zero()) return IntPolynomial{};
  if (num.degree() < den.degree()) return std::nullopt;
  std::vector<Integer> rem = num.coeffs_;
  const std::size_t dd = den.coeffs_.size() - 1;
  const Integer& lead = den.coeffs_.back();
  std::vector<Integer> quot(rem.size() - dd);
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    if (rem[k] % lead != 0) return std::nullopt;
    Integer q = rem[k] / lead;
    quot[k - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * den.coeffs_[j];
  }
  for (std::size_t j = 0; j < dd; ++j) {
    if (rem[j] != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(char variable) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << "*";
    out << variable;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

IntPolynomial power(const IntPolynomial& base, unsigned exponent) {
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

namespace {

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  Integer content = 0;
  for (const auto& c : p.coefficients()) content = boost::multiprecision::gcd(content, c);
  std::vector<Integer> coeffs = p.coefficients();
  if (p.leading() < 0) content = -content;
  for (auto& c : coeffs) c /= content;
  return IntPolynomial(std::move(coeffs));
}

// a * lc(b)^(deg a - deg b + 1) mod b
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const Integer& lb = bc.back();
  while (rem.size() > db && !rem.empty()) {
    if (rem.back() == 0) {
      rem.pop_back();
      continue;
    }
    const Integer lr = rem.back();
    const std::size_t shift = rem.size() - 1 - db;
    for (auto& c : rem) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) rem[shift + j] -= lr * bc[j];
    rem.pop_back();
  }
  return IntPolynomial(std::move(rem));
}

}  // namespace

IntPolynomial primitive_gcd(IntPolynomial a, IntPolynomial b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_squarefree(const IntPolynomial& p) {
  if (p.degree() <= 0) return true;
  return primitive_gcd(p, p.derivative()).degree() == 0;
}

}  // namespace aprings
