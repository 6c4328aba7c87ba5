#include "aprings/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "aprings/error.hpp"
#include "aprings/limits.hpp"

namespace aprings {
namespace {

std::mutex& phi_cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<unsigned, std::shared_ptr<const IntPolynomial>>& phi_cache() {
  static std::map<unsigned, std::shared_ptr<const IntPolynomial>> cache;
  return cache;
}

std::shared_ptr<const IntPolynomial> cached_phi(unsigned m) {
  {
    std::lock_guard lock(phi_cache_mutex());
    auto it = phi_cache().find(m);
    if (it != phi_cache().end()) return it->second;
  }
  IntPolynomial value = IntPolynomial::monomial(1, m) - IntPolynomial::constant(1);
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto q = IntPolynomial::exact_quotient(value, *cached_phi(d));
    value = std::move(*q);
  }
  auto shared = std::make_shared<const IntPolynomial>(std::move(value));
  std::lock_guard lock(phi_cache_mutex());
  return phi_cache().emplace(m, shared).first->second;
}

void check_order(unsigned m) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "cyclotomic order must be positive");
  if (euler_phi(m) > default_limits().max_cyclotomic_degree) {
    throw Error(ErrorKind::BoundExceeded, "deg Phi_" + std::to_string(m) + " exceeds the configured bound");
  }
}

// Reduces a coefficient vector (powers of zeta) modulo the monic Phi.
void reduce_in_place(std::vector<Integer>& v, const IntPolynomial& phi) {
  const auto& pc = phi.coefficients();
  const std::size_t d = pc.size() - 1;
  for (std::size_t k = v.size(); k-- > d;) {
    if (v[k] == 0) continue;
    const Integer c = v[k];
    for (std::size_t j = 0; j < d; ++j) {
      if (pc[j] != 0) v[k - d + j] -= c * pc[j];
    }
    v[k] = 0;
  }
  v.resize(d);
}

}  // namespace

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPolynomial cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "cyclotomic order must be positive");
  return *cached_phi(m);
}

unsigned lcm_order(unsigned a, unsigned b) { return std::lcm(a, b); }

CyclotomicInteger::CyclotomicInteger() : order_(1), coords_(1) {}

CyclotomicInteger::CyclotomicInteger(unsigned order, std::vector<Integer> coords)
    : order_(order), coords_(std::move(coords)) {
  check_order(order);
  if (coords_.size() != euler_phi(order)) {
    throw Error(ErrorKind::InvalidArgument, "coordinate count must equal deg Phi_" + std::to_string(order));
  }
}

CyclotomicInteger CyclotomicInteger::from_integer(const Integer& value, unsigned order) {
  check_order(order);
  std::vector<Integer> coords(euler_phi(order));
  coords[0] = value;
  return CyclotomicInteger(order, std::move(coords));
}

CyclotomicInteger CyclotomicInteger::from_zeta_polynomial(unsigned order, std::vector<Integer> coeffs) {
  check_order(order);
  auto phi = cached_phi(order);
  const std::size_t d = static_cast<std::size_t>(phi->degree());
  if (coeffs.size() < d) coeffs.resize(d);
  reduce_in_place(coeffs, *phi);
  return CyclotomicInteger(order, std::move(coeffs));
}

CyclotomicInteger CyclotomicInteger::root_of_unity(unsigned m, long long j) {
  check_order(m);
  long long e = j % static_cast<long long>(m);
  if (e < 0) e += m;
  std::vector<Integer> coeffs(static_cast<std::size_t>(e) + 1);
  coeffs[static_cast<std::size_t>(e)] = 1;
  return from_zeta_polynomial(m, std::move(coeffs));
}

bool CyclotomicInteger::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

CyclotomicInteger CyclotomicInteger::lifted(unsigned target_order) const {
  if (target_order == order_) return *this;
  if (target_order % order_ != 0) {
    throw Error(ErrorKind::InvalidArgument, "cannot lift order " + std::to_string(order_) + " to " +
                                                std::to_string(target_order));
  }
  const std::size_t step = target_order / order_;
  std::vector<Integer> coeffs((coords_.size() - 1) * step + 1);
  for (std::size_t i = 0; i < coords_.size(); ++i) coeffs[i * step] = coords_[i];
  return from_zeta_polynomial(target_order, std::move(coeffs));
}

std::optional<Integer> CyclotomicInteger::as_rational_integer() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return std::nullopt;
  }
  return coords_[0];
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& other) {
  if (order_ != other.order_) {
    const unsigned l = lcm_order(order_, other.order_);
    *this = lifted(l);
    return *this += other.lifted(l);
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator-=(const CyclotomicInteger& other) {
  if (order_ != other.order_) {
    const unsigned l = lcm_order(order_, other.order_);
    *this = lifted(l);
    return *this -= other.lifted(l);
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator*=(const CyclotomicInteger& other) {
  if (order_ != other.order_) {
    const unsigned l = lcm_order(order_, other.order_);
    *this = lifted(l);
    return *this *= other.lifted(l);
  }
  const std::size_t d = coords_.size();
  if (d == 1) {
    coords_[0] *= other.coords_[0];
    return *this;
  }
  std::vector<Integer> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (other.coords_[j] != 0) prod[i + j] += coords_[i] * other.coords_[j];
    }
  }
  reduce_in_place(prod, *cached_phi(order_));
  coords_ = std::move(prod);
  return *this;
}

CyclotomicInteger operator-(CyclotomicInteger a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  if (a.order_ == b.order_) return a.coords_ == b.coords_;
  const unsigned l = lcm_order(a.order_, b.order_);
  return a.lifted(l).coords_ == b.lifted(l).coords_;
}

std::strong_ordering operator<=>(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  if (a.order_ != b.order_) {
    const unsigned l = lcm_order(a.order_, b.order_);
    return a.lifted(l) <=> b.lifted(l);
  }
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (a.coords_[i] < b.coords_[i]) return std::strong_ordering::less;
    if (a.coords_[i] > b.coords_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string CyclotomicInteger::to_string() const {
  if (auto n = as_rational_integer()) return n->str();
  std::ostringstream out;
  bool first = true;
  const std::string zeta = "z" + std::to_string(order_);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Integer& c = coords_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << "*";
    out << zeta;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

CyclotomicInteger pow(const CyclotomicInteger& base, unsigned exponent) {
  CyclotomicInteger result = CyclotomicInteger::from_integer(1, base.order());
  CyclotomicInteger b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

CyclotomicInteger evaluate(const IntPolynomial& p, const CyclotomicInteger& x) {
  CyclotomicInteger acc = CyclotomicInteger::from_integer(0, x.order());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += CyclotomicInteger::from_integer(*it, x.order());
  }
  return acc;
}

IntPolynomial poly_from_roots(std::span<const CyclotomicInteger> roots) {
  unsigned order = 1;
  for (const auto& r : roots) order = lcm_order(order, r.order());

  if (order == 1) {
    std::vector<Integer> ints;
    ints.reserve(roots.size());
    for (const auto& r : roots) ints.push_back(r.coords()[0]);
    return IntPolynomial::from_integer_roots(ints);
  }

  std::vector<CyclotomicInteger> coeffs{CyclotomicInteger::from_integer(1, order)};
  coeffs.reserve(roots.size() + 1);
  for (const auto& root : roots) {
    const CyclotomicInteger r = root.lifted(order);
    coeffs.push_back(CyclotomicInteger::from_integer(0, order));
    for (std::size_t i = coeffs.size() - 1; i > 0; --i) {
      coeffs[i] = coeffs[i - 1] - r * coeffs[i];
    }
    coeffs[0] = -(r * coeffs[0]);
  }
  std::vector<Integer> out;
  out.reserve(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    auto value = coeffs[i].as_rational_integer();
    if (!value) {
      throw Error(ErrorKind::NonIntegerCoefficient,
                  "coefficient of X^" + std::to_string(i) + " is " + coeffs[i].to_string());
    }
    out.push_back(std::move(*value));
  }
  return IntPolynomial(std::move(out));
}

}  // namespace aprings
