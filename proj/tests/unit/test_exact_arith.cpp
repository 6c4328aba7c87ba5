#include <doctest.h>

#include "aprings/cyclotomic.hpp"
#include "aprings/integer.hpp"
#include "aprings/polynomial.hpp"
#include "helpers.hpp"

using namespace aprings;

TEST_CASE("integers parse, print and reduce") {
  const auto big = parse_integer("-123456789012345678901234567890");
  CHECK(to_decimal(big) == "-123456789012345678901234567890");
  CHECK(to_decimal(big * big) == "15241578753238836750495351562536198787501905199875019052100");
  CHECK(mod_floor(-7, 3) == 2);
  CHECK(mod_floor(7, 3) == 1);
  CHECK(mod_floor(-9, 3) == 0);
  CHECK(testing::error_kind([] { parse_integer("12a"); }) == ErrorKind::Parse);
  CHECK(testing::error_kind([] { parse_integer(""); }) == ErrorKind::Parse);
  CHECK(hash_integer(parse_integer("42")) == hash_integer(Integer(42)));
}

TEST_CASE("polynomial arithmetic") {
  const IntPolynomial x{0, 1};
  const IntPolynomial x3m1{-1, 0, 0, 1};
  const auto [q, r] = IntPolynomial::divmod_monic(x3m1, IntPolynomial{-1, 1});
  CHECK(q == IntPolynomial{1, 1, 1});
  CHECK(r.is_zero());
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(IntPolynomial{0, 0, 0}.is_zero());
  CHECK((x * x - IntPolynomial{4} * x).to_string() == "X^2 - 4*X");
  CHECK(IntPolynomial{0, -4, 0, 1}.to_string() == "X^3 - 4*X");
  CHECK(IntPolynomial{-1, 0, 0, 0, 1}.to_string('x') == "x^4 - 1");
  CHECK(IntPolynomial{3, 2, 1}.derivative() == IntPolynomial{2, 2});
  CHECK(IntPolynomial{3, 2, 1}.evaluate(-2) == 3);
  CHECK(power(IntPolynomial{1, 1}, 3) == IntPolynomial{1, 3, 3, 1});
  CHECK(IntPolynomial::from_integer_roots(std::vector<Integer>{1, -1}) == IntPolynomial{-1, 0, 1});

  CHECK(IntPolynomial::exact_quotient(IntPolynomial{-1, 0, 1}, IntPolynomial{-2, 2}) == std::nullopt);
  CHECK(IntPolynomial::exact_quotient(IntPolynomial{-2, 0, 2}, IntPolynomial{-1, 1}) == IntPolynomial{2, 2});
  CHECK(IntPolynomial::exact_quotient(IntPolynomial{1, 0, 1}, IntPolynomial{-1, 1}) == std::nullopt);

  CHECK(primitive_gcd(IntPolynomial{-1, 0, 1}, IntPolynomial{1, 2, 1}) == IntPolynomial{1, 1});
  CHECK(is_squarefree(IntPolynomial{-1, 0, 1}));
  CHECK_FALSE(is_squarefree(IntPolynomial{1, -2, 1}));
}

TEST_CASE("polynomial ring laws on random inputs") {
  auto rng = testing::seeded(1);
  std::uniform_int_distribution<int> coef(-9, 9), deg(0, 5);
  auto random_poly = [&] {
    std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = coef(rng);
    return IntPolynomial(c);
  };
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == IntPolynomial{});
    std::vector<Integer> monic_coeffs = b.coefficients();
    monic_coeffs.push_back(1);
    const IntPolynomial m(monic_coeffs);
    const auto [q, r] = IntPolynomial::divmod_monic(a, m);
    CHECK(q * m + r == a);
    CHECK(r.degree() < m.degree());
    if (!b.is_zero()) CHECK(IntPolynomial::exact_quotient(a * b, b) == a);
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(9) == 6);
  CHECK(euler_phi(12) == 4);
  CHECK(cyclotomic_polynomial(1) == IntPolynomial{-1, 1});
  CHECK(cyclotomic_polynomial(2) == IntPolynomial{1, 1});
  CHECK(cyclotomic_polynomial(8) == IntPolynomial{1, 0, 0, 0, 1});
  CHECK(cyclotomic_polynomial(9) == IntPolynomial{1, 0, 0, 1, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == IntPolynomial{1, 0, -1, 0, 1});
  // x^n - 1 = prod over d | n of Phi_d
  for (unsigned n = 1; n <= 30; ++n) {
    IntPolynomial prod = IntPolynomial::constant(1);
    for (unsigned d = 1; d <= n; ++d) {
      if (n % d == 0) prod = prod * cyclotomic_polynomial(d);
    }
    CHECK(prod == IntPolynomial::monomial(1, n) - IntPolynomial::constant(1));
  }
  CHECK(lcm_order(4, 6) == 12);
}

TEST_CASE("cyclotomic integers") {
  const auto i = CyclotomicInteger::root_of_unity(4, 1);
  CHECK(i * i == CyclotomicInteger::from_integer(-1));
  CHECK((i * i).as_rational_integer() == Integer(-1));
  CHECK_FALSE(i.as_rational_integer().has_value());
  CHECK(pow(CyclotomicInteger::root_of_unity(8, 1), 2) == i);
  CHECK(CyclotomicInteger::root_of_unity(8, 2) == i);
  CHECK(CyclotomicInteger::root_of_unity(4, -1) == -i);
  CHECK(i.lifted(8) == i);
  const auto w = CyclotomicInteger::root_of_unity(3, 1);
  CHECK((CyclotomicInteger::from_integer(1) + w + w * w).is_zero());
  CHECK((CyclotomicInteger::from_integer(3) - w).to_string() != "");
  CHECK(CyclotomicInteger::from_integer(-5).to_string() == "-5");
  CHECK(evaluate(IntPolynomial{1, 0, 1}, i).is_zero());
  const std::vector<CyclotomicInteger> roots{i, -i};
  CHECK(poly_from_roots(roots) == IntPolynomial{1, 0, 1});
}

TEST_CASE("products of all m-th roots of unity give X^m - 1") {
  for (unsigned m = 1; m <= 24; ++m) {
    std::vector<CyclotomicInteger> roots;
    for (unsigned j = 0; j < m; ++j) roots.push_back(CyclotomicInteger::root_of_unity(m, j));
    CHECK(poly_from_roots(roots) == IntPolynomial::monomial(1, m) - IntPolynomial::constant(1));
  }
}
