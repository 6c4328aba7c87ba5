#include <doctest.h>

#include <set>

#include "aprings/annihilator.hpp"
#include "helpers.hpp"

using namespace aprings;

namespace {

IntPolynomial x() { return IntPolynomial{0, 1}; }

IntPolynomial quartic_factor(long long c0, long long c2) { return IntPolynomial{c0, 0, c2, 0, 1}; }

}  // namespace

TEST_CASE("root sets") {
  const auto q = RootSpec::integers({-1, 1});
  CHECK(q.polynomial() == IntPolynomial{-1, 0, 1});
  CHECK(RootSpec::roots_of_unity(4).polynomial() == IntPolynomial{-1, 0, 0, 0, 1});
  CHECK(RootSpec::integers({-1, 0, 1}).polynomial() == IntPolynomial{0, -1, 0, 1});
  const auto joined = RootSpec::join(RootSpec::roots_of_unity(2), RootSpec::integers({0, 1}));
  CHECK(joined.roots().size() == 3);
  CHECK(joined.polynomial() == IntPolynomial{0, -1, 0, 1});
  CHECK(RootSpec::join(RootSpec::roots_of_unity(4), RootSpec::roots_of_unity(6)).common_order() == 12);
  CHECK(testing::error_kind([] { RootSpec::integers({1, 1}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("sum sets") {
  const auto t = root_sum_set(RootSpec::integers({-1, 1}), 3, SignMode::Signed);
  std::vector<std::string> values;
  for (const auto& v : t.elements) values.push_back(v.to_string());
  CHECK(values == std::vector<std::string>{"-3", "-1", "1", "3"});
  CHECK(root_sum_set(RootSpec::roots_of_unity(4), 2, SignMode::Signed).elements.size() == 9);
  CHECK(root_sum_set(RootSpec::integers({0, 2}), 2, SignMode::Unsigned).elements.size() == 3);
  CHECK(root_sum_set(RootSpec::integers({0, 2}), 2, SignMode::Signed).elements.size() == 5);

  const std::vector<RootSpec> specs{RootSpec::integers({-1, 1}), RootSpec::integers({0, 2})};
  CHECK(mixed_annihilating_polynomial(specs, SignMode::Unsigned) == IntPolynomial{3, -1, -3, 1});

  Limits tight = default_limits();
  tight.max_summands = 2;
  CHECK(testing::error_kind([&] { root_sum_set(RootSpec::integers({-1, 1}), 3, SignMode::Signed, tight); }) ==
        ErrorKind::BoundExceeded);
  tight = default_limits();
  tight.max_sumset_size = 5;
  CHECK(testing::error_kind([&] { root_sum_set(RootSpec::roots_of_unity(4), 2, SignMode::Signed, tight); }) ==
        ErrorKind::BoundExceeded);
}

TEST_CASE("Lewis polynomials") {
  CHECK(lewis_polynomial(1) == IntPolynomial{-1, 0, 1});
  CHECK(lewis_polynomial(2) == IntPolynomial{0, -4, 0, 1});
  CHECK(lewis_polynomial(3) == IntPolynomial{9, 0, -10, 0, 1});
  CHECK(lewis_polynomial(4) == IntPolynomial{0, 64, 0, -20, 0, 1});
  for (int n = 1; n <= 8; ++n) {
    CHECK(lewis_polynomial(n) == annihilating_polynomial(RootSpec::integers({-1, 1}), n, SignMode::Signed));
  }
}

TEST_CASE("quartic polynomials") {
  CHECK(quartic_t(1) == quartic_factor(-1, 0));
  CHECK(quartic_t(2) == quartic_factor(-16, 0) * quartic_factor(4, 0));
  CHECK(quartic_p(1) == quartic_factor(-1, 0));
  CHECK(quartic_p(2) == x() * quartic_factor(-16, 0) * quartic_factor(4, 0));
  // 3 is a sum of three fourth roots of unity, so x^4 - 81 divides t_3
  CHECK(quartic_t(3) == quartic_factor(-81, 0) * quartic_factor(25, -6) * quartic_factor(25, 6));
  const auto p4 = x() * quartic_factor(-16, 0) * quartic_factor(4, 0) * quartic_factor(-256, 0) *
                  quartic_factor(100, -16) * quartic_factor(64, 0) * quartic_factor(100, 16);
  CHECK(quartic_p(4) == p4);
  CHECK(p4.degree() == 25);
  for (int n = 1; n <= 5; ++n) {
    CHECK(quartic_p(n) == annihilating_polynomial(RootSpec::roots_of_unity(4), n, SignMode::Signed));
  }
}

TEST_CASE("Pfister chain polynomials") {
  CHECK(pfister_chain_polynomial(1, 0) == IntPolynomial{0, -1, 1});
  CHECK(pfister_chain_polynomial(2, 1) == IntPolynomial{0, 8, -6, 1});
  CHECK(pfister_chain_polynomial(3, 2) == IntPolynomial{0, -384, 176, -24, 1});
  for (unsigned k = 0; k <= 3; ++k) {
    for (int n = 1; n <= 5; ++n) {
      const auto spec = RootSpec::integers({0, Integer(1) << k});
      CHECK(pfister_chain_polynomial(n, k) == annihilating_polynomial(spec, n, SignMode::Unsigned));
    }
  }
}

TEST_CASE("degree bound formula") {
  CHECK(degree_bound(1, 1) == 2);
  CHECK(degree_bound(3, 2) == 13);
  CHECK(degree_bound(5, 3) == 113);
  CHECK(testing::error_kind([] { degree_bound(0, 1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("constant term of p_n is odd for odd n") {
  for (unsigned k = 1; k <= 3; ++k) {
    for (int n = 1; n <= 5; n += 2) {
      const auto p = annihilating_polynomial(RootSpec::roots_of_unity(1u << k), n, SignMode::Signed);
      CHECK(p.coefficient(0) % 2 != 0);
    }
  }
}

TEST_CASE("annihilating polynomials on random integer root sets") {
  auto rng = testing::seeded(2);
  std::uniform_int_distribution<int> value(-6, 6), count(1, 4), summands(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::set<int> picked;
    const int c = count(rng);
    while (static_cast<int>(picked.size()) < c) picked.insert(value(rng));
    const auto spec = RootSpec::integers(std::vector<Integer>(picked.begin(), picked.end()));
    const int n = summands(rng);
    for (const auto mode : {SignMode::Signed, SignMode::Unsigned}) {
      const auto set = root_sum_set(spec, n, mode);
      const auto p = annihilating_polynomial(spec, n, mode);
      CHECK(p.is_monic());
      CHECK(p.degree() == static_cast<long>(set.elements.size()));
      CHECK(is_squarefree(p));
      for (const auto& s : set.elements) CHECK(p.evaluate(*s.as_rational_integer()) == 0);
    }
    // signed sums of n roots reappear among sums of n + 2 (add s - s)
    const auto pn = annihilating_polynomial(spec, n, SignMode::Signed);
    const auto pn2 = annihilating_polynomial(spec, n + 2, SignMode::Signed);
    CHECK(IntPolynomial::exact_quotient(pn2, pn).has_value());
  }
}

TEST_CASE("sums of roots of unity are roots of p_n") {
  for (unsigned m : {3u, 4u, 6u, 8u}) {
    const auto spec = RootSpec::roots_of_unity(m);
    for (int n = 1; n <= 3; ++n) {
      const auto p = annihilating_polynomial(spec, n, SignMode::Signed);
      for (const auto& s : root_sum_set(spec, n, SignMode::Signed).elements) CHECK(evaluate(p, s).is_zero());
    }
  }
}
