#include <doctest.h>

#include "aprings/expression.hpp"
#include "aprings/oracle.hpp"
#include "aprings/ring_model.hpp"
#include "aprings/serialization.hpp"
#include "aprings/verify_suite.hpp"
#include "helpers.hpp"

using namespace aprings;

namespace {

RingElement el(const RingModel& r, const std::string& text) { return parse_element(r, text); }

}  // namespace

TEST_CASE("integers and products of Z") {
  const auto z = preset_model("Z");
  CHECK(z->generating_polynomial() == IntPolynomial{-1, 0, 1});
  CHECK(z->length(el(*z, "-7")) == 7);
  CHECK(z->element_to_json(el(*z, "12")) == "12");

  const auto z3 = preset_model("Z^3");
  CHECK(z3->generating_polynomial() == IntPolynomial{0, -1, 0, 1});
  const auto e = el(*z3, "2*e0 - 3*e2");
  CHECK(z3->length(e) == 5);
  CHECK(z3->mul(el(*z3, "e0"), el(*z3, "e1")) == z3->zero());
  CHECK(z3->one() == el(*z3, "e0 + e1 + e2"));
}

TEST_CASE("group rings") {
  const auto r = preset_model("Z[C2]");
  CHECK(el(*r, "(1 + g)^2") == el(*r, "2 + 2*g"));
  CHECK(el(*r, "(1 - g)*(1 + g)") == r->zero());
  CHECK(r->length(el(*r, "3 + g")) == 4);
  CHECK(r->length(el(*r, "2 - 3*g")) == 5);
  CHECK(r->generating_polynomial() == IntPolynomial{-1, 0, 1});

  const auto c4 = preset_model("Z[C4]");
  CHECK(el(*c4, "g^4") == c4->one());
  CHECK(c4->generating_polynomial() == IntPolynomial{-1, 0, 0, 0, 1});

  const auto v = preset_model("Z[C2xC2]");
  CHECK(el(*v, "g0*g1*g0") == el(*v, "g1"));
}

TEST_CASE("Burnside rings multiply through marks") {
  const auto r = construct_model(Json{{"kind", "Burnside"}, {"group", "S3"}});
  CHECK(el(*r, "H1*H1") == el(*r, "6*H1"));
  CHECK(el(*r, "H2*H2") == el(*r, "H2 + H1"));
  CHECK(el(*r, "H3*H3") == el(*r, "2*H3"));
  CHECK(el(*r, "H2*H3") == el(*r, "H1"));
  CHECK(r->one() == el(*r, "H6"));
  const auto& b = static_cast<const BurnsideModel&>(*r);
  CHECK(b.marks_of(el(*r, "H2")) == std::vector<Integer>{3, 1, 0, 0});
  CHECK(testing::error_kind([&] { b.from_marks({1, 0, 0, 0}); }) == ErrorKind::NonIntegralPullback);
  CHECK(b.from_marks({9, 1, 0, 0}) == el(*r, "H2 + H1"));
  CHECK(r->generating_polynomial() ==
        IntPolynomial::from_integer_roots(std::vector<Integer>{0, 1, 2, 3, 6}));
}

TEST_CASE("finite quotients") {
  CHECK(static_cast<const FiniteQuotientModel&>(*preset_model("Z4[C2]")).size() == 16);
  CHECK(static_cast<const FiniteQuotientModel&>(*preset_model("Z8[C2]")).size() == 64);
  CHECK(static_cast<const FiniteQuotientModel&>(*preset_model("Z/6")).size() == 6);
  CHECK(static_cast<const FiniteQuotientModel&>(*preset_model("W(F3)")).size() == 4);
  CHECK(static_cast<const FiniteQuotientModel&>(*preset_model("W(F5)")).size() == 4);

  const auto w3 = preset_model("W(F3)");
  CHECK(el(*w3, "g") == el(*w3, "-1"));
  CHECK(el(*w3, "1 + 1 + 1 + 1") == w3->zero());

  Limits tight = default_limits();
  tight.max_carrier = 50;
  CHECK(testing::error_kind([&] { preset_model("Z8[C2]", tight); }) == ErrorKind::CarrierBoundExceeded);
  tight = default_limits();
  tight.max_length_radius = 1;
  const auto z6 = preset_model("Z/6");
  CHECK(z6->length(el(*z6, "3"), default_limits()) == 3);
  CHECK(testing::error_kind([&] { z6->length(el(*z6, "3"), tight); }) == ErrorKind::LengthBoundExceeded);
}

TEST_CASE("finite models satisfy the ring axioms") {
  for (const auto& name : bundled_finite_models()) {
    CAPTURE(name);
    const auto table = FiniteRingTable::from_model(*preset_model(name));
    CHECK(check_ring_axioms(table) == std::nullopt);
  }
  const auto product = construct_model(Json{{"kind", "Product"}, {"left", "Z/2"}, {"right", "Z/3"}});
  const auto table = FiniteRingTable::from_model(*product);
  CHECK(table.size() == 6);
  CHECK(check_ring_axioms(table) == std::nullopt);
}

TEST_CASE("products of models") {
  const auto left = preset_model("Z");
  const auto right = preset_model("Z[C4]");
  const auto p = construct_model(Json{{"kind", "Product"}, {"left", "Z"}, {"right", "Z[C4]"}});
  const auto& q = p->generating_polynomial();
  for (const auto& s : p->generators()) CHECK(p->is_zero(poly_eval_in_ring(q, s, *p)));
  const auto bound = IntPolynomial{0, 1} * left->generating_polynomial() * right->generating_polynomial();
  CHECK(IntPolynomial::exact_quotient(bound, q).has_value());
  const auto& pm = static_cast<const ProductModel&>(*p);
  const auto x = el(*p, "2*a.1 + b.g");
  CHECK(pm.left_part(x) == el(*left, "2"));
  CHECK(pm.right_part(x) == el(*right, "g"));
  CHECK(p->length(x) == 3);
}

TEST_CASE("every sampled element is annihilated by p of its length") {
  auto rng = testing::seeded(3);
  for (const std::string name : {"Z", "Z^2", "Z[C2]", "Z[C3]", "Z[C2xC2]", "burnside-S3", "Z4[C2]", "Z/6"}) {
    CAPTURE(name);
    const auto ring = preset_model(name);
    std::uniform_int_distribution<std::size_t> pick(0, ring->generators().size() - 1);
    std::uniform_int_distribution<int> terms(0, 4);
    for (int i = 0; i < 40; ++i) {
      RingElement r = ring->zero();
      const int n = terms(rng);
      for (int j = 0; j < n; ++j) r = j % 2 ? ring->sub(r, ring->generators()[pick(rng)]) : ring->add(r, ring->generators()[pick(rng)]);
      const auto report = verify_annihilated(*ring, r);
      CHECK(report.length <= n);
      CHECK(report.annihilated);
    }
  }
}

TEST_CASE("element expressions") {
  const auto r = preset_model("Z[C2xC2]");
  CHECK(format_element(*r, el(*r, "2 - 3*g0")) == "2 - 3*g0");
  CHECK(format_element(*r, r->zero()) == "0");
  CHECK(el(*r, "-(g0 - 1)") == el(*r, "1 - g0"));
  CHECK(testing::error_kind([&] { el(*r, "h"); }) == ErrorKind::Parse);
  CHECK(testing::error_kind([&] { el(*r, "1 +"); }) == ErrorKind::Parse);
  CHECK(testing::error_kind([&] { el(*r, "(1"); }) == ErrorKind::Parse);

  auto rng = testing::seeded(4);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int i = 0; i < 100; ++i) {
    RingElement e = r->zero();
    for (auto& c : e.coords) c = coef(rng);
    CHECK(el(*r, format_element(*r, e)) == e);
  }
}

TEST_CASE("model construction errors") {
  CHECK(testing::error_kind([] { preset_model("Z[Q8]"); }).has_value());
  CHECK(testing::error_kind([] { construct_model(Json{{"kind", "Nope"}}); }) == ErrorKind::Parse);
  auto bad = table_to_json(table_of_marks(*named_group("S3"), "S3"));
  bad["marks"][0][1] = 1;
  CHECK(testing::error_kind([&] { construct_model(Json{{"kind", "Burnside"}, {"table", bad}}); }).has_value());
}
