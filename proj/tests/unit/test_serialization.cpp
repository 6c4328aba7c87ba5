#include <doctest.h>

#include "aprings/ring_model.hpp"
#include "aprings/serialization.hpp"
#include "helpers.hpp"

using namespace aprings;

TEST_CASE("integers travel as decimal strings") {
  const auto big = parse_integer("340282366920938463463374607431768211457");
  CHECK(integer_to_json(big) == "340282366920938463463374607431768211457");
  CHECK(integer_from_json(integer_to_json(big)) == big);
  CHECK(integer_from_json(Json(-17)) == -17);
  CHECK(testing::error_kind([] { integer_from_json(Json(1.5)); }) == ErrorKind::Parse);
}

TEST_CASE("round trips") {
  const IntPolynomial p{9, 0, -10, 0, 1};
  CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
  CHECK(polynomial_to_json(p).dump() == R"(["9","0","-10","0","1"])");

  const auto z = CyclotomicInteger::root_of_unity(8, 3) + CyclotomicInteger::from_integer(2, 8);
  CHECK(cyclotomic_from_json(cyclotomic_to_json(z)) == z);

  const auto spec = RootSpec::join(RootSpec::integers({0, 3}), RootSpec::roots_of_unity(4));
  CHECK(root_spec_from_json(root_spec_to_json(spec)).roots() == spec.roots());
  const auto parsed = root_spec_from_json(
      parse_json_text(R"({"atoms":[{"kind":"integers","values":[-1,1]},{"kind":"roots_of_unity","order":3}]})"));
  CHECK(parsed.roots().size() == 4);

  const auto table = bundled_a5_table();
  const auto back = table_from_json(table_to_json(table));
  CHECK(back.marks == table.marks);
  CHECK(back.classes.size() == table.classes.size());
  CHECK(table_to_json(table).dump() == table_to_json(back).dump());
}

TEST_CASE("malformed input") {
  CHECK(testing::error_kind([] { parse_json_text("{\"atoms\": ["); }) == ErrorKind::Parse);
  CHECK(testing::error_kind([] { root_spec_from_json(Json{{"atoms", {{{"kind", "primes"}}}}}); }) == ErrorKind::Parse);
  CHECK(testing::error_kind([] { polynomial_from_json(Json{{"a", 1}}); }) == ErrorKind::Parse);
}

TEST_CASE("element JSON lists nonzero coordinates") {
  const auto r = preset_model("Z[C2]");
  RingElement e = r->zero();
  e.coords[1] = -4;
  CHECK(r->element_to_json(e).dump() == R"([["g","-4"]])");
}
