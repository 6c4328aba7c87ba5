#include <doctest.h>

#include "aprings/group.hpp"
#include "aprings/serialization.hpp"
#include "helpers.hpp"

using namespace aprings;

TEST_CASE("permutations") {
  const auto a = Permutation::from_cycles(3, {{0, 1}});
  const auto b = Permutation::from_cycles(3, {{1, 2}});
  CHECK((a * b)(0) == 1);
  CHECK((a * b)(2) == 0);
  CHECK((a * a).is_identity());
  CHECK((b * b.inverse()).is_identity());
  CHECK(testing::error_kind([] { Permutation(std::vector<std::uint16_t>{0, 0}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("named groups have the right orders and subgroup class counts") {
  struct Expected {
    const char* name;
    std::size_t order;
    std::size_t classes;
  };
  const Expected expected[] = {{"trivial", 1, 1}, {"C2", 2, 2}, {"C3", 3, 2}, {"C4", 4, 3}, {"V4", 4, 5},
                               {"S3", 6, 4},      {"D8", 8, 8}, {"A4", 12, 5}, {"S4", 24, 11}, {"A5", 60, 9}};
  for (const auto& e : expected) {
    CAPTURE(e.name);
    const auto g = named_group(e.name);
    REQUIRE(g.has_value());
    CHECK(g->order() == e.order);
    CHECK(subgroup_classes(*g).size() == e.classes);
  }
  CHECK_FALSE(named_group("Q8x").has_value());
  Limits tight = default_limits();
  tight.max_group_order = 50;
  CHECK(testing::error_kind([&] { named_group("A5", tight); }) == ErrorKind::OrderBoundExceeded);
}

TEST_CASE("tables of marks of small groups") {
  const auto s3 = table_of_marks(*named_group("S3"), "S3");
  const std::vector<std::vector<Integer>> s3_marks{{6, 0, 0, 0}, {3, 1, 0, 0}, {2, 0, 2, 0}, {1, 1, 1, 1}};
  CHECK(s3.marks == s3_marks);
  CHECK(s3.classes[1].label == "H2");
  CHECK(s3.classes[1].size == 3);
  CHECK(s3.distinct_entries() == std::vector<Integer>{0, 1, 2, 3, 6});

  const auto a4 = table_of_marks(*named_group("A4"), "A4");
  const std::vector<std::vector<Integer>> a4_marks{
      {12, 0, 0, 0, 0}, {6, 2, 0, 0, 0}, {4, 0, 1, 0, 0}, {3, 3, 0, 3, 0}, {1, 1, 1, 1, 1}};
  CHECK(a4.marks == a4_marks);

  const auto v4 = table_of_marks(*named_group("V4"), "V4");
  CHECK(v4.size() == 5);
  CHECK(v4.classes[1].label == "H2a");
  CHECK(v4.classes[3].label == "H2c");
}

TEST_CASE("A5 table matches the bundled data") {
  const auto computed = table_of_marks(*named_group("A5"), "A5").relabeled(a5_label_aliases());
  const auto bundled = bundled_a5_table();
  CHECK(computed.marks == bundled.marks);
  for (std::size_t i = 0; i < computed.size(); ++i) CHECK(computed.classes[i].label == bundled.classes[i].label);
  CHECK(bundled.classes[6].label == "D10");
  CHECK(bundled.marks[6][4] == 1);
  CHECK(bundled.marks[3][1] == 3);
}

TEST_CASE("table invariants") {
  auto t = table_of_marks(*named_group("S3"), "S3");
  t.validate();
  auto upper = t;
  upper.marks[0][1] = 1;
  CHECK(testing::error_kind([&] { upper.validate(); }) == ErrorKind::InvalidArgument);
  auto bad_last = t;
  bad_last.marks[3][2] = 2;
  CHECK(testing::error_kind([&] { bad_last.validate(); }) == ErrorKind::InvalidArgument);
  CHECK(testing::error_kind([&] { table_from_json(Json{{"group", "x"}, {"classes", Json::array()}, {"marks", {{1, 2}}}}); })
            .has_value());
}

TEST_CASE("marks agree with the regular action count") {
  // column 0 holds |G : H|, the diagonal |N(H) : H|
  for (const char* name : {"S3", "D8", "A4", "S4"}) {
    const auto g = *named_group(name);
    const auto classes = subgroup_classes(g);
    const auto t = table_of_marks(g, name);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      CHECK(t.marks[i][0] == Integer(g.order() / classes[i].order));
      CHECK(t.marks[i][i] * Integer(classes[i].size) * Integer(classes[i].order) == Integer(g.order()));
    }
  }
}

TEST_CASE("finite abelian groups") {
  const FiniteAbelianGroup g({2, 4});
  CHECK(g.order() == 8);
  CHECK(g.exponent() == 4);
  CHECK(g.name() == "C2xC4");
  CHECK(g.element_label(g.index_of({1, 1})) == "g0*g1");
  CHECK(g.element_label(g.index_of({0, 3})) == "g1^3");
  CHECK(g.element_label(0) == "1");
  CHECK(g.multiply(g.index_of({1, 3}), g.index_of({1, 2})) == g.index_of({0, 1}));
  CHECK(FiniteAbelianGroup({3}).generator_name(0) == "g");
  CHECK(FiniteAbelianGroup({}).name() == "1");
  CHECK(g.as_perm_group().order() == 8);

  const auto chars = characters(FiniteAbelianGroup({4}), 4);
  CHECK(chars.size() == 4);
  for (const auto& c : chars) {
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = 0; b < 4; ++b) {
        const FiniteAbelianGroup c4({4});
        CHECK(c.value(c4, c4.multiply(a, b)) == c.value(c4, a) * c.value(c4, b));
      }
    }
  }
  CHECK(testing::error_kind([] { characters(FiniteAbelianGroup({4}), 2); }) == ErrorKind::ExponentMismatch);
}

TEST_CASE("permutation groups round-trip through JSON") {
  const auto g = *named_group("S4");
  const auto back = perm_group_from_json(perm_group_to_json(g));
  CHECK(back.order() == 24);
  CHECK(table_of_marks(back).marks == table_of_marks(g).marks);
}
