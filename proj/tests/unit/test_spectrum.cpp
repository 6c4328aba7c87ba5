#include <doctest.h>

#include <algorithm>
#include <set>

#include "aprings/oracle.hpp"
#include "aprings/ring_model.hpp"
#include "aprings/serialization.hpp"
#include "aprings/spectrum.hpp"
#include "aprings/verify_suite.hpp"
#include "helpers.hpp"

using namespace aprings;

namespace {

Integer det(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::set<IdealSet> as_set(const std::vector<IdealSet>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("oracle ideals of Z/n") {
  const auto z12 = FiniteRingTable::from_model(*preset_model("Z/12"));
  CHECK(all_ideals(z12).size() == 6);
  CHECK(prime_ideals(z12).size() == 2);
  const auto z8 = FiniteRingTable::from_model(*preset_model("Z/8"));
  CHECK(all_ideals(z8).size() == 4);
  CHECK(prime_ideals(z8).size() == 1);
}

TEST_CASE("powers of the fundamental ideal of (Z/4)[C2]") {
  const auto t = FiniteRingTable::from_model(*preset_model("Z4[C2]"));
  const auto i = oracle_fundamental_ideal(t);
  CHECK(i.size() == 8);
  CHECK(ideal_power(t, i, 2).size() == 2);
  CHECK(ideal_power(t, i, 3).size() == 1);
}

TEST_CASE("local finite quotients") {
  for (const std::string name : {"Z4[C2]", "Z8[C2]", "W(F3)", "W(F5)", "Z/4"}) {
    CAPTURE(name);
    const auto report = spectrum_report(*preset_model(name));
    CHECK(report.at("local").get<bool>());
    CHECK(report.at("oracle").at("matches_classification").get<bool>());
  }
  for (const std::string name : {"Z3[C2]", "Z/6"}) {
    CAPTURE(name);
    CHECK_FALSE(spectrum_report(*preset_model(name)).at("local").get<bool>());
  }
}

TEST_CASE("finite quotient primes match the oracle") {
  for (const auto& name : bundled_finite_models()) {
    CAPTURE(name);
    const auto ring = preset_model(name);
    const auto& fq = static_cast<const FiniteQuotientModel&>(*ring);
    const auto table = FiniteRingTable::from_model(*ring);
    std::set<IdealSet> analytic;
    for (const auto& d : finite_quotient_primes(fq)) {
      IdealSet members;
      for (std::uint32_t e = 0; e < table.size(); ++e) {
        if (d.contains(*ring, table.elements()[e])) members.push_back(e);
      }
      analytic.insert(members);
    }
    CHECK(analytic == as_set(prime_ideals(table)));
  }
}

TEST_CASE("signatures of group rings and Burnside rings") {
  const auto r = preset_model("Z[C2xC2]");
  const auto sigs = signatures(*r);
  CHECK(sigs.size() == 4);
  for (const auto& s : sigs) CHECK(s.evaluate(r->one()) == 1);
  CHECK(testing::error_kind([] { signatures(*preset_model("Z[C4]")); }) == ErrorKind::Unsupported);
  CHECK(minimal_primes(*preset_model("Z[C4]")).size() == 4);
  CHECK(minimal_primes(*preset_model("burnside-A5")).size() == 9);
  CHECK(signatures(*preset_model("Z4[C2]")).empty());
}

TEST_CASE("spectrum of Z[C2]") {
  const auto report = spectrum_report(*preset_model("Z[C2]"));
  CHECK_FALSE(report.at("local").get<bool>());
  CHECK(report.at("min").size() == 2);
  CHECK(report.at("max").contains("fundamental"));
}

TEST_CASE("element predicates") {
  const auto z2 = preset_model("Z^2");
  const auto e0 = z2->generators()[0];
  const auto p = element_predicates(*z2, e0);
  CHECK(*p.idempotent);
  CHECK(*p.zero_divisor);
  CHECK_FALSE(*p.unit);

  const auto z = preset_model("Z");
  CHECK(*element_predicates(*z, z->from_integer(-1)).unit);
  CHECK_FALSE(*element_predicates(*z, z->from_integer(2)).torsion);
  CHECK(*element_predicates(*z, z->zero()).nilpotent);

  const auto c2 = preset_model("Z[C2]");
  const auto x = c2->sub(c2->one(), c2->generators()[1]);
  const auto q = element_predicates(*c2, x);
  CHECK(*q.zero_divisor);
  CHECK(*q.in_fundamental);
  CHECK_FALSE(*q.unit);
}

TEST_CASE("finite predicates agree with exhaustive scans") {
  for (const std::string name : {"Z4[C2]", "Z3[C2]", "Z/12", "W(F3)"}) {
    CAPTURE(name);
    const auto ring = preset_model(name);
    const auto table = FiniteRingTable::from_model(*ring);
    const auto pred = exhaustive_predicates(table);
    for (std::uint32_t e = 0; e < table.size(); ++e) {
      const auto p = element_predicates(*ring, table.elements()[e]);
      CHECK(*p.nilpotent == pred.nilpotent[e]);
      CHECK(*p.unit == pred.unit[e]);
      CHECK(*p.zero_divisor == pred.zero_divisor[e]);
      CHECK(*p.idempotent == pred.idempotent[e]);
    }
  }
}

TEST_CASE("Dress ideals agree with the primes of B(G)/pB(G)") {
  struct Case {
    const char* group;
    unsigned p;
    std::size_t primes;
  };
  for (const auto& c : {Case{"C2", 2, 1}, Case{"C2", 3, 2}, Case{"S3", 2, 2}, Case{"S3", 3, 3}}) {
    CAPTURE(c.group);
    CAPTURE(c.p);
    const auto ring = construct_model(Json{{"kind", "Burnside"}, {"group", c.group}});
    const auto& b = static_cast<const BurnsideModel&>(*ring);
    const auto table = FiniteRingTable::burnside_mod_p(b, c.p);
    CHECK(check_ring_axioms(table) == std::nullopt);

    std::vector<IdealSet> dress(b.rank());
    for (std::size_t u = 0; u < b.rank(); ++u) {
      for (std::uint32_t e = 0; e < table.size(); ++e) {
        if (mod_floor(b.marks_of(table.elements()[e])[u], c.p) == 0) dress[u].push_back(e);
      }
    }
    const auto oracle = as_set(prime_ideals(table));
    CHECK(oracle.size() == c.primes);
    CHECK(std::set<IdealSet>(dress.begin(), dress.end()) == oracle);
    for (std::size_t u = 0; u < b.rank(); ++u) {
      for (std::size_t v = 0; v < b.rank(); ++v) {
        const bool subset = std::includes(dress[v].begin(), dress[v].end(), dress[u].begin(), dress[u].end());
        CHECK(dress_contained(b, u, c.p, v, c.p) == subset);
      }
    }
  }
}

TEST_CASE("Dress relations on the A5 Burnside ring") {
  const auto ring = preset_model("burnside-A5");
  const auto& b = static_cast<const BurnsideModel&>(*ring);
  const auto rel = dress_relations(b, {0, 2});
  CHECK(rel.ideals.size() == 18);
  // p_{e,2} = p_{C2,2} = p_{V4,2}: O^2 of each is trivial
  CHECK(dress_contained(b, 0, 2, 1, 2));
  CHECK(dress_contained(b, 1, 2, 3, 2));
  CHECK(dress_contained(b, 3, 2, 0, 2));
  CHECK_FALSE(dress_contained(b, 0, 2, 2, 2));
  CHECK(dress_contained(b, 1, 0, 0, 2));
  CHECK_FALSE(dress_contained(b, 0, 2, 0, 0));
}

TEST_CASE("congruence lattice bases") {
  auto rng = testing::seeded(5);
  std::uniform_int_distribution<int> entry(-12, 12), modulus(0, 15), dim(1, 4);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Integer> w(static_cast<std::size_t>(dim(rng)));
    for (auto& v : w) v = entry(rng);
    const Integer m = modulus(rng);
    const auto basis = congruence_lattice_basis(w, m);
    for (const auto& b : basis) {
      Integer dot = 0;
      for (std::size_t i = 0; i < w.size(); ++i) dot += w[i] * b[i];
      CHECK((m == 0 ? dot == 0 : mod_floor(dot, m) == 0));
    }
    if (m == 0) continue;
    // full rank, index m / gcd(content(w), m)
    REQUIRE(basis.size() == w.size());
    Integer g = m;
    for (const auto& v : w) g = boost::multiprecision::gcd(g, v);
    std::vector<std::vector<Integer>> rows(basis.begin(), basis.end());
    CHECK(abs(det(rows)) == m / g);
  }
}

TEST_CASE("admissibility and AP(k)") {
  CHECK(is_admissible(*preset_model("Z/4")).admissible);
  CHECK_FALSE(is_admissible(*preset_model("Z/9")).admissible);
  CHECK(is_admissible(*preset_model("Z[C2]")).admissible);
  CHECK(testing::error_kind([] { is_admissible(*preset_model("burnside-S3")); }) == ErrorKind::Unsupported);
  CHECK(ap_condition_check(*preset_model("Z/4"), 1));
  CHECK_FALSE(ap_condition_check(*preset_model("Z/3"), 1));
  CHECK(fundamental_ideal_elements(*preset_model("Z4[C2]")).size() == 8);
}

TEST_CASE("descriptor JSON is stable") {
  const auto mins = minimal_primes(*preset_model("Z[C2]"));
  REQUIRE(mins.size() == 2);
  const auto j = mins[0].to_json();
  CHECK(j.at("kind") == "MinimalCharacter");
  CHECK(j.dump() == mins[0].to_json().dump());
}
