#include "aprings/verify_suite.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "aprings/annihilator.hpp"
#include "aprings/error.hpp"
#include "aprings/expression.hpp"
#include "aprings/group.hpp"
#include "aprings/oracle.hpp"
#include "aprings/ring_model.hpp"
#include "aprings/spectrum.hpp"

namespace aprings {
namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;
  int failures = 0;

  void fail(const std::string& what) {
    passed = false;
    if (failures++ < 6) detail << (detail.tellp() > 0 ? "; " : "") << what;
  }
};

IntPolynomial x() { return IntPolynomial{0, 1}; }

IntPolynomial product(std::initializer_list<IntPolynomial> factors) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (const auto& f : factors) p = p * f;
  return p;
}

// Reference factorizations of t_n and p_n for q = X^4 - 1.
struct Reference {
  int n;
  IntPolynomial t;
  IntPolynomial p;
};

std::vector<Reference> reference_quartics() {
  const IntPolynomial x4m1{-1, 0, 0, 0, 1};
  const IntPolynomial x4m16{-16, 0, 0, 0, 1};
  const IntPolynomial x4p4{4, 0, 0, 0, 1};
  const IntPolynomial a3{25, 0, -6, 0, 1};
  const IntPolynomial b3{25, 0, 6, 0, 1};
  const IntPolynomial x4m256{-256, 0, 0, 0, 1};
  const IntPolynomial a4{100, 0, -16, 0, 1};
  const IntPolynomial x4p64{64, 0, 0, 0, 1};
  const IntPolynomial b4{100, 0, 16, 0, 1};
  return {
      {1, x4m1, x4m1},
      {2, product({x4m16, x4p4}), product({x(), x4m16, x4p4})},
      {3, product({a3, b3}), product({x4m1, a3, b3})},
      {4, product({x4m256, a4, x4p64, b4}), product({x(), x4m16, x4p4, x4m256, a4, x4p64, b4})},
  };
}

// Reference 9x9 table, rows and columns e, C2, C3, V4, C5, S3, D10, A4, A5.
const std::vector<std::vector<int>>& reference_a5_marks() {
  static const std::vector<std::vector<int>> m = {
      {60, 0, 0, 0, 0, 0, 0, 0, 0}, {30, 2, 0, 0, 0, 0, 0, 0, 0}, {20, 0, 2, 0, 0, 0, 0, 0, 0},
      {15, 3, 0, 3, 0, 0, 0, 0, 0}, {12, 0, 0, 0, 2, 0, 0, 0, 0}, {10, 2, 1, 0, 0, 1, 0, 0, 0},
      {6, 2, 0, 0, 1, 0, 1, 0, 0},  {5, 1, 2, 1, 0, 0, 0, 1, 0},  {1, 1, 1, 1, 1, 1, 1, 1, 1},
  };
  return m;
}

const std::vector<std::string>& reference_a5_labels() {
  static const std::vector<std::string> l = {"e", "C2", "C3", "V4", "C5", "S3", "D10", "A4", "A5"};
  return l;
}

// Random element as a signed sum of at most max_terms generators.
RingElement random_short_element(const RingModel& ring, std::mt19937_64& rng, int max_terms) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<std::size_t> pick(0, ring.generators().size() - 1);
  std::bernoulli_distribution sign(0.5);
  RingElement r = ring.zero();
  const int n = terms(rng);
  for (int i = 0; i < n; ++i) {
    const auto& g = ring.generators()[pick(rng)];
    r = sign(rng) ? ring.add(r, g) : ring.sub(r, g);
  }
  return r;
}

// Fraction-free Gaussian elimination.
Integer bareiss_determinant(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Matrix of multiplication by r on the group-ring basis.
std::vector<std::vector<Integer>> multiplication_matrix(const GroupRingModel& ring, const RingElement& r) {
  const auto n = ring.rank();
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  for (std::size_t j = 0; j < n; ++j) {
    RingElement b = ring.zero();
    b.coords[j] = 1;
    const auto col = ring.mul(r, b);
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coords[i];
  }
  return m;
}

void c1_quartic_reference(Outcome& out) {
  for (const auto& d : reference_quartics()) {
    const auto t = quartic_t(d.n);
    const auto p = quartic_p(d.n);
    if (t != d.t) {
      std::string extra;
      if (auto q = IntPolynomial::exact_quotient(t, d.t)) extra = ", computed = reference * (" + q->to_string('x') + ")";
      out.fail("t_" + std::to_string(d.n) + " differs from the reference product" + extra);
    }
    if (p != d.p) {
      std::string extra;
      if (auto q = IntPolynomial::exact_quotient(p, d.p)) extra = ", computed = reference * (" + q->to_string('x') + ")";
      out.fail("p_" + std::to_string(d.n) + " differs from the reference product" + extra);
    }
  }
  if (out.passed) out.detail << "t_1..t_4 and p_1..p_4 equal the reference polynomials";
}

void c2_lewis(Outcome& out) {
  Limits limits = default_limits();
  limits.max_summands = std::max(limits.max_summands, 10);
  const auto spec = RootSpec::integers({-1, 1});
  for (int n = 1; n <= 10; ++n) {
    if (lewis_polynomial(n) != annihilating_polynomial(spec, n, SignMode::Signed, limits)) {
      out.fail("n = " + std::to_string(n));
    }
  }
  if (out.passed) out.detail << "lewis_polynomial(n) = p_n for q = X^2 - 1, n = 1..10";
}

void c3_quartic_closed_form(Outcome& out) {
  const auto spec = RootSpec::roots_of_unity(4);
  for (int n = 1; n <= 5; ++n) {
    if (quartic_p(n) != annihilating_polynomial(spec, n, SignMode::Signed)) out.fail("p_" + std::to_string(n));
  }
  std::size_t checked = 0;
  for (int n = 2; n <= 6; ++n) {
    const auto t = quartic_t(n);
    for (int a = -n; a <= n; ++a) {
      const int b_abs = n - std::abs(a);
      for (int b : {b_abs, -b_abs}) {
        const auto z = CyclotomicInteger(4, {Integer(a), Integer(b)});
        if (!evaluate(t, z).is_zero()) out.fail(std::to_string(a) + "+" + std::to_string(b) + "i is not a root of t_" +
                                                std::to_string(n));
        ++checked;
        if (b_abs == 0) break;
      }
    }
  }
  if (out.passed) out.detail << "quartic_p(n) = p_n for n = 1..5; " << checked << " points of D_2..D_6 are roots of t_n";
}

void c4_two_power_bounds(Outcome& out) {
  std::ostringstream measured;
  for (unsigned k = 1; k <= 3; ++k) {
    const auto spec = RootSpec::roots_of_unity(1u << k);
    measured << (k > 1 ? " " : "") << "k=" << k << ":";
    for (int n = 1; n <= 5; ++n) {
      const auto p = annihilating_polynomial(spec, n, SignMode::Signed);
      const Integer bound = degree_bound(n, k);
      measured << (n > 1 ? "," : "") << p.degree() << "/" << bound;
      if (Integer(p.degree()) > bound) {
        out.fail("deg p_" + std::to_string(n) + " = " + std::to_string(p.degree()) + " > " + to_decimal(bound) +
                 " (k=" + std::to_string(k) + ")");
      }
      if (n % 2 == 1 && p.coefficient(0) % 2 == 0) {
        out.fail("p_" + std::to_string(n) + "(0) even (k=" + std::to_string(k) + ")");
      }
    }
  }
  out.detail << (out.passed ? "" : "; ") << "deg/bound " << measured.str();
}

void c5_a5_marks(Outcome& out) {
  const auto g = named_group("A5");
  if (!g || g->order() != 60) {
    out.fail("A5 closure failed");
    return;
  }
  const auto computed = table_of_marks(*g, "A5").relabeled(a5_label_aliases());
  const auto& expected = reference_a5_marks();
  if (computed.size() != expected.size()) {
    out.fail("computed " + std::to_string(computed.size()) + " classes");
    return;
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (computed.classes[i].label != reference_a5_labels()[i]) out.fail("class " + std::to_string(i) + " labelled " + computed.classes[i].label);
    for (std::size_t j = 0; j < expected.size(); ++j) {
      if (computed.marks[i][j] != expected[i][j]) {
        out.fail("entry (" + reference_a5_labels()[i] + "," + reference_a5_labels()[j] + ") = " + to_decimal(computed.marks[i][j]));
      }
    }
  }
  const auto bundled = bundled_a5_table();
  if (bundled.marks != computed.marks) out.fail("bundled data file differs from the computed table");
  const BurnsideModel model(computed);
  const auto roots = model.root_spec().roots();
  std::set<Integer> root_set;
  for (const auto& r : roots) root_set.insert(*r.as_rational_integer());
  const std::set<Integer> want{60, 30, 20, 15, 12, 10, 6, 5, 3, 2, 1, 0};
  if (root_set != want) out.fail("generating polynomial roots differ");
  if (out.passed) out.detail << "9x9 table matches; q = " << model.generating_polynomial().to_string();
}

void c6_annihilation(Outcome& out) {
  const std::vector<std::string> names{"Z", "Z^3", "Z[C2]", "Z[C2xC2]", "Z[C4]", "burnside-A5", "Z4[C2]"};
  std::mt19937_64 rng(0x5eed0006);
  std::size_t total = 0;
  for (const auto& name : names) {
    const auto ring = preset_model(name);
    for (int i = 0; i < 100; ++i) {
      const auto r = random_short_element(*ring, rng, 5);
      const auto report = verify_annihilated(*ring, r);
      ++total;
      if (report.length > 5) out.fail(name + ": sampled length " + to_decimal(report.length));
      if (!report.annihilated) out.fail(name + ": p_" + to_decimal(report.length) + "(" + format_element(*ring, r) + ") != 0");
    }
  }
  if (out.passed) out.detail << total << " elements annihilated across " << names.size() << " models";
}

void c7_local_structure(Outcome& out) {
  for (const std::string name : {"Z4[C2]", "Z8[C2]"}) {
    const auto ring = preset_model(name);
    const auto table = FiniteRingTable::from_model(*ring);
    const auto primes = prime_ideals(table);
    const auto fundamental = oracle_fundamental_ideal(table);
    if (primes.size() != 1 || primes.front() != fundamental) {
      out.fail(name + ": oracle found " + std::to_string(primes.size()) + " primes, Spec != {I}");
    }
    const auto pred = exhaustive_predicates(table);
    std::vector<bool> in_i(table.size(), false);
    for (auto e : fundamental) in_i[e] = true;
    std::size_t mismatches = 0, torsion = 0;
    for (std::size_t e = 0; e < table.size(); ++e) {
      const bool nonunit = !pred.unit[e];
      if (in_i[e] != pred.nilpotent[e] || in_i[e] != pred.zero_divisor[e] || in_i[e] != nonunit) ++mismatches;
      if (pred.torsion[e]) ++torsion;
    }
    if (mismatches) out.fail(name + ": " + std::to_string(mismatches) + " elements break I = Nil = Zd = non-units");
    if (torsion != table.size()) out.fail(name + ": non-torsion element found");
    const auto report = spectrum_report(*ring);
    if (!report.at("local").get<bool>()) out.fail(name + ": spectrum report not local");
    if (out.passed) {
      out.detail << (out.detail.tellp() > 0 ? "; " : "") << name << ": |R| = " << table.size() << ", |I| = " << fundamental.size()
                 << ", Spec = {I}";
    }
  }
}

void c8_signature_structure(Outcome& out) {
  std::mt19937_64 rng(0x5eed0008);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::size_t zero_divisors = 0, samples = 0;
  for (const std::string name : {"Z[C2]", "Z[C2xC2]"}) {
    const auto ring = preset_model(name);
    const auto& model = static_cast<const GroupRingModel&>(*ring);
    const auto sigs = signatures(*ring);
    std::vector<RingElement> batch{ring->zero()};
    for (int i = 0; i < 200; ++i) {
      RingElement r = ring->zero();
      if (i % 2 == 0) {
        for (auto& c : r.coords) c = coef(rng);
      } else {
        // sum of c_g (g - sigma(g)) lies in ker sigma
        const auto& s = sigs[static_cast<std::size_t>(i / 2) % sigs.size()];
        for (std::size_t g = 0; g < ring->rank(); ++g) {
          const int c = coef(rng);
          r.coords[g] += c;
          r.coords[0] -= c * s.basis_values[g];
        }
      }
      batch.push_back(r);
    }
    for (const auto& r : batch) {
      ++samples;
      const auto pred = element_predicates(*ring, r);
      const bool is_zero = ring->is_zero(r);
      bool all_vanish = true, some_vanish = false;
      const Signature* vanishing = nullptr;
      for (const auto& s : sigs) {
        const bool v = s.evaluate(r) == 0;
        all_vanish = all_vanish && v;
        if (v && !vanishing) vanishing = &s;
        some_vanish = some_vanish || v;
      }
      const bool det_zero = bareiss_determinant(multiplication_matrix(model, r)) == 0;
      if (det_zero) ++zero_divisors;
      if (*pred.torsion != is_zero || *pred.nilpotent != is_zero || all_vanish != is_zero ||
          *pred.in_every_signature_ideal != is_zero) {
        out.fail(name + ": torsion/nilpotent/signature classes differ at " + format_element(*ring, r));
      }
      if (det_zero != some_vanish || *pred.zero_divisor != det_zero) {
        out.fail(name + ": zero-divisor mismatch at " + format_element(*ring, r));
      }
      if (vanishing) {
        // s = sum sigma(g) g satisfies r s = sigma(r) s = 0
        RingElement witness = ring->zero();
        for (std::size_t g = 0; g < ring->rank(); ++g) witness.coords[g] = vanishing->basis_values[g];
        if (!ring->is_zero(ring->mul(r, witness))) out.fail(name + ": witness fails at " + format_element(*ring, r));
      }
      if (!is_zero) {
        RingElement sq = r;
        for (int j = 0; j < 4; ++j) {
          sq = ring->mul(sq, sq);
          if (ring->is_zero(sq)) out.fail(name + ": nonzero nilpotent " + format_element(*ring, r));
        }
      }
    }
  }
  if (out.passed) {
    out.detail << samples << " samples (incl. 0), " << zero_divisors
               << " zero divisors, all inside the union of signature ideals; torsion = nil = {0}";
  }
}

void c9_dress(Outcome& out) {
  const auto ring = preset_model("burnside-A5");
  const auto& model = static_cast<const BurnsideModel&>(*ring);
  const std::vector<unsigned> ps{0, 2, 3, 5};
  const auto rel = dress_relations(model, ps);
  const auto n = rel.ideals.size();
  auto contained = [&](std::size_t u, unsigned p, std::size_t v, unsigned q) { return dress_contained(model, u, p, v, q); };
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < n; ++a) {
    const auto [u, p, la] = rel.ideals[a];
    if (rel.minimal[a] != (p == 0)) out.fail(la + " minimal flag");
    if (rel.maximal[a] != (p != 0)) out.fail(la + " maximal flag");
    if (p != 0 && !contained(u, 0, u, p)) out.fail("p_{U,0} not inside " + la);
    for (std::size_t b = 0; b < n; ++b) {
      const auto [v, q, lb] = rel.ideals[b];
      const bool equal = contained(u, p, v, q) && contained(v, q, u, p);
      const bool statement = (p == q && equal) || (p == 0 && q != 0 && contained(u, q, v, q));
      ++pairs;
      if (rel.contained[a][b] != statement) out.fail(la + " vs " + lb);
    }
  }
  const auto one = ring->one();
  for (std::size_t u = 0; u < model.rank(); ++u) {
    if (model.marks_of(one)[u] == 0) out.fail("[G/G] lies in p_{U,0}");
  }
  if (out.passed) out.detail << pairs << " ordered pairs match the containment statement; flags agree";
}

void c10_admissibility(Outcome& out) {
  for (int n = 2; n <= 12; ++n) {
    const auto ring = preset_model("Z/" + std::to_string(n));
    const auto adm = is_admissible(*ring);
    if (adm.admissible != (n % 2 == 0)) out.fail("Z/" + std::to_string(n) + ": " + adm.witness);
  }
  std::size_t models = 0;
  for (const auto& name : bundled_finite_models()) {
    const auto ring = preset_model(name);
    const bool adm = is_admissible(*ring).admissible;
    const bool ap1 = ap_condition_check(*ring, 1);
    ++models;
    if (adm != ap1) out.fail(name + ": admissible = " + (adm ? "true" : "false") + ", AP(1) = " + (ap1 ? "true" : "false"));
  }
  if (out.passed) out.detail << "Z/2..Z/12 by parity; AP(1) = admissibility on " << models << " finite models";
}

void c11_oracle_agreement(Outcome& out) {
  std::size_t elements = 0, models = 0;
  for (const auto& name : bundled_finite_models()) {
    const auto ring = preset_model(name);
    const auto table = FiniteRingTable::from_model(*ring);
    const auto pred = exhaustive_predicates(table);
    const auto fundamental = oracle_fundamental_ideal(table);
    std::vector<bool> in_i(table.size(), false);
    for (auto e : fundamental) in_i[e] = true;
    ++models;
    for (std::uint32_t e = 0; e < table.size(); ++e) {
      const auto& r = table.elements()[e];
      const auto p = element_predicates(*ring, r);
      ++elements;
      const bool same = p.nilpotent == pred.nilpotent[e] && p.unit == pred.unit[e] &&
                        p.zero_divisor == pred.zero_divisor[e] && p.idempotent == pred.idempotent[e] &&
                        p.torsion == pred.torsion[e] && p.in_fundamental == in_i[e];
      if (!same) out.fail(name + ": predicates differ at " + format_element(*ring, r));
    }
    const auto report = spectrum_report(*ring);
    const auto& match = report.at("oracle").at("matches_classification");
    if (!match.is_boolean() || !match.get<bool>()) out.fail(name + ": prime lists differ");
  }
  if (out.passed) out.detail << elements << " elements on " << models << " finite models agree; prime lists coincide";
}

struct CheckDef {
  std::string id;
  int criterion;
  std::string title;
  std::vector<std::string> tags;
  void (*run)(Outcome&);
};

const std::vector<CheckDef>& reference_checks() {
  static const std::vector<CheckDef> checks = {
      {"quartic-reference", 1, "t_n, p_n for X^4 - 1 equal the reference polynomials", {"annihilator", "quartic"}, c1_quartic_reference},
      {"lewis-closed-form", 2, "Lewis polynomials equal enumerated p_n", {"annihilator", "lewis"}, c2_lewis},
      {"quartic-closed-form", 3, "quartic_p equals enumerated p_n; D_n roots of t_n", {"annihilator", "quartic"}, c3_quartic_closed_form},
      {"two-power-bounds", 4, "degree bound and odd constant term for X^(2^k) - 1", {"annihilator", "degree"}, c4_two_power_bounds},
      {"a5-table-of-marks", 5, "A5 table of marks and Burnside generating polynomial", {"marks", "group"}, c5_a5_marks},
      {"annihilation", 6, "every element of length n is annihilated by p_n", {"rings", "annihilator"}, c6_annihilation},
      {"local-structure", 7, "X(R) empty: Spec = {I}, I = Nil = Zd = non-units", {"spectrum", "oracle"}, c7_local_structure},
      {"signature-structure", 8, "X(R) nonempty: torsion = nil = 0, Zd = union of signature ideals", {"spectrum"}, c8_signature_structure},
      {"dress", 9, "Dress containment and flags on the A5 Burnside ring", {"marks", "spectrum", "dress"}, c9_dress},
      {"admissibility", 10, "admissibility by parity; AP(1) iff admissible", {"spectrum", "admissibility"}, c10_admissibility},
      {"oracle-agreement", 11, "spectrum predicates equal oracle predicates", {"oracle", "spectrum"}, c11_oracle_agreement},
  };
  return checks;
}

bool matches(const CheckDef& c, const std::string& filter) {
  if (filter.empty()) return true;
  if (c.id.find(filter) != std::string::npos) return true;
  return std::any_of(c.tags.begin(), c.tags.end(), [&](const std::string& t) { return t == filter; });
}

}  // namespace

std::vector<std::string> suite_names() { return {"paper"}; }

std::vector<std::pair<std::string, std::vector<std::string>>> suite_checks(const std::string& suite) {
  if (suite != "paper") throw Error(ErrorKind::InvalidArgument, "unknown suite \"" + suite + "\"");
  std::vector<std::pair<std::string, std::vector<std::string>>> out;
  for (const auto& c : reference_checks()) out.emplace_back(c.id, c.tags);
  return out;
}

std::vector<CheckResult> run_suite(const std::string& suite, const std::string& filter,
                                   const std::function<void(const CheckResult&)>& on_result) {
  suite_checks(suite);
  std::vector<CheckResult> results;
  for (const auto& c : reference_checks()) {
    if (!matches(c, filter)) continue;
    CheckResult r{c.id, c.criterion, c.title, c.tags, false, "", 0};
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      c.run(out);
      r.passed = out.passed;
      r.detail = out.detail.str();
      if (out.failures > 6) r.detail += "; " + std::to_string(out.failures - 6) + " more";
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<std::string> bundled_finite_models() {
  std::vector<std::string> names{"Z4[C2]", "Z8[C2]", "Z2[C2xC2]", "Z3[C2]", "W(F3)", "W(F5)"};
  for (int n = 2; n <= 12; ++n) names.push_back("Z/" + std::to_string(n));
  return names;
}

}  // namespace aprings
