#include "aprings/spectrum.hpp"

#include <algorithm>
#include <set>

#include <boost/multiprecision/integer.hpp>

#include "aprings/error.hpp"
#include "aprings/oracle.hpp"
#include "aprings/serialization.hpp"

namespace aprings {
namespace {

bool is_power_of_two(unsigned m) { return m != 0 && (m & (m - 1)) == 0; }

RingElement basis_element(const RingModel& ring, std::size_t i) {
  RingElement e = ring.zero();
  e.coords[i] = 1;
  return ring.canonical(std::move(e));
}

std::string sign_label(const FiniteAbelianGroup& g, const Character& chi) {
  if (g.rank() == 0) return "sigma";
  std::string out = "sigma[";
  for (std::size_t j = 0; j < g.rank(); ++j) {
    if (j > 0) out += ",";
    out += chi.value(g, g.generator(j)) == CyclotomicInteger::from_integer(1, chi.m) ? "+" : "-";
  }
  return out + "]";
}

void verify_signature(const RingModel& ring, const Signature& s) {
  if (s.evaluate(ring.one()) != 1) {
    throw Error(ErrorKind::InvalidArgument, "signature " + s.label + " does not send 1 to 1");
  }
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    const auto bi = basis_element(ring, i);
    for (std::size_t j = i; j < ring.rank(); ++j) {
      const auto bj = basis_element(ring, j);
      if (s.evaluate(ring.mul(bi, bj)) != s.evaluate(bi) * s.evaluate(bj)) {
        throw Error(ErrorKind::InvalidArgument, "signature " + s.label + " is not multiplicative");
      }
    }
  }
}

std::vector<Signature> raw_signatures(const RingModel& ring) {
  std::vector<Signature> out;
  switch (ring.kind()) {
    case ModelKind::Z:
      out.push_back({"id", {1}});
      break;
    case ModelKind::ProductZ:
      for (std::size_t i = 0; i < ring.rank(); ++i) {
        Signature s{"pi_" + std::to_string(i), std::vector<Integer>(ring.rank())};
        s.basis_values[i] = 1;
        out.push_back(std::move(s));
      }
      break;
    case ModelKind::GroupRing: {
      const auto& g = static_cast<const GroupRingModel&>(ring).group();
      if (g.exponent() > 2) {
        throw Error(ErrorKind::Unsupported, "signatures of " + ring.name() + ": only exponent-2 groups are supported");
      }
      for (const auto& chi : characters(g, 2)) {
        Signature s{sign_label(g, chi), {}};
        for (std::size_t i = 0; i < g.order(); ++i) s.basis_values.push_back(*chi.value(g, i).as_rational_integer());
        out.push_back(std::move(s));
      }
      break;
    }
    case ModelKind::Burnside: {
      const auto& t = static_cast<const BurnsideModel&>(ring).table();
      for (std::size_t u = 0; u < t.size(); ++u) {
        Signature s{"phi_" + t.classes[u].label, {}};
        for (std::size_t i = 0; i < t.size(); ++i) s.basis_values.push_back(t.marks[i][u]);
        out.push_back(std::move(s));
      }
      break;
    }
    case ModelKind::FiniteQuotient:
      break;
    case ModelKind::Product: {
      const auto& p = static_cast<const ProductModel&>(ring);
      for (auto s : raw_signatures(*p.left())) {
        s.label = "a." + s.label;
        s.basis_values.resize(ring.rank());
        out.push_back(std::move(s));
      }
      for (auto s : raw_signatures(*p.right())) {
        s.label = "b." + s.label;
        s.basis_values.insert(s.basis_values.begin(), p.left()->rank(), Integer(0));
        out.push_back(std::move(s));
      }
      break;
    }
  }
  return out;
}

PrimeIdealDescriptor from_signature(const Signature& s, DescriptorKind kind, const Integer& p) {
  PrimeIdealDescriptor d;
  d.kind = kind;
  d.p = p;
  d.label = p == 0 ? "ker " + s.label : "ker " + s.label + " + " + to_decimal(p) + "R";
  for (const auto& v : s.basis_values) d.basis_values.push_back(CyclotomicInteger::from_integer(v));
  return d;
}

std::vector<PrimeIdealDescriptor> raw_minimal_primes(const RingModel& ring) {
  std::vector<PrimeIdealDescriptor> out;
  auto integer_descriptor = [](std::string label, const std::vector<Integer>& values, DescriptorKind kind) {
    PrimeIdealDescriptor d;
    d.kind = kind;
    d.label = std::move(label);
    for (const auto& v : values) d.basis_values.push_back(CyclotomicInteger::from_integer(v));
    return d;
  };
  switch (ring.kind()) {
    case ModelKind::Z:
    case ModelKind::ProductZ:
      for (const auto& s : raw_signatures(ring)) {
        out.push_back(integer_descriptor("P_" + s.label, s.basis_values, DescriptorKind::MinimalCharacter));
      }
      break;
    case ModelKind::GroupRing: {
      const auto& model = static_cast<const GroupRingModel&>(ring);
      const auto& g = model.group();
      for (const auto& chi : characters(g, model.root_order())) {
        PrimeIdealDescriptor d;
        d.kind = DescriptorKind::MinimalCharacter;
        d.label = "P_" + chi.label();
        for (std::size_t i = 0; i < g.order(); ++i) d.basis_values.push_back(chi.value(g, i));
        out.push_back(std::move(d));
      }
      break;
    }
    case ModelKind::Burnside: {
      const auto& t = static_cast<const BurnsideModel&>(ring).table();
      for (std::size_t u = 0; u < t.size(); ++u) {
        std::vector<Integer> column;
        for (std::size_t i = 0; i < t.size(); ++i) column.push_back(t.marks[i][u]);
        out.push_back(integer_descriptor("p_{" + t.classes[u].label + ",0}", column, DescriptorKind::BurnsideDress));
      }
      break;
    }
    case ModelKind::FiniteQuotient:
      throw Error(ErrorKind::Unsupported, ring.name() + " is not freely generated by its generating set");
    case ModelKind::Product: {
      const auto& p = static_cast<const ProductModel&>(ring);
      const unsigned order_left = p.left()->root_spec().common_order();
      const unsigned order_right = p.right()->root_spec().common_order();
      for (auto d : raw_minimal_primes(*p.left())) {
        d.label = "a." + d.label;
        for (std::size_t i = 0; i < p.right()->rank(); ++i) d.basis_values.push_back(CyclotomicInteger::from_integer(0, order_left));
        out.push_back(std::move(d));
      }
      for (auto d : raw_minimal_primes(*p.right())) {
        d.label = "b." + d.label;
        d.basis_values.insert(d.basis_values.begin(), p.left()->rank(), CyclotomicInteger::from_integer(0, order_right));
        out.push_back(std::move(d));
      }
      break;
    }
  }
  return out;
}

bool is_two_power_group_model(const RingModel& ring, unsigned* order = nullptr) {
  unsigned m = 0;
  if (ring.kind() == ModelKind::Z) m = 2;
  if (ring.kind() == ModelKind::GroupRing) m = static_cast<const GroupRingModel&>(ring).root_order();
  if (ring.kind() == ModelKind::FiniteQuotient) m = static_cast<const FiniteQuotientModel&>(ring).root_order();
  if (!is_power_of_two(m)) return false;
  if (order) *order = m;
  return true;
}

// Ideal closure inside a finite model using its own arithmetic.
std::set<RingElement> closure(const RingModel& ring, const std::vector<RingElement>& carrier,
                              const std::vector<RingElement>& gens) {
  std::set<RingElement> products;
  for (const auto& g : gens) {
    for (const auto& r : carrier) products.insert(ring.mul(r, g));
  }
  std::set<RingElement> members{ring.zero()};
  std::vector<RingElement> queue{ring.zero()};
  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    const RingElement a = queue[pos];
    for (const auto& b : products) {
      auto s = ring.add(a, b);
      if (members.insert(s).second) queue.push_back(std::move(s));
    }
  }
  return members;
}

std::vector<RingElement> signed_generators(const RingModel& ring) {
  std::set<RingElement> out;
  for (const auto& g : ring.generators()) {
    out.insert(g);
    out.insert(ring.neg(g));
  }
  return {out.begin(), out.end()};
}

Integer characteristic(const RingModel& ring) {
  const auto one = ring.one();
  RingElement acc = one;
  for (Integer m = 1; m <= 1 << 16; ++m) {
    if (ring.is_zero(acc)) return m;
    acc = ring.add(acc, one);
  }
  return 0;
}

ElementPredicates finite_scan_predicates(const RingModel& ring, const RingElement& r, const Limits& limits) {
  const auto carrier = ring.carrier(limits);
  ElementPredicates out;
  out.strategy = "scan";
  bool nil = false;
  RingElement power = r;
  for (std::size_t e = 0; e <= carrier.size(); ++e) {
    if (ring.is_zero(power)) {
      nil = true;
      break;
    }
    power = ring.mul(power, r);
  }
  bool unit = false, zd = false;
  for (const auto& x : carrier) {
    const auto prod = ring.mul(r, x);
    if (prod == ring.one()) unit = true;
    if (ring.is_zero(prod) && !ring.is_zero(x)) zd = true;
  }
  out.nilpotent = nil;
  out.unit = unit;
  out.zero_divisor = zd;
  out.torsion = true;
  out.idempotent = ring.mul(r, r) == r;
  out.in_every_signature_ideal = true;
  return out;
}

}  // namespace

Integer Signature::evaluate(const RingElement& r) const {
  Integer total = 0;
  for (std::size_t i = 0; i < basis_values.size() && i < r.coords.size(); ++i) total += r.coords[i] * basis_values[i];
  return total;
}

std::vector<Signature> signatures(const RingModel& ring) {
  auto out = raw_signatures(ring);
  for (const auto& s : out) verify_signature(ring, s);
  return out;
}

std::string to_string(DescriptorKind kind) {
  switch (kind) {
    case DescriptorKind::SignatureIdeal: return "SignatureIdeal";
    case DescriptorKind::SignaturePlusP: return "SignaturePlusP";
    case DescriptorKind::Fundamental: return "Fundamental";
    case DescriptorKind::MinimalCharacter: return "MinimalCharacter";
    case DescriptorKind::BurnsideDress: return "BurnsideDress";
  }
  return "?";
}

CyclotomicInteger PrimeIdealDescriptor::evaluate(const RingElement& r) const {
  if (r.coords.size() != basis_values.size()) {
    throw Error(ErrorKind::InvalidArgument, "descriptor " + label + " applied to an element of the wrong ring");
  }
  bool integral = std::all_of(basis_values.begin(), basis_values.end(),
                              [](const CyclotomicInteger& v) { return v.order() == 1; });
  if (integral) {
    Integer total = 0;
    for (std::size_t i = 0; i < r.coords.size(); ++i) {
      if (r.coords[i] != 0) total += r.coords[i] * basis_values[i].coords()[0];
    }
    return CyclotomicInteger::from_integer(total);
  }
  CyclotomicInteger total;
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    if (r.coords[i] != 0) total += CyclotomicInteger::from_integer(r.coords[i]) * basis_values[i];
  }
  return total;
}

bool PrimeIdealDescriptor::contains(const RingModel& ring, const RingElement& r) const {
  if (kind == DescriptorKind::Fundamental) return ring.length(r) % 2 == 0;
  const auto v = evaluate(r);
  if (p == 0) return v.is_zero();
  const auto n = v.as_rational_integer();
  if (!n) throw Error(ErrorKind::Unsupported, "congruence test on a non-integral character value");
  return *n % p == 0;
}

nlohmann::json PrimeIdealDescriptor::to_json() const {
  Json values = Json::array();
  for (const auto& v : basis_values) {
    if (auto n = v.as_rational_integer()) {
      values.push_back(integer_to_json(*n));
    } else {
      values.push_back(v.to_string());
    }
  }
  return Json{{"kind", to_string(kind)}, {"label", label}, {"p", integer_to_json(p)}, {"values", values}};
}

std::vector<PrimeIdealDescriptor> minimal_primes(const RingModel& ring) { return raw_minimal_primes(ring); }

std::vector<PrimeIdealDescriptor> finite_quotient_primes(const FiniteQuotientModel& ring) {
  const auto& g = ring.group();
  if (g.exponent() > 2) {
    throw Error(ErrorKind::Unsupported, "prime classification of " + ring.name() + " needs an exponent-2 group");
  }
  const auto chars = characters(g, 2);
  std::vector<Signature> sigs;
  for (const auto& chi : chars) {
    Signature s{sign_label(g, chi), {}};
    for (std::size_t i = 0; i < g.order(); ++i) s.basis_values.push_back(*chi.value(g, i).as_rational_integer());
    sigs.push_back(std::move(s));
  }
  std::vector<PrimeIdealDescriptor> out;
  for (unsigned p : primes_up_to(ring.modulus())) {
    if (ring.modulus() % p != 0) continue;
    for (const auto& s : sigs) {
      const bool kills_ideal = std::all_of(ring.ideal_generators().begin(), ring.ideal_generators().end(),
                                           [&](const std::vector<Integer>& k) { return s.evaluate(RingElement{k}) % p == 0; });
      if (!kills_ideal) continue;
      if (p == 2) {
        PrimeIdealDescriptor d = from_signature(s, DescriptorKind::Fundamental, 2);
        d.label = "I";
        out.push_back(std::move(d));
        break;  // every signature agrees mod 2
      }
      out.push_back(from_signature(s, DescriptorKind::SignaturePlusP, p));
    }
  }
  return out;
}

nlohmann::json spectrum_report(const RingModel& ring, unsigned prime_bound, const Limits& limits) {
  Json report;
  report["ring"] = ring.name();
  report["prime_bound"] = prime_bound;

  if (ring.is_finite()) {
    const auto table = FiniteRingTable::from_model(ring, limits);
    const auto primes = prime_ideals(table, limits);
    const auto fundamental = oracle_fundamental_ideal(table);
    Json oracle_primes = Json::array();
    std::set<IdealSet> oracle_sets;
    for (const auto& p : primes) {
      oracle_primes.push_back(Json{{"size", p.size()}, {"index", table.size() / p.size()}, {"is_fundamental", p == fundamental}});
      oracle_sets.insert(p);
    }
    report["oracle"] = Json{{"primes", oracle_primes}, {"ring_size", table.size()}};
    report["local"] = primes.size() == 1;
    report["signatures"] = Json::array();
    Json max = Json{{"families", Json::array()}};
    if (ring.kind() == ModelKind::FiniteQuotient) {
      try {
        const auto analytic = finite_quotient_primes(static_cast<const FiniteQuotientModel&>(ring));
        std::set<IdealSet> analytic_sets;
        Json listed = Json::array();
        for (const auto& d : analytic) {
          IdealSet members;
          for (std::uint32_t i = 0; i < table.size(); ++i) {
            if (d.contains(ring, table.elements()[i])) members.push_back(i);
          }
          analytic_sets.insert(members);
          listed.push_back(d.to_json());
          if (d.kind == DescriptorKind::Fundamental) max["fundamental"] = d.to_json();
        }
        report["min"] = listed;
        max["enumerated"] = listed;
        report["oracle"]["matches_classification"] = analytic_sets == oracle_sets;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Unsupported) throw;
        report["min"] = oracle_primes;
        max["enumerated"] = oracle_primes;
        report["oracle"]["matches_classification"] = nullptr;
      }
    } else {
      report["min"] = oracle_primes;
      max["enumerated"] = oracle_primes;
      report["oracle"]["matches_classification"] = nullptr;
    }
    report["max"] = max;
    return report;
  }

  const auto sigs = signatures(ring);
  Json sig_json = Json::array();
  for (const auto& s : sigs) sig_json.push_back(s.label);
  report["signatures"] = sig_json;

  Json min = Json::array();
  for (const auto& d : minimal_primes(ring)) min.push_back(d.to_json());
  report["min"] = min;

  bool fundamental = false;
  if (is_two_power_group_model(ring)) fundamental = is_admissible(ring).admissible;

  Json max;
  if (fundamental) {
    PrimeIdealDescriptor d;
    d.kind = DescriptorKind::Fundamental;
    d.label = "I";
    d.p = 2;
    d.basis_values.assign(ring.rank(), CyclotomicInteger::from_integer(1));
    max["fundamental"] = d.to_json();
  }
  const auto primes = primes_up_to(prime_bound);
  Json families = Json::array();
  for (const auto& s : sigs) {
    Json listed = Json::array();
    for (unsigned p : primes) {
      if (fundamental && p == 2) continue;
      listed.push_back(p);
    }
    Json family{{"signature", s.label}, {"primes", listed}, {"symbolic", "ker " + s.label + " + pR, p prime"}};
    if (fundamental) family["coincides_with"] = Json{{"2", "I"}};
    families.push_back(family);
  }
  max["families"] = families;
  report["max"] = max;
  report["local"] = sigs.empty();

  if (ring.kind() == ModelKind::Burnside) {
    std::vector<unsigned> ps{0};
    for (unsigned p : primes) ps.push_back(p);
    report["dress"] = to_json(dress_relations(static_cast<const BurnsideModel&>(ring), ps));
  }
  return report;
}

std::vector<std::vector<Integer>> congruence_lattice_basis(const std::vector<Integer>& w, const Integer& m) {
  const std::size_t k = w.size();
  std::vector<std::vector<Integer>> cols(k, std::vector<Integer>(k));
  for (std::size_t i = 0; i < k; ++i) cols[i][i] = 1;
  std::vector<Integer> a = w;
  for (std::size_t j = 1; j < k; ++j) {
    while (a[j] != 0) {
      const Integer q = a[0] / a[j];
      for (std::size_t i = 0; i < k; ++i) cols[0][i] -= q * cols[j][i];
      a[0] -= q * a[j];
      std::swap(cols[0], cols[j]);
      std::swap(a[0], a[j]);
    }
  }
  if (k == 0) return {};
  if (a[0] < 0) {
    a[0] = -a[0];
    for (auto& v : cols[0]) v = -v;
  }
  std::vector<std::vector<Integer>> basis(cols.begin() + 1, cols.end());
  const Integer g = a[0];
  if (g == 0) {
    basis.push_back(cols[0]);
  } else if (m != 0) {
    const Integer mm = abs(m);
    const Integer scale = boost::multiprecision::lcm(g, mm) / g;
    auto x0 = cols[0];
    for (auto& v : x0) v *= scale;
    basis.push_back(std::move(x0));
  }
  return basis;
}

bool dress_contained(const BurnsideModel& ring, std::size_t u, unsigned p, std::size_t v, unsigned q) {
  const auto& t = ring.table();
  std::vector<Integer> wu, wv;
  for (std::size_t i = 0; i < t.size(); ++i) {
    wu.push_back(t.marks[i][u]);
    wv.push_back(t.marks[i][v]);
  }
  for (const auto& x : congruence_lattice_basis(wu, p)) {
    Integer value = 0;
    for (std::size_t i = 0; i < x.size(); ++i) value += x[i] * wv[i];
    if (q == 0 ? value != 0 : value % q != 0) return false;
  }
  return true;
}

DressRelations dress_relations(const BurnsideModel& ring, const std::vector<unsigned>& primes) {
  DressRelations rel;
  const auto& t = ring.table();
  for (unsigned p : primes) {
    for (std::size_t u = 0; u < t.size(); ++u) {
      rel.ideals.push_back({u, p, "p_{" + t.classes[u].label + "," + std::to_string(p) + "}"});
    }
  }
  const auto n = rel.ideals.size();
  rel.contained.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      rel.contained[a][b] = dress_contained(ring, rel.ideals[a].cls, rel.ideals[a].p, rel.ideals[b].cls, rel.ideals[b].p);
    }
  }
  rel.minimal.assign(n, true);
  rel.maximal.assign(n, true);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const bool strict = rel.contained[a][b] && !rel.contained[b][a];
      if (strict) {
        rel.minimal[b] = false;
        rel.maximal[a] = false;
      }
    }
  }
  return rel;
}

nlohmann::json to_json(const DressRelations& rel) {
  Json ideals = Json::array();
  for (std::size_t a = 0; a < rel.ideals.size(); ++a) {
    Json above = Json::array();
    for (std::size_t b = 0; b < rel.ideals.size(); ++b) {
      if (a != b && rel.contained[a][b]) above.push_back(rel.ideals[b].label);
    }
    ideals.push_back(Json{{"label", rel.ideals[a].label},
                          {"p", rel.ideals[a].p},
                          {"minimal", static_cast<bool>(rel.minimal[a])},
                          {"maximal", static_cast<bool>(rel.maximal[a])},
                          {"contained_in", above}});
  }
  return Json{{"ideals", ideals}};
}

Admissibility is_admissible(const RingModel& ring) {
  if (!is_two_power_group_model(ring)) {
    throw Error(ErrorKind::Unsupported,
                "admissibility is defined for group-generated models with q = X^(2^k) - 1, not " + ring.name());
  }
  if (!ring.is_finite()) return {true, "characteristic 0"};
  const auto c = characteristic(ring);
  const bool even = c % 2 == 0;
  return {even, "characteristic " + to_decimal(c) + (even ? " is even" : " is odd")};
}

std::vector<RingElement> fundamental_ideal_elements(const RingModel& ring, const Limits& limits) {
  const auto carrier = ring.carrier(limits);
  std::vector<RingElement> gens;
  for (const auto& s : signed_generators(ring)) gens.push_back(ring.sub(ring.one(), s));
  const auto members = closure(ring, carrier, gens);
  return {members.begin(), members.end()};
}

bool ap_condition_check(const RingModel& ring, unsigned k, const Limits& limits) {
  if (!ring.is_finite()) throw Error(ErrorKind::Unsupported, "AP(k) check needs a finite model");
  if (k == 0 || k > 10) throw Error(ErrorKind::InvalidArgument, "AP(k) check supports 1 <= k <= 10");
  const auto carrier = ring.carrier(limits);
  const auto i1 = fundamental_ideal_elements(ring, limits);
  std::set<RingElement> ik(i1.begin(), i1.end());
  for (unsigned step = 1; step < k; ++step) {
    std::set<RingElement> products;
    for (const auto& x : ik) {
      for (const auto& a : i1) products.insert(ring.mul(x, a));
    }
    ik = closure(ring, carrier, {products.begin(), products.end()});
  }
  const auto gens = signed_generators(ring);
  std::set<RingElement> layer(gens.begin(), gens.end());
  const unsigned max_terms = (1u << k) - 1;
  for (unsigned n = 1; n <= max_terms; ++n) {
    for (const auto& r : layer) {
      if (ik.count(r) && !ring.is_zero(r)) return false;
    }
    if (n == max_terms) break;
    std::set<RingElement> next;
    for (const auto& r : layer) {
      for (const auto& g : gens) next.insert(ring.add(r, g));
    }
    layer = std::move(next);
  }
  return true;
}

nlohmann::json ElementPredicates::to_json() const {
  Json out{{"strategy", strategy}};
  auto put = [&](const char* key, const std::optional<bool>& v) {
    if (v) out[key] = *v;
  };
  put("nilpotent", nilpotent);
  put("torsion", torsion);
  put("unit", unit);
  put("zero_divisor", zero_divisor);
  put("idempotent", idempotent);
  put("in_fundamental", in_fundamental);
  put("in_every_signature_ideal", in_every_signature_ideal);
  return out;
}

ElementPredicates element_predicates(const RingModel& ring, const RingElement& r, const Limits& limits) {
  ring.check_element(r);
  ElementPredicates out;
  switch (ring.kind()) {
    case ModelKind::Z:
    case ModelKind::ProductZ:
    case ModelKind::Burnside: {
      // values under the signatures (coordinates for Z^k, marks for Burnside)
      std::vector<Integer> values;
      if (ring.kind() == ModelKind::Burnside) {
        values = static_cast<const BurnsideModel&>(ring).marks_of(r);
        out.strategy = "marks";
      } else {
        values = r.coords;
        out.strategy = "coordinates";
      }
      const bool all_zero = std::all_of(values.begin(), values.end(), [](const Integer& v) { return v == 0; });
      out.nilpotent = all_zero;
      out.torsion = all_zero;
      out.in_every_signature_ideal = all_zero;
      out.unit = std::all_of(values.begin(), values.end(), [](const Integer& v) { return abs(v) == 1; });
      out.zero_divisor = std::any_of(values.begin(), values.end(), [](const Integer& v) { return v == 0; });
      out.idempotent = std::all_of(values.begin(), values.end(), [](const Integer& v) { return v == 0 || v == 1; });
      if (ring.kind() == ModelKind::Z) out.in_fundamental = r.coords[0] % 2 == 0;
      return out;
    }
    case ModelKind::GroupRing: {
      const auto& model = static_cast<const GroupRingModel&>(ring);
      out.strategy = "characters";
      bool all_zero = true, any_zero = false, idempotent = true, all_signs = true;
      for (const auto& d : raw_minimal_primes(ring)) {
        const auto v = d.evaluate(r);
        const bool zero = v.is_zero();
        all_zero = all_zero && zero;
        any_zero = any_zero || zero;
        idempotent = idempotent && (v * v == v);
        const auto n = v.as_rational_integer();
        all_signs = all_signs && n && abs(*n) == 1;
      }
      out.nilpotent = all_zero;
      out.torsion = all_zero;
      out.zero_divisor = any_zero;
      out.idempotent = idempotent;
      if (model.group().exponent() <= 2) {
        out.unit = all_signs;
        out.in_every_signature_ideal = all_zero;
      }
      if (is_power_of_two(model.root_order())) out.in_fundamental = ring.length(r, limits) % 2 == 0;
      return out;
    }
    case ModelKind::FiniteQuotient: {
      const auto& model = static_cast<const FiniteQuotientModel&>(ring);
      const bool two_power = is_power_of_two(model.root_order());
      const bool admissible = two_power && is_admissible(ring).admissible;
      if (model.group().exponent() <= 2) {
        out.strategy = "prime classification";
        const auto primes = finite_quotient_primes(model);
        bool in_all = true, in_some = false;
        for (const auto& d : primes) {
          const bool in = d.contains(ring, r);
          in_all = in_all && in;
          in_some = in_some || in;
        }
        out.nilpotent = in_all;
        out.zero_divisor = in_some;
        out.unit = !in_some;
        out.torsion = true;
        out.idempotent = ring.mul(r, r) == r;
        out.in_every_signature_ideal = true;
      } else {
        out = finite_scan_predicates(ring, r, limits);
      }
      if (two_power) out.in_fundamental = admissible ? ring.length(r, limits) % 2 == 0 : true;
      return out;
    }
    case ModelKind::Product: {
      const auto& model = static_cast<const ProductModel&>(ring);
      const auto a = element_predicates(*model.left(), model.left_part(r), limits);
      const auto b = element_predicates(*model.right(), model.right_part(r), limits);
      auto both = [](const std::optional<bool>& x, const std::optional<bool>& y) -> std::optional<bool> {
        if (!x || !y) return std::nullopt;
        return *x && *y;
      };
      auto either = [](const std::optional<bool>& x, const std::optional<bool>& y) -> std::optional<bool> {
        if (!x || !y) return std::nullopt;
        return *x || *y;
      };
      out.strategy = "product(" + a.strategy + ", " + b.strategy + ")";
      out.nilpotent = both(a.nilpotent, b.nilpotent);
      out.torsion = both(a.torsion, b.torsion);
      out.unit = both(a.unit, b.unit);
      out.zero_divisor = either(a.zero_divisor, b.zero_divisor);
      out.idempotent = both(a.idempotent, b.idempotent);
      out.in_every_signature_ideal = both(a.in_every_signature_ideal, b.in_every_signature_ideal);
      return out;
    }
  }
  return out;
}

std::vector<unsigned> primes_up_to(unsigned bound) {
  std::vector<unsigned> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (unsigned i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned long long j = static_cast<unsigned long long>(i) * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace aprings
