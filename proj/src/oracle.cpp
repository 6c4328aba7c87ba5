#include "aprings/oracle.hpp"

#include <algorithm>
#include <set>

#include "aprings/error.hpp"
#include "aprings/serialization.hpp"

namespace aprings {
namespace {

void check_table_bound(std::size_t n, std::size_t bound, const std::string& what) {
  if (n > bound) {
    throw Error(ErrorKind::BoundExceeded,
                what + " needs at most " + std::to_string(bound) + " elements, ring has " + std::to_string(n));
  }
}

}  // namespace

FiniteRingTable FiniteRingTable::from_model(const RingModel& ring, const Limits& limits) {
  FiniteRingTable t;
  t.name_ = ring.name();
  t.elements_ = ring.carrier(limits);
  check_table_bound(t.size(), limits.max_carrier, "a ring table");
  t.finish();
  const auto n = t.size();
  t.add_.resize(n * n);
  t.mul_.resize(n * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a; b < n; ++b) {
      const auto s = t.index_.at(ring.add(t.elements_[a], t.elements_[b]));
      const auto p = t.index_.at(ring.mul(t.elements_[a], t.elements_[b]));
      t.add_[a * n + b] = t.add_[b * n + a] = static_cast<std::uint16_t>(s);
      t.mul_[a * n + b] = t.mul_[b * n + a] = static_cast<std::uint16_t>(p);
    }
  }
  t.zero_ = t.index_.at(ring.zero());
  t.one_ = t.index_.at(ring.one());
  t.neg_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) t.neg_[a] = t.index_.at(ring.neg(t.elements_[a]));
  std::set<std::uint32_t> gens;
  for (const auto& g : ring.generators()) {
    gens.insert(t.index_.at(g));
    gens.insert(t.index_.at(ring.neg(g)));
  }
  t.generators_.assign(gens.begin(), gens.end());
  return t;
}

FiniteRingTable FiniteRingTable::burnside_mod_p(const BurnsideModel& ring, unsigned p, const Limits& limits) {
  if (p < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be at least 2");
  const std::size_t k = ring.rank();
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= p;
    check_table_bound(n, limits.max_carrier, "a ring table");
  }
  FiniteRingTable t;
  t.name_ = ring.name() + "/" + std::to_string(p);
  // structure constants c[i][j] = coordinates of b_i * b_j, reduced mod p
  std::vector<std::vector<std::vector<unsigned>>> c(k, std::vector<std::vector<unsigned>>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto prod = ring.mul(ring.generators()[i], ring.generators()[j]);
      for (const auto& v : prod.coords) c[i][j].push_back(mod_floor(v, p).convert_to<unsigned>());
    }
  }
  auto decode = [&](std::size_t code) {
    std::vector<unsigned> r(k);
    for (std::size_t i = k; i-- > 0;) {
      r[i] = static_cast<unsigned>(code % p);
      code /= p;
    }
    return r;
  };
  auto encode = [&](const std::vector<unsigned>& r) {
    std::size_t code = 0;
    for (unsigned v : r) code = code * p + v;
    return static_cast<std::uint32_t>(code);
  };
  for (std::size_t code = 0; code < n; ++code) {
    RingElement e;
    for (unsigned v : decode(code)) e.coords.emplace_back(v);
    t.elements_.push_back(std::move(e));
  }
  t.finish();
  t.add_.resize(n * n);
  t.mul_.resize(n * n);
  t.neg_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto ra = decode(a);
    std::vector<unsigned> ng(k);
    for (std::size_t i = 0; i < k; ++i) ng[i] = (p - ra[i]) % p;
    t.neg_[a] = encode(ng);
    for (std::size_t b = 0; b < n; ++b) {
      const auto rb = decode(b);
      std::vector<unsigned> sum(k), prod(k, 0);
      for (std::size_t i = 0; i < k; ++i) sum[i] = (ra[i] + rb[i]) % p;
      for (std::size_t i = 0; i < k; ++i) {
        if (ra[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) {
          if (rb[j] == 0) continue;
          const unsigned coef = ra[i] * rb[j] % p;
          for (std::size_t l = 0; l < k; ++l) prod[l] = (prod[l] + coef * c[i][j][l]) % p;
        }
      }
      t.add_[a * n + b] = static_cast<std::uint16_t>(encode(sum));
      t.mul_[a * n + b] = static_cast<std::uint16_t>(encode(prod));
    }
  }
  t.zero_ = 0;
  std::vector<unsigned> one(k, 0);
  one.back() = 1;
  t.one_ = encode(one);
  std::set<std::uint32_t> gens;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<unsigned> b(k, 0);
    b[i] = 1 % p;
    gens.insert(encode(b));
    gens.insert(t.neg_[encode(b)]);
  }
  t.generators_.assign(gens.begin(), gens.end());
  return t;
}

void FiniteRingTable::finish() {
  index_.clear();
  for (std::uint32_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::optional<std::uint32_t> FiniteRingTable::index_of(const RingElement& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

nlohmann::json FiniteRingTable::to_json() const {
  Json elements = Json::array();
  for (const auto& e : elements_) {
    Json coords = Json::array();
    for (const auto& c : e.coords) coords.push_back(integer_to_json(c));
    elements.push_back(coords);
  }
  Json add = Json::array(), mul = Json::array();
  for (std::size_t a = 0; a < size(); ++a) {
    Json ra = Json::array(), rm = Json::array();
    for (std::size_t b = 0; b < size(); ++b) {
      ra.push_back(add_[a * size() + b]);
      rm.push_back(mul_[a * size() + b]);
    }
    add.push_back(ra);
    mul.push_back(rm);
  }
  return Json{{"name", name_}, {"elements", elements}, {"add", add}, {"mul", mul}, {"zero", zero_}, {"one", one_}};
}

IdealSet ideal_generated_by(const FiniteRingTable& t, const std::vector<std::uint32_t>& gens) {
  const auto n = t.size();
  std::vector<char> member(n, 0);
  std::vector<std::uint32_t> members;
  auto insert = [&](std::uint32_t x) {
    if (!member[x]) {
      member[x] = 1;
      members.push_back(x);
    }
  };
  insert(t.zero());
  // R * gens first; the ideal is then the additive closure
  for (auto g : gens) {
    for (std::uint32_t r = 0; r < n; ++r) insert(t.mul(r, g));
  }
  const std::vector<std::uint32_t> products = members;
  for (std::size_t pos = 0; pos < members.size(); ++pos) {
    const auto a = members[pos];
    for (auto b : products) insert(t.add(a, b));
  }
  std::sort(members.begin(), members.end());
  return members;
}

IdealSet oracle_fundamental_ideal(const FiniteRingTable& t) {
  std::vector<std::uint32_t> gens;
  for (auto s : t.signed_generators()) gens.push_back(t.add(t.one(), t.neg(s)));
  return ideal_generated_by(t, gens);
}

std::vector<IdealSet> all_ideals(const FiniteRingTable& t, const Limits& limits) {
  check_table_bound(t.size(), limits.max_spectrum_table, "ideal enumeration");
  std::set<IdealSet> found;
  std::vector<IdealSet> queue{ideal_generated_by(t, {})};
  found.insert(queue.front());
  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    const IdealSet current = queue[pos];
    std::vector<char> member(t.size(), 0);
    for (auto x : current) member[x] = 1;
    for (std::uint32_t x = 0; x < t.size(); ++x) {
      if (member[x]) continue;
      std::vector<std::uint32_t> gens(current.begin(), current.end());
      gens.push_back(x);
      auto next = ideal_generated_by(t, gens);
      if (found.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<IdealSet> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const IdealSet& a, const IdealSet& b) { return a.size() < b.size(); });
  return out;
}

std::vector<IdealSet> prime_ideals(const FiniteRingTable& t, const Limits& limits) {
  std::vector<IdealSet> primes;
  for (auto& ideal : all_ideals(t, limits)) {
    if (ideal.size() == t.size()) continue;
    std::vector<char> member(t.size(), 0);
    for (auto x : ideal) member[x] = 1;
    bool prime = true;
    for (std::uint32_t a = 0; a < t.size() && prime; ++a) {
      if (member[a]) continue;
      for (std::uint32_t b = a; b < t.size(); ++b) {
        if (!member[b] && member[t.mul(a, b)]) {
          prime = false;
          break;
        }
      }
    }
    if (prime) primes.push_back(std::move(ideal));
  }
  return primes;
}

IdealSet ideal_power(const FiniteRingTable& t, const IdealSet& ideal, unsigned k) {
  if (k == 0) return ideal_generated_by(t, {t.one()});
  IdealSet current = ideal;
  for (unsigned step = 1; step < k; ++step) {
    std::set<std::uint32_t> products;
    for (auto x : current) {
      for (auto a : ideal) products.insert(t.mul(x, a));
    }
    current = ideal_generated_by(t, {products.begin(), products.end()});
  }
  return current;
}

OraclePredicates exhaustive_predicates(const FiniteRingTable& t, const Limits& limits) {
  const auto n = t.size();
  check_table_bound(n, limits.max_carrier, "exhaustive predicates");
  OraclePredicates out;
  out.nilpotent.assign(n, false);
  out.unit.assign(n, false);
  out.zero_divisor.assign(n, false);
  out.idempotent.assign(n, false);
  out.torsion.assign(n, false);
  out.additive_order.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint32_t power = a;
    for (std::size_t e = 1; e <= n; ++e) {
      if (power == t.zero()) {
        out.nilpotent[a] = true;
        break;
      }
      power = t.mul(power, a);
    }
    for (std::uint32_t b = 0; b < n; ++b) {
      const auto prod = t.mul(a, b);
      if (prod == t.one()) out.unit[a] = true;
      if (prod == t.zero() && b != t.zero()) out.zero_divisor[a] = true;
    }
    out.idempotent[a] = t.mul(a, a) == a;
    std::uint32_t multiple = a;
    for (std::size_t m = 1; m <= n; ++m) {
      if (multiple == t.zero()) {
        out.additive_order[a] = m;
        out.torsion[a] = true;
        break;
      }
      multiple = t.add(multiple, a);
    }
  }
  return out;
}

std::optional<std::string> check_ring_axioms(const FiniteRingTable& t) {
  const auto n = t.size();
  for (std::uint32_t a = 0; a < n; ++a) {
    if (t.add(a, t.zero()) != a) return "0 is not additively neutral";
    if (t.mul(a, t.one()) != a) return "1 is not multiplicatively neutral";
    if (t.add(a, t.neg(a)) != t.zero()) return "negation fails";
    for (std::uint32_t b = 0; b < n; ++b) {
      if (t.add(a, b) != t.add(b, a)) return "addition is not commutative";
      if (t.mul(a, b) != t.mul(b, a)) return "multiplication is not commutative";
      for (std::uint32_t c = 0; c < n; ++c) {
        if (t.add(t.add(a, b), c) != t.add(a, t.add(b, c))) return "addition is not associative";
        if (t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c))) return "multiplication is not associative";
        if (t.mul(a, t.add(b, c)) != t.add(t.mul(a, b), t.mul(a, c))) return "distributivity fails";
      }
    }
  }
  return std::nullopt;
}

}  // namespace aprings
