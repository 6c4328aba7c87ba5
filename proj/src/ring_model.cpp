#include "aprings/ring_model.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "aprings/error.hpp"
#include "aprings/serialization.hpp"

namespace aprings {
namespace {

Integer l1_norm(const RingElement& e) {
  Integer total = 0;
  for (const auto& c : e.coords) total += abs(c);
  return total;
}

RingElement unit_vector(std::size_t rank, std::size_t i) {
  RingElement e{std::vector<Integer>(rank)};
  e.coords[i] = 1;
  return e;
}

Json labelled_coefficients(const RingElement& e, const std::vector<std::string>& labels) {
  std::vector<std::pair<std::string, Integer>> pairs;
  for (std::size_t i = 0; i < e.coords.size(); ++i) {
    if (e.coords[i] != 0) pairs.emplace_back(labels[i], e.coords[i]);
  }
  std::sort(pairs.begin(), pairs.end());
  Json out = Json::array();
  for (const auto& [label, value] : pairs) out.push_back(Json::array({label, integer_to_json(value)}));
  return out;
}

unsigned to_unsigned(const Integer& v) { return v.convert_to<unsigned>(); }

}  // namespace

std::size_t RingElementHash::operator()(const RingElement& e) const {
  std::size_t h = e.coords.size();
  for (const auto& c : e.coords) h = h * 1000003u ^ hash_integer(c);
  return h;
}

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Z: return "Z";
    case ModelKind::ProductZ: return "ProductZ";
    case ModelKind::GroupRing: return "GroupRing";
    case ModelKind::Burnside: return "Burnside";
    case ModelKind::FiniteQuotient: return "FiniteQuotient";
    case ModelKind::Product: return "Product";
  }
  return "?";
}

RingElement RingModel::add(const RingElement& a, const RingElement& b) const {
  check_element(a);
  check_element(b);
  RingElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

RingElement RingModel::neg(const RingElement& a) const {
  check_element(a);
  RingElement out = a;
  for (auto& c : out.coords) c = -c;
  return out;
}

RingElement RingModel::power(const RingElement& a, unsigned exponent) const {
  RingElement result = one();
  RingElement base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = mul(result, base);
    exponent >>= 1u;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

RingElement RingModel::canonical(RingElement e) const {
  if (e.coords.size() != rank()) {
    throw Error(ErrorKind::InvalidArgument, "element has " + std::to_string(e.coords.size()) +
                                                " coordinates, " + name() + " expects " + std::to_string(rank()));
  }
  return e;
}

void RingModel::check_element(const RingElement& e) const {
  if (e.coords.size() != rank()) {
    throw Error(ErrorKind::InvalidArgument, "element has " + std::to_string(e.coords.size()) +
                                                " coordinates, " + name() + " expects " + std::to_string(rank()));
  }
}

std::map<std::string, RingElement> RingModel::named_elements() const { return {}; }

std::vector<RingElement> RingModel::carrier(const Limits&) const {
  throw Error(ErrorKind::Unsupported, name() + " is infinite; no carrier listing");
}

Json RingModel::element_to_json(const RingElement& e) const { return labelled_coefficients(e, basis_labels()); }

Json RingModel::describe() const {
  Json gens = Json::array();
  for (const auto& l : generator_labels_) gens.push_back(l);
  return Json{{"kind", to_string(kind())},
              {"name", name()},
              {"rank", rank()},
              {"q", polynomial_to_json(q_)},
              {"q_text", q_.to_string()},
              {"generators", gens},
              {"finite", is_finite()}};
}

IntPolynomial RingModel::annihilating_polynomial_for(int n, const Limits& limits) const {
  if (n == 0) return IntPolynomial{0, 1};
  {
    std::lock_guard lock(cache_mutex_);
    auto it = annihilator_cache_.find(n);
    if (it != annihilator_cache_.end()) return it->second;
  }
  auto p = annihilating_polynomial(roots_, n, SignMode::Signed, limits);
  std::lock_guard lock(cache_mutex_);
  annihilator_cache_.emplace(n, p);
  return p;
}

void RingModel::set_structure(std::vector<RingElement> generators, std::vector<std::string> labels,
                              RootSpec roots) {
  generators_ = std::move(generators);
  generator_labels_ = std::move(labels);
  roots_ = std::move(roots);
  q_ = roots_.polynomial();
  if (!q_.is_monic() || !is_squarefree(q_)) {
    throw Error(ErrorKind::InvalidArgument, "generating polynomial of " + name() + " is not monic squarefree");
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (!is_zero(poly_eval_in_ring(q_, generators_[i], *this))) {
      throw Error(ErrorKind::R2Violation, "q(" + generator_labels_[i] + ") != 0 in " + name());
    }
  }
}

RingElement poly_eval_in_ring(const IntPolynomial& p, const RingElement& r, const RingModel& ring) {
  ring.check_element(r);
  RingElement acc = ring.zero();
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = ring.add(ring.mul(acc, r), ring.from_integer(c[i]));
  }
  return acc;
}

// Z

IntegersModel::IntegersModel() { set_structure({RingElement{{1}}}, {"1"}, RootSpec::integers({-1, 1})); }

RingElement IntegersModel::mul(const RingElement& a, const RingElement& b) const {
  check_element(a);
  check_element(b);
  return RingElement{{a.coords[0] * b.coords[0]}};
}

Integer IntegersModel::length(const RingElement& e, const Limits&) const {
  check_element(e);
  return abs(e.coords[0]);
}

Json IntegersModel::element_to_json(const RingElement& e) const { return integer_to_json(e.coords.at(0)); }

// Z^k

ProductZModel::ProductZModel(std::size_t factors) : factors_(factors) {
  if (factors == 0) throw Error(ErrorKind::InvalidArgument, "ProductZ needs at least one factor");
  std::vector<RingElement> gens;
  for (std::size_t i = 0; i < factors; ++i) gens.push_back(unit_vector(factors, i));
  set_structure(std::move(gens), basis_labels(), RootSpec::integers({-1, 0, 1}));
}

std::string ProductZModel::name() const { return "Z^" + std::to_string(factors_); }

std::vector<std::string> ProductZModel::basis_labels() const {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < factors_; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

RingElement ProductZModel::one() const { return RingElement{std::vector<Integer>(factors_, 1)}; }

RingElement ProductZModel::from_integer(const Integer& n) const {
  return RingElement{std::vector<Integer>(factors_, n)};
}

RingElement ProductZModel::mul(const RingElement& a, const RingElement& b) const {
  check_element(a);
  check_element(b);
  RingElement out = a;
  for (std::size_t i = 0; i < factors_; ++i) out.coords[i] *= b.coords[i];
  return out;
}

Integer ProductZModel::length(const RingElement& e, const Limits&) const {
  check_element(e);
  return l1_norm(e);
}

std::map<std::string, RingElement> ProductZModel::named_elements() const {
  std::map<std::string, RingElement> names;
  for (std::size_t i = 0; i < factors_; ++i) names.emplace("e" + std::to_string(i), unit_vector(factors_, i));
  return names;
}

// Z[G]

GroupRingModel::GroupRingModel(FiniteAbelianGroup group) : group_(std::move(group)) {
  std::vector<RingElement> gens;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < group_.order(); ++i) {
    gens.push_back(unit_vector(group_.order(), i));
    labels.push_back(group_.element_label(i));
  }
  set_structure(std::move(gens), std::move(labels), RootSpec::roots_of_unity(root_order()));
}

unsigned GroupRingModel::root_order() const { return std::max(group_.exponent(), 2u); }

std::string GroupRingModel::name() const { return "Z[" + group_.name() + "]"; }

std::vector<std::string> GroupRingModel::basis_labels() const {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < group_.order(); ++i) labels.push_back(group_.element_label(i));
  return labels;
}

RingElement GroupRingModel::one() const { return unit_vector(group_.order(), 0); }

RingElement GroupRingModel::from_integer(const Integer& n) const {
  RingElement e = zero();
  e.coords[0] = n;
  return e;
}

RingElement GroupRingModel::mul(const RingElement& a, const RingElement& b) const {
  check_element(a);
  check_element(b);
  RingElement out = zero();
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < b.coords.size(); ++j) {
      if (b.coords[j] == 0) continue;
      out.coords[group_.multiply(i, j)] += a.coords[i] * b.coords[j];
    }
  }
  return out;
}

Integer GroupRingModel::length(const RingElement& e, const Limits&) const {
  check_element(e);
  return l1_norm(e);
}

std::map<std::string, RingElement> GroupRingModel::named_elements() const {
  std::map<std::string, RingElement> names;
  for (std::size_t j = 0; j < group_.rank(); ++j) {
    names.emplace(group_.generator_name(j), unit_vector(group_.order(), group_.generator(j)));
  }
  return names;
}

Json GroupRingModel::describe() const {
  Json d = RingModel::describe();
  d["group"] = group_.factor_orders();
  return d;
}

// Burnside ring

BurnsideModel::BurnsideModel(TableOfMarks table) : table_(std::move(table)) {
  table_.validate();
  const auto k = table_.size();
  for (const auto& v : table_.marks[k - 1]) {
    if (v != 1) throw Error(ErrorKind::InvalidArgument, "last row of the table of marks must be all ones");
  }
  std::vector<RingElement> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(unit_vector(k, i));
  set_structure(std::move(gens), basis_labels(), RootSpec::integers(table_.distinct_entries()));
}

std::string BurnsideModel::name() const {
  return "Burnside(" + (table_.group_name.empty() ? std::string("G") : table_.group_name) + ")";
}

std::vector<std::string> BurnsideModel::basis_labels() const {
  std::vector<std::string> labels;
  for (const auto& c : table_.classes) labels.push_back(c.label);
  return labels;
}

RingElement BurnsideModel::one() const { return unit_vector(table_.size(), table_.size() - 1); }

RingElement BurnsideModel::from_integer(const Integer& n) const {
  RingElement e = zero();
  e.coords.back() = n;
  return e;
}

std::vector<Integer> BurnsideModel::marks_of(const RingElement& x) const {
  check_element(x);
  const auto k = table_.size();
  std::vector<Integer> phi(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (x.coords[i] == 0) continue;
    for (std::size_t j = 0; j <= i; ++j) phi[j] += x.coords[i] * table_.marks[i][j];
  }
  return phi;
}

// phi_j = sum_{i >= j} x_i M[i][j]; solve from the last column upwards.
RingElement BurnsideModel::from_marks(const std::vector<Integer>& marks) const {
  const auto k = table_.size();
  if (marks.size() != k) throw Error(ErrorKind::InvalidArgument, "marks vector has the wrong length");
  RingElement x = zero();
  for (std::size_t j = k; j-- > 0;) {
    Integer rest = marks[j];
    for (std::size_t i = j + 1; i < k; ++i) rest -= x.coords[i] * table_.marks[i][j];
    const Integer& d = table_.marks[j][j];
    if (rest % d != 0) {
      throw Error(ErrorKind::NonIntegralPullback, "marks vector is not in the image of the Burnside ring (class " +
                                                      table_.classes[j].label + ")");
    }
    x.coords[j] = rest / d;
  }
  return x;
}

RingElement BurnsideModel::mul(const RingElement& a, const RingElement& b) const {
  auto pa = marks_of(a);
  const auto pb = marks_of(b);
  for (std::size_t j = 0; j < pa.size(); ++j) pa[j] *= pb[j];
  return from_marks(pa);
}

Integer BurnsideModel::length(const RingElement& e, const Limits&) const {
  check_element(e);
  return l1_norm(e);
}

std::map<std::string, RingElement> BurnsideModel::named_elements() const {
  std::map<std::string, RingElement> names;
  for (std::size_t i = 0; i < table_.size(); ++i) names.emplace(table_.classes[i].label, unit_vector(table_.size(), i));
  return names;
}

Json BurnsideModel::describe() const {
  Json d = RingModel::describe();
  d["table"] = table_to_json(table_);
  return d;
}

// (Z/N)[G] / K

FiniteQuotientModel::FiniteQuotientModel(Integer modulus, FiniteAbelianGroup group,
                                         std::vector<std::vector<Integer>> ideal_generators, const Limits& limits,
                                         std::string display_name)
    : group_(std::move(group)), ideal_generators_(std::move(ideal_generators)), display_name_(std::move(display_name)) {
  if (modulus < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be at least 2");
  const std::size_t d = group_.order();
  Integer size = pow(Integer(modulus), static_cast<unsigned>(d));
  if (size > limits.max_carrier) {
    throw Error(ErrorKind::CarrierBoundExceeded, to_decimal(modulus) + "^" + std::to_string(d) +
                                                     " elements exceed the carrier bound " +
                                                     std::to_string(limits.max_carrier));
  }
  modulus_ = to_unsigned(modulus);
  const auto total = static_cast<std::size_t>(size);

  // additive closure of {k * h : k generator, h in G}
  std::vector<std::vector<unsigned>> span;
  for (auto& k : ideal_generators_) {
    if (k.size() != d) throw Error(ErrorKind::InvalidArgument, "ideal generator has the wrong number of coordinates");
    for (auto& c : k) c = mod_floor(c, modulus);
    for (std::size_t h = 0; h < d; ++h) {
      std::vector<unsigned> v(d, 0);
      for (std::size_t i = 0; i < d; ++i) v[group_.multiply(i, h)] = to_unsigned(k[i]);
      span.push_back(std::move(v));
    }
  }
  std::vector<char> in_ideal(total, 0);
  std::vector<Code> ideal{0};
  in_ideal[0] = 1;
  for (std::size_t pos = 0; pos < ideal.size(); ++pos) {
    const auto base = decode(ideal[pos]);
    for (const auto& v : span) {
      auto sum = base;
      for (std::size_t i = 0; i < d; ++i) sum[i] = (sum[i] + v[i]) % modulus_;
      const Code c = encode(sum);
      if (!in_ideal[c]) {
        in_ideal[c] = 1;
        ideal.push_back(c);
      }
    }
  }

  constexpr Code unassigned = ~Code{0};
  rep_of_.assign(total, unassigned);
  std::vector<std::vector<unsigned>> ideal_vectors;
  for (Code k : ideal) ideal_vectors.push_back(decode(k));
  for (Code c = 0; c < total; ++c) {
    if (rep_of_[c] != unassigned) continue;
    reps_.push_back(c);
    const auto base = decode(c);
    for (const auto& k : ideal_vectors) {
      auto sum = base;
      for (std::size_t i = 0; i < d; ++i) sum[i] = (sum[i] + k[i]) % modulus_;
      rep_of_[encode(sum)] = c;
    }
  }

  std::vector<RingElement> gens;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) {
    gens.push_back(canonical(unit_vector(d, i)));
    labels.push_back(group_.element_label(i));
  }

  // signed generator BFS from 0
  distance_.assign(total, -1);
  distance_[0] = 0;
  std::deque<Code> queue{0};
  std::vector<Code> steps;
  for (const auto& g : gens) {
    steps.push_back(code_of(g));
    steps.push_back(code_of(neg(g)));
  }
  while (!queue.empty()) {
    const Code c = queue.front();
    queue.pop_front();
    const auto base = decode(c);
    for (Code s : steps) {
      const auto sv = decode(s);
      auto sum = base;
      for (std::size_t i = 0; i < d; ++i) sum[i] = (sum[i] + sv[i]) % modulus_;
      const Code next = rep_of_[encode(sum)];
      if (distance_[next] < 0) {
        distance_[next] = distance_[c] + 1;
        queue.push_back(next);
      }
    }
  }

  set_structure(std::move(gens), std::move(labels), RootSpec::roots_of_unity(root_order()));
}

unsigned FiniteQuotientModel::root_order() const { return std::max(group_.exponent(), 2u); }

FiniteQuotientModel::Code FiniteQuotientModel::encode(const std::vector<unsigned>& residues) const {
  Code code = 0;
  for (unsigned r : residues) code = code * modulus_ + r;
  return code;
}

std::vector<unsigned> FiniteQuotientModel::decode(Code code) const {
  std::vector<unsigned> r(group_.order());
  for (std::size_t i = r.size(); i-- > 0;) {
    r[i] = code % modulus_;
    code /= modulus_;
  }
  return r;
}

RingElement FiniteQuotientModel::element_of(Code code) const {
  const auto r = decode(code);
  RingElement e;
  e.coords.reserve(r.size());
  for (unsigned v : r) e.coords.emplace_back(v);
  return e;
}

FiniteQuotientModel::Code FiniteQuotientModel::code_of(const RingElement& e) const {
  check_element(e);
  std::vector<unsigned> r(e.coords.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = to_unsigned(mod_floor(e.coords[i], modulus_));
  return rep_of_[encode(r)];
}

std::string FiniteQuotientModel::name() const {
  if (!display_name_.empty()) return display_name_;
  std::string n = "Z" + std::to_string(modulus_) + "[" + group_.name() + "]";
  if (!ideal_generators_.empty()) n += "/K";
  return n;
}

std::vector<std::string> FiniteQuotientModel::basis_labels() const {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < group_.order(); ++i) labels.push_back(group_.element_label(i));
  return labels;
}

RingElement FiniteQuotientModel::one() const { return canonical(unit_vector(group_.order(), 0)); }

RingElement FiniteQuotientModel::from_integer(const Integer& n) const {
  RingElement e = zero();
  e.coords[0] = n;
  return canonical(std::move(e));
}

RingElement FiniteQuotientModel::canonical(RingElement e) const { return element_of(code_of(e)); }

RingElement FiniteQuotientModel::add(const RingElement& a, const RingElement& b) const {
  check_element(a);
  check_element(b);
  RingElement s = a;
  for (std::size_t i = 0; i < s.coords.size(); ++i) s.coords[i] += b.coords[i];
  return canonical(std::move(s));
}

RingElement FiniteQuotientModel::neg(const RingElement& a) const {
  check_element(a);
  RingElement s = a;
  for (auto& c : s.coords) c = -c;
  return canonical(std::move(s));
}

RingElement FiniteQuotientModel::mul(const RingElement& a, const RingElement& b) const {
  const auto ra = decode(code_of(a));
  const auto rb = decode(code_of(b));
  std::vector<unsigned> out(ra.size(), 0);
  for (std::size_t i = 0; i < ra.size(); ++i) {
    if (ra[i] == 0) continue;
    for (std::size_t j = 0; j < rb.size(); ++j) {
      const auto k = group_.multiply(i, j);
      out[k] = static_cast<unsigned>((out[k] + static_cast<unsigned long long>(ra[i]) * rb[j]) % modulus_);
    }
  }
  return element_of(rep_of_[encode(out)]);
}

Integer FiniteQuotientModel::length(const RingElement& e, const Limits& limits) const {
  const int dist = distance_[code_of(e)];
  if (dist < 0 || dist > limits.max_length_radius) {
    throw Error(ErrorKind::LengthBoundExceeded,
                "length search radius " + std::to_string(limits.max_length_radius) + " exhausted in " + name());
  }
  return dist;
}

std::map<std::string, RingElement> FiniteQuotientModel::named_elements() const {
  std::map<std::string, RingElement> names;
  for (std::size_t j = 0; j < group_.rank(); ++j) {
    names.emplace(group_.generator_name(j), canonical(unit_vector(group_.order(), group_.generator(j))));
  }
  return names;
}

std::vector<RingElement> FiniteQuotientModel::carrier(const Limits& limits) const {
  if (reps_.size() > limits.max_carrier) {
    throw Error(ErrorKind::CarrierBoundExceeded, name() + " has more elements than the carrier bound");
  }
  std::vector<RingElement> out;
  out.reserve(reps_.size());
  for (Code c : reps_) out.push_back(element_of(c));
  return out;
}

Json FiniteQuotientModel::describe() const {
  Json d = RingModel::describe();
  d["modulus"] = modulus_;
  d["group"] = group_.factor_orders();
  Json ideal = Json::array();
  for (const auto& k : ideal_generators_) ideal.push_back(labelled_coefficients(RingElement{k}, basis_labels()));
  d["ideal"] = ideal;
  d["size"] = reps_.size();
  return d;
}

// R1 x R2

ProductModel::ProductModel(ModelPtr left, ModelPtr right) : left_(std::move(left)), right_(std::move(right)) {
  if (!left_ || !right_) throw Error(ErrorKind::InvalidArgument, "product factors must be non-null");
  std::vector<RingElement> gens;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < left_->generators().size(); ++i) {
    gens.push_back(pair(left_->generators()[i], right_->zero()));
    labels.push_back("a." + left_->generator_labels()[i]);
  }
  for (std::size_t i = 0; i < right_->generators().size(); ++i) {
    gens.push_back(pair(left_->zero(), right_->generators()[i]));
    labels.push_back("b." + right_->generator_labels()[i]);
  }
  RootSpec roots = RootSpec::join(RootSpec::join(left_->root_spec(), right_->root_spec()), RootSpec::integers({0}));
  set_structure(std::move(gens), std::move(labels), std::move(roots));
}

std::string ProductModel::name() const { return left_->name() + " x " + right_->name(); }

std::vector<std::string> ProductModel::basis_labels() const {
  std::vector<std::string> labels;
  for (const auto& l : left_->basis_labels()) labels.push_back("a." + l);
  for (const auto& l : right_->basis_labels()) labels.push_back("b." + l);
  return labels;
}

RingElement ProductModel::pair(const RingElement& a, const RingElement& b) const {
  left_->check_element(a);
  right_->check_element(b);
  RingElement e = a;
  e.coords.insert(e.coords.end(), b.coords.begin(), b.coords.end());
  return e;
}

RingElement ProductModel::left_part(const RingElement& e) const {
  check_element(e);
  return RingElement{{e.coords.begin(), e.coords.begin() + static_cast<std::ptrdiff_t>(left_->rank())}};
}

RingElement ProductModel::right_part(const RingElement& e) const {
  check_element(e);
  return RingElement{{e.coords.begin() + static_cast<std::ptrdiff_t>(left_->rank()), e.coords.end()}};
}

RingElement ProductModel::one() const { return pair(left_->one(), right_->one()); }

RingElement ProductModel::from_integer(const Integer& n) const {
  return pair(left_->from_integer(n), right_->from_integer(n));
}

RingElement ProductModel::add(const RingElement& a, const RingElement& b) const {
  return pair(left_->add(left_part(a), left_part(b)), right_->add(right_part(a), right_part(b)));
}

RingElement ProductModel::neg(const RingElement& a) const {
  return pair(left_->neg(left_part(a)), right_->neg(right_part(a)));
}

RingElement ProductModel::mul(const RingElement& a, const RingElement& b) const {
  return pair(left_->mul(left_part(a), left_part(b)), right_->mul(right_part(a), right_part(b)));
}

RingElement ProductModel::canonical(RingElement e) const {
  return pair(left_->canonical(left_part(e)), right_->canonical(right_part(e)));
}

Integer ProductModel::length(const RingElement& e, const Limits& limits) const {
  return left_->length(left_part(e), limits) + right_->length(right_part(e), limits);
}

std::map<std::string, RingElement> ProductModel::named_elements() const {
  std::map<std::string, RingElement> names;
  for (const auto& [n, v] : left_->named_elements()) names.emplace("a." + n, pair(v, right_->zero()));
  for (const auto& [n, v] : right_->named_elements()) names.emplace("b." + n, pair(left_->zero(), v));
  names.emplace("a.1", pair(left_->one(), right_->zero()));
  names.emplace("b.1", pair(left_->zero(), right_->one()));
  return names;
}

std::vector<RingElement> ProductModel::carrier(const Limits& limits) const {
  const auto a = left_->carrier(limits);
  const auto b = right_->carrier(limits);
  if (a.size() * b.size() > limits.max_carrier) {
    throw Error(ErrorKind::CarrierBoundExceeded, name() + " has more elements than the carrier bound");
  }
  std::vector<RingElement> out;
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(pair(x, y));
  }
  return out;
}

Json ProductModel::element_to_json(const RingElement& e) const {
  return Json{{"left", left_->element_to_json(left_part(e))}, {"right", right_->element_to_json(right_part(e))}};
}

Json ProductModel::describe() const {
  Json d = RingModel::describe();
  d["left"] = left_->describe();
  d["right"] = right_->describe();
  return d;
}

AnnihilationReport verify_annihilated(const RingModel& ring, const RingElement& r, const Limits& limits) {
  AnnihilationReport report;
  report.length = ring.length(r, limits);
  if (report.length > limits.max_summands) {
    throw Error(ErrorKind::BoundExceeded, "length " + to_decimal(report.length) + " exceeds the summand bound " +
                                              std::to_string(limits.max_summands));
  }
  report.polynomial = ring.annihilating_polynomial_for(report.length.convert_to<int>(), limits);
  report.annihilated = ring.is_zero(poly_eval_in_ring(report.polynomial, r, ring));
  return report;
}

}  // namespace aprings
