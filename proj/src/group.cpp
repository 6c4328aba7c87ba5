#include "aprings/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "aprings/error.hpp"

namespace aprings {

Permutation::Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw Error(ErrorKind::InvalidArgument, "images do not form a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint16_t> images(degree);
  std::iota(images.begin(), images.end(), std::uint16_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles) {
  std::vector<std::uint16_t> images(degree);
  std::iota(images.begin(), images.end(), std::uint16_t{0});
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cycle[i] >= degree) throw Error(ErrorKind::InvalidArgument, "cycle point out of range");
      images[cycle[i]] = static_cast<std::uint16_t>(cycle[(i + 1) % cycle.size()]);
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint16_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint16_t>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  Permutation p;
  p.images_.resize(b.images_.size());
  for (std::size_t i = 0; i < b.images_.size(); ++i) p.images_[i] = a.images_[b.images_[i]];
  return p;
}

std::optional<std::uint32_t> PermGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t PermGroup::multiply(std::uint32_t a, std::uint32_t b) const {
  if (table_.empty()) {
    throw Error(ErrorKind::OrderBoundExceeded, "group of order " + std::to_string(order()) +
                                                   " exceeds the subgroup enumeration bound");
  }
  return table_[static_cast<std::size_t>(a) * elements_.size() + b];
}

Subgroup PermGroup::whole() const {
  Subgroup all(order());
  std::iota(all.begin(), all.end(), std::uint32_t{0});
  return all;
}

Subgroup PermGroup::generated_by(const std::vector<std::uint32_t>& gens) const {
  std::vector<bool> in(order(), false);
  std::vector<std::uint32_t> members{0};
  in[0] = true;
  for (std::size_t pos = 0; pos < members.size(); ++pos) {
    for (auto g : gens) {
      const auto next = multiply(members[pos], g);
      if (!in[next]) {
        in[next] = true;
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Subgroup PermGroup::conjugate(const Subgroup& h, std::uint32_t x) const {
  const auto xi = inverse(x);
  Subgroup out;
  out.reserve(h.size());
  for (auto e : h) out.push_back(multiply(multiply(x, e), xi));
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup close_group(std::size_t degree, std::vector<Permutation> generators, const Limits& limits) {
  if (degree == 0) throw Error(ErrorKind::InvalidArgument, "degree must be positive");
  if (degree > 0xFFFF) throw Error(ErrorKind::InvalidArgument, "degree too large");
  for (const auto& g : generators) {
    if (g.degree() != degree) throw Error(ErrorKind::InvalidArgument, "generator degree mismatch");
  }
  PermGroup group;
  group.degree_ = degree;
  group.generators_ = generators;

  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    Permutation current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation next = g * current;
      if (seen.insert(next).second) {
        if (seen.size() > limits.max_group_order) {
          throw Error(ErrorKind::OrderBoundExceeded,
                      "group order exceeds " + std::to_string(limits.max_group_order));
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  group.elements_.assign(seen.begin(), seen.end());
  for (std::uint32_t i = 0; i < group.elements_.size(); ++i) group.index_.emplace(group.elements_[i], i);

  const std::size_t n = group.elements_.size();
  if (n <= limits.max_subgroup_enum_order) {
    group.table_.resize(n * n);
    group.inverses_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        group.table_[a * n + b] = group.index_.at(group.elements_[a] * group.elements_[b]);
      }
      group.inverses_[a] = group.index_.at(group.elements_[a].inverse());
    }
  }
  return group;
}

std::vector<std::string> named_group_names() {
  return {"trivial", "C2", "C3", "C4", "V4", "S3", "D8", "A4", "S4", "A5", "S5"};
}

std::optional<PermGroup> named_group(const std::string& name, const Limits& limits) {
  using C = std::vector<std::vector<std::size_t>>;
  auto make = [&](std::size_t degree, const std::vector<C>& gens) {
    std::vector<Permutation> perms;
    for (const auto& cycles : gens) perms.push_back(Permutation::from_cycles(degree, cycles));
    return close_group(degree, std::move(perms), limits);
  };
  if (name == "trivial" || name == "C1") return make(1, {});
  if (name == "C2") return make(2, {C{{0, 1}}});
  if (name == "C3") return make(3, {C{{0, 1, 2}}});
  if (name == "C4") return make(4, {C{{0, 1, 2, 3}}});
  if (name == "V4") return make(4, {C{{0, 1}, {2, 3}}, C{{0, 2}, {1, 3}}});
  if (name == "S3") return make(3, {C{{0, 1}}, C{{0, 1, 2}}});
  if (name == "D8") return make(4, {C{{0, 1, 2, 3}}, C{{0, 2}}});
  if (name == "A4") return make(4, {C{{0, 1, 2}}, C{{1, 2, 3}}});
  if (name == "S4") return make(4, {C{{0, 1}}, C{{0, 1, 2, 3}}});
  if (name == "A5") return make(5, {C{{0, 1, 2, 3, 4}}, C{{0, 1, 2}}});
  if (name == "S5") return make(5, {C{{0, 1}}, C{{0, 1, 2, 3, 4}}});
  return std::nullopt;
}

std::vector<SubgroupClass> subgroup_classes(const PermGroup& g, const Limits& limits) {
  if (g.order() > limits.max_subgroup_enum_order || !g.has_table()) {
    throw Error(ErrorKind::OrderBoundExceeded, "subgroup enumeration needs |G| <= " +
                                                   std::to_string(limits.max_subgroup_enum_order));
  }
  std::set<Subgroup> all{g.trivial_subgroup()};
  std::deque<Subgroup> pending{g.trivial_subgroup()};
  while (!pending.empty()) {
    Subgroup h = std::move(pending.front());
    pending.pop_front();
    for (std::uint32_t x = 0; x < g.order(); ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      std::vector<std::uint32_t> gens = h;
      gens.push_back(x);
      Subgroup k = g.generated_by(gens);
      if (all.insert(k).second) pending.push_back(std::move(k));
    }
  }

  std::vector<SubgroupClass> classes;
  std::set<Subgroup> assigned;
  for (const auto& h : all) {
    if (assigned.count(h) != 0) continue;
    std::set<Subgroup> conjugates;
    for (std::uint32_t x = 0; x < g.order(); ++x) conjugates.insert(g.conjugate(h, x));
    SubgroupClass cls;
    cls.order = h.size();
    cls.size = conjugates.size();
    cls.representative = *conjugates.begin();
    cls.members.assign(conjugates.begin(), conjugates.end());
    assigned.insert(conjugates.begin(), conjugates.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.representative < b.representative;
  });
  for (std::size_t i = 0; i < classes.size();) {
    std::size_t j = i;
    while (j < classes.size() && classes[j].order == classes[i].order) ++j;
    for (std::size_t k = i; k < j; ++k) {
      classes[k].label = "H" + std::to_string(classes[k].order);
      if (j - i > 1) classes[k].label += static_cast<char>('a' + (k - i));
    }
    i = j;
  }
  return classes;
}

Integer mark(const PermGroup& g, const Subgroup& h1, const Subgroup& h2) {
  std::vector<bool> in_h1(g.order(), false);
  for (auto e : h1) in_h1[e] = true;
  std::size_t fixing = 0;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    const auto xi = g.inverse(x);
    bool inside = true;
    for (auto h : h2) {
      if (!in_h1[g.multiply(g.multiply(xi, h), x)]) {
        inside = false;
        break;
      }
    }
    if (inside) ++fixing;
  }
  return Integer(fixing / h1.size());
}

void TableOfMarks::validate() const {
  const std::size_t k = classes.size();
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "table of marks is empty");
  if (marks.size() != k) throw Error(ErrorKind::InvalidArgument, "marks matrix row count mismatch");
  for (std::size_t i = 0; i < k; ++i) {
    if (marks[i].size() != k) throw Error(ErrorKind::InvalidArgument, "marks matrix is not square");
    for (std::size_t j = i + 1; j < k; ++j) {
      if (marks[i][j] != 0) throw Error(ErrorKind::InvalidArgument, "marks matrix is not lower triangular");
    }
    if (marks[i][i] <= 0) throw Error(ErrorKind::InvalidArgument, "marks diagonal must be positive");
    for (std::size_t j = 0; j < i; ++j) {
      if (marks[i][j] < 0) throw Error(ErrorKind::InvalidArgument, "negative mark");
    }
  }
  for (const auto& v : marks[k - 1]) {
    if (v != 1) throw Error(ErrorKind::InvalidArgument, "last row (G/G) must be all ones");
  }
  if (classes[0].order != 0) {
    const Integer group_order = marks[0][0] * classes[0].order;
    for (std::size_t i = 0; i < k; ++i) {
      if (classes[i].order != 0 && marks[i][0] * classes[i].order != group_order) {
        throw Error(ErrorKind::InvalidArgument, "first column must hold the indices [G : H]");
      }
    }
  }
}

std::vector<Integer> TableOfMarks::distinct_entries() const {
  std::set<Integer> values;
  for (const auto& row : marks) values.insert(row.begin(), row.end());
  return {values.begin(), values.end()};
}

TableOfMarks TableOfMarks::relabeled(const std::map<std::string, std::string>& aliases) const {
  TableOfMarks copy = *this;
  for (auto& c : copy.classes) {
    auto it = aliases.find(c.label);
    if (it != aliases.end()) c.label = it->second;
  }
  return copy;
}

TableOfMarks table_of_marks(const PermGroup& g, const std::string& group_name, const Limits& limits) {
  const auto classes = subgroup_classes(g, limits);
  TableOfMarks table;
  table.group_name = group_name;
  for (const auto& c : classes) table.classes.push_back({c.label, c.order, c.size});
  table.marks.assign(classes.size(), std::vector<Integer>(classes.size()));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      table.marks[i][j] = mark(g, classes[i].representative, classes[j].representative);
    }
  }
  table.validate();
  return table;
}

std::map<std::string, std::string> a5_label_aliases() {
  return {{"H1", "e"},  {"H2", "C2"},   {"H3", "C3"},  {"H4", "V4"}, {"H5", "C5"},
          {"H6", "S3"}, {"H10", "D10"}, {"H12", "A4"}, {"H60", "A5"}};
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<unsigned> factor_orders) : factors_(std::move(factor_orders)) {
  for (auto n : factors_) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclic factor order must be positive");
    order_ *= n;
    exponent_ = std::lcm(exponent_, n);
  }
}

std::vector<unsigned> FiniteAbelianGroup::element(std::size_t index) const {
  std::vector<unsigned> t(factors_.size());
  for (std::size_t j = factors_.size(); j-- > 0;) {
    t[j] = static_cast<unsigned>(index % factors_[j]);
    index /= factors_[j];
  }
  return t;
}

std::size_t FiniteAbelianGroup::index_of(const std::vector<unsigned>& tuple) const {
  std::size_t index = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) index = index * factors_[j] + tuple[j] % factors_[j];
  return index;
}

std::size_t FiniteAbelianGroup::multiply(std::size_t a, std::size_t b) const {
  auto ta = element(a);
  const auto tb = element(b);
  for (std::size_t j = 0; j < ta.size(); ++j) ta[j] = (ta[j] + tb[j]) % factors_[j];
  return index_of(ta);
}

std::size_t FiniteAbelianGroup::generator(std::size_t factor) const {
  std::vector<unsigned> t(factors_.size(), 0);
  t.at(factor) = 1;
  return index_of(t);
}

std::string FiniteAbelianGroup::generator_name(std::size_t factor) const {
  return factors_.size() == 1 ? std::string("g") : "g" + std::to_string(factor);
}

std::string FiniteAbelianGroup::element_label(std::size_t index) const {
  const auto t = element(index);
  std::string label;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t[j] == 0) continue;
    if (!label.empty()) label += "*";
    label += generator_name(j);
    if (t[j] > 1) label += "^" + std::to_string(t[j]);
  }
  return label.empty() ? "1" : label;
}

std::string FiniteAbelianGroup::name() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (j > 0) out += "x";
    out += "C" + std::to_string(factors_[j]);
  }
  return out;
}

PermGroup FiniteAbelianGroup::as_perm_group(const Limits& limits) const {
  std::vector<Permutation> gens;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    std::vector<std::uint16_t> images(order_);
    const auto gj = generator(j);
    for (std::size_t x = 0; x < order_; ++x) images[x] = static_cast<std::uint16_t>(multiply(x, gj));
    gens.emplace_back(std::move(images));
  }
  return close_group(order_, std::move(gens), limits);
}

CyclotomicInteger Character::value(const FiniteAbelianGroup& g, std::size_t element) const {
  const auto t = g.element(element);
  long long exponent = 0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    exponent += static_cast<long long>(steps[j]) * t[j] * (m / g.factor_orders()[j]);
  }
  return CyclotomicInteger::root_of_unity(m, exponent);
}

std::string Character::label() const {
  std::string out = "chi[";
  for (std::size_t j = 0; j < steps.size(); ++j) {
    if (j > 0) out += ",";
    out += std::to_string(steps[j]);
  }
  return out + "]";
}

std::vector<Character> characters(const FiniteAbelianGroup& g, unsigned m) {
  if (m == 0 || m % g.exponent() != 0) {
    throw Error(ErrorKind::ExponentMismatch,
                "exponent " + std::to_string(g.exponent()) + " does not divide " + std::to_string(m));
  }
  std::vector<Character> out;
  out.reserve(g.order());
  for (std::size_t idx = 0; idx < g.order(); ++idx) {
    Character chi;
    chi.m = m;
    chi.steps = g.element(idx);
    for (std::size_t j = 0; j < g.rank(); ++j) {
      const unsigned nj = g.factor_orders()[j];
      auto v = CyclotomicInteger::root_of_unity(m, static_cast<long long>(chi.steps[j]) * (m / nj));
      if (pow(v, nj) != CyclotomicInteger::from_integer(1, m)) {
        throw Error(ErrorKind::InvalidArgument, "character fails the generator relation");
      }
      chi.generator_values.push_back(std::move(v));
    }
    out.push_back(std::move(chi));
  }
  return out;
}

}  // namespace aprings
