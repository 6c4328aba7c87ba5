#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aprings/cyclotomic.hpp"
#include "aprings/integer.hpp"
#include "aprings/limits.hpp"

namespace aprings {

// Bijection of {0, ..., d-1}; images()[i] is the image of point i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint16_t> images);

  static Permutation identity(std::size_t degree);
  // Cycles are lists of points, e.g. {{0,1,2,3,4}}.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  const std::vector<std::uint16_t>& images() const { return images_; }
  std::uint16_t operator()(std::size_t point) const { return images_[point]; }
  bool is_identity() const;
  Permutation inverse() const;

  // (a * b)(i) = a(b(i)): apply b first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint16_t> images_;
};

// Subgroup of a PermGroup as sorted element indices.
using Subgroup = std::vector<std::uint32_t>;

class PermGroup {
 public:
  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  // Sorted lexicographically by images; index 0 is the identity.
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  std::optional<std::uint32_t> index_of(const Permutation& p) const;

  // Index arithmetic; requires the multiplication table, which exists when
  // order() <= the subgroup enumeration bound used at construction.
  bool has_table() const { return !table_.empty(); }
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse(std::uint32_t a) const { return inverses_.at(a); }

  Subgroup trivial_subgroup() const { return {0}; }
  Subgroup whole() const;
  Subgroup generated_by(const std::vector<std::uint32_t>& gens) const;
  Subgroup conjugate(const Subgroup& h, std::uint32_t x) const;  // x h x^-1

  friend PermGroup close_group(std::size_t degree, std::vector<Permutation> generators, const Limits& limits);

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::map<Permutation, std::uint32_t> index_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverses_;
};

// Closure of the generators under composition. Throws OrderBoundExceeded.
PermGroup close_group(std::size_t degree, std::vector<Permutation> generators,
                      const Limits& limits = default_limits());

// "A5", "S3", "C2", "V4", "trivial" and a few more; nullopt when unknown.
std::optional<PermGroup> named_group(const std::string& name, const Limits& limits = default_limits());
std::vector<std::string> named_group_names();

struct SubgroupClass {
  std::string label;        // order based: "H1", "H2", "H4a", "H4b", ...
  std::size_t order = 0;    // |H|
  std::size_t size = 0;     // number of conjugates
  Subgroup representative;  // the lexicographically minimal conjugate
  std::vector<Subgroup> members;
};

// All subgroups by iterated extension <H, g>, partitioned into conjugacy
// classes ordered by |H| and then by representative. Requires
// |G| <= limits.max_subgroup_enum_order.
std::vector<SubgroupClass> subgroup_classes(const PermGroup& g, const Limits& limits = default_limits());

// Fixed points of h2 on the cosets G/h1.
Integer mark(const PermGroup& g, const Subgroup& h1, const Subgroup& h2);

struct ClassInfo {
  std::string label;
  std::size_t order = 0;
  std::size_t size = 0;
};

// marks[i][j] = mark of class j on G/H_i. Lower triangular with positive
// diagonal; column 0 holds the indices [G : H_i].
struct TableOfMarks {
  std::string group_name;
  std::vector<ClassInfo> classes;
  std::vector<std::vector<Integer>> marks;

  std::size_t size() const { return classes.size(); }
  // Throws InvalidArgument naming the first violated invariant.
  void validate() const;
  // Sorted distinct entries.
  std::vector<Integer> distinct_entries() const;
  // Same matrix with labels replaced through the alias map.
  TableOfMarks relabeled(const std::map<std::string, std::string>& aliases) const;
};

TableOfMarks table_of_marks(const PermGroup& g, const std::string& group_name = "",
                            const Limits& limits = default_limits());

// The 9x9 A5 table, bundled with the library, with labels e, C2, ..., A5.
TableOfMarks bundled_a5_table();
// Canonical order-based A5 labels -> bundled labels.
std::map<std::string, std::string> a5_label_aliases();

// Direct product of cyclic groups; elements are residue tuples in mixed
// radix order (first factor varies slowest).
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<unsigned> factor_orders);

  const std::vector<unsigned>& factor_orders() const { return factors_; }
  std::size_t order() const { return order_; }
  unsigned exponent() const { return exponent_; }
  std::size_t rank() const { return factors_.size(); }

  std::vector<unsigned> element(std::size_t index) const;
  std::size_t index_of(const std::vector<unsigned>& tuple) const;
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t generator(std::size_t factor) const;
  // "1", "g", "g^2", "g0*g1^3"
  std::string element_label(std::size_t index) const;
  std::string generator_name(std::size_t factor) const;
  // "C2xC2"
  std::string name() const;

  // Permutation representation via the regular action.
  PermGroup as_perm_group(const Limits& limits = default_limits()) const;

 private:
  std::vector<unsigned> factors_;
  std::size_t order_ = 1;
  unsigned exponent_ = 1;
};

// Homomorphism G -> mu_m given by exponents: generator j maps to
// zeta_m^(steps[j] * m / n_j).
struct Character {
  unsigned m = 1;
  std::vector<unsigned> steps;
  std::vector<CyclotomicInteger> generator_values;

  CyclotomicInteger value(const FiniteAbelianGroup& g, std::size_t element) const;
  std::string label() const;
};

// All |G| characters into mu_m. Throws ExponentMismatch unless exp(G) | m.
std::vector<Character> characters(const FiniteAbelianGroup& g, unsigned m);

}  // namespace aprings
