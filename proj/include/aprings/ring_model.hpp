#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "aprings/annihilator.hpp"
#include "aprings/group.hpp"
#include "aprings/integer.hpp"
#include "aprings/limits.hpp"
#include "aprings/polynomial.hpp"

namespace aprings {

// Coordinates of a ring element; the meaning of each coordinate is fixed
// by the owning model (basis coefficients, residues, marks-basis
// coefficients, ...). Elements handed out by a model are canonical, so
// equality is coordinate equality.
struct RingElement {
  std::vector<Integer> coords;

  friend bool operator==(const RingElement&, const RingElement&) = default;
  friend auto operator<=>(const RingElement& a, const RingElement& b) { return a.coords <=> b.coords; }
};

struct RingElementHash {
  std::size_t operator()(const RingElement& e) const;
};

enum class ModelKind { Z, ProductZ, GroupRing, Burnside, FiniteQuotient, Product };

std::string to_string(ModelKind kind);

// An AP ring: commutative ring, generating set S, generating polynomial q
// with q(s) = 0 for every s in S. Subclasses are immutable after
// construction.
class RingModel {
 public:
  virtual ~RingModel() = default;

  virtual ModelKind kind() const = 0;
  virtual std::string name() const = 0;
  virtual std::size_t rank() const = 0;
  virtual std::vector<std::string> basis_labels() const = 0;

  RingElement zero() const { return RingElement{std::vector<Integer>(rank())}; }
  virtual RingElement one() const = 0;
  // The image of n under the unique ring map Z -> R.
  virtual RingElement from_integer(const Integer& n) const = 0;

  virtual RingElement add(const RingElement& a, const RingElement& b) const;
  virtual RingElement neg(const RingElement& a) const;
  virtual RingElement mul(const RingElement& a, const RingElement& b) const = 0;
  RingElement sub(const RingElement& a, const RingElement& b) const { return add(a, neg(b)); }
  RingElement power(const RingElement& a, unsigned exponent) const;
  RingElement scale(const Integer& n, const RingElement& a) const { return mul(from_integer(n), a); }
  bool equal(const RingElement& a, const RingElement& b) const { return a == b; }
  bool is_zero(const RingElement& a) const { return a == zero(); }

  // Maps arbitrary coordinates to the canonical representative.
  virtual RingElement canonical(RingElement e) const;
  // Throws InvalidArgument if e is not a canonical element of this model.
  void check_element(const RingElement& e) const;

  // Generating set S (signs are supplied by the length map).
  const std::vector<RingElement>& generators() const { return generators_; }
  const std::vector<std::string>& generator_labels() const { return generator_labels_; }
  // Names usable in element expressions.
  virtual std::map<std::string, RingElement> named_elements() const;

  const IntPolynomial& generating_polynomial() const { return q_; }
  const RootSpec& root_spec() const { return roots_; }

  // Minimal number of signed generators summing to e.
  virtual Integer length(const RingElement& e, const Limits& limits = default_limits()) const = 0;

  virtual bool is_finite() const { return false; }
  // All elements, canonical order. Throws Unsupported for infinite models.
  virtual std::vector<RingElement> carrier(const Limits& limits = default_limits()) const;

  virtual nlohmann::json element_to_json(const RingElement& e) const;
  virtual nlohmann::json describe() const;

  // p_n for this model's root set in signed mode, memoized per n.
  IntPolynomial annihilating_polynomial_for(int n, const Limits& limits = default_limits()) const;

 protected:
  // Installs S and q and checks q(s) = 0 for all s (throws R2Violation) and
  // that q is squarefree.
  void set_structure(std::vector<RingElement> generators, std::vector<std::string> labels, RootSpec roots);

 private:
  std::vector<RingElement> generators_;
  std::vector<std::string> generator_labels_;
  RootSpec roots_;
  IntPolynomial q_;
  mutable std::mutex cache_mutex_;
  mutable std::map<int, IntPolynomial> annihilator_cache_;
};

using ModelPtr = std::shared_ptr<const RingModel>;

// Horner evaluation with R's arithmetic; integer coefficients enter
// through from_integer.
RingElement poly_eval_in_ring(const IntPolynomial& p, const RingElement& r, const RingModel& ring);

class IntegersModel final : public RingModel {
 public:
  IntegersModel();
  ModelKind kind() const override { return ModelKind::Z; }
  std::string name() const override { return "Z"; }
  std::size_t rank() const override { return 1; }
  std::vector<std::string> basis_labels() const override { return {"1"}; }
  RingElement one() const override { return RingElement{{1}}; }
  RingElement from_integer(const Integer& n) const override { return RingElement{{n}}; }
  RingElement mul(const RingElement& a, const RingElement& b) const override;
  Integer length(const RingElement& e, const Limits& limits) const override;
  nlohmann::json element_to_json(const RingElement& e) const override;
};

class ProductZModel final : public RingModel {
 public:
  explicit ProductZModel(std::size_t factors);
  ModelKind kind() const override { return ModelKind::ProductZ; }
  std::string name() const override;
  std::size_t rank() const override { return factors_; }
  std::vector<std::string> basis_labels() const override;
  RingElement one() const override;
  RingElement from_integer(const Integer& n) const override;
  RingElement mul(const RingElement& a, const RingElement& b) const override;
  Integer length(const RingElement& e, const Limits& limits) const override;
  std::map<std::string, RingElement> named_elements() const override;

 private:
  std::size_t factors_;
};

class GroupRingModel final : public RingModel {
 public:
  explicit GroupRingModel(FiniteAbelianGroup group);
  ModelKind kind() const override { return ModelKind::GroupRing; }
  std::string name() const override;
  std::size_t rank() const override { return group_.order(); }
  std::vector<std::string> basis_labels() const override;
  RingElement one() const override;
  RingElement from_integer(const Integer& n) const override;
  RingElement mul(const RingElement& a, const RingElement& b) const override;
  Integer length(const RingElement& e, const Limits& limits) const override;
  std::map<std::string, RingElement> named_elements() const override;
  nlohmann::json describe() const override;

  const FiniteAbelianGroup& group() const { return group_; }
  // exp(G), raised to 2 for the trivial group
  unsigned root_order() const;

 private:
  FiniteAbelianGroup group_;
};

class BurnsideModel final : public RingModel {
 public:
  explicit BurnsideModel(TableOfMarks table);
  ModelKind kind() const override { return ModelKind::Burnside; }
  std::string name() const override;
  std::size_t rank() const override { return table_.size(); }
  std::vector<std::string> basis_labels() const override;
  RingElement one() const override;
  RingElement from_integer(const Integer& n) const override;
  // marks -> pointwise product -> triangular pullback
  RingElement mul(const RingElement& a, const RingElement& b) const override;
  Integer length(const RingElement& e, const Limits& limits) const override;
  std::map<std::string, RingElement> named_elements() const override;
  nlohmann::json describe() const override;

  const TableOfMarks& table() const { return table_; }
  // (phi_U(x))_U
  std::vector<Integer> marks_of(const RingElement& x) const;
  // Inverse of marks_of; throws NonIntegralPullback.
  RingElement from_marks(const std::vector<Integer>& marks) const;

 private:
  TableOfMarks table_;
};

// (Z/N)[G] modulo the ideal generated by the given elements. Elements are
// canonical coset representatives (coordinate-wise residues, minimal
// encoding in the coset).
class FiniteQuotientModel final : public RingModel {
 public:
  FiniteQuotientModel(Integer modulus, FiniteAbelianGroup group, std::vector<std::vector<Integer>> ideal_generators,
                      const Limits& limits = default_limits(), std::string display_name = "");
  ModelKind kind() const override { return ModelKind::FiniteQuotient; }
  std::string name() const override;
  std::size_t rank() const override { return group_.order(); }
  std::vector<std::string> basis_labels() const override;
  RingElement one() const override;
  RingElement from_integer(const Integer& n) const override;
  RingElement add(const RingElement& a, const RingElement& b) const override;
  RingElement neg(const RingElement& a) const override;
  RingElement mul(const RingElement& a, const RingElement& b) const override;
  RingElement canonical(RingElement e) const override;
  Integer length(const RingElement& e, const Limits& limits) const override;
  std::map<std::string, RingElement> named_elements() const override;
  bool is_finite() const override { return true; }
  std::vector<RingElement> carrier(const Limits& limits) const override;
  nlohmann::json describe() const override;

  const FiniteAbelianGroup& group() const { return group_; }
  unsigned modulus() const { return modulus_; }
  // reduced mod N, over the basis of (Z/N)[G]
  const std::vector<std::vector<Integer>>& ideal_generators() const { return ideal_generators_; }
  std::size_t size() const { return reps_.size(); }
  unsigned root_order() const;

 private:
  using Code = std::uint32_t;
  Code encode(const std::vector<unsigned>& residues) const;
  std::vector<unsigned> decode(Code code) const;
  RingElement element_of(Code code) const;
  Code code_of(const RingElement& e) const;

  unsigned modulus_;
  FiniteAbelianGroup group_;
  std::vector<std::vector<Integer>> ideal_generators_;
  std::string display_name_;
  std::vector<Code> rep_of_;         // code -> canonical representative code
  std::vector<Code> reps_;           // sorted canonical codes
  std::vector<int> distance_;        // BFS length per code, -1 if unreachable
};

class ProductModel final : public RingModel {
 public:
  ProductModel(ModelPtr left, ModelPtr right);
  ModelKind kind() const override { return ModelKind::Product; }
  std::string name() const override;
  std::size_t rank() const override { return left_->rank() + right_->rank(); }
  std::vector<std::string> basis_labels() const override;
  RingElement one() const override;
  RingElement from_integer(const Integer& n) const override;
  RingElement add(const RingElement& a, const RingElement& b) const override;
  RingElement neg(const RingElement& a) const override;
  RingElement mul(const RingElement& a, const RingElement& b) const override;
  RingElement canonical(RingElement e) const override;
  Integer length(const RingElement& e, const Limits& limits) const override;
  std::map<std::string, RingElement> named_elements() const override;
  bool is_finite() const override { return left_->is_finite() && right_->is_finite(); }
  std::vector<RingElement> carrier(const Limits& limits) const override;
  nlohmann::json element_to_json(const RingElement& e) const override;
  nlohmann::json describe() const override;

  const ModelPtr& left() const { return left_; }
  const ModelPtr& right() const { return right_; }
  RingElement pair(const RingElement& a, const RingElement& b) const;
  RingElement left_part(const RingElement& e) const;
  RingElement right_part(const RingElement& e) const;

 private:
  ModelPtr left_;
  ModelPtr right_;
};

// Builds a model from its JSON description, e.g.
//   {"kind":"GroupRing","group":[2,2]}
//   {"kind":"FiniteQuotient","modulus":4,"group":[2],"ideal":["1+g"]}
//   {"kind":"Burnside","group":"A5"}
ModelPtr construct_model(const nlohmann::json& spec, const Limits& limits = default_limits());

// "Z", "Z^3", "Z[C2]", "Z[C2xC2]", "Z4[C2]", "Z/6", "burnside-A5", "W(F3)", ...
ModelPtr preset_model(const std::string& name, const Limits& limits = default_limits());
std::vector<std::string> preset_model_names();

struct AnnihilationReport {
  Integer length;
  IntPolynomial polynomial;
  bool annihilated = false;
};

// n = length(r), p_n from the model's root set (signed), p_n(r) == 0?
AnnihilationReport verify_annihilated(const RingModel& ring, const RingElement& r,
                                      const Limits& limits = default_limits());

}  // namespace aprings
