#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aprings/cyclotomic.hpp"
#include "aprings/limits.hpp"
#include "aprings/ring_model.hpp"

namespace aprings {

// Ring homomorphism R -> Z, stored as its values on the model's basis
// coordinates: sigma(r) = sum_i r_i * values[i].
struct Signature {
  std::string label;
  std::vector<Integer> basis_values;

  Integer evaluate(const RingElement& r) const;
};

// All signatures of R (empty for finite models). Each one is checked to be
// multiplicative on basis products and to send 1 to 1. Throws Unsupported
// for group rings of exponent > 2.
std::vector<Signature> signatures(const RingModel& ring);

enum class DescriptorKind { SignatureIdeal, SignaturePlusP, Fundamental, MinimalCharacter, BurnsideDress };

std::string to_string(DescriptorKind kind);

// A prime ideal given by a membership procedure. Character-type
// descriptors hold a linear functional into Z[zeta_m] (integer valued for
// signatures and marks); membership is vanishing, or vanishing mod p.
struct PrimeIdealDescriptor {
  DescriptorKind kind = DescriptorKind::SignatureIdeal;
  std::string label;
  std::vector<CyclotomicInteger> basis_values;
  Integer p = 0;  // 0: exact vanishing

  bool contains(const RingModel& ring, const RingElement& r) const;
  CyclotomicInteger evaluate(const RingElement& r) const;
  nlohmann::json to_json() const;
};

// Kernels of the characters of the generating monoid (group rings,
// Burnside rings, Z^k, Z, and products of these).
std::vector<PrimeIdealDescriptor> minimal_primes(const RingModel& ring);

// Prime ideals of a finite quotient of Z[G], exp(G) <= 2, from the
// classification: sigma + pR for p | N with sigma(K) = 0 mod p, the p = 2
// members collapsing to the fundamental ideal.
std::vector<PrimeIdealDescriptor> finite_quotient_primes(const FiniteQuotientModel& ring);

nlohmann::json spectrum_report(const RingModel& ring, unsigned prime_bound = 13,
                               const Limits& limits = default_limits());

// Dress ideals p_{U,p} = {x : phi_U(x) = 0 mod p}, p = 0 meaning phi_U(x) = 0.
struct DressIdeal {
  std::size_t cls = 0;
  unsigned p = 0;
  std::string label;
};

struct DressRelations {
  std::vector<DressIdeal> ideals;
  std::vector<std::vector<bool>> contained;  // contained[a][b]: ideal a is a subset of ideal b
  std::vector<bool> minimal;                 // among the listed ideals
  std::vector<bool> maximal;
};

// Containment decided on lattice generators of the left ideal.
bool dress_contained(const BurnsideModel& ring, std::size_t u, unsigned p, std::size_t v, unsigned q);
DressRelations dress_relations(const BurnsideModel& ring, const std::vector<unsigned>& primes);
nlohmann::json to_json(const DressRelations& rel);

// Z-basis of {x : w.x = 0 mod m} (m = 0: w.x = 0).
std::vector<std::vector<Integer>> congruence_lattice_basis(const std::vector<Integer>& w, const Integer& m);

struct Admissibility {
  bool admissible = false;
  std::string witness;
};

// Requires q = X^(2^k) - 1 and a group of generators; throws Unsupported
// otherwise.
Admissibility is_admissible(const RingModel& ring);

// AP(k): every sum of fewer than 2^k signed generators lying in I^k is 0.
// Finite models only.
bool ap_condition_check(const RingModel& ring, unsigned k, const Limits& limits = default_limits());

// Fundamental ideal <1 - a : a in S u -S> of a finite model, as elements.
std::vector<RingElement> fundamental_ideal_elements(const RingModel& ring, const Limits& limits = default_limits());

struct ElementPredicates {
  std::optional<bool> nilpotent;
  std::optional<bool> torsion;
  std::optional<bool> unit;
  std::optional<bool> zero_divisor;
  std::optional<bool> idempotent;
  std::optional<bool> in_fundamental;
  std::optional<bool> in_every_signature_ideal;
  std::string strategy;

  nlohmann::json to_json() const;
};

ElementPredicates element_predicates(const RingModel& ring, const RingElement& r,
                                     const Limits& limits = default_limits());

std::vector<unsigned> primes_up_to(unsigned bound);

}  // namespace aprings
