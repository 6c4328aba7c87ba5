#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "aprings/limits.hpp"
#include "aprings/ring_model.hpp"

namespace aprings {

// Materialized addition and multiplication tables of a finite commutative
// ring. Elements are indices 0..size()-1 in the carrier order of the
// source.
class FiniteRingTable {
 public:
  static FiniteRingTable from_model(const RingModel& ring, const Limits& limits = default_limits());
  // Burnside ring reduced mod p: (Z/p)^k with structure constants taken
  // from products of basis elements.
  static FiniteRingTable burnside_mod_p(const BurnsideModel& ring, unsigned p, const Limits& limits = default_limits());

  std::size_t size() const { return elements_.size(); }
  std::uint32_t zero() const { return zero_; }
  std::uint32_t one() const { return one_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * size() + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * size() + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }

  const std::vector<RingElement>& elements() const { return elements_; }
  std::optional<std::uint32_t> index_of(const RingElement& e) const;
  // S and -S
  const std::vector<std::uint32_t>& signed_generators() const { return generators_; }
  const std::string& name() const { return name_; }

  nlohmann::json to_json() const;

 private:
  void finish();

  std::string name_;
  std::vector<RingElement> elements_;
  std::unordered_map<RingElement, std::uint32_t, RingElementHash> index_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> generators_;
  std::uint32_t zero_ = 0;
  std::uint32_t one_ = 0;
};

// Sorted element indices.
using IdealSet = std::vector<std::uint32_t>;

IdealSet ideal_generated_by(const FiniteRingTable& t, const std::vector<std::uint32_t>& gens);

// Generated by 1 - a for a in S and -S.
IdealSet oracle_fundamental_ideal(const FiniteRingTable& t);

// Every ideal by saturation from {0}; sorted by size then contents.
std::vector<IdealSet> all_ideals(const FiniteRingTable& t, const Limits& limits = default_limits());

// Proper ideals whose quotient has no zero divisors.
std::vector<IdealSet> prime_ideals(const FiniteRingTable& t, const Limits& limits = default_limits());

// Element-set powers: I^k as the ideal generated by k-fold products.
IdealSet ideal_power(const FiniteRingTable& t, const IdealSet& ideal, unsigned k);

struct OraclePredicates {
  std::vector<bool> nilpotent;
  std::vector<bool> unit;
  std::vector<bool> zero_divisor;
  std::vector<bool> idempotent;
  std::vector<bool> torsion;
  std::vector<std::size_t> additive_order;
};

OraclePredicates exhaustive_predicates(const FiniteRingTable& t, const Limits& limits = default_limits());

// Exhaustive ring-axiom check; returns a description of the first
// violation.
std::optional<std::string> check_ring_axioms(const FiniteRingTable& t);

}  // namespace aprings
