#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "aprings/cyclotomic.hpp"
#include "aprings/integer.hpp"
#include "aprings/limits.hpp"
#include "aprings/polynomial.hpp"

namespace aprings {

struct IntegerRoots {
  std::vector<Integer> values;  // pairwise distinct
};

struct RootsOfUnity {
  unsigned order;  // all m-th roots of unity
};

using RootAtom = std::variant<IntegerRoots, RootsOfUnity>;

// Root set of a generating polynomial, as a union of atoms. Overlaps between
// atoms collapse: the root set is always a set.
class RootSpec {
 public:
  RootSpec() = default;
  explicit RootSpec(std::vector<RootAtom> atoms);

  static RootSpec integers(std::vector<Integer> values);
  static RootSpec roots_of_unity(unsigned m);
  static RootSpec join(const RootSpec& a, const RootSpec& b);

  const std::vector<RootAtom>& atoms() const { return atoms_; }
  // lcm of the atom orders (1 for integer atoms)
  unsigned common_order() const;
  // Sorted, duplicate-free, all lifted to common_order().
  std::vector<CyclotomicInteger> roots() const;
  // prod (X - sigma) over roots()
  IntPolynomial polynomial() const;

 private:
  std::vector<RootAtom> atoms_;
};

enum class SignMode { Signed, Unsigned };

std::string to_string(SignMode mode);

struct SumSet {
  unsigned order = 1;
  int summands = 0;
  std::vector<CyclotomicInteger> elements;  // canonical sorted, duplicate-free
};

// Values sum_{i<=n} eps_i sigma_i (eps_i = +-1 when signed, +1 otherwise),
// built by extending T_{k-1} by one root at a time.
SumSet root_sum_set(const RootSpec& spec, int n, SignMode mode, const Limits& limits = default_limits());

// The i-th summand is drawn from specs[i].
SumSet mixed_root_sum_set(std::span<const RootSpec> specs, SignMode mode, const Limits& limits = default_limits());

IntPolynomial mixed_annihilating_polynomial(std::span<const RootSpec> specs, SignMode mode,
                                            const Limits& limits = default_limits());

IntPolynomial annihilating_polynomial(const RootSpec& spec, int n, SignMode mode,
                                      const Limits& limits = default_limits());

// Closed forms.

// prod over the set {-n, -n+2, ..., n} of (X - j)
IntPolynomial lewis_polynomial(int n);

// (x^4 - n^4) * prod_{a+b=n, a,b>=1} (x^4 - 2(a^2-b^2)x^2 + (a^2+b^2)^2)
IntPolynomial quartic_t(int n);

// t_n t_{n-2} ... t_2 X for even n, t_n t_{n-2} ... t_1 for odd n
IntPolynomial quartic_p(int n);

// X (X - 2^k) (X - 2*2^k) ... (X - n*2^k)
IntPolynomial pfister_chain_polynomial(int n, unsigned k);

// 2^(n-1) (2^k - 1) + 1
Integer degree_bound(int n, unsigned k);

}  // namespace aprings
