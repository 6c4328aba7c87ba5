#include "aprings/annihilator.hpp"

#include <algorithm>
#include <set>

#include "aprings/error.hpp"

namespace aprings {
namespace {

void sort_unique(std::vector<CyclotomicInteger>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_summands(int n, const Limits& limits) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "number of summands must be positive");
  if (n > limits.max_summands) {
    throw Error(ErrorKind::BoundExceeded,
                "n = " + std::to_string(n) + " exceeds the summand bound " + std::to_string(limits.max_summands));
  }
}

// One extension step: {t + eps*sigma}. Output sorted and deduplicated.
std::vector<CyclotomicInteger> extend(const std::vector<CyclotomicInteger>& current,
                                      const std::vector<CyclotomicInteger>& roots, SignMode mode,
                                      const Limits& limits) {
  std::vector<CyclotomicInteger> next;
  next.reserve(current.size() * roots.size() * (mode == SignMode::Signed ? 2 : 1));
  for (const auto& t : current) {
    for (const auto& r : roots) {
      next.push_back(t + r);
      if (mode == SignMode::Signed) next.push_back(t - r);
    }
  }
  sort_unique(next);
  if (next.size() > limits.max_sumset_size) {
    throw Error(ErrorKind::BoundExceeded, "|T_n| = " + std::to_string(next.size()) + " exceeds the sum-set cap");
  }
  return next;
}

}  // namespace

RootSpec::RootSpec(std::vector<RootAtom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw Error(ErrorKind::InvalidArgument, "root spec needs at least one atom");
  for (const auto& atom : atoms_) {
    if (const auto* ints = std::get_if<IntegerRoots>(&atom)) {
      if (ints->values.empty()) throw Error(ErrorKind::InvalidArgument, "integer atom is empty");
      std::set<Integer> seen(ints->values.begin(), ints->values.end());
      if (seen.size() != ints->values.size()) {
        throw Error(ErrorKind::InvalidArgument, "integer atom values must be pairwise distinct");
      }
    } else if (std::get<RootsOfUnity>(atom).order == 0) {
      throw Error(ErrorKind::InvalidArgument, "roots-of-unity order must be positive");
    }
  }
}

RootSpec RootSpec::integers(std::vector<Integer> values) {
  return RootSpec({RootAtom{IntegerRoots{std::move(values)}}});
}

RootSpec RootSpec::roots_of_unity(unsigned m) { return RootSpec({RootAtom{RootsOfUnity{m}}}); }

RootSpec RootSpec::join(const RootSpec& a, const RootSpec& b) {
  std::vector<RootAtom> atoms = a.atoms_;
  atoms.insert(atoms.end(), b.atoms_.begin(), b.atoms_.end());
  return RootSpec(std::move(atoms));
}

unsigned RootSpec::common_order() const {
  unsigned order = 1;
  for (const auto& atom : atoms_) {
    if (const auto* mu = std::get_if<RootsOfUnity>(&atom)) order = lcm_order(order, mu->order);
  }
  return order;
}

std::vector<CyclotomicInteger> RootSpec::roots() const {
  const unsigned order = common_order();
  std::vector<CyclotomicInteger> out;
  for (const auto& atom : atoms_) {
    if (const auto* ints = std::get_if<IntegerRoots>(&atom)) {
      for (const auto& v : ints->values) out.push_back(CyclotomicInteger::from_integer(v, order));
    } else {
      const unsigned m = std::get<RootsOfUnity>(atom).order;
      for (unsigned j = 0; j < m; ++j) out.push_back(CyclotomicInteger::root_of_unity(m, j).lifted(order));
    }
  }
  sort_unique(out);
  return out;
}

IntPolynomial RootSpec::polynomial() const {
  const auto r = roots();
  return poly_from_roots(r);
}

std::string to_string(SignMode mode) { return mode == SignMode::Signed ? "signed" : "unsigned"; }

SumSet root_sum_set(const RootSpec& spec, int n, SignMode mode, const Limits& limits) {
  check_summands(n, limits);
  const unsigned order = spec.common_order();
  const auto roots = spec.roots();
  std::vector<CyclotomicInteger> current{CyclotomicInteger::from_integer(0, order)};
  for (int k = 0; k < n; ++k) current = extend(current, roots, mode, limits);
  return SumSet{order, n, std::move(current)};
}

SumSet mixed_root_sum_set(std::span<const RootSpec> specs, SignMode mode, const Limits& limits) {
  check_summands(static_cast<int>(specs.size()), limits);
  unsigned order = 1;
  for (const auto& s : specs) order = lcm_order(order, s.common_order());
  std::vector<CyclotomicInteger> current{CyclotomicInteger::from_integer(0, order)};
  for (const auto& s : specs) {
    auto roots = s.roots();
    for (auto& r : roots) r = r.lifted(order);
    current = extend(current, roots, mode, limits);
  }
  return SumSet{order, static_cast<int>(specs.size()), std::move(current)};
}

IntPolynomial mixed_annihilating_polynomial(std::span<const RootSpec> specs, SignMode mode, const Limits& limits) {
  const SumSet t = mixed_root_sum_set(specs, mode, limits);
  return poly_from_roots(t.elements);
}

IntPolynomial annihilating_polynomial(const RootSpec& spec, int n, SignMode mode, const Limits& limits) {
  const SumSet t = root_sum_set(spec, n, mode, limits);
  return poly_from_roots(t.elements);
}

IntPolynomial lewis_polynomial(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  std::set<Integer> roots;
  for (int j = 0; j <= n; ++j) roots.insert(Integer(n - 2 * j));
  const std::vector<Integer> r(roots.begin(), roots.end());
  return IntPolynomial::from_integer_roots(r);
}

IntPolynomial quartic_t(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  const Integer nn = n;
  IntPolynomial t = IntPolynomial::monomial(1, 4) - IntPolynomial::constant(nn * nn * nn * nn);
  for (int a = 1; a < n; ++a) {
    const Integer ia = a;
    const Integer ib = n - a;
    const Integer s = ia * ia + ib * ib;
    t *= IntPolynomial(std::vector<Integer>{s * s, 0, -2 * (ia * ia - ib * ib), 0, 1});
  }
  return t;
}

IntPolynomial quartic_p(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  IntPolynomial p = (n % 2 == 0) ? IntPolynomial::monomial(1, 1) : IntPolynomial::constant(1);
  for (int j = n; j >= 1; j -= 2) p *= quartic_t(j);
  return p;
}

IntPolynomial pfister_chain_polynomial(int n, unsigned k) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  const Integer step = Integer(1) << k;
  std::set<Integer> roots;
  for (int j = 0; j <= n; ++j) roots.insert(step * j);
  const std::vector<Integer> r(roots.begin(), roots.end());
  return IntPolynomial::from_integer_roots(r);
}

Integer degree_bound(int n, unsigned k) {
  if (n < 1 || k < 1) throw Error(ErrorKind::InvalidArgument, "n and k must be positive");
  return (Integer(1) << (n - 1)) * ((Integer(1) << k) - 1) + 1;
}

}  // namespace aprings
