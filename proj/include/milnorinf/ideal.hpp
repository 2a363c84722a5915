#pragma once

// Groebner bases for global orders, Mora standard bases for the local
// (anti-graded) order, and the quotient invariants derived from them.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "milnorinf/poly.hpp"

namespace milnorinf {

class MonomialOrder {
 public:
  enum class Kind { WeightedDegRevLex, Lex, Local };

  /// Weighted degree first, reverse lexicographic tie-break.
  static MonomialOrder weighted_degrevlex(std::vector<int> weights);
  static MonomialOrder degrevlex(std::size_t nvars);
  /// x1 > x2 > ... > xn.
  static MonomialOrder lex();
  /// Anti-graded by total degree (1 is the largest monomial), reverse lexicographic tie-break.
  static MonomialOrder local();

  Kind kind() const { return kind_; }
  std::span<const int> weights() const { return weights_; }
  bool is_global() const { return kind_ != Kind::Local; }
  std::string name() const;

  /// <0, 0, >0 as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  MonomialOrder(Kind kind, std::vector<int> weights) : kind_(kind), weights_(std::move(weights)) {}

  Kind kind_;
  std::vector<int> weights_;
};

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order);
Rational leading_coefficient(const Polynomial& p, const MonomialOrder& order);

struct StandardBasis {
  std::size_t nvars = 0;
  std::vector<Polynomial> generators;
  MonomialOrder order = MonomialOrder::lex();
  bool reduced = false;

  std::vector<Monomial> leading_monomials() const;
  bool is_unit_ideal() const;
};

/// Finite set of standard monomials, or the Infinite marker.
struct Staircase {
  bool infinite = false;
  std::vector<Monomial> monomials;

  std::size_t size() const { return monomials.size(); }
};

/// Reduced Groebner basis (monic generators sorted by decreasing leading monomial).
StandardBasis groebner_basis(std::span<const Polynomial> gens, const MonomialOrder& order);

/// Standard basis for the local order via Mora's tangent-cone algorithm.
StandardBasis local_standard_basis(std::span<const Polynomial> gens);

/// Full normal form for global orders; Mora weak normal form for the local order.
/// Global results are exact remainders; local results are only meaningful up to a unit
/// and a nonzero scalar, which is enough for membership tests.
Polynomial normal_form(const Polynomial& p, const StandardBasis& basis);

bool ideal_contains(const StandardBasis& basis, const Polynomial& p);

/// Standard monomials; `limit` guards against runaway enumeration.
Staircase quotient_staircase(const StandardBasis& basis, std::size_t limit = 4'000'000);

/// Dimension of the affine variety of a global-order basis; -1 for the unit ideal.
int krull_dimension(const StandardBasis& basis);

/// p vanishes on V(gens), decided by 1 in gens + (1 - t p) in one extra variable.
bool radical_membership(const Polynomial& p, std::span<const Polynomial> gens);

}  // namespace milnorinf
