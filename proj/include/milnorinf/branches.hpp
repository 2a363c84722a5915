#pragma once

// One-dimensional singular locus of a weighted homogeneous top form:
// orbit representatives, isotropy, transversal germs and their local invariants.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "milnorinf/ideal.hpp"
#include "milnorinf/poly.hpp"

namespace milnorinf {

/// Which way the isotropy character labels a monomial y^alpha:
/// Plus puts it in eigenspace <w, alpha> mod d, Minus in -<w, alpha> mod d.
enum class EigenSign { Plus, Minus };

inline int sign_factor(EigenSign s) { return s == EigenSign::Plus ? 1 : -1; }

inline long floor_mod(long a, long d) {
  long r = a % d;
  return r < 0 ? r + d : r;
}

struct TransversalGerm {
  Polynomial germ;               // in n germ variables (slice variable removed)
  std::vector<int> germ_weights; // weights with the slice index removed
  std::size_t slice_index = 0;
};

struct BranchData {
  std::vector<Rational> representative;
  int isotropy_order = 1;
  std::size_t slice_index = 0;
  Polynomial germ;
  std::vector<int> germ_weights;
  long mu0 = 0;
  long tau0 = 0;
  std::vector<long> eigen_dims;
  /// Reduced lex basis of the orbit closure, printed; used for dedupe and ordering.
  std::string fingerprint;
};

struct BranchSearchOptions {
  std::vector<std::vector<Rational>> hints;
  EigenSign sign = EigenSign::Plus;
  /// Slice values x_m = c tried in order; the first pass uses +-1 only.
  std::vector<int> slice_values{1, -1, 2, -2, 3, -3};
};

/// gcd{ w_i : a_i != 0 }.
int isotropy_order(std::span<const Rational> point, const WeightSystem& w);

/// Reduced lex basis of the ideal of the closure of C* . a (the parameter eliminated).
StandardBasis orbit_closure_ideal(std::span<const Rational> point, const WeightSystem& w);

/// Rational roots of a polynomial that only involves variable `var`, ascending.
std::vector<Rational> rational_roots(const Polynomial& univariate, std::size_t var);

/// All rational points of a zero-dimensional system (lex basis + back-substitution).
std::vector<std::vector<Rational>> rational_solutions(std::span<const Polynomial> system);

TransversalGerm transversal_germ(const Polynomial& top, std::span<const Rational> point, const WeightSystem& w);

long local_milnor(const Polynomial& germ);
long local_tjurina(const Polynomial& germ);

/// dim M(g)^l for l = 0..d-1, after verifying the Jacobian ideal is invariant.
std::vector<long> eigenspace_dims(const Polynomial& germ, std::span<const int> germ_weights, int d,
                                  EigenSign sign = EigenSign::Plus);

/// Eigenspace dimensions of M(g + x0^k): entry l is the sum of dims[l - t], 0 <= t <= k-2.
std::vector<long> suspended_dims(std::span<const long> dims, int d, int k);

/// Full analysis of one representative point.
BranchData analyze_branch(const Polynomial& top, std::span<const Rational> point, const WeightSystem& w,
                          EigenSign sign = EigenSign::Plus);

/// One record per one-dimensional component of V(grad top), sorted by fingerprint.
std::vector<BranchData> find_branches(const Polynomial& top, const WeightSystem& w,
                                      const BranchSearchOptions& options = {});

}  // namespace milnorinf
