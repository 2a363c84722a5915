#pragma once

// Sparse multivariate polynomials over Q with weighted-degree structure.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "milnorinf/rational.hpp"

namespace milnorinf {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector x^alpha of fixed length (the ring's variable count).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<int> exponents);
  static Monomial from_exponents(std::span<const int> exponents);
  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const { return n_; }
  int operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, int exponent);

  int total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Variables with positive exponent, as a bit set.
  std::uint32_t support() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  /// Plain lexicographic comparison of exponent vectors (storage order only).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::array<std::int32_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
};

/// Positive integer weights with gcd 1.
class WeightSystem {
 public:
  explicit WeightSystem(std::vector<int> weights);
  static WeightSystem usual(std::size_t nvars);

  std::size_t size() const { return w_.size(); }
  int operator[](std::size_t i) const { return w_[i]; }
  std::span<const int> values() const { return w_; }
  /// w = w_1 + ... + w_{n+1}.
  int sum() const;
  int max() const;
  bool is_usual() const;
  /// (1, w): the system of the homogenized polynomial.
  WeightSystem with_leading_one() const;

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

 private:
  std::vector<int> w_;
};

int weighted_degree(const Monomial& m, std::span<const int> weights);
inline int weighted_degree(const Monomial& m, const WeightSystem& w) {
  return weighted_degree(m, w.values());
}

struct Term {
  Monomial mono;
  Rational coeff;
};

class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);
  /// Combines like terms and drops zeros.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  /// Terms in ascending storage order (lexicographic on exponents).
  std::span<const Term> terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  int total_degree() const;
  /// Lowest total degree of a term; -1 for zero.
  int order() const;
  /// Variables that occur, as a bit set.
  std::uint32_t support() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned exponent) const;
  Polynomial derivative(std::size_t var) const;

  Rational evaluate(std::span<const Rational> point) const;
  /// x_var := value; the ring is unchanged (the variable simply disappears).
  Polynomial substitute(std::size_t var, const Rational& value) const;
  /// x_i := x_i + shift_i for every i.
  Polynomial translate(std::span<const Rational> shift) const;
  /// Moves variable i to position mapping[i] in a ring of new_nvars variables.
  Polynomial remap(std::span<const std::size_t> mapping, std::size_t new_nvars) const;
  /// Drops variable `var` (which must not occur), shrinking the ring by one.
  Polynomial drop_variable(std::size_t var) const;

 private:
  void check_ring(const Polynomial& other) const;

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

std::vector<Polynomial> gradient(const Polynomial& f);

/// Default names x1, x2, ... when `names` is empty.
std::vector<std::string> default_names(std::size_t nvars, const std::string& stem = "x",
                                       int first_index = 1);
/// Display in graded reverse lexicographic order (highest first).
std::string to_string(const Polynomial& p, std::span<const std::string> names = {});

/// f = f_N + f_{N-k} + ... + f_0 with respect to a weight system.
struct WeightedDecomposition {
  WeightSystem weights = WeightSystem::usual(1);
  int N = 0;
  int k = 0;
  std::map<int, Polynomial> parts;

  const Polynomial& top() const { return parts.at(N); }
  const Polynomial& gap_part() const { return parts.at(N - k); }
  std::size_t nvars() const { return weights.size(); }
  Polynomial sum() const;
};

bool is_weighted_homogeneous(const Polynomial& p, std::span<const int> weights, int* degree = nullptr);

WeightedDecomposition decompose(const Polynomial& f, const WeightSystem& w);

/// f~(x0, x) = f_N + x0^k f_{N-k} + ... + x0^N f_0, with x0 as variable 0.
Polynomial homogenize(const WeightedDecomposition& dec);

/// f(x) + h(y) on disjoint variables: f's variables first, then h's.
Polynomial direct_sum(const Polynomial& f, const Polynomial& h);

}  // namespace milnorinf
