#pragma once

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "milnorinf/apps.hpp"
#include "milnorinf/error.hpp"
#include "milnorinf/euler.hpp"
#include "milnorinf/parser.hpp"
#include "milnorinf/poly.hpp"

namespace mt {

using namespace milnorinf;

/// Parse in a fixed ring x1..xn.
inline Polynomial P(const std::string& text, std::size_t n) {
  return parse_polynomial(text, default_names(n)).poly;
}

inline std::vector<Polynomial> Ps(const std::vector<std::string>& texts, std::size_t n) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(P(t, n));
  return out;
}

inline WeightSystem W(std::vector<int> w) { return WeightSystem(std::move(w)); }

inline std::vector<Rational> Q(const std::vector<long>& xs) {
  return std::vector<Rational>(xs.begin(), xs.end());
}

inline ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::Internal;
}

/// Hand-rolled generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  int nonzero(int lo, int hi) {
    int v = 0;
    while (v == 0) v = integer(lo, hi);
    return v;
  }

  Rational rational(int lo, int hi, int max_den) {
    Rational r(integer(lo, hi), integer(1, max_den));
    r.canonicalize();
    return r;
  }

  Monomial monomial(std::size_t n, int max_exp) {
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, integer(0, max_exp));
    return m;
  }

  Polynomial polynomial(std::size_t n, int terms, int max_exp, int coeff = 5) {
    std::vector<Term> ts;
    for (int i = 0; i < terms; ++i) {
      Rational c(nonzero(-coeff, coeff), integer(1, 3));
      c.canonicalize();
      ts.push_back({monomial(n, max_exp), c});
    }
    return Polynomial::from_terms(n, std::move(ts));
  }

  /// Random sum of monomials of weighted degree exactly `degree`.
  Polynomial homogeneous(const WeightSystem& w, int degree, int terms, int coeff = 4) {
    std::vector<Term> ts;
    const std::size_t n = w.size();
    for (int attempt = 0; attempt < 200 && static_cast<int>(ts.size()) < terms; ++attempt) {
      Monomial m(n);
      int rest = degree;
      std::vector<std::size_t> order(n);
      for (std::size_t i = 0; i < n; ++i) order[i] = i;
      std::shuffle(order.begin(), order.end(), rng_);
      for (std::size_t j = 0; j + 1 < n; ++j) {
        std::size_t i = order[j];
        int e = integer(0, rest / w[i]);
        m.set(i, e);
        rest -= e * w[i];
      }
      std::size_t last = order[n - 1];
      if (rest % w[last] != 0) continue;
      m.set(last, rest / w[last]);
      ts.push_back({m, Rational(nonzero(-coeff, coeff))});
    }
    return Polynomial::from_terms(n, std::move(ts));
  }

  template <class T>
  void shuffle(std::vector<T>& xs) {
    std::shuffle(xs.begin(), xs.end(), rng_);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mt
