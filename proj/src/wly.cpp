#include "milnorinf/wly.hpp"

#include "milnorinf/error.hpp"
#include "milnorinf/ideal.hpp"

namespace milnorinf {

int singular_dimension(const Polynomial& top, const WeightSystem& w) {
  auto grad = gradient(top);
  auto order = MonomialOrder::weighted_degrevlex({w.values().begin(), w.values().end()});
  return krull_dimension(groebner_basis(grad, order));
}

bool sing_locus_is_isolated(const Polynomial& top) {
  auto grad = gradient(top);
  return krull_dimension(groebner_basis(grad, MonomialOrder::degrevlex(top.nvars()))) <= 0;
}

WlyAnalysis check_wly(const WeightedDecomposition& dec) {
  WlyAnalysis out;
  out.dec = dec;
  const std::size_t n = dec.nvars();
  auto gens = gradient(dec.top());
  gens.push_back(dec.gap_part());
  out.is_wly = true;
  for (std::size_t i = 0; i < n && out.is_wly; ++i)
    out.is_wly = radical_membership(Polynomial::variable(n, i), gens);
  out.sing_dim = singular_dimension(dec.top(), dec.weights);
  out.quasi_tame = out.is_wly;
  require(!out.is_wly || out.sing_dim <= 1, ErrorKind::Internal,
          "WLY polynomial with a singular locus of dimension " + std::to_string(out.sing_dim));
  return out;
}

WlyAnalysis assume_wly(const Polynomial& top, const WeightSystem& w, int k) {
  int N = 0;
  require(top.nvars() == w.size(), ErrorKind::Structural, "weights and top form differ in variable count");
  require(!top.is_constant(), ErrorKind::DegenerateInput, "top form is constant");
  require(is_weighted_homogeneous(top, w.values(), &N), ErrorKind::Structural,
          "top form is not weighted homogeneous for the given weights");
  require(k > 0 && k < N, ErrorKind::NotMixed, "k must satisfy 0 < k < N");
  WlyAnalysis out{WeightedDecomposition{w, N, k, {{N, top}}}, true, -1, true, true};
  out.sing_dim = singular_dimension(top, w);
  require(out.sing_dim <= 1, ErrorKind::HypothesisFailure,
          "singular locus of the top form has dimension " + std::to_string(out.sing_dim) +
              "; no polynomial with this top form is WLY at infinity");
  return out;
}

}  // namespace milnorinf
