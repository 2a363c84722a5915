#pragma once

// The weighted Le-Yomdin condition at infinity and the shape of Sing(f_N).

#include "milnorinf/poly.hpp"

namespace milnorinf {

struct WlyAnalysis {
  WeightedDecomposition dec;
  bool is_wly = false;
  /// Dimension of V(grad f_N); -1 when empty.
  int sing_dim = -1;
  bool quasi_tame = false;
  /// Abstract mode: only f_N and k are known and the condition is taken on trust.
  bool assumed = false;
};

/// V(grad f_N, f_{N-k}) is contained in the origin, tested one coordinate at a time.
WlyAnalysis check_wly(const WeightedDecomposition& dec);

/// WLY analysis of an abstract instance (top form and gap only).
WlyAnalysis assume_wly(const Polynomial& top, const WeightSystem& w, int k);

/// Dimension of V(grad f_N) under the weighted order.
int singular_dimension(const Polynomial& top, const WeightSystem& w);

bool sing_locus_is_isolated(const Polynomial& top);

}  // namespace milnorinf
