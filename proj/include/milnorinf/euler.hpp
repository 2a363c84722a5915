#pragma once

// Euler characteristics of the affine Milnor fibres of f_N and of the
// homogenization, and the total Milnor number assembled from them.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "milnorinf/branches.hpp"
#include "milnorinf/poly.hpp"
#include "milnorinf/wly.hpp"

namespace milnorinf {

/// Coefficients c_0..c_S of prod (1 - t^(N - w_i)) / (1 - t^(w_i)).
struct PoincareSeries {
  WeightSystem w;
  int N = 0;
  std::vector<Integer> coeffs;
};

PoincareSeries poincare_coeffs(const WeightSystem& w, int N, int S);

/// 1 + (-1)^n (c_0 + ... + c_{mN - w}), n + 1 the number of weights.
Integer chi_virtual(const WeightSystem& w, int N, int m);

/// prod (N - w_i) / w_i.
Rational weight_product(const WeightSystem& w, int N);

enum class IsoStatus { Yes, ProbablyNo, Skipped };

struct IsoProbe {
  IsoStatus status = IsoStatus::ProbablyNo;
  std::optional<Polynomial> witness;
  /// ProbablyNo backed by a combinatorial obstruction rather than failed trials.
  bool certain = false;
  std::string reason;
};

struct IsoProbeOptions {
  int trials = 8;
  std::uint64_t seed = 1;
  /// Trials are skipped when prod (N - w_i) / w_i exceeds this.
  long budget = 20000;
};

/// Is there a weighted homogeneous polynomial of type (w; N) with an isolated singularity?
IsoProbe iso_poly_exists(const WeightSystem& w, int N, const IsoProbeOptions& options = {});

/// Per-branch data entering the fibre formulas.
struct BranchInvariants {
  int d = 1;
  std::vector<long> dims;
  long mu0 = 0;
  /// mu0 - tau0 when known.
  std::optional<long> defect;
};

BranchInvariants invariants_of(const BranchData& b);
/// Data of g + x0^k for k >= 2.
BranchInvariants suspend(const BranchInvariants& b, int k);

enum class FiberRoute { IsolatedProduct, IsolatedType, Virtual, Conjectural };

const char* to_string(FiberRoute route);

struct FiberChi {
  Integer value;
  FiberRoute route = FiberRoute::IsolatedProduct;
  /// Order m used by the virtual route.
  int m = 0;
};

/// Isolated-type formula: needs a polynomial of type (w; N) with isolated singularity.
Integer chi_fiber_isolated_type(const WeightSystem& w, int N, std::span<const BranchInvariants> branches);

/// Virtual formula at a fixed order m.
Integer chi_fiber_virtual(const WeightSystem& w, int N, std::span<const BranchInvariants> branches, int m);

/// Virtual formula at the first m >= n + 1 that repeats one period later.
FiberChi chi_fiber_stabilized(const WeightSystem& w, int N, std::span<const BranchInvariants> branches);

/// chi(F_N): isolated product, isolated-type formula, virtual formula, or conjectural virtual formula.
FiberChi chi_fiber(const WeightSystem& w, int N, std::span<const BranchInvariants> branches, IsoStatus iso);

/// chi of the affine Milnor fibre of the homogenization. `iso_extended` is the status for (1, w).
FiberChi chi_tilde(const WeightSystem& w, int N, int k, std::span<const BranchInvariants> branches,
                   IsoStatus iso_extended);

/// Direct formula when a polynomial of type (w; N) with isolated singularity exists.
Rational mu_direct_isolated_type(const WeightSystem& w, int N, int k, std::span<const BranchInvariants> branches);

/// Direct formula for transversal germs with mu0 = tau0, at order m.
Rational mu_direct_virtual(const WeightSystem& w, int N, int k, std::span<const BranchInvariants> branches, int m);

/// mu_direct_virtual at a stabilized order; returns (value, m).
std::pair<Rational, int> mu_direct_virtual_stabilized(const WeightSystem& w, int N, int k,
                                                      std::span<const BranchInvariants> branches);

struct MilnorValue {
  enum class Kind { Finite, Infinite, Conjectural };
  Kind kind = Kind::Finite;
  Integer value;

  static MilnorValue finite(Integer v) { return {Kind::Finite, std::move(v)}; }
  static MilnorValue infinite() { return {Kind::Infinite, 0}; }
  bool is_finite() const { return kind == Kind::Finite; }
};

std::string to_string(const MilnorValue& mu);

/// Which formula produced mu.
enum class FormulaPath { Isolated, KEqualsOne, IsolatedType, EqualTjurina, Mixed, Conjectural };

const char* to_string(FormulaPath path);

struct Hypothesis {
  std::string name;
  std::string status;
};

struct MilnorOptions {
  EigenSign sign = EigenSign::Plus;
  bool allow_conjectural = false;
  IsoProbeOptions probe;
  std::vector<std::vector<Rational>> branch_hints;
  /// Tabulate chi_tilde over 1 < k < N and fit constant + slope * k.
  bool symbolic_k = true;
};

struct MilnorReport {
  WlyAnalysis wly;
  std::vector<BranchData> branches;
  EigenSign sign = EigenSign::Plus;
  MilnorValue mu;
  FormulaPath path = FormulaPath::Isolated;
  Integer chi_FN;
  FiberRoute chi_FN_route = FiberRoute::IsolatedProduct;
  Integer chi_tilde;
  FiberRoute chi_tilde_route = FiberRoute::IsolatedProduct;
  /// chi_tilde = constant + slope * k over 1 < k < N (same formula route).
  std::optional<std::pair<Integer, Integer>> chi_tilde_symbolic;
  std::optional<Integer> mu_direct;
  std::optional<Integer> mu_pipeline;
  std::optional<IsoProbe> iso;
  std::vector<Hypothesis> hypotheses;
  std::vector<std::string> notes;

  const WeightSystem& weights() const { return wly.dec.weights; }
  int N() const { return wly.dec.N; }
  int k() const { return wly.dec.k; }
  std::size_t nvars() const { return wly.dec.nvars(); }
};

/// Throws HypothesisFailure if f is not WLY at infinity or the only route is conjectural and not allowed.
MilnorReport total_milnor(const WlyAnalysis& analysis, const MilnorOptions& options = {});

/// Same, from an already computed branch list.
MilnorReport total_milnor(const WlyAnalysis& analysis, std::vector<BranchData> branches,
                          const MilnorOptions& options = {});

/// Only f_N and k are given; WLY is assumed.
MilnorReport total_milnor_abstract(const Polynomial& top, const WeightSystem& w, int k,
                                   const MilnorOptions& options = {});

/// dim Q[x] / (grad f), or Infinite.
MilnorValue oracle_total_milnor(const Polynomial& f);

}  // namespace milnorinf
