#include "milnorinf/euler.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "milnorinf/error.hpp"
#include "milnorinf/ideal.hpp"

namespace milnorinf {

namespace {

int sign_pow(long e) { return e % 2 == 0 ? 1 : -1; }

/// Prefix sums of the Poincare coefficients, grown on demand.
class VirtualTable {
 public:
  VirtualTable(WeightSystem w, int N) : w_(std::move(w)), N_(N), wsum_(w_.sum()) {}

  const WeightSystem& weights() const { return w_; }

  Integer chi(int m) {
    long S = static_cast<long>(m) * N_ - wsum_;
    int n = static_cast<int>(w_.size()) - 1;
    if (S < 0) return 1;
    ensure(S);
    return 1 + sign_pow(n) * prefix_[S];
  }

 private:
  void ensure(long S) {
    if (S < static_cast<long>(prefix_.size())) return;
    long target = std::max<long>(S, 2 * static_cast<long>(prefix_.size()));
    auto series = poincare_coeffs(w_, N_, static_cast<int>(target));
    prefix_.assign(series.coeffs.size(), 0);
    Integer acc = 0;
    for (std::size_t s = 0; s < series.coeffs.size(); ++s) prefix_[s] = acc += series.coeffs[s];
  }

  WeightSystem w_;
  int N_;
  int wsum_;
  std::vector<Integer> prefix_;
};

long dim_at(const BranchInvariants& b, long index) { return b.dims[floor_mod(index, b.d)]; }

/// sum_j sum_{s=1..N} sum_{t=0..tmax} dim_j(base + s - t)
Integer branch_sum(std::span<const BranchInvariants> branches, int N, long base, int tmax) {
  Integer total = 0;
  for (const auto& b : branches) {
    std::vector<long> count(b.d, 0);
    for (long s = 1; s <= N; ++s) ++count[floor_mod(base + s, b.d)];
    long acc = 0;
    for (long r = 0; r < b.d; ++r) {
      if (count[r] == 0) continue;
      long inner = 0;
      if (tmax + 1 >= b.d) {
        long full = (tmax + 1) / b.d;
        inner += full * b.mu0;
        for (long t = full * b.d; t <= tmax; ++t) inner += dim_at(b, r - t);
      } else {
        for (long t = 0; t <= tmax; ++t) inner += dim_at(b, r - t);
      }
      acc += count[r] * inner;
    }
    total += acc;
  }
  return total;
}

long period(std::span<const BranchInvariants> branches, int N) {
  long L = 1;
  for (const auto& b : branches) L = std::lcm(L, static_cast<long>(b.d / std::gcd(N, b.d)));
  return L;
}

template <class T>
std::pair<T, int> stabilize(int m0, long L, const std::function<T(int)>& value) {
  for (long m = m0; m <= m0 + 10 * L; ++m) {
    T v = value(static_cast<int>(m));
    if (v == value(static_cast<int>(m + L))) return {v, static_cast<int>(m)};
  }
  fail(ErrorKind::Internal, "virtual Euler characteristic formula did not stabilize");
}

Integer integral(const Rational& q, const std::string& what) {
  require(is_integer(q), ErrorKind::Internal, what + " is not an integer: " + to_string(q));
  return q.get_num();
}

Integer chi_virtual_formula(VirtualTable& table, int N, std::span<const BranchInvariants> branches, int m) {
  const auto& w = table.weights();
  int n = static_cast<int>(w.size()) - 1;
  long base = static_cast<long>(m - 1) * N - w.sum();
  return table.chi(m) + sign_pow(n + 1) * branch_sum(branches, N, base, 0);
}

FiberChi chi_fiber_with(VirtualTable& table, int N, std::span<const BranchInvariants> branches, IsoStatus iso) {
  const auto& w = table.weights();
  if (branches.empty()) {
    int n = static_cast<int>(w.size()) - 1;
    return {1 + sign_pow(n) * integral(weight_product(w, N), "weight product"), FiberRoute::IsolatedProduct, 0};
  }
  if (iso == IsoStatus::Yes) return {chi_fiber_isolated_type(w, N, branches), FiberRoute::IsolatedType, 0};
  bool good = std::all_of(branches.begin(), branches.end(),
                          [](const BranchInvariants& b) { return b.defect && *b.defect <= 1; });
  int m0 = static_cast<int>(w.size());
  auto [value, m] = stabilize<Integer>(m0, period(branches, N), [&](int mm) {
    return chi_virtual_formula(table, N, branches, mm);
  });
  return {value, good ? FiberRoute::Virtual : FiberRoute::Conjectural, m};
}

FiberChi chi_tilde_with(VirtualTable& extended, const WeightSystem& w, int N, int k,
                        std::span<const BranchInvariants> branches, IsoStatus iso_extended) {
  int n = static_cast<int>(w.size()) - 1;
  if (k == 1 || branches.empty())
    return {1 + sign_pow(n + 1) * (N - 1) * integral(weight_product(w, N), "weight product"),
            FiberRoute::IsolatedProduct, 0};
  std::vector<BranchInvariants> suspended;
  for (const auto& b : branches) suspended.push_back(suspend(b, k));
  return chi_fiber_with(extended, N, suspended, iso_extended);
}

Rational mu_virtual_with(VirtualTable& base, VirtualTable& extended, int N, int k,
                         std::span<const BranchInvariants> branches, int m) {
  const auto& w = base.weights();
  int n = static_cast<int>(w.size()) - 1;
  Rational head(sign_pow(n + 1) * (extended.chi(m) - base.chi(m)), N);
  long index = static_cast<long>(m - 1) * N - w.sum();
  Rational tail(branch_sum(branches, N, index, k - 1), N);
  Rational out = head - tail;
  out.canonicalize();
  return out;
}

std::vector<Monomial> monomials_of_degree(const WeightSystem& w, int N, std::size_t cap, bool& overflow) {
  std::vector<Monomial> out;
  const std::size_t n = w.size();
  Monomial m(n);
  overflow = false;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (overflow) return;
    if (i + 1 == n) {
      if (remaining % w[i] == 0) {
        m.set(i, remaining / w[i]);
        out.push_back(m);
        m.set(i, 0);
        if (out.size() > cap) overflow = true;
      }
      return;
    }
    for (int e = 0; e * w[i] <= remaining; ++e) {
      m.set(i, e);
      rec(i + 1, remaining - e * w[i]);
    }
    m.set(i, 0);
  };
  rec(0, N);
  return out;
}

/// A nonempty subset I with fewer than |I| partials that can be nonzero on the coordinate space C^I.
std::optional<std::uint32_t> coordinate_obstruction(const std::vector<Monomial>& monos, std::size_t n) {
  for (std::uint32_t I = 1; I < (std::uint32_t{1} << n); ++I) {
    std::uint32_t J = 0;
    for (const auto& m : monos) {
      std::uint32_t supp = m.support();
      for (std::size_t j = 0; j < n; ++j) {
        if (m[j] == 0) continue;
        std::uint32_t rest = m[j] == 1 ? supp & ~(std::uint32_t{1} << j) : supp;
        if ((rest & ~I) == 0) J |= std::uint32_t{1} << j;
      }
    }
    if (std::popcount(J) < std::popcount(I)) return I;
  }
  return std::nullopt;
}

std::string subset_text(std::uint32_t I, std::size_t n) {
  std::string s = "{";
  for (std::size_t i = 0; i < n; ++i)
    if (I & (std::uint32_t{1} << i)) s += (s.size() > 1 ? "," : "") + std::string("x") + std::to_string(i + 1);
  return s + "}";
}

}  // namespace

PoincareSeries poincare_coeffs(const WeightSystem& w, int N, int S) {
  require(N > w.max(), ErrorKind::DegenerateWeights, "degree must exceed every weight");
  require(S >= 0, ErrorKind::Structural, "truncation order must be nonnegative");
  std::vector<Integer> c(S + 1, 0);
  c[0] = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    int shift = N - w[i];
    for (int s = S; s >= shift; --s) c[s] -= c[s - shift];
    for (int s = w[i]; s <= S; ++s) c[s] += c[s - w[i]];
  }
  return {w, N, std::move(c)};
}

Integer chi_virtual(const WeightSystem& w, int N, int m) {
  require(m >= 1, ErrorKind::Structural, "order m must be positive");
  VirtualTable table(w, N);
  return table.chi(m);
}

Rational weight_product(const WeightSystem& w, int N) {
  Rational p = 1;
  for (std::size_t i = 0; i < w.size(); ++i) p *= Rational(N - w[i], w[i]);
  p.canonicalize();
  return p;
}

IsoProbe iso_poly_exists(const WeightSystem& w, int N, const IsoProbeOptions& options) {
  IsoProbe out;
  const std::size_t n = w.size();
  if (N <= 0) {
    out.certain = true;
    out.reason = "degree is not positive";
    return out;
  }
  Rational prod = N > w.max() ? weight_product(w, N) : Rational(0);
  if (N > w.max() && !is_integer(prod)) {
    out.certain = true;
    out.reason = "prod (N - w_i) / w_i = " + to_string(prod) + " is not an integer";
    return out;
  }
  bool overflow = false;
  auto monos = monomials_of_degree(w, N, 200000, overflow);
  if (overflow) {
    out.status = IsoStatus::Skipped;
    out.reason = "too many monomials of degree N";
    return out;
  }
  if (n <= 12) {
    if (auto I = coordinate_obstruction(monos, n)) {
      out.certain = true;
      out.reason = "every polynomial of this type is singular along the coordinate space " + subset_text(*I, n);
      return out;
    }
  }
  if (prod > options.budget) {
    out.status = IsoStatus::Skipped;
    out.reason = "random search skipped: prod (N - w_i) / w_i = " + to_string(prod) + " exceeds the budget";
    return out;
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> coeff(1, 10);
  auto order = MonomialOrder::weighted_degrevlex({w.values().begin(), w.values().end()});
  for (int trial = 0; trial < options.trials; ++trial) {
    std::vector<Term> terms;
    for (const auto& m : monos) {
      int c = coeff(rng) - 5;
      if (c <= 0) --c;
      terms.push_back({m, c});
    }
    Polynomial p = Polynomial::from_terms(n, std::move(terms));
    auto grad = gradient(p);
    if (krull_dimension(groebner_basis(grad, order)) <= 0) {
      out.status = IsoStatus::Yes;
      out.witness = std::move(p);
      out.reason = "random combination with isolated singularity found in trial " + std::to_string(trial + 1);
      return out;
    }
  }
  out.reason = "no isolated singularity in " + std::to_string(options.trials) + " random trials";
  return out;
}

BranchInvariants invariants_of(const BranchData& b) {
  return {b.isotropy_order, b.eigen_dims, b.mu0, b.mu0 - b.tau0};
}

BranchInvariants suspend(const BranchInvariants& b, int k) {
  BranchInvariants out;
  out.d = b.d;
  out.dims = suspended_dims(b.dims, b.d, k);
  out.mu0 = (k - 1) * b.mu0;
  if (b.defect && *b.defect == 0) out.defect = 0;
  else if (b.defect && *b.defect == 1) out.defect = k;
  return out;
}

const char* to_string(FiberRoute route) {
  switch (route) {
    case FiberRoute::IsolatedProduct: return "isolated-product";
    case FiberRoute::IsolatedType: return "isolated-type";
    case FiberRoute::Virtual: return "virtual";
    case FiberRoute::Conjectural: return "virtual-conjectural";
  }
  return "?";
}

Integer chi_fiber_isolated_type(const WeightSystem& w, int N, std::span<const BranchInvariants> branches) {
  int n = static_cast<int>(w.size()) - 1;
  Integer prod = integral(weight_product(w, N), "weight product");
  long base = -static_cast<long>(N) - w.sum();
  return 1 + sign_pow(n) * prod + sign_pow(n + 1) * branch_sum(branches, N, base, 0);
}

Integer chi_fiber_virtual(const WeightSystem& w, int N, std::span<const BranchInvariants> branches, int m) {
  VirtualTable table(w, N);
  return chi_virtual_formula(table, N, branches, m);
}

FiberChi chi_fiber_stabilized(const WeightSystem& w, int N, std::span<const BranchInvariants> branches) {
  VirtualTable table(w, N);
  return chi_fiber_with(table, N, branches, IsoStatus::ProbablyNo);
}

FiberChi chi_fiber(const WeightSystem& w, int N, std::span<const BranchInvariants> branches, IsoStatus iso) {
  VirtualTable table(w, N);
  return chi_fiber_with(table, N, branches, iso);
}

FiberChi chi_tilde(const WeightSystem& w, int N, int k, std::span<const BranchInvariants> branches,
                   IsoStatus iso_extended) {
  require(k >= 1 && k < N, ErrorKind::Structural, "k must satisfy 0 < k < N");
  VirtualTable extended(w.with_leading_one(), N);
  return chi_tilde_with(extended, w, N, k, branches, iso_extended);
}

Rational mu_direct_isolated_type(const WeightSystem& w, int N, int k, std::span<const BranchInvariants> branches) {
  long base = -static_cast<long>(N) - w.sum();
  Rational out = weight_product(w, N) - Rational(branch_sum(branches, N, base, k - 1), N);
  out.canonicalize();
  return out;
}

Rational mu_direct_virtual(const WeightSystem& w, int N, int k, std::span<const BranchInvariants> branches, int m) {
  VirtualTable base(w, N), extended(w.with_leading_one(), N);
  return mu_virtual_with(base, extended, N, k, branches, m);
}

std::pair<Rational, int> mu_direct_virtual_stabilized(const WeightSystem& w, int N, int k,
                                                      std::span<const BranchInvariants> branches) {
  VirtualTable base(w, N), extended(w.with_leading_one(), N);
  return stabilize<Rational>(static_cast<int>(w.size()), period(branches, N), [&](int m) {
    return mu_virtual_with(base, extended, N, k, branches, m);
  });
}

std::string to_string(const MilnorValue& mu) {
  switch (mu.kind) {
    case MilnorValue::Kind::Finite: return to_string(mu.value);
    case MilnorValue::Kind::Infinite: return "infinite";
    case MilnorValue::Kind::Conjectural: return to_string(mu.value) + " (conjectural)";
  }
  return "?";
}

const char* to_string(FormulaPath path) {
  switch (path) {
    case FormulaPath::Isolated: return "isolated-top-form";
    case FormulaPath::KEqualsOne: return "k-equals-one";
    case FormulaPath::IsolatedType: return "isolated-type-exists";
    case FormulaPath::EqualTjurina: return "milnor-equals-tjurina";
    case FormulaPath::Mixed: return "mixed";
    case FormulaPath::Conjectural: return "conjectural";
  }
  return "?";
}

namespace {

Integer divide_by_N(const Integer& numerator, int N, EigenSign sign, const std::string& what) {
  Rational q(numerator, N);
  q.canonicalize();
  require(is_integer(q), ErrorKind::Internal,
          what + " is not divisible by N = " + std::to_string(N) + " (eigen sign " +
              (sign == EigenSign::Plus ? "plus" : "minus") + "); the eigenspace convention is likely wrong");
  return q.get_num();
}

void fit_symbolic(MilnorReport& r, std::span<const BranchInvariants> B, IsoStatus iso_tilde, VirtualTable& extended) {
  const int N = r.N();
  if (N < 4) return;
  std::vector<int> ks;
  if (N <= 600) {
    for (int k = 2; k < N; ++k) ks.push_back(k);
  } else {
    for (int i = 0; i < 64; ++i) ks.push_back(2 + static_cast<int>(static_cast<long>(N - 3) * i / 63));
  }
  std::vector<Integer> values;
  for (int k : ks) {
    FiberChi c = chi_tilde_with(extended, r.weights(), N, k, B, iso_tilde);
    if (c.route != r.chi_tilde_route) {
      r.notes.push_back("chi_tilde changes formula route across k; no affine form reported");
      return;
    }
    values.push_back(c.value);
  }
  Integer slope = values[1] - values[0];
  slope /= (ks[1] - ks[0]);
  Integer constant = values[0] - slope * ks[0];
  for (std::size_t i = 0; i < ks.size(); ++i)
    if (values[i] != constant + slope * ks[i]) {
      r.notes.push_back("chi_tilde is not affine in k; no affine form reported");
      return;
    }
  r.chi_tilde_symbolic = std::make_pair(constant, slope);
}

}  // namespace

MilnorReport total_milnor(const WlyAnalysis& analysis, const MilnorOptions& options) {
  std::vector<BranchData> branches;
  if (analysis.sing_dim == 1) {
    BranchSearchOptions search;
    search.hints = options.branch_hints;
    search.sign = options.sign;
    branches = find_branches(analysis.dec.top(), analysis.dec.weights, search);
  }
  return total_milnor(analysis, std::move(branches), options);
}

MilnorReport total_milnor(const WlyAnalysis& analysis, std::vector<BranchData> branches,
                          const MilnorOptions& options) {
  require(analysis.is_wly, ErrorKind::HypothesisFailure, "polynomial is not WLY at infinity");
  MilnorReport r;
  r.wly = analysis;
  r.branches = std::move(branches);
  r.sign = options.sign;
  const auto& dec = analysis.dec;
  const WeightSystem& w = dec.weights;
  const int N = dec.N, k = dec.k;
  const int n = static_cast<int>(w.size()) - 1;
  require(N > w.max(), ErrorKind::DegenerateWeights, "degree N must exceed every weight");
  r.hypotheses.push_back({"WLY at infinity", analysis.assumed ? "assumed" : "verified"});
  Rational prod = weight_product(w, N);
  VirtualTable base(w, N), extended(w.with_leading_one(), N);

  if (analysis.sing_dim <= 0) {
    require(r.branches.empty(), ErrorKind::Internal, "isolated top form with branch data");
    r.hypotheses.push_back({"isolated singularity of f_N", "verified"});
    r.path = FormulaPath::Isolated;
    Integer mu = integral(prod, "weight product of an isolated top form");
    r.chi_FN = chi_fiber_with(base, N, {}, IsoStatus::Yes).value;
    r.chi_tilde = chi_tilde_with(extended, w, N, k, {}, IsoStatus::Yes).value;
    r.mu_direct = mu;
    r.mu_pipeline = divide_by_N(sign_pow(n + 1) * (r.chi_tilde - r.chi_FN), N, r.sign, "chi difference");
    require(*r.mu_pipeline == mu, ErrorKind::Internal, "isolated product and Euler characteristics disagree");
    r.mu = MilnorValue::finite(mu);
    return r;
  }
  require(analysis.sing_dim == 1, ErrorKind::NotCurve, "singular locus of f_N is not a curve");
  require(!r.branches.empty(), ErrorKind::NotCurve, "one-dimensional singular locus without branches");
  r.hypotheses.push_back({"one-dimensional singular locus of f_N", "verified"});

  std::vector<BranchInvariants> B;
  for (const auto& b : r.branches) {
    long total = std::accumulate(b.eigen_dims.begin(), b.eigen_dims.end(), 0L);
    require(total == b.mu0, ErrorKind::Internal, "eigenspace dimensions do not add up to mu0");
    require(b.tau0 <= b.mu0, ErrorKind::Internal, "tau0 exceeds mu0");
    if (!analysis.assumed)
      require(dec.gap_part().evaluate(b.representative) != 0, ErrorKind::Internal,
              "f_{N-k} vanishes at a branch point of a WLY polynomial");
    B.push_back(invariants_of(b));
  }
  r.hypotheses.push_back({"f_{N-k} nonzero on branches", analysis.assumed ? "assumed" : "verified"});
  bool all_equal = std::all_of(B.begin(), B.end(), [](const BranchInvariants& b) { return *b.defect == 0; });
  bool all_le1 = std::all_of(B.begin(), B.end(), [](const BranchInvariants& b) { return *b.defect <= 1; });
  r.hypotheses.push_back({"mu0 = tau0 on every branch", all_equal ? "holds" : "fails"});
  r.hypotheses.push_back({"mu0 - tau0 <= 1 on every branch", all_le1 ? "holds" : "fails"});

  r.iso = iso_poly_exists(w, N, options.probe);
  const char* iso_text = r.iso->status == IsoStatus::Yes ? "exists"
                         : r.iso->status == IsoStatus::Skipped ? "undecided"
                         : r.iso->certain ? "does not exist" : "probably does not exist";
  r.hypotheses.push_back({"isolated polynomial of type (w;N)", std::string(iso_text) + ": " + r.iso->reason});
  IsoStatus iso_tilde = r.iso->status == IsoStatus::Yes ? IsoStatus::Yes : IsoStatus::ProbablyNo;

  bool conjectural = false;
  if (k == 1) {
    r.path = FormulaPath::KEqualsOne;
    FiberChi fc = chi_fiber_with(base, N, B, r.iso->status);
    FiberChi tc = chi_tilde_with(extended, w, N, k, B, iso_tilde);
    r.chi_FN = fc.value;
    r.chi_FN_route = fc.route;
    r.chi_tilde = tc.value;
    r.chi_tilde_route = tc.route;
    r.mu_pipeline = divide_by_N(sign_pow(n + 1) * (r.chi_tilde - r.chi_FN), N, r.sign, "chi difference");
    conjectural = fc.route == FiberRoute::Conjectural;
    r.mu = MilnorValue::finite(*r.mu_pipeline);
  } else if (r.iso->status == IsoStatus::Yes) {
    r.path = FormulaPath::IsolatedType;
    Rational direct = mu_direct_isolated_type(w, N, k, B);
    r.mu_direct = integral(direct, "direct formula value (eigen sign " +
                                       std::string(r.sign == EigenSign::Plus ? "plus" : "minus") + ")");
    FiberChi fc = chi_fiber_with(base, N, B, IsoStatus::Yes);
    FiberChi tc = chi_tilde_with(extended, w, N, k, B, IsoStatus::Yes);
    r.chi_FN = fc.value;
    r.chi_FN_route = fc.route;
    r.chi_tilde = tc.value;
    r.chi_tilde_route = tc.route;
    r.mu_pipeline = divide_by_N(sign_pow(n + 1) * (r.chi_tilde - r.chi_FN), N, r.sign, "chi difference");
    require(*r.mu_direct == *r.mu_pipeline, ErrorKind::Internal, "direct formula and Euler characteristics disagree");
    r.mu = MilnorValue::finite(*r.mu_direct);
  } else if (all_equal) {
    r.path = FormulaPath::EqualTjurina;
    auto [direct, m] = stabilize<Rational>(n + 1, period(B, N), [&](int mm) {
      return mu_virtual_with(base, extended, N, k, B, mm);
    });
    r.mu_direct = integral(direct, "direct formula value");
    FiberChi fc = chi_fiber_with(base, N, B, IsoStatus::ProbablyNo);
    FiberChi tc = chi_tilde_with(extended, w, N, k, B, IsoStatus::ProbablyNo);
    r.chi_FN = fc.value;
    r.chi_FN_route = fc.route;
    r.chi_tilde = tc.value;
    r.chi_tilde_route = tc.route;
    r.mu_pipeline = divide_by_N(sign_pow(n + 1) * (r.chi_tilde - r.chi_FN), N, r.sign, "chi difference");
    require(*r.mu_direct == *r.mu_pipeline, ErrorKind::Internal, "direct formula and Euler characteristics disagree");
    r.notes.push_back("virtual formula stabilized at m = " + std::to_string(m));
    r.mu = MilnorValue::finite(*r.mu_direct);
  } else {
    IsoProbe ext = iso_poly_exists(w.with_leading_one(), N, options.probe);
    r.hypotheses.push_back({"isolated polynomial of type ((1,w);N)",
                            std::string(ext.status == IsoStatus::Yes ? "exists" : "not established") + ": " +
                                ext.reason});
    if (ext.status == IsoStatus::Yes && all_le1) {
      r.path = FormulaPath::Mixed;
      iso_tilde = IsoStatus::Yes;
      FiberChi fc = chi_fiber_with(base, N, B, IsoStatus::ProbablyNo);
      FiberChi tc = chi_tilde_with(extended, w, N, k, B, IsoStatus::Yes);
      r.chi_FN = fc.value;
      r.chi_FN_route = fc.route;
      r.chi_tilde = tc.value;
      r.chi_tilde_route = tc.route;
      r.mu_pipeline = divide_by_N(sign_pow(n + 1) * (r.chi_tilde - r.chi_FN), N, r.sign, "chi difference");
      r.mu = MilnorValue::finite(*r.mu_pipeline);
    } else {
      r.path = FormulaPath::Conjectural;
      conjectural = true;
      auto [direct, m] = stabilize<Rational>(n + 1, period(B, N), [&](int mm) {
        return mu_virtual_with(base, extended, N, k, B, mm);
      });
      r.mu_direct = integral(direct, "direct formula value");
      FiberChi fc = chi_fiber_with(base, N, B, IsoStatus::ProbablyNo);
      FiberChi tc = chi_tilde_with(extended, w, N, k, B, IsoStatus::ProbablyNo);
      r.chi_FN = fc.value;
      r.chi_FN_route = fc.route;
      r.chi_tilde = tc.value;
      r.chi_tilde_route = tc.route;
      r.notes.push_back("virtual formula stabilized at m = " + std::to_string(m));
      r.mu = MilnorValue::finite(*r.mu_direct);
    }
  }
  require(r.mu.value >= 0, ErrorKind::Internal, "negative total Milnor number " + to_string(r.mu.value));
  if (conjectural) {
    r.mu.kind = MilnorValue::Kind::Conjectural;
    r.hypotheses.push_back({"virtual formula beyond its proven range", "used"});
    require(options.allow_conjectural, ErrorKind::HypothesisFailure,
            "only a conjectural formula applies (value " + to_string(r.mu.value) +
                "); pass --allow-conjectural to accept it");
  }
  if (k > 1 && options.symbolic_k) fit_symbolic(r, B, iso_tilde, extended);
  return r;
}

MilnorReport total_milnor_abstract(const Polynomial& top, const WeightSystem& w, int k, const MilnorOptions& options) {
  return total_milnor(assume_wly(top, w, k), options);
}

MilnorValue oracle_total_milnor(const Polynomial& f) {
  require(f.nvars() >= 1, ErrorKind::Structural, "polynomial ring has no variables");
  auto grad = gradient(f);
  std::vector<Polynomial> gens;
  for (auto& g : grad)
    if (!g.is_zero()) gens.push_back(std::move(g));
  if (gens.empty()) return MilnorValue::infinite();
  Staircase st = quotient_staircase(groebner_basis(gens, MonomialOrder::degrevlex(f.nvars())));
  if (st.infinite) return MilnorValue::infinite();
  return MilnorValue::finite(static_cast<long>(st.size()));
}

}  // namespace milnorinf
