#include "milnorinf/apps.hpp"

#include <random>

#include "milnorinf/error.hpp"

namespace milnorinf {

const char* to_string(TameStatus status) {
  switch (status) {
    case TameStatus::Tame: return "Tame";
    case TameStatus::CriterionNotMet: return "CriterionNotMet";
    case TameStatus::NotTame: return "NotTame";
  }
  return "?";
}

const char* to_string(EquivalenceStrength strength) {
  return strength == EquivalenceStrength::Diffeomorphic ? "Diffeomorphic" : "FiberHomotopy";
}

WitnessSequence parse_witness(std::string_view text) {
  WitnessSequence out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    auto expr = RationalExpression::parse(piece);
    for (const auto& v : expr.variables())
      if (v != "n") throw ParseError("witness components may only use the parameter 'n', found '" + v + "'", 1, start + 1);
    out.components.push_back(std::move(expr));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::optional<std::vector<WitnessCheck>> validate_witness(const Polynomial& f, const WitnessSequence& sequence) {
  require(sequence.components.size() == f.nvars(), ErrorKind::Structural,
          "witness has " + std::to_string(sequence.components.size()) + " components, polynomial has " +
              std::to_string(f.nvars()) + " variables");
  const Rational big(1'000'000), small(1, 1'000'000);
  auto grad = gradient(f);
  std::vector<WitnessCheck> checks;
  for (long n : {10L, 100L, 1000L}) {
    std::map<std::string, Rational> bind{{"n", Rational(n)}};
    std::vector<Rational> x;
    WitnessCheck c;
    c.n = n;
    for (const auto& e : sequence.components) {
      x.push_back(e.evaluate(bind));
      c.point_norm_sq += x.back() * x.back();
    }
    for (const auto& g : grad) {
      Rational v = g.evaluate(x);
      c.gradient_norm_sq += v * v;
    }
    checks.push_back(c);
  }
  for (std::size_t i = 1; i < checks.size(); ++i)
    if (checks[i].point_norm_sq <= checks[i - 1].point_norm_sq ||
        checks[i].gradient_norm_sq >= checks[i - 1].gradient_norm_sq)
      return std::nullopt;
  if (checks.back().point_norm_sq <= big || checks.back().gradient_norm_sq >= small) return std::nullopt;
  return checks;
}

TamenessVerdict tameness(const MilnorReport& report, const WitnessSequence* witness) {
  TamenessVerdict v;
  const int gap = report.N() - report.k();
  const int wmax = report.weights().max();
  bool applicable = report.mu.is_finite() && report.path != FormulaPath::Mixed &&
                    report.path != FormulaPath::Conjectural;
  if (!applicable) {
    v.reason = std::string("formula route '") + to_string(report.path) + "' does not guarantee tameness";
  } else if (gap < wmax) {
    v.reason = "N - k = " + std::to_string(gap) + " < max weight " + std::to_string(wmax);
  } else {
    v.status = TameStatus::Tame;
    v.reason = std::string("formula route '") + to_string(report.path) + "' applies and N - k = " +
               std::to_string(gap) + " >= max weight " + std::to_string(wmax);
    return v;
  }
  if (witness) {
    require(!report.wly.assumed, ErrorKind::NotApplicable, "a witness needs the full polynomial, not an abstract top form");
    if (auto checks = validate_witness(report.wly.dec.sum(), *witness)) {
      v.status = TameStatus::NotTame;
      v.witness = std::move(*checks);
      v.reason = "witness sequence escapes to infinity while the gradient tends to 0";
    } else {
      v.reason += "; supplied witness sequence was not confirmed";
    }
  }
  return v;
}

BroughtonDiagnostic broughton_samples(const Polynomial& f, int count, std::uint64_t seed) {
  BroughtonDiagnostic d;
  d.mu = oracle_total_milnor(f);
  d.consistent = d.mu.is_finite();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-3, 3);
  const std::size_t n = f.nvars();
  for (int i = 0; i < count; ++i) {
    BroughtonSample s;
    Polynomial g = f;
    for (std::size_t j = 0; j < n; ++j) {
      s.v.emplace_back(num(rng), 1000);
      s.v.back().canonicalize();
      g += Polynomial::variable(n, j) * s.v.back();
    }
    s.mu = oracle_total_milnor(g);
    if (!s.mu.is_finite() || s.mu.value != d.mu.value) d.consistent = false;
    d.samples.push_back(std::move(s));
  }
  return d;
}

EquivalenceCertificate monodromy_equivalence(const Polynomial& f, const Polynomial& h, const WeightSystem& w,
                                             const MilnorOptions& options) {
  EquivalenceCertificate c;
  auto failed = [&](const std::string& what) {
    c.failed = what;
    return c;
  };
  if (f.nvars() != h.nvars() || f.nvars() != w.size()) return failed("same variable count as the weights");
  c.checks.push_back("same variable count as the weights");
  std::optional<WeightedDecomposition> df, dh;
  try {
    df = decompose(f, w);
  } catch (const Error& e) {
    return failed(std::string("decomposition of f: ") + e.what());
  }
  try {
    dh = decompose(h, w);
  } catch (const Error& e) {
    return failed(std::string("decomposition of h: ") + e.what());
  }
  c.checks.push_back("both polynomials decompose");
  if (df->N != dh->N || df->k != dh->k) return failed("same (w; N; k)");
  c.checks.push_back("same (w; N; k) = N " + std::to_string(df->N) + ", k " + std::to_string(df->k));
  if (!(df->top() == dh->top())) return failed("identical top forms f_N = h_N");
  c.checks.push_back("identical top forms f_N = h_N");
  WlyAnalysis af = check_wly(*df), ah = check_wly(*dh);
  if (!af.is_wly) return failed("f is WLY at infinity");
  if (!ah.is_wly) return failed("h is WLY at infinity");
  c.checks.push_back("both are WLY at infinity");
  if (df->k == 1) {
    c.checks.push_back("k = 1");
  } else {
    MilnorOptions o = options;
    o.allow_conjectural = true;
    o.symbolic_k = false;
    FormulaPath path;
    try {
      path = total_milnor(af, o).path;
    } catch (const Error& e) {
      return failed(std::string("Milnor formula for f: ") + e.what());
    }
    if (path == FormulaPath::Mixed || path == FormulaPath::Conjectural)
      return failed(std::string("top form in a proven formula case (route '") + to_string(path) + "')");
    c.checks.push_back(std::string("top form in a proven formula case (route '") + to_string(path) + "')");
  }
  c.equivalent = true;
  c.strength = w.size() - 1 != 2 ? EquivalenceStrength::Diffeomorphic : EquivalenceStrength::FiberHomotopy;
  return c;
}

ThomSebastianiReport thom_sebastiani(const ThomSebastianiInput& f, const ThomSebastianiInput& h) {
  require(f.nvars >= 1 && h.nvars >= 1, ErrorKind::Structural, "Thom-Sebastiani sum needs nonempty variable groups");
  ThomSebastianiReport r;
  using Kind = MilnorValue::Kind;
  if (f.mu.kind == Kind::Infinite || h.mu.kind == Kind::Infinite) {
    r.mu = MilnorValue::infinite();
  } else {
    r.mu.value = f.mu.value * h.mu.value;
    r.mu.kind = f.mu.kind == Kind::Conjectural || h.mu.kind == Kind::Conjectural ? Kind::Conjectural : Kind::Finite;
  }
  r.sphere_dim = static_cast<int>(f.nvars + h.nvars) - 1;
  r.tame = f.tame && h.tame;
  r.certificates.push_back("mu(" + f.label + " + " + h.label + ") = mu(" + f.label + ") * mu(" + h.label + ") = " +
                           to_string(r.mu));
  r.certificates.push_back("M_inf(" + f.label + " + " + h.label + ") = M_inf(" + f.label + ") (x) M_inf(" + h.label +
                           ")");
  if (r.mu.kind != Kind::Infinite)
    r.certificates.push_back("generic fibre ~ bouquet of " + to_string(r.mu.value) + " spheres S^" +
                             std::to_string(r.sphere_dim));
  if (r.tame) r.certificates.push_back("tame, since both summands are tame");
  r.notes.push_back("the sum need not be WLY at infinity");
  return r;
}

ThomSebastianiReport thom_sebastiani(const MilnorReport& f, const TamenessVerdict& tame_f, const MilnorReport& h,
                                     const TamenessVerdict& tame_h) {
  return thom_sebastiani(ThomSebastianiInput{f.mu, f.nvars(), tame_f.status == TameStatus::Tame, "f"},
                         ThomSebastianiInput{h.mu, h.nvars(), tame_h.status == TameStatus::Tame, "h"});
}

}  // namespace milnorinf
