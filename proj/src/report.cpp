#include "milnorinf/report.hpp"

#include <sstream>

namespace milnorinf {

namespace {

template <class T>
Json string_list(const std::vector<T>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) {
    if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, Integer>)
      a.push_back(to_string(x));
    else
      a.push_back(std::to_string(x));
  }
  return a;
}

template <class T>
std::string joined(const std::vector<T>& xs, const char* sep = ",") {
  std::string s;
  for (const auto& x : xs) {
    if (!s.empty()) s += sep;
    if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, Integer>)
      s += to_string(x);
    else
      s += std::to_string(x);
  }
  return s;
}

std::string weights_text(const WeightSystem& w) {
  return joined(std::vector<int>(w.values().begin(), w.values().end()));
}

const char* mu_status(const MilnorValue& mu) {
  switch (mu.kind) {
    case MilnorValue::Kind::Finite: return "finite";
    case MilnorValue::Kind::Infinite: return "infinite";
    case MilnorValue::Kind::Conjectural: return "conjectural";
  }
  return "?";
}

}  // namespace

std::vector<std::string> germ_names(const BranchData& b, std::span<const std::string> names) {
  std::vector<std::string> out;
  std::size_t n = b.representative.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i == b.slice_index) continue;
    out.push_back(names.size() == n ? "y_" + names[i] : "y" + std::to_string(i + 1));
  }
  return out;
}

Json wly_json(const WlyAnalysis& wly) {
  Json j;
  j["is_wly"] = wly.is_wly;
  j["sing_dim"] = std::to_string(wly.sing_dim);
  j["quasi_tame"] = wly.quasi_tame;
  j["assumed"] = wly.assumed;
  return j;
}

Json branch_json(const BranchData& b, std::span<const std::string> names) {
  Json j;
  j["point"] = string_list(b.representative);
  j["d"] = std::to_string(b.isotropy_order);
  j["slice_index"] = std::to_string(b.slice_index + 1);
  j["germ"] = to_string(b.germ, germ_names(b, names));
  j["mu0"] = std::to_string(b.mu0);
  j["tau0"] = std::to_string(b.tau0);
  j["eigen_dims"] = string_list(b.eigen_dims);
  return j;
}

Json tameness_json(const TamenessVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["reason"] = v.reason;
  if (!v.witness.empty()) {
    Json a = Json::array();
    for (const auto& c : v.witness)
      a.push_back({{"n", std::to_string(c.n)},
                   {"point_norm_sq", to_string(c.point_norm_sq)},
                   {"gradient_norm_sq", to_string(c.gradient_norm_sq)}});
    j["witness"] = a;
  }
  return j;
}

Json report_json(const MilnorReport& r, const TamenessVerdict* tame, std::span<const std::string> names) {
  Json j;
  j["weights"] = string_list(std::vector<int>(r.weights().values().begin(), r.weights().values().end()));
  j["N"] = std::to_string(r.N());
  j["k"] = std::to_string(r.k());
  j["wly"] = wly_json(r.wly);
  Json branches = Json::array();
  for (const auto& b : r.branches) branches.push_back(branch_json(b, names));
  j["branches"] = branches;
  j["chi_FN"] = to_string(r.chi_FN);
  j["chi_FN_route"] = to_string(r.chi_FN_route);
  j["chi_tilde"] = to_string(r.chi_tilde);
  j["chi_tilde_route"] = to_string(r.chi_tilde_route);
  if (r.chi_tilde_symbolic)
    j["chi_tilde_symbolic"] = {{"constant", to_string(r.chi_tilde_symbolic->first)},
                               {"k_coefficient", to_string(r.chi_tilde_symbolic->second)}};
  j["formula_path"] = to_string(r.path);
  j["mu"] = r.mu.kind == MilnorValue::Kind::Infinite ? std::string("infinite") : to_string(r.mu.value);
  j["mu_status"] = mu_status(r.mu);
  if (r.mu_direct) j["mu_direct"] = to_string(*r.mu_direct);
  if (r.mu_pipeline) j["mu_pipeline"] = to_string(*r.mu_pipeline);
  j["eigen_sign"] = r.sign == EigenSign::Plus ? "plus" : "minus";
  Json hyps = Json::array();
  for (const auto& h : r.hypotheses) hyps.push_back({{"name", h.name}, {"status", h.status}});
  j["hypotheses"] = hyps;
  j["tame"] = tame ? tameness_json(*tame) : Json(nullptr);
  j["notes"] = r.notes;
  return j;
}

Json certificate_json(const EquivalenceCertificate& c) {
  Json j;
  j["equivalent"] = c.equivalent;
  j["strength"] = c.equivalent ? Json(to_string(c.strength)) : Json(nullptr);
  j["checks"] = c.checks;
  j["failed"] = c.failed.empty() ? Json(nullptr) : Json(c.failed);
  return j;
}

Json thom_sebastiani_json(const ThomSebastianiReport& r) {
  Json j;
  j["mu"] = r.mu.kind == MilnorValue::Kind::Infinite ? std::string("infinite") : to_string(r.mu.value);
  j["mu_status"] = mu_status(r.mu);
  j["sphere_dim"] = std::to_string(r.sphere_dim);
  j["tame"] = r.tame;
  j["certificates"] = r.certificates;
  j["notes"] = r.notes;
  return j;
}

Json broughton_json(const BroughtonDiagnostic& d) {
  Json j;
  j["mu"] = to_string(d.mu);
  Json a = Json::array();
  for (const auto& s : d.samples) a.push_back({{"v", string_list(s.v)}, {"mu", to_string(s.mu)}});
  j["samples"] = a;
  j["consistent"] = d.consistent;
  j["note"] = "agreement at sampled perturbations is evidence, not proof";
  return j;
}

std::string wly_text(const WlyAnalysis& wly) {
  std::ostringstream s;
  s << "weights      " << weights_text(wly.dec.weights) << "\n";
  s << "N, k         " << wly.dec.N << ", " << wly.dec.k << "\n";
  s << "WLY          " << (wly.is_wly ? "yes" : "no") << (wly.assumed ? " (assumed)" : "") << "\n";
  s << "Sing(f_N)    dimension " << wly.sing_dim << "\n";
  s << "quasi-tame   " << (wly.quasi_tame ? "yes" : "not established") << "\n";
  return s.str();
}

std::string tameness_text(const TamenessVerdict& v) {
  std::ostringstream s;
  s << "tame         " << to_string(v.status) << ": " << v.reason << "\n";
  for (const auto& c : v.witness)
    s << "  n=" << c.n << "  |x|^2=" << c.point_norm_sq.get_d() << "  |grad|^2=" << c.gradient_norm_sq.get_d()
      << "\n";
  return s.str();
}

std::string report_text(const MilnorReport& r, const TamenessVerdict* tame, std::span<const std::string> names) {
  std::ostringstream s;
  s << wly_text(r.wly);
  int idx = 0;
  for (const auto& b : r.branches) {
    s << "branch " << ++idx << "     point (" << joined(b.representative) << ")  d=" << b.isotropy_order
      << "  mu0=" << b.mu0 << "  tau0=" << b.tau0 << "  eigen dims (" << joined(b.eigen_dims) << ")\n";
    s << "             germ " << to_string(b.germ, germ_names(b, names)) << "\n";
  }
  s << "chi(F_N)     " << to_string(r.chi_FN) << "  [" << to_string(r.chi_FN_route) << "]\n";
  s << "chi(F~)      " << to_string(r.chi_tilde) << "  [" << to_string(r.chi_tilde_route) << "]";
  if (r.chi_tilde_symbolic)
    s << "  = " << to_string(r.chi_tilde_symbolic->first) << " + (" << to_string(r.chi_tilde_symbolic->second)
      << ")*k";
  s << "\n";
  s << "route        " << to_string(r.path) << "\n";
  s << "mu           " << to_string(r.mu);
  if (r.mu_direct || r.mu_pipeline) {
    s << "  (";
    if (r.mu_direct) s << "direct " << to_string(*r.mu_direct);
    if (r.mu_direct && r.mu_pipeline) s << ", ";
    if (r.mu_pipeline) s << "from Euler characteristics " << to_string(*r.mu_pipeline);
    s << ")";
  }
  s << "\n";
  s << "eigen sign   " << (r.sign == EigenSign::Plus ? "plus" : "minus") << "\n";
  s << "hypotheses\n";
  for (const auto& h : r.hypotheses) s << "  " << h.name << ": " << h.status << "\n";
  if (tame) s << tameness_text(*tame);
  for (const auto& n : r.notes) s << "note         " << n << "\n";
  return s.str();
}

std::string certificate_text(const EquivalenceCertificate& c) {
  std::ostringstream s;
  if (c.equivalent)
    s << "equivalent   yes (" << to_string(c.strength) << ")\n";
  else
    s << "equivalent   not certified\n";
  for (const auto& ch : c.checks) s << "  ok      " << ch << "\n";
  if (!c.failed.empty()) s << "  failed  " << c.failed << "\n";
  return s.str();
}

std::string thom_sebastiani_text(const ThomSebastianiReport& r) {
  std::ostringstream s;
  s << "mu           " << to_string(r.mu) << "\n";
  s << "spheres      S^" << r.sphere_dim << "\n";
  s << "tame         " << (r.tame ? "yes" : "not established") << "\n";
  for (const auto& c : r.certificates) s << "certificate  " << c << "\n";
  for (const auto& n : r.notes) s << "note         " << n << "\n";
  return s.str();
}

std::string broughton_text(const BroughtonDiagnostic& d) {
  std::ostringstream s;
  s << "broughton    mu = " << to_string(d.mu) << "\n";
  for (const auto& smp : d.samples) s << "  v=(" << joined(smp.v) << ")  mu=" << to_string(smp.mu) << "\n";
  s << "  " << (d.consistent ? "consistent" : "inconsistent")
    << " at sampled perturbations (evidence, not proof)\n";
  return s.str();
}

}  // namespace milnorinf
