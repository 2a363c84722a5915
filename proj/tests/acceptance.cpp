// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "milnorinf/apps.hpp"
#include "milnorinf/branches.hpp"
#include "milnorinf/cli.hpp"
#include "milnorinf/error.hpp"
#include "milnorinf/euler.hpp"
#include "milnorinf/parser.hpp"
#include "milnorinf/wly.hpp"

using namespace milnorinf;

namespace {

constexpr double kFastSeconds = 5.0;
constexpr double kBigSeconds = 60.0;

Polynomial P(const std::string& text, std::size_t n) { return parse_polynomial(text, default_names(n)).poly; }

struct Outcome {
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string fmt_time(double s) {
  std::ostringstream o;
  o.precision(3);
  o << std::fixed << s << "s";
  return o.str();
}

long sum(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

std::vector<BranchData> g_branches;

void record(const MilnorReport& r) { g_branches.insert(g_branches.end(), r.branches.begin(), r.branches.end()); }

Outcome dual_weights() {
  Outcome o;
  Polynomial f = P("x1^7*x2 + x3^3 + x2", 3);
  Timer t1;
  auto a = total_milnor(check_wly(decompose(f, WeightSystem({2, 1, 5}))));
  double s1 = t1.seconds();
  record(a);
  o.expect(a.branches.size() == 1 && a.branches[0].isotropy_order == 1 && a.branches[0].mu0 == 12,
           "w=(2,1,5) branch data");
  o.expect(a.path == FormulaPath::IsolatedType, "w=(2,1,5) formula path");
  o.expect(to_string(a.mu) == "14", "w=(2,1,5) mu = " + to_string(a.mu));
  Timer t2;
  auto b = total_milnor(check_wly(decompose(f, WeightSystem({1, 2, 3}))));
  double s2 = t2.seconds();
  record(b);
  o.expect(b.branches.size() == 1 && b.branches[0].isotropy_order == 2 &&
               b.branches[0].eigen_dims == std::vector<long>{6, 6},
           "w=(1,2,3) branch data");
  o.expect(to_string(b.mu) == "14", "w=(1,2,3) mu = " + to_string(b.mu));
  o.expect(to_string(oracle_total_milnor(f)) == "14", "oracle");
  o.expect(s1 < kFastSeconds && s2 < kFastSeconds, "runtime");
  o.detail += (o.detail.empty() ? "" : "; ") + fmt_time(s1) + " + " + fmt_time(s2);
  return o;
}

Outcome big_example() {
  Outcome o;
  Timer t;
  Polynomial top = P("x1^265 + x1*x2^11 + x1*x3^8 + x3*x4^4", 4);
  WeightSystem w({1, 24, 33, 58});
  for (int k : {2, 100, 264}) {
    auto r = total_milnor_abstract(top, w, k);
    if (k == 2) {
      record(r);
      o.expect(r.branches.size() == 1, "one branch");
      if (!r.branches.empty()) {
        const auto& b = r.branches[0];
        std::vector<Rational> a{0, -1, 1, 0};
        o.expect(b.representative == a, "representative (0,-1,1,0)");
        o.expect(b.isotropy_order == 3 && b.mu0 == 3, "d = 3, mu0 = 3");
        o.expect(b.eigen_dims == std::vector<long>{1, 1, 1}, "eigen_dims (1,1,1)");
      }
      o.expect(r.chi_FN == -66250, "chi(F_N) = " + r.chi_FN.get_str());
      o.expect(r.chi_tilde_symbolic && r.chi_tilde_symbolic->first == 17560490 &&
                   r.chi_tilde_symbolic->second == -265,
               "chi(F~) symbolic");
    }
    o.expect(r.chi_tilde == 17560490 - 265 * k, "chi(F~) at k=" + std::to_string(k));
    o.expect(to_string(r.mu) == std::to_string(66516 - k), "mu at k=" + std::to_string(k));
  }
  double s = t.seconds();
  o.expect(s < kBigSeconds, "runtime");
  o.detail += (o.detail.empty() ? "" : "; ") + fmt_time(s);
  return o;
}

Outcome oracle_battery() {
  Outcome o;
  Polynomial f1 = P("x1^3 + x1*x2 + x1*x3^2 + x3*x4^2 + x2", 4);
  auto a = total_milnor(check_wly(decompose(f1, WeightSystem({1, 2, 1, 1}))));
  record(a);
  o.expect(to_string(a.mu) == "3", "f1 formula mu = " + to_string(a.mu));
  o.expect(to_string(oracle_total_milnor(f1)) == "3", "f1 oracle");
  Polynomial g = P("x1^2*x2 + x3^3 + x2", 3);
  auto b = total_milnor(check_wly(decompose(g, WeightSystem::usual(3))));
  record(b);
  o.expect(to_string(b.mu) == "4", "formula mu = " + to_string(b.mu));
  o.expect(to_string(oracle_total_milnor(g)) == "4", "oracle");
  long mu0 = 0;
  for (const auto& br : b.branches) mu0 += br.mu0;
  long reduction = (b.N() - 1) * (b.N() - 1) * (b.N() - 1) - b.k() * mu0;
  o.expect(reduction == 4, "usual-weights reduction = " + std::to_string(reduction));
  return o;
}

Outcome isolated_case() {
  Outcome o;
  std::mt19937_64 rng(20240);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int done = 0;
  std::string last;
  while (done < 5) {
    int a = pick(2, 5), b = pick(2, 5), c = pick(2, 4);
    int N = std::lcm(a, std::lcm(b, c));
    WeightSystem w({N / a, N / b, N / c});
    Polynomial f = P("x1^" + std::to_string(a) + " + x2^" + std::to_string(b) + " + x3^" + std::to_string(c), 3);
    for (int i = 0; i < 3; ++i) {
      int coef = pick(1, 3) * (pick(0, 1) ? 1 : -1);
      f += Polynomial::monomial(Monomial::variable(3, static_cast<std::size_t>(i)), coef);
    }
    if (w[0] + w[1] < N) f += Polynomial::monomial(Monomial{1, 1, 0}, pick(-2, 2));
    WeightedDecomposition dec;
    try {
      dec = decompose(f, w);
    } catch (const Error&) {
      continue;
    }
    auto r = total_milnor(check_wly(dec));
    Rational prod = weight_product(w, dec.N);
    std::string oracle = to_string(oracle_total_milnor(f));
    last = to_string(f);
    o.expect(r.path == FormulaPath::Isolated, "path for " + last);
    o.expect(to_string(r.mu) == prod.get_str(), "product for " + last);
    o.expect(oracle == prod.get_str(), "oracle " + oracle + " for " + last);
    ++done;
  }
  return o;
}

Outcome eigenspaces() {
  Outcome o;
  o.expect(eigenspace_dims(P("x1^7 + x2^3", 2), std::vector<int>{1, 3}, 2) == std::vector<long>{6, 6},
           "(6,6)");
  for (const auto& b : g_branches)
    o.expect(sum(b.eigen_dims) == b.mu0, "sum of eigen_dims on branch " + b.fingerprint);
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(g_branches.size()) + " branches";
  return o;
}

Outcome stabilization() {
  Outcome o;
  struct Case {
    std::vector<int> w;
    long expected;
  };
  for (const Case& c : {Case{{1, 1, 1, 1}, -15}, Case{{1, 2, 1, 1}, -3}}) {
    WeightSystem w(c.w);
    Rational prod = weight_product(w, 3);
    o.expect(prod.get_den() == 1 && 1 - prod.get_num() == c.expected, "isolated value");
    for (int m = 4; m <= 12; ++m) o.expect(chi_virtual(w, 3, m) == c.expected, "m=" + std::to_string(m));
  }
  return o;
}

Outcome sign_resolution() {
  Outcome o;
  Polynomial h = P("x1^3*x2 + x2*x3^3 + x1^7 + x3^7 + x2", 3);
  WeightSystem w({1, 4, 1});
  auto analysis = check_wly(decompose(h, w));
  o.expect(analysis.is_wly, "instance is WLY");
  std::string oracle = to_string(oracle_total_milnor(h));
  MilnorOptions plus;
  plus.sign = EigenSign::Plus;
  auto rp = total_milnor(analysis, plus);
  bool asymmetric = false;
  for (const auto& b : rp.branches) {
    if (b.isotropy_order < 3) continue;
    for (int l = 1; l < b.isotropy_order; ++l)
      if (b.eigen_dims[l] != b.eigen_dims[b.isotropy_order - l]) asymmetric = true;
  }
  o.expect(asymmetric, "branch with d >= 3 and asymmetric eigen_dims");
  bool plus_ok = to_string(rp.mu) == oracle;
  bool minus_ok = false;
  std::string minus_text;
  MilnorOptions minus;
  minus.sign = EigenSign::Minus;
  try {
    auto rm = total_milnor(analysis, minus);
    minus_text = to_string(rm.mu);
    minus_ok = minus_text == oracle;
  } catch (const Error& e) {
    minus_text = std::string("rejected (") + e.what() + ")";
  }
  o.expect(plus_ok != minus_ok, "exactly one sign matches");
  o.expect(plus_ok, "default sign matches");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("oracle ") + oracle + ", plus " + to_string(rp.mu) +
              ", minus " + minus_text;
  return o;
}

Outcome cross_formula() {
  Outcome o;
  auto r = total_milnor(check_wly(decompose(P("x1^7*x2 + x3^3 + x2", 3), WeightSystem({1, 2, 3}))));
  o.expect(r.chi_FN == 3, "chi(F_N) = " + r.chi_FN.get_str());
  o.expect(r.chi_tilde == -123, "chi(F~) = " + r.chi_tilde.get_str());
  o.expect(r.mu_direct && *r.mu_direct == 14, "direct value");
  o.expect(r.mu_pipeline && *r.mu_pipeline == 14, "pipeline value");
  BranchInvariants b = invariants_of(r.branches.at(0));
  std::vector<BranchInvariants> bs{b};
  Rational direct = mu_direct_isolated_type(WeightSystem({1, 2, 3}), 9, 7, bs);
  o.expect(direct == 14, "direct formula = " + direct.get_str());
  o.expect(weight_product(WeightSystem({1, 2, 3}), 9) == 56, "product term 56");
  return o;
}

Outcome applications() {
  Outcome o;
  WeightSystem w({1, 2, 1, 1});
  Polynomial f1 = P("x1^3 + x1*x2 + x1*x3^2 + x3*x4^2 + x2", 4);
  Polynomial f2 = P("x1^3 + x1*x2 + x1*x3^2 + x3*x4^2 + x3^2", 4);
  Polynomial h = P("x1^3 + x1*x2 + x1*x3^2 + x3*x4^2 + x3", 4);
  auto r1 = total_milnor(check_wly(decompose(f1, w)));
  auto r2 = total_milnor(check_wly(decompose(f2, w)));
  auto rh = total_milnor(check_wly(decompose(h, w)));
  o.expect(tameness(r1).status == TameStatus::Tame, "f1 tame");
  o.expect(tameness(r2).status == TameStatus::Tame, "f2 tame");
  o.expect(tameness(rh).status == TameStatus::CriterionNotMet, "h criterion not met");
  auto c = monodromy_equivalence(f1, f2, w);
  o.expect(c.equivalent && c.strength == EquivalenceStrength::Diffeomorphic, "f1 ~ f2 diffeomorphic");
  Polynomial g = P("x1^2*x2 + x3^3 + x2", 3);
  auto rg = total_milnor(check_wly(decompose(g, WeightSystem::usual(3))));
  auto tg = tameness(rg);
  auto ts = thom_sebastiani(rg, tg, rg, tg);
  o.expect(to_string(ts.mu) == "16", "Thom-Sebastiani mu = " + to_string(ts.mu));
  o.expect(to_string(oracle_total_milnor(direct_sum(g, g))) == "16", "oracle on the 6-variable sum");
  return o;
}

Outcome rejection() {
  Outcome o;
  auto a = check_wly(decompose(P("x1^2*x2^2 + x1", 2), WeightSystem::usual(2)));
  o.expect(!a.is_wly, "x1^2*x2^2 + x1 rejected");
  std::ostringstream out, err;
  int code = run({"check-wly", "x1^2*x2^2+x1", "--weights", "1,1"}, out, err);
  o.expect(code == kExitNotWly, "exit code " + std::to_string(code));
  struct Named {
    const char* f;
    std::vector<int> w;
  };
  const std::vector<Named> known{
      {"x1^7*x2 + x3^3 + x2", {2, 1, 5}},
      {"x1^7*x2 + x3^3 + x2", {1, 2, 3}},
      {"x1^3 + x1*x2 + x1*x3^2 + x3*x4^2 + x2", {1, 2, 1, 1}},
      {"x1^3 + x1*x2 + x1*x3^2 + x3*x4^2 + x3^2", {1, 2, 1, 1}},
      {"x1^3 + x1*x2 + x1*x3^2 + x3*x4^2 + x3", {1, 2, 1, 1}},
  };
  for (const auto& n : known) {
    std::size_t nv = n.w.size();
    o.expect(check_wly(decompose(P(n.f, nv), WeightSystem(n.w))).is_wly, std::string("accepts ") + n.f);
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "dual-weight reproduction", dual_weights},
      {2, "big example in abstract mode", big_example},
      {3, "oracle cross-check battery", oracle_battery},
      {4, "isolated case", isolated_case},
      {5, "eigenspace pinning", eigenspaces},
      {6, "virtual Euler characteristic stabilization", stabilization},
      {7, "eigen-sign resolution", sign_resolution},
      {8, "cross-formula invariant", cross_formula},
      {9, "applications", applications},
      {10, "WLY rejection", rejection},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name;
    if (!o.detail.empty()) std::cout << "  (" << o.detail << ")";
    std::cout << "\n";
  }
  return failures;
}
