#include "milnorinf/branches.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "milnorinf/error.hpp"

namespace milnorinf {

namespace {

std::vector<Integer> divisors(Integer value) {
  value = abs(value);
  std::vector<std::pair<Integer, int>> factors;
  for (Integer p = 2; p * p <= value && p <= 1'000'000; ++p) {
    int e = 0;
    while (value % p == 0) {
      value /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  }
  if (value > 1) factors.emplace_back(value, 1);
  std::vector<Integer> out{1};
  for (const auto& [p, e] : factors) {
    std::size_t count = out.size();
    Integer power = 1;
    for (int i = 1; i <= e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < count; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string fingerprint_of(const StandardBasis& sb) {
  std::string s;
  for (const auto& g : sb.generators) {
    if (!s.empty()) s += "; ";
    s += to_string(g);
  }
  return s;
}

std::vector<std::vector<Rational>> solve(std::vector<Polynomial> gens, std::vector<std::optional<Rational>> assigned) {
  const std::size_t n = assigned.size();
  std::vector<std::vector<Rational>> out;
  StandardBasis sb;
  sb.nvars = n;
  if (!gens.empty()) sb = groebner_basis(gens, MonomialOrder::lex());
  if (sb.is_unit_ideal()) return out;
  std::optional<std::size_t> var;
  for (std::size_t i = n; i-- > 0;)
    if (!assigned[i]) {
      var = i;
      break;
    }
  if (!var) {
    std::vector<Rational> point;
    for (const auto& a : assigned) point.push_back(*a);
    out.push_back(std::move(point));
    return out;
  }
  const Polynomial* univariate = nullptr;
  for (const auto& g : sb.generators)
    if ((g.support() & ~(std::uint32_t{1} << *var)) == 0 && !g.is_zero()) {
      univariate = &g;
      break;
    }
  require(univariate != nullptr, ErrorKind::Internal, "slice system is not zero-dimensional");
  for (const auto& r : rational_roots(*univariate, *var)) {
    std::vector<Polynomial> next;
    for (const auto& g : sb.generators) {
      Polynomial h = g.substitute(*var, r);
      if (!h.is_zero()) next.push_back(std::move(h));
    }
    auto a = assigned;
    a[*var] = r;
    for (auto& p : solve(std::move(next), std::move(a))) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

int isotropy_order(std::span<const Rational> point, const WeightSystem& w) {
  require(point.size() == w.size(), ErrorKind::Structural, "point and weights differ in length");
  int d = 0;
  for (std::size_t i = 0; i < point.size(); ++i)
    if (point[i] != 0) d = std::gcd(d, w[i]);
  require(d > 0, ErrorKind::Structural, "the origin has no orbit");
  return d;
}

StandardBasis orbit_closure_ideal(std::span<const Rational> point, const WeightSystem& w) {
  const std::size_t n = point.size();
  require(n == w.size(), ErrorKind::Structural, "point and weights differ in length");
  require(n + 1 <= kMaxVars, ErrorKind::Structural, "too many variables");
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < n; ++i)
    gens.push_back(Polynomial::variable(n + 1, i + 1) -
                   Polynomial::monomial(Monomial::variable(n + 1, 0, w[i]), point[i]));
  StandardBasis full = groebner_basis(gens, MonomialOrder::lex());
  StandardBasis out;
  out.nvars = n;
  out.order = MonomialOrder::lex();
  out.reduced = true;
  for (const auto& g : full.generators)
    if ((g.support() & 1u) == 0) out.generators.push_back(g.drop_variable(0));
  return out;
}

std::vector<Rational> rational_roots(const Polynomial& univariate, std::size_t var) {
  require((univariate.support() & ~(std::uint32_t{1} << var)) == 0, ErrorKind::Structural,
          "rational_roots: polynomial is not univariate");
  std::vector<Rational> out;
  if (univariate.is_zero()) fail(ErrorKind::Structural, "rational_roots: zero polynomial");
  std::map<int, Rational> coeffs;
  Integer den_lcm = 1;
  for (const auto& t : univariate.terms()) {
    coeffs[t.mono[var]] = t.coeff;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  int low = coeffs.begin()->first;
  int high = coeffs.rbegin()->first;
  if (low > 0) out.push_back(0);
  if (high == low) return out;
  Integer c_low = Rational(coeffs.begin()->second * den_lcm).get_num();
  Integer c_high = Rational(coeffs.rbegin()->second * den_lcm).get_num();
  auto eval = [&](const Rational& x) {
    Rational acc = 0;
    int e = high;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      for (; e > it->first; --e) acc *= x;
      acc += it->second;
    }
    for (; e > low; --e) acc *= x;
    return acc;
  };
  std::vector<Rational> found;
  for (const auto& p : divisors(c_low))
    for (const auto& q : divisors(c_high))
      for (int s : {1, -1}) {
        Rational x(p * s, q);
        x.canonicalize();
        if (eval(x) == 0) found.push_back(x);
      }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  out.insert(out.end(), found.begin(), found.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Rational>> rational_solutions(std::span<const Polynomial> system) {
  require(!system.empty(), ErrorKind::Structural, "rational_solutions: empty system");
  const std::size_t n = system.front().nvars();
  std::vector<Polynomial> gens(system.begin(), system.end());
  auto out = solve(std::move(gens), std::vector<std::optional<Rational>>(n));
  std::sort(out.begin(), out.end());
  return out;
}

TransversalGerm transversal_germ(const Polynomial& top, std::span<const Rational> point, const WeightSystem& w) {
  const std::size_t n = top.nvars();
  require(point.size() == n && w.size() == n, ErrorKind::Structural, "point, weights and ring differ in size");
  std::optional<std::size_t> m;
  for (std::size_t i = 0; i < n; ++i)
    if (point[i] != 0 && (!m || w[i] < w[*m])) m = i;
  require(m.has_value(), ErrorKind::Structural, "the origin has no transversal slice");
  std::vector<Rational> shift(point.begin(), point.end());
  shift[*m] = 0;
  TransversalGerm out;
  out.slice_index = *m;
  out.germ = top.substitute(*m, point[*m]).translate(shift).drop_variable(*m);
  for (std::size_t i = 0; i < n; ++i)
    if (i != *m) out.germ_weights.push_back(w[i]);
  return out;
}

long local_milnor(const Polynomial& germ) {
  auto grad = gradient(germ);
  Staircase st = quotient_staircase(local_standard_basis(grad));
  require(!st.infinite, ErrorKind::NonIsolatedGerm, "transversal germ is not an isolated singularity");
  return static_cast<long>(st.size());
}

long local_tjurina(const Polynomial& germ) {
  auto gens = gradient(germ);
  gens.push_back(germ);
  Staircase st = quotient_staircase(local_standard_basis(gens));
  require(!st.infinite, ErrorKind::NonIsolatedGerm, "transversal germ is not an isolated singularity");
  return static_cast<long>(st.size());
}

std::vector<long> eigenspace_dims(const Polynomial& germ, std::span<const int> germ_weights, int d, EigenSign sign) {
  require(d >= 1, ErrorKind::Structural, "isotropy order must be positive");
  require(germ_weights.size() == germ.nvars(), ErrorKind::Structural, "germ weights differ from germ ring");
  StandardBasis sb = local_standard_basis(gradient(germ));
  Staircase st = quotient_staircase(sb);
  require(!st.infinite, ErrorKind::NonIsolatedGerm, "transversal germ is not an isolated singularity");
  auto cls = [&](const Monomial& m) {
    return floor_mod(static_cast<long>(sign_factor(sign)) * weighted_degree(m, germ_weights), d);
  };
  if (d > 1) {
    for (const auto& g : sb.generators) {
      std::map<long, std::vector<Term>> pieces;
      for (const auto& t : g.terms()) pieces[cls(t.mono)].push_back(t);
      if (pieces.size() < 2) continue;
      for (auto& [c, terms] : pieces) {
        Polynomial piece = Polynomial::from_terms(germ.nvars(), std::move(terms));
        require(normal_form(piece, sb).is_zero(), ErrorKind::NonInvariantJacobian,
                "Jacobian ideal of the transversal germ is not invariant under the isotropy group");
      }
    }
  }
  std::vector<long> dims(d, 0);
  for (const auto& m : st.monomials) ++dims[cls(m)];
  return dims;
}

std::vector<long> suspended_dims(std::span<const long> dims, int d, int k) {
  require(static_cast<int>(dims.size()) == d, ErrorKind::Structural, "eigenspace vector has the wrong length");
  require(k >= 2, ErrorKind::NotApplicable, "suspension by x0^k needs k >= 2");
  std::vector<long> out(d, 0);
  for (long l = 0; l < d; ++l)
    for (long t = 0; t <= k - 2; ++t) out[l] += dims[floor_mod(l - t, d)];
  return out;
}

BranchData analyze_branch(const Polynomial& top, std::span<const Rational> point, const WeightSystem& w,
                          EigenSign sign) {
  BranchData b;
  b.representative.assign(point.begin(), point.end());
  b.isotropy_order = isotropy_order(point, w);
  TransversalGerm tg = transversal_germ(top, point, w);
  b.slice_index = tg.slice_index;
  b.germ = tg.germ;
  b.germ_weights = tg.germ_weights;
  b.mu0 = local_milnor(b.germ);
  b.tau0 = local_tjurina(b.germ);
  b.eigen_dims = eigenspace_dims(b.germ, b.germ_weights, b.isotropy_order, sign);
  b.fingerprint = fingerprint_of(orbit_closure_ideal(point, w));
  return b;
}

std::vector<BranchData> find_branches(const Polynomial& top, const WeightSystem& w,
                                      const BranchSearchOptions& options) {
  const std::size_t n = top.nvars();
  require(w.size() == n, ErrorKind::Structural, "weights and ring differ in size");
  auto grad = gradient(top);
  int dim = krull_dimension(groebner_basis(grad, MonomialOrder::weighted_degrevlex({w.values().begin(), w.values().end()})));
  require(dim == 1, ErrorKind::NotCurve,
          "singular locus of the top form has dimension " + std::to_string(dim) + ", expected 1");

  std::vector<std::vector<Rational>> points;
  std::vector<StandardBasis> orbits;
  std::vector<std::string> prints;
  auto consider = [&](const std::vector<Rational>& p) {
    StandardBasis orbit = orbit_closure_ideal(p, w);
    std::string fp = fingerprint_of(orbit);
    if (std::find(prints.begin(), prints.end(), fp) != prints.end()) return;
    points.push_back(p);
    orbits.push_back(std::move(orbit));
    prints.push_back(std::move(fp));
  };
  auto covered = [&]() {
    if (orbits.empty()) return false;
    std::vector<Polynomial> products{Polynomial::constant(n, 1)};
    for (const auto& orbit : orbits) {
      std::vector<Polynomial> next;
      for (const auto& p : products)
        for (const auto& g : orbit.generators) next.push_back(p * g);
      products = std::move(next);
    }
    for (const auto& q : products)
      if (!radical_membership(q, grad)) return false;
    return true;
  };

  for (const auto& h : options.hints) {
    require(h.size() == n, ErrorKind::Structural, "branch hint has the wrong number of coordinates");
    require(std::any_of(h.begin(), h.end(), [](const Rational& q) { return q != 0; }), ErrorKind::Structural,
            "branch hint is the origin");
    for (const auto& g : grad)
      require(g.evaluate(h) == 0, ErrorKind::Structural, "branch hint is not a singular point of the top form");
    consider(h);
  }

  bool done = covered();
  std::size_t next_value = 0;
  while (!done && next_value < options.slice_values.size()) {
    std::size_t batch_end = next_value == 0 ? std::min<std::size_t>(2, options.slice_values.size())
                                            : options.slice_values.size();
    for (; next_value < batch_end; ++next_value) {
      Rational s = options.slice_values[next_value];
      for (std::size_t m = 0; m < n; ++m) {
        std::vector<Polynomial> system;
        for (const auto& g : grad) {
          Polynomial h = g.substitute(m, s);
          if (!h.is_zero()) system.push_back(h.drop_variable(m));
        }
        std::vector<std::vector<Rational>> sols;
        if (system.empty()) {
          sols.push_back({});
        } else if (n == 1) {
          bool consistent = std::all_of(system.begin(), system.end(), [](const Polynomial& p) { return p.is_zero(); });
          if (consistent) sols.push_back({});
        } else {
          sols = rational_solutions(system);
        }
        for (auto& sol : sols) {
          sol.insert(sol.begin() + static_cast<std::ptrdiff_t>(m), s);
          consider(sol);
        }
      }
    }
    done = covered();
  }
  require(done, ErrorKind::NonRationalBranch,
          "could not find rational representatives for every component of the singular locus; "
          "supply --branch-point hints");

  std::vector<BranchData> out;
  for (const auto& p : points) out.push_back(analyze_branch(top, p, w, options.sign));
  std::stable_sort(out.begin(), out.end(),
                   [](const BranchData& a, const BranchData& b) { return a.fingerprint < b.fingerprint; });
  return out;
}

}  // namespace milnorinf
