#include "milnorinf/ideal.hpp"

#include <algorithm>
#include <numeric>

#include "milnorinf/error.hpp"

namespace milnorinf {

// ------------------------------------------------------------ MonomialOrder

MonomialOrder MonomialOrder::weighted_degrevlex(std::vector<int> weights) {
  return MonomialOrder(Kind::WeightedDegRevLex, std::move(weights));
}

MonomialOrder MonomialOrder::degrevlex(std::size_t nvars) {
  return weighted_degrevlex(std::vector<int>(nvars, 1));
}

MonomialOrder MonomialOrder::lex() { return MonomialOrder(Kind::Lex, {}); }

MonomialOrder MonomialOrder::local() { return MonomialOrder(Kind::Local, {}); }

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::WeightedDegRevLex: return "wdegrevlex";
    case Kind::Lex: return "lex";
    case Kind::Local: return "local";
  }
  return "?";
}

namespace {

// a > b in reverse lexicographic tie-break: the last differing exponent is smaller in a.
int revlex(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::WeightedDegRevLex: {
      int da = weighted_degree(a, weights_), db = weighted_degree(b, weights_);
      if (da != db) return da < db ? -1 : 1;
      return revlex(a, b);
    }
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::Local: {
      int da = a.total_degree(), db = b.total_degree();
      if (da != db) return da < db ? 1 : -1;
      return revlex(a, b);
    }
  }
  return 0;
}

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order) {
  require(!p.is_zero(), ErrorKind::Structural, "zero polynomial has no leading monomial");
  const Monomial* best = &p.terms().front().mono;
  for (const auto& t : p.terms())
    if (order.greater(t.mono, *best)) best = &t.mono;
  return *best;
}

Rational leading_coefficient(const Polynomial& p, const MonomialOrder& order) {
  return p.coefficient(leading_monomial(p, order));
}

std::vector<Monomial> StandardBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : generators) out.push_back(leading_monomial(g, order));
  return out;
}

bool StandardBasis::is_unit_ideal() const {
  for (const auto& g : generators)
    if (leading_monomial(g, order).is_one()) return true;
  return false;
}

// -------------------------------------------------------- integer internals

namespace {

struct ITerm {
  Monomial m;
  Integer c;
};

// Integer-coefficient polynomial with terms sorted by decreasing order.
struct IPoly {
  std::vector<ITerm> terms;
  std::uint32_t lm_support = 0;
  int max_degree = 0;

  bool empty() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().m; }
  const Integer& lc() const { return terms.front().c; }
  int ecart() const { return max_degree - lm().total_degree(); }

  void refresh() {
    if (terms.empty()) return;
    lm_support = lm().support();
    max_degree = 0;
    for (const auto& t : terms) max_degree = std::max(max_degree, t.m.total_degree());
  }
};

// Divides out the content and makes the leading coefficient positive; returns the divisor.
Integer make_primitive(IPoly& p) {
  if (p.terms.empty()) return 1;
  Integer g = 0;
  for (const auto& t : p.terms) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.lc() < 0) g = -g;
  if (g != 1)
    for (auto& t : p.terms) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  return g;
}

IPoly to_ipoly(const Polynomial& p, const MonomialOrder& order) {
  IPoly out;
  Integer den = 1;
  for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  for (const auto& t : p.terms()) {
    Rational scaled = t.coeff * Rational(den);
    out.terms.push_back({t.mono, scaled.get_num()});
  }
  std::sort(out.terms.begin(), out.terms.end(),
            [&](const ITerm& a, const ITerm& b) { return order.greater(a.m, b.m); });
  make_primitive(out);
  out.refresh();
  return out;
}

Polynomial to_polynomial(const IPoly& p, std::size_t nvars, bool monic) {
  std::vector<Term> terms;
  Rational scale = monic && !p.empty() ? Rational(1, 1) / Rational(p.lc()) : Rational(1);
  for (const auto& t : p.terms) terms.push_back({t.m, Rational(t.c) * scale});
  return Polynomial::from_terms(nvars, std::move(terms));
}

// h <- b*h - a*q*g, where the terms of h before `pos` cannot interact with q*g.
void sub_multiple(IPoly& h, std::size_t pos, const Integer& a, const Monomial& q, const IPoly& g,
                  const Integer& b, const MonomialOrder& order) {
  std::vector<ITerm> out;
  out.reserve(h.terms.size() + g.terms.size());
  for (std::size_t i = 0; i < pos; ++i) {
    out.push_back(std::move(h.terms[i]));
    if (b != 1) out.back().c *= b;
  }
  std::size_t i = pos, j = 0;
  while (i < h.terms.size() || j < g.terms.size()) {
    if (j < g.terms.size()) {
      Monomial gm = g.terms[j].m * q;
      int cmp = i < h.terms.size() ? order.compare(h.terms[i].m, gm) : -1;
      if (cmp < 0) {
        out.push_back({gm, -a * g.terms[j].c});
        ++j;
        continue;
      }
      if (cmp == 0) {
        Integer c = b * h.terms[i].c - a * g.terms[j].c;
        if (c != 0) out.push_back({gm, std::move(c)});
        ++i;
        ++j;
        continue;
      }
    }
    out.push_back(std::move(h.terms[i]));
    if (b != 1) out.back().c *= b;
    ++i;
  }
  h.terms = std::move(out);
}

// One reduction step of the term at `pos` of h by g. Returns the factor applied to h.
Integer reduce_step(IPoly& h, std::size_t pos, const IPoly& g, const MonomialOrder& order) {
  Monomial q = h.terms[pos].m / g.lm();
  Integer a = h.terms[pos].c, b = g.lc();
  Integer common;
  mpz_gcd(common.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  a /= common;
  b /= common;
  sub_multiple(h, pos, a, q, g, b, order);
  return b;
}

bool lm_divides(const IPoly& g, const Monomial& m) {
  std::uint32_t ms = m.support();
  if ((g.lm_support & ~ms) != 0) return false;
  return g.lm().divides(m);
}

const IPoly* find_reducer(const std::vector<const IPoly*>& reducers, const Monomial& m) {
  const IPoly* best = nullptr;
  for (const IPoly* g : reducers)
    if (lm_divides(*g, m) && (!best || g->terms.size() < best->terms.size())) best = g;
  return best;
}

// Full reduction; `scale` tracks h_returned = scale * (remainder of the input).
IPoly reduce_full(IPoly h, const std::vector<const IPoly*>& reducers, const MonomialOrder& order,
                  Rational* scale = nullptr) {
  std::size_t pos = 0;
  while (pos < h.terms.size()) {
    const IPoly* g = find_reducer(reducers, h.terms[pos].m);
    if (!g) {
      ++pos;
      continue;
    }
    Integer b = reduce_step(h, pos, *g, order);
    Integer content = make_primitive(h);
    if (scale) *scale = *scale * Rational(b) / Rational(content);
  }
  h.refresh();
  return h;
}

IPoly spoly(const IPoly& f, const IPoly& g, const MonomialOrder& order) {
  Monomial l = lcm(f.lm(), g.lm());
  IPoly h;
  // h = lc(g) * (l/lm f) * f - lc(f) * (l/lm g) * g, computed as a reduction of (l/lm f) * f.
  Monomial qf = l / f.lm();
  h.terms.reserve(f.terms.size());
  for (const auto& t : f.terms) h.terms.push_back({t.m * qf, t.c});
  reduce_step(h, 0, g, order);
  make_primitive(h);
  h.refresh();
  return h;
}

// --------------------------------------------------------------- Buchberger

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Buchberger {
 public:
  explicit Buchberger(const MonomialOrder& order) : order_(order) {}

  void add_generator(IPoly p) {
    p = reduce_full(std::move(p), active(), order_);
    if (p.empty()) return;
    polys_.push_back(std::move(p));
    update(polys_.size() - 1);
  }

  void run() {
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        int c = order_.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
      });
      Pair p = *best;
      pairs_.erase(best);
      IPoly h = reduce_full(spoly(polys_[p.i], polys_[p.j], order_), active(), order_);
      if (h.empty()) continue;
      polys_.push_back(std::move(h));
      update(polys_.size() - 1);
      if (polys_.back().lm().is_one()) {
        basis_ = {polys_.size() - 1};
        pairs_.clear();
      }
    }
  }

  std::vector<IPoly> reduced_basis() const {
    std::vector<IPoly> out;
    for (std::size_t idx : basis_) {
      std::vector<const IPoly*> others;
      for (std::size_t o : basis_)
        if (o != idx) others.push_back(&polys_[o]);
      out.push_back(reduce_full(polys_[idx], others, order_));
    }
    std::sort(out.begin(), out.end(),
              [&](const IPoly& a, const IPoly& b) { return order_.greater(a.lm(), b.lm()); });
    return out;
  }

 private:
  std::vector<const IPoly*> active() const {
    std::vector<const IPoly*> out;
    for (std::size_t idx : basis_) out.push_back(&polys_[idx]);
    return out;
  }

  // Gebauer-Moeller installation of a new element.
  void update(std::size_t h) {
    const Monomial& lh = polys_[h].lm();
    std::vector<std::size_t> candidates = basis_;
    std::vector<std::size_t> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      std::size_t g1 = candidates[c];
      const Monomial& lg1 = polys_[g1].lm();
      Monomial l1 = lcm(lh, lg1);
      bool keep = lh.coprime(lg1);
      if (!keep) {
        keep = true;
        for (std::size_t d = c + 1; d < candidates.size() && keep; ++d)
          if (lcm(lh, polys_[candidates[d]].lm()).divides(l1)) keep = false;
        for (std::size_t g2 : kept)
          if (keep && lcm(lh, polys_[g2].lm()).divides(l1)) keep = false;
      }
      if (keep) kept.push_back(g1);
    }

    std::vector<Pair> next;
    for (const auto& p : pairs_) {
      const Monomial& la = polys_[p.i].lm();
      const Monomial& lb = polys_[p.j].lm();
      bool drop = lh.divides(p.lcm) && lcm(la, lh) != p.lcm && lcm(lh, lb) != p.lcm;
      if (!drop) next.push_back(p);
    }
    for (std::size_t g : kept)
      if (!lh.coprime(polys_[g].lm())) next.push_back({g, h, lcm(lh, polys_[g].lm())});
    pairs_ = std::move(next);

    std::vector<std::size_t> basis;
    for (std::size_t g : basis_)
      if (!lh.divides(polys_[g].lm())) basis.push_back(g);
    basis.push_back(h);
    basis_ = std::move(basis);
  }

  const MonomialOrder& order_;
  std::vector<IPoly> polys_;
  std::vector<std::size_t> basis_;
  std::vector<Pair> pairs_;
};

std::size_t common_nvars(std::span<const Polynomial> gens) {
  require(!gens.empty(), ErrorKind::Structural, "empty generator list");
  for (const auto& g : gens)
    require(g.nvars() == gens.front().nvars(), ErrorKind::Structural, "generators live in different rings");
  return gens.front().nvars();
}

// --------------------------------------------------------------------- Mora

IPoly mora_normal_form(IPoly h, const std::vector<IPoly>& basis, const MonomialOrder& order) {
  std::vector<IPoly> extra;
  while (!h.empty()) {
    const IPoly* best = nullptr;
    auto consider = [&](const IPoly& g) {
      if (!lm_divides(g, h.lm())) return;
      if (!best || g.ecart() < best->ecart() ||
          (g.ecart() == best->ecart() && g.terms.size() < best->terms.size()))
        best = &g;
    };
    for (const auto& g : basis) consider(g);
    for (const auto& g : extra) consider(g);
    if (!best) break;
    IPoly g = *best;  // `extra` may grow below
    if (g.ecart() > h.ecart()) extra.push_back(h);
    reduce_step(h, 0, g, order);
    make_primitive(h);
    h.refresh();
  }
  return h;
}

}  // namespace

// ------------------------------------------------------------------ public

StandardBasis groebner_basis(std::span<const Polynomial> gens, const MonomialOrder& order) {
  require(order.is_global(), ErrorKind::Structural, "groebner_basis needs a global order");
  std::size_t n = common_nvars(gens);
  if (order.kind() == MonomialOrder::Kind::WeightedDegRevLex)
    require(order.weights().size() == n, ErrorKind::Structural, "order weights do not match the ring");

  Buchberger engine(order);
  std::vector<IPoly> inputs;
  for (const auto& g : gens)
    if (!g.is_zero()) inputs.push_back(to_ipoly(g, order));
  std::sort(inputs.begin(), inputs.end(),
            [&](const IPoly& a, const IPoly& b) { return order.greater(b.lm(), a.lm()); });
  for (auto& p : inputs) engine.add_generator(std::move(p));
  engine.run();

  StandardBasis sb{n, {}, order, true};
  for (const auto& p : engine.reduced_basis()) sb.generators.push_back(to_polynomial(p, n, true));
  return sb;
}

StandardBasis local_standard_basis(std::span<const Polynomial> gens) {
  std::size_t n = common_nvars(gens);
  const MonomialOrder order = MonomialOrder::local();
  StandardBasis sb{n, {}, order, false};

  std::vector<IPoly> basis;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    IPoly p = to_ipoly(g, order);
    if (p.lm().is_one()) {
      sb.generators = {Polynomial::constant(n, 1)};
      return sb;
    }
    basis.push_back(std::move(p));
  }

  struct LocalPair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<LocalPair> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.push_back({i, j, lcm(basis[i].lm(), basis[j].lm())});

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const LocalPair& a, const LocalPair& b) {
      int da = a.lcm.total_degree(), db = b.lcm.total_degree();
      if (da != db) return da < db;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    LocalPair p = *best;
    pairs.erase(best);
    IPoly h = mora_normal_form(spoly(basis[p.i], basis[p.j], order), basis, order);
    if (h.empty()) continue;
    if (h.lm().is_one()) {
      sb.generators = {Polynomial::constant(n, 1)};
      return sb;
    }
    for (std::size_t i = 0; i < basis.size(); ++i) pairs.push_back({i, basis.size(), lcm(basis[i].lm(), h.lm())});
    basis.push_back(std::move(h));
  }

  // Keep one element per minimal leading monomial.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (basis[j].lm().divides(basis[i].lm()) && (basis[j].lm() != basis[i].lm() || j < i)) redundant = true;
    }
    if (!redundant) sb.generators.push_back(to_polynomial(basis[i], n, true));
  }
  return sb;
}

Polynomial normal_form(const Polynomial& p, const StandardBasis& basis) {
  require(p.nvars() == basis.nvars, ErrorKind::Structural, "polynomial outside the basis ring");
  if (p.is_zero()) return p;
  std::vector<IPoly> gens;
  for (const auto& g : basis.generators) gens.push_back(to_ipoly(g, basis.order));

  // to_ipoly scaled p by some rational; recover it so the global remainder is exact.
  IPoly h = to_ipoly(p, basis.order);
  Rational input_scale = Rational(h.lc()) / leading_coefficient(p, basis.order);

  if (basis.order.is_global()) {
    std::vector<const IPoly*> reducers;
    for (const auto& g : gens) reducers.push_back(&g);
    Rational scale = input_scale;
    IPoly r = reduce_full(std::move(h), reducers, basis.order, &scale);
    return to_polynomial(r, p.nvars(), false) * (Rational(1) / scale);
  }
  IPoly r = mora_normal_form(std::move(h), gens, basis.order);
  return to_polynomial(r, p.nvars(), false);
}

bool ideal_contains(const StandardBasis& basis, const Polynomial& p) {
  return normal_form(p, basis).is_zero();
}

Staircase quotient_staircase(const StandardBasis& basis, std::size_t limit) {
  const std::size_t n = basis.nvars;
  std::vector<Monomial> lms = basis.leading_monomials();
  Staircase st;
  if (basis.is_unit_ideal()) return st;

  std::vector<int> bound(n, -1);
  for (const auto& m : lms) {
    std::uint32_t s = m.support();
    if (s != 0 && (s & (s - 1)) == 0) {
      std::size_t v = static_cast<std::size_t>(__builtin_ctz(s));
      if (bound[v] < 0 || m[v] < bound[v]) bound[v] = m[v];
    }
  }
  if (std::any_of(bound.begin(), bound.end(), [](int b) { return b < 0; })) {
    st.infinite = true;
    return st;
  }

  auto in_ideal = [&](const Monomial& m) {
    return std::any_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  // Depth-first over exponent vectors; standard monomials form an order ideal.
  Monomial m(n);
  std::vector<int> e(n, 0);
  auto recurse = [&](auto&& self, std::size_t var) -> void {
    if (var == n) {
      st.monomials.push_back(m);
      require(st.monomials.size() <= limit, ErrorKind::Internal, "staircase exceeds the enumeration limit");
      return;
    }
    for (int x = 0; x < bound[var]; ++x) {
      m.set(var, x);
      if (in_ideal(m)) break;
      self(self, var + 1);
    }
    m.set(var, 0);
  };
  recurse(recurse, 0);
  std::sort(st.monomials.begin(), st.monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return basis.order.greater(b, a); });
  return st;
}

int krull_dimension(const StandardBasis& basis) {
  require(basis.order.is_global(), ErrorKind::Structural, "krull_dimension needs a global-order basis");
  if (basis.is_unit_ideal()) return -1;
  const std::size_t n = basis.nvars;
  require(n < 31, ErrorKind::Structural, "too many variables for the independent-set search");
  std::vector<std::uint32_t> supports;
  for (const auto& m : basis.leading_monomials()) supports.push_back(m.support());
  int best = -1;
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    int size = __builtin_popcount(set);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](std::uint32_t s) { return (s & ~set) == 0; });
    if (independent) best = size;
  }
  return best;
}

bool radical_membership(const Polynomial& p, std::span<const Polynomial> gens) {
  const std::size_t n = p.nvars();
  for (const auto& g : gens) require(g.nvars() == n, ErrorKind::Structural, "radical_membership: ring mismatch");
  std::vector<std::size_t> embed(n);
  std::iota(embed.begin(), embed.end(), 0);
  std::vector<Polynomial> extended;
  for (const auto& g : gens) extended.push_back(g.remap(embed, n + 1));
  Polynomial t = Polynomial::variable(n + 1, n);
  extended.push_back(Polynomial::constant(n + 1, 1) - t * p.remap(embed, n + 1));
  return groebner_basis(extended, MonomialOrder::degrevlex(n + 1)).is_unit_ideal();
}

}  // namespace milnorinf
