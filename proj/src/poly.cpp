#include "milnorinf/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "milnorinf/error.hpp"

namespace milnorinf {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::size_t nvars) {
  require(nvars <= kMaxVars, ErrorKind::Structural,
          "at most " + std::to_string(kMaxVars) + " variables are supported");
  n_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<int> exponents) : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (int e : exponents) set(i++, e);
}

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set(i, exponents[i]);
  return m;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int exponent) {
  require(i < n_, ErrorKind::Structural, "monomial index out of range");
  require(exponent >= 0, ErrorKind::Structural, "negative exponent");
  e_[i] = exponent;
}

int Monomial::total_degree() const {
  int d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += e_[i];
  return d;
}

bool Monomial::is_one() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] != 0) return false;
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  return true;
}

std::uint32_t Monomial::support() const {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] != 0) s |= 1u << i;
  return s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] += b.e_[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] -= b.e_[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (std::size_t i = 0; i < a.n_; ++i)
    if (auto c = a.e_[i] <=> b.e_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

int weighted_degree(const Monomial& m, std::span<const int> weights) {
  require(m.size() == weights.size(), ErrorKind::Structural,
          "weight vector length " + std::to_string(weights.size()) +
              " does not match variable count " + std::to_string(m.size()));
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += weights[i] * m[i];
  return d;
}

// ------------------------------------------------------------ WeightSystem

WeightSystem::WeightSystem(std::vector<int> weights) : w_(std::move(weights)) {
  require(!w_.empty(), ErrorKind::Structural, "empty weight system");
  int g = 0;
  for (int wi : w_) {
    require(wi >= 1, ErrorKind::Structural, "weights must be positive integers");
    g = std::gcd(g, wi);
  }
  require(g == 1, ErrorKind::Structural, "weights must have gcd 1");
}

WeightSystem WeightSystem::usual(std::size_t nvars) {
  return WeightSystem(std::vector<int>(nvars, 1));
}

int WeightSystem::sum() const { return std::accumulate(w_.begin(), w_.end(), 0); }

int WeightSystem::max() const { return *std::max_element(w_.begin(), w_.end()); }

bool WeightSystem::is_usual() const {
  return std::all_of(w_.begin(), w_.end(), [](int x) { return x == 1; });
}

WeightSystem WeightSystem::with_leading_one() const {
  std::vector<int> w{1};
  w.insert(w.end(), w_.begin(), w_.end());
  return WeightSystem(std::move(w));
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  return monomial(Monomial::variable(nvars, index));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.size());
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms)
    require(t.mono.size() == nvars, ErrorKind::Structural, "term outside the ring");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  Polynomial p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.mono < x; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(nvars_)); }

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

int Polynomial::order() const {
  if (terms_.empty()) return -1;
  int d = terms_.front().mono.total_degree();
  for (const auto& t : terms_) d = std::min(d, t.mono.total_degree());
  return d;
}

std::uint32_t Polynomial::support() const {
  std::uint32_t s = 0;
  for (const auto& t : terms_) s |= t.mono.support();
  return s;
}

void Polynomial::check_ring(const Polynomial& other) const {
  require(nvars_ == other.nvars_, ErrorKind::Structural,
          "polynomials live in different rings (" + std::to_string(nvars_) + " vs " +
              std::to_string(other.nvars_) + " variables)");
}

namespace {

// Merges two sorted term lists with b scaled by sign.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono < a[i].mono) {
      out.push_back({b[j].mono, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  std::map<Monomial, Rational> acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
  Polynomial p(a.nvars_);
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial operator-(Polynomial a) {
  for (auto& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  require(var < nvars_, ErrorKind::Structural, "derivative variable out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * e});
  }
  return from_terms(nvars_, std::move(out));
}

namespace {

Rational power(const Rational& base, int exponent) {
  Rational r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  require(point.size() == nvars_, ErrorKind::Structural, "evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < nvars_ && v != 0; ++i)
      if (t.mono[i] != 0) v *= power(point[i], t.mono[i]);
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::substitute(std::size_t var, const Rational& value) const {
  require(var < nvars_, ErrorKind::Structural, "substitution variable out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    int e = m[var];
    m.set(var, 0);
    out.push_back({m, t.coeff * power(value, e)});
  }
  return from_terms(nvars_, std::move(out));
}

Polynomial Polynomial::translate(std::span<const Rational> shift) const {
  require(shift.size() == nvars_, ErrorKind::Structural, "translation vector has wrong length");
  std::vector<Term> current(terms_.begin(), terms_.end());
  for (std::size_t var = 0; var < nvars_; ++var) {
    if (shift[var] == 0) continue;
    std::vector<Term> next;
    for (const auto& t : current) {
      int e = t.mono[var];
      // (x + a)^e = sum_j binom(e, j) a^(e-j) x^j
      Integer binom = 1;
      for (int j = 0; j <= e; ++j) {
        if (j > 0) binom = binom * (e - j + 1) / j;
        Monomial m = t.mono;
        m.set(var, j);
        next.push_back({m, t.coeff * Rational(binom) * power(shift[var], e - j)});
      }
    }
    current = std::move(from_terms(nvars_, std::move(next)).terms_);
  }
  return from_terms(nvars_, std::move(current));
}

Polynomial Polynomial::remap(std::span<const std::size_t> mapping, std::size_t new_nvars) const {
  require(mapping.size() == nvars_, ErrorKind::Structural, "variable mapping has wrong length");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Monomial m(new_nvars);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.mono[i] == 0) continue;
      require(mapping[i] < new_nvars, ErrorKind::Structural, "variable mapped outside the ring");
      m.set(mapping[i], m[mapping[i]] + t.mono[i]);
    }
    out.push_back({m, t.coeff});
  }
  return from_terms(new_nvars, std::move(out));
}

Polynomial Polynomial::drop_variable(std::size_t var) const {
  require(var < nvars_, ErrorKind::Structural, "variable out of range");
  require(!(support() & (1u << var)), ErrorKind::Structural, "cannot drop a variable that occurs");
  std::vector<std::size_t> mapping(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) mapping[i] = i < var ? i : (i == var ? 0 : i - 1);
  return remap(mapping, nvars_ - 1);
}

std::vector<Polynomial> gradient(const Polynomial& f) {
  std::vector<Polynomial> g;
  g.reserve(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) g.push_back(f.derivative(i));
  return g;
}

std::vector<std::string> default_names(std::size_t nvars, const std::string& stem, int first_index) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back(stem + std::to_string(first_index + static_cast<int>(i)));
  return names;
}

std::string to_string(const Polynomial& p, std::span<const std::string> names) {
  std::vector<std::string> fallback;
  if (names.empty()) {
    fallback = default_names(p.nvars());
    names = fallback;
  }
  require(names.size() == p.nvars(), ErrorKind::Structural, "name list does not match the ring");
  if (p.is_zero()) return "0";

  std::vector<const Term*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  // graded reverse lexicographic, largest first
  std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    int da = a->mono.total_degree(), db = b->mono.total_degree();
    if (da != db) return da > db;
    for (std::size_t i = a->mono.size(); i-- > 0;)
      if (a->mono[i] != b->mono[i]) return a->mono[i] < b->mono[i];
    return false;
  });

  std::ostringstream os;
  bool first = true;
  for (const Term* t : order) {
    Rational c = t->coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = t->mono.is_one();
    bool wrote = false;
    if (c != 1 || unit) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < t->mono.size(); ++i) {
      int e = t->mono[i];
      if (e == 0) continue;
      if (wrote) os << '*';
      os << names[i];
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------- weighted decomposition

Polynomial WeightedDecomposition::sum() const {
  Polynomial s(nvars());
  for (const auto& [deg, part] : parts) s += part;
  return s;
}

bool is_weighted_homogeneous(const Polynomial& p, std::span<const int> weights, int* degree) {
  int d = -1;
  for (const auto& t : p.terms()) {
    int e = weighted_degree(t.mono, weights);
    if (d >= 0 && e != d) return false;
    d = e;
  }
  if (degree) *degree = d;
  return true;
}

WeightedDecomposition decompose(const Polynomial& f, const WeightSystem& w) {
  require(f.nvars() == w.size(), ErrorKind::Structural,
          "weights have length " + std::to_string(w.size()) + " but the polynomial has " +
              std::to_string(f.nvars()) + " variables");
  require(!f.is_constant(), ErrorKind::DegenerateInput, "polynomial is constant");

  std::map<int, std::vector<Term>> buckets;
  for (const auto& t : f.terms()) buckets[weighted_degree(t.mono, w)].push_back(t);

  WeightedDecomposition dec{w, 0, 0, {}};
  for (auto& [deg, terms] : buckets) dec.parts.emplace(deg, Polynomial::from_terms(f.nvars(), std::move(terms)));
  require(dec.parts.size() >= 2, ErrorKind::NotMixed,
          "polynomial is weighted homogeneous for these weights; no gap k with 0 < k < N");
  auto top = dec.parts.rbegin();
  dec.N = top->first;
  dec.k = dec.N - std::next(top)->first;
  require(dec.k < dec.N, ErrorKind::NotMixed,
          "the only lower part is the constant term, so k = N violates 0 < k < N");
  return dec;
}

Polynomial homogenize(const WeightedDecomposition& dec) {
  std::size_t n = dec.nvars();
  std::vector<std::size_t> shift(n);
  std::iota(shift.begin(), shift.end(), 1);
  Polynomial result(n + 1);
  for (const auto& [deg, part] : dec.parts) {
    Polynomial lifted = part.remap(shift, n + 1);
    result += lifted * Polynomial::monomial(Monomial::variable(n + 1, 0, dec.N - deg));
  }
  return result;
}

Polynomial direct_sum(const Polynomial& f, const Polynomial& h) {
  std::size_t n = f.nvars() + h.nvars();
  std::vector<std::size_t> left(f.nvars()), right(h.nvars());
  std::iota(left.begin(), left.end(), 0);
  std::iota(right.begin(), right.end(), f.nvars());
  return f.remap(left, n) + h.remap(right, n);
}

}  // namespace milnorinf
