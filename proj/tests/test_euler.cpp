#include "support.hpp"

#include "milnorinf/branches.hpp"
#include "milnorinf/wly.hpp"

using namespace mt;

namespace {

BranchInvariants inv(int d, std::vector<long> dims, long defect = 0) {
  BranchInvariants b;
  b.d = d;
  b.mu0 = 0;
  for (long x : dims) b.mu0 += x;
  b.dims = std::move(dims);
  b.defect = defect;
  return b;
}

const char* kBigTop = "x1^265 + x1*x2^11 + x1*x3^8 + x3*x4^4";

}  // namespace

TEST_CASE("Poincare coefficients") {
  auto a = poincare_coeffs(W({1, 1}), 2, 5);
  CHECK(a.coeffs == std::vector<Integer>{1, 0, 0, 0, 0, 0});
  auto b = poincare_coeffs(W({1, 2, 3}), 9, 3);
  CHECK(b.coeffs[0] == 1);
  CHECK(b.coeffs[1] == 1);
  auto c = poincare_coeffs(W({1, 24, 33, 58}), 265, 1400);
  int top = (265 - 1) + (265 - 24) + (265 - 33) + (265 - 58) - (1 + 24 + 33 + 58);
  for (int s = top + 1; s <= 1400; ++s) CHECK(c.coeffs[s] == 0);
  CHECK(c.coeffs[top] != 0);
  CHECK(kind_of([] { poincare_coeffs(W({1, 3}), 3, 4); }) == ErrorKind::DegenerateWeights);
}

TEST_CASE("virtual Euler characteristics") {
  CHECK(chi_virtual(W({1, 1, 1, 1}), 3, 4) == -15);
  CHECK(chi_virtual(W({1, 2, 1, 1}), 3, 4) == -3);
  for (int m = 1; m < 6; ++m) CHECK(chi_virtual(W({1, 1}), 2, m) == 0);
}

TEST_CASE("weight product") {
  CHECK(weight_product(W({2, 1, 5}), 15) == 182);
  CHECK(weight_product(W({1, 2, 3}), 9) == 56);
  CHECK(weight_product(W({1, 24, 33, 58}), 265) == 66516);
}

TEST_CASE("isolated polynomial probe") {
  auto a = iso_poly_exists(W({2, 1, 5}), 15);
  CHECK(a.status == IsoStatus::Yes);
  CHECK(a.witness.has_value());
  CHECK(sing_locus_is_isolated(P("x1^7*x2 + x2^15 + x3^3", 3)));
  CHECK(iso_poly_exists(W({1, 2, 3}), 9).status == IsoStatus::Yes);
  CHECK(sing_locus_is_isolated(P("x1^9 + x1*x2^4 + x3^3", 3)));
  auto c = iso_poly_exists(W({1, 24, 33, 58}), 265);
  CHECK(c.status == IsoStatus::ProbablyNo);
  CHECK(c.certain);
  CHECK(iso_poly_exists(W({1, 1}), 2).status == IsoStatus::Yes);
}

TEST_CASE("Euler characteristic of the fibre of the top form") {
  std::vector<BranchInvariants> one{inv(2, {6, 6})};
  CHECK(chi_fiber_isolated_type(W({1, 2, 3}), 9, one) == 3);
  CHECK(chi_fiber(W({1, 2, 3}), 9, one, IsoStatus::Yes).value == 3);
  std::vector<BranchInvariants> big{inv(3, {1, 1, 1})};
  auto b = chi_fiber(W({1, 24, 33, 58}), 265, big, IsoStatus::ProbablyNo);
  CHECK(b.value == -66250);
  CHECK(b.route == FiberRoute::Virtual);
  std::vector<BranchInvariants> none;
  CHECK(chi_fiber(W({1, 1}), 2, none, IsoStatus::Yes).value == 0);
  CHECK(chi_fiber(W({1, 1}), 2, none, IsoStatus::Yes).route == FiberRoute::IsolatedProduct);
}

TEST_CASE("virtual and isolated-type formulas agree when both apply") {
  std::vector<BranchInvariants> one{inv(2, {6, 6})};
  CHECK(chi_fiber_stabilized(W({1, 2, 3}), 9, one).value == 3);
  std::vector<BranchInvariants> two{inv(1, {12})};
  CHECK(chi_fiber_stabilized(W({2, 1, 5}), 15, two).value == chi_fiber_isolated_type(W({2, 1, 5}), 15, two));
}

TEST_CASE("Euler characteristic of the homogenization") {
  std::vector<BranchInvariants> one{inv(2, {6, 6})};
  CHECK(chi_tilde(W({1, 2, 3}), 9, 7, one, IsoStatus::Yes).value == -123);
  std::vector<BranchInvariants> f1{inv(1, {1})};
  CHECK(chi_tilde(W({1, 2, 1, 1}), 3, 1, f1, IsoStatus::Yes).value == 9);
  std::vector<BranchInvariants> big{inv(3, {1, 1, 1})};
  for (int k : {2, 100, 264})
    CHECK(chi_tilde(W({1, 24, 33, 58}), 265, k, big, IsoStatus::ProbablyNo).value == 17560490 - 265 * k);
}

TEST_CASE("suspension of branch invariants") {
  auto s = suspend(inv(2, {6, 6}), 7);
  CHECK(s.dims == std::vector<long>{36, 36});
  CHECK(s.mu0 == 72);
  CHECK(s.defect == 0);
  auto t = suspend(inv(1, {3}, 1), 4);
  CHECK(t.defect == 4);
  auto u = suspend(inv(1, {3}, 2), 4);
  CHECK_FALSE(u.defect.has_value());
}

TEST_CASE("total Milnor number on the reference examples") {
  auto f = P("x1^7*x2 + x3^3 + x2", 3);
  auto a = total_milnor(check_wly(decompose(f, W({2, 1, 5}))));
  CHECK(to_string(a.mu) == "14");
  CHECK(a.path == FormulaPath::IsolatedType);
  CHECK(a.chi_FN == 3);
  auto b = total_milnor(check_wly(decompose(f, W({1, 2, 3}))));
  CHECK(to_string(b.mu) == "14");
  CHECK(b.chi_FN == 3);
  CHECK(b.chi_tilde == -123);
  REQUIRE(b.mu_direct.has_value());
  REQUIRE(b.mu_pipeline.has_value());
  CHECK(*b.mu_direct == 14);
  CHECK(*b.mu_pipeline == 14);

  auto c = total_milnor(check_wly(decompose(P("x1^3 + x1*x2 + x1*x3^2 + x3*x4^2 + x2", 4), W({1, 2, 1, 1}))));
  CHECK(to_string(c.mu) == "3");
  CHECK(c.path == FormulaPath::KEqualsOne);

  auto d = total_milnor_abstract(P(kBigTop, 4), W({1, 24, 33, 58}), 100);
  CHECK(to_string(d.mu) == "66416");
  REQUIRE(d.chi_tilde_symbolic.has_value());
  CHECK(d.chi_tilde_symbolic->first == 17560490);
  CHECK(d.chi_tilde_symbolic->second == -265);
}

TEST_CASE("isolated top forms use the product formula") {
  auto r = total_milnor(check_wly(decompose(P("x1^3 + x2^3 + x3^3 + x1*x2", 3), WeightSystem::usual(3))));
  CHECK(r.path == FormulaPath::Isolated);
  CHECK(to_string(r.mu) == "8");
  CHECK(r.branches.empty());
}

TEST_CASE("non-WLY input is refused") {
  auto a = check_wly(decompose(P("x1^2*x2^2 + x1", 2), WeightSystem::usual(2)));
  CHECK(kind_of([&] { total_milnor(a); }) == ErrorKind::HypothesisFailure);
}

TEST_CASE("oracle total Milnor number") {
  CHECK(to_string(oracle_total_milnor(P("x1^7*x2 + x3^3 + x2", 3))) == "14");
  CHECK(to_string(oracle_total_milnor(P("x1^2*x2 + x3^3 + x2", 3))) == "4");
  CHECK(oracle_total_milnor(P("x1^2*x2", 2)).kind == MilnorValue::Kind::Infinite);
  CHECK(to_string(oracle_total_milnor(P("x1^2 + x2", 2))) == "0");
}
