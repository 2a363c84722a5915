#include "support.hpp"

#include "milnorinf/ideal.hpp"

using namespace mt;

namespace {

std::vector<Monomial> lms(const StandardBasis& sb) { return sb.leading_monomials(); }

std::size_t staircase_size(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  return quotient_staircase(groebner_basis(gens, order)).size();
}

}  // namespace

TEST_CASE("groebner basis examples") {
  auto sb = groebner_basis(Ps({"x1^2 + x2", "x2"}, 2), MonomialOrder::degrevlex(2));
  CHECK(sb.generators == Ps({"x1^2", "x2"}, 2));
  auto one = groebner_basis(Ps({"x1"}, 2), MonomialOrder::lex());
  CHECK(one.generators == Ps({"x1"}, 2));
  auto grad = gradient(P("x1^7*x2 + x3^3", 3));
  auto g = groebner_basis(grad, MonomialOrder::weighted_degrevlex({2, 1, 5}));
  auto leads = lms(g);
  std::sort(leads.begin(), leads.end());
  std::vector<Monomial> expected{Monomial{0, 0, 2}, Monomial{6, 1, 0}, Monomial{7, 0, 0}};
  std::sort(expected.begin(), expected.end());
  CHECK(leads == expected);
}

TEST_CASE("groebner bases are reduced and monic") {
  auto sb = groebner_basis(Ps({"x1*x2 - 1", "x1^2 + x2^2 - 4"}, 2), MonomialOrder::lex());
  for (const auto& g : sb.generators) CHECK(leading_coefficient(g, sb.order) == 1);
  CHECK(sb.reduced);
}

TEST_CASE("local standard basis examples") {
  auto a = local_standard_basis(Ps({"3*x1^2 - 2*x1"}, 1));
  CHECK(lms(a) == std::vector<Monomial>{Monomial{1}});
  CHECK(quotient_staircase(a).size() == 1);
  auto b = local_standard_basis(Ps({"7*x1^6", "3*x2^2"}, 2));
  auto st = quotient_staircase(b);
  CHECK(st.size() == 12);
  for (const auto& m : st.monomials) CHECK((m[0] <= 5 && m[1] <= 1));
  auto unit = local_standard_basis(Ps({"1"}, 2));
  CHECK(unit.is_unit_ideal());
  CHECK(quotient_staircase(unit).size() == 0);
  auto unit2 = local_standard_basis(Ps({"x1 + 1"}, 2));
  CHECK(unit2.is_unit_ideal());
}

TEST_CASE("quotient staircase") {
  CHECK(staircase_size(Ps({"x1", "x2"}, 2), MonomialOrder::degrevlex(2)) == 1);
  CHECK(quotient_staircase(local_standard_basis(Ps({"7*x1^6", "3*x2^2"}, 2))).size() == 12);
  CHECK(quotient_staircase(groebner_basis(Ps({"x1^2*x2"}, 2), MonomialOrder::degrevlex(2))).infinite);
}

TEST_CASE("krull dimension") {
  CHECK(krull_dimension(groebner_basis(Ps({"x1", "x3"}, 3), MonomialOrder::degrevlex(3))) == 1);
  CHECK(krull_dimension(groebner_basis(gradient(P("x1^7*x2 + x3^3", 3)), MonomialOrder::degrevlex(3))) == 1);
  CHECK(krull_dimension(groebner_basis(Ps({"x1", "x1 + 1"}, 2), MonomialOrder::degrevlex(2))) == -1);
  CHECK(krull_dimension(groebner_basis(Ps({"x1^2 - x2", "x2^3 - 1"}, 2), MonomialOrder::lex())) == 0);
  CHECK(kind_of([] { krull_dimension(local_standard_basis(Ps({"x1"}, 1))); }) == ErrorKind::Structural);
}

TEST_CASE("radical membership") {
  CHECK(radical_membership(P("x1", 1), Ps({"x1^2"}, 1)));
  CHECK_FALSE(radical_membership(P("x2", 2), Ps({"x1"}, 2)));
  CHECK(radical_membership(P("x1", 2), Ps({"7*x1^6*x2", "x1^7", "x2"}, 2)));
  CHECK_FALSE(radical_membership(P("x2", 2), Ps({"2*x1*x2^2", "2*x1^2*x2", "x1"}, 2)));
}

TEST_CASE("normal forms and membership") {
  auto sb = groebner_basis(Ps({"x1^2 - x2", "x2^2"}, 2), MonomialOrder::degrevlex(2));
  CHECK(ideal_contains(sb, P("x1^4", 2)));
  CHECK_FALSE(ideal_contains(sb, P("x1^3", 2)));
  CHECK(normal_form(P("x1^2 + x1", 2), sb) == P("x2 + x1", 2));
  auto loc = local_standard_basis(Ps({"x1 - x1^2"}, 1));
  CHECK(ideal_contains(loc, P("x1", 1)));
  CHECK_FALSE(ideal_contains(loc, P("1", 1)));
}

TEST_CASE("local and global quotients differ away from the origin") {
  std::vector<Polynomial> gens = gradient(P("x1^3 - x1^2", 1));
  CHECK(quotient_staircase(local_standard_basis(gens)).size() == 1);
  CHECK(quotient_staircase(groebner_basis(gens, MonomialOrder::degrevlex(1))).size() == 2);
}
