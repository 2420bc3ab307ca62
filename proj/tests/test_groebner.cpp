#include "doctest.h"

#include "cellalg/errors.hpp"
#include "cellalg/groebner.hpp"
#include "cellalg/ideal.hpp"
#include "cellalg/univariate.hpp"
#include "support.hpp"

using namespace cellalg;
using namespace testsupport;

TEST_SUITE("groebner") {

TEST_CASE("monomial orders") {
  const Monomial x2 = Monomial::variable(2, 0, 2);
  const Monomial xy = Monomial::variable(2, 0) * Monomial::variable(2, 1);
  const Monomial y3 = Monomial::variable(2, 1, 3);
  const Monomial one(2);
  CHECK(MonomialOrder::degrevlex().compare(y3, x2) > 0);
  CHECK(MonomialOrder::lex().compare(x2, y3) > 0);
  CHECK(MonomialOrder::degrevlex().compare(x2, xy) > 0);
  CHECK(MonomialOrder::block(1).compare(Monomial::variable(2, 0), y3) > 0);
  CHECK(MonomialOrder::degrevlex().compare(one, Monomial::variable(2, 1)) < 0);
  CHECK(MonomialOrder::lex().compare(xy, xy) == 0);
}

TEST_CASE("normal form examples") {
  auto r = ring_q({"x", "y"});
  auto gb = buchberger(ideal(r, {"x^2-1"}));
  CHECK(normal_form(P(r, "x^2"), gb) == P(r, "1"));
  CHECK(normal_form(P(r, "x^2-1"), gb).is_zero());
  auto gb2 = buchberger(ideal(r, {"x^2", "y^2"}));
  CHECK(normal_form(P(r, "x+y"), gb2) == P(r, "x+y"));
  CHECK_THROWS_AS(normal_form(P(ring_q({"z"}), "z"), gb2), AmbientMismatch);
}

TEST_CASE("buchberger examples") {
  auto r = ring_q({"x", "y"});
  auto gb = buchberger(ideal(r, {"x^2-1"}));
  REQUIRE(gb.basis.size() == 1);
  CHECK(gb.basis[0] == P(r, "x^2-1"));
  auto gb2 = buchberger(ideal(r, {"x", "x^2"}));
  REQUIRE(gb2.basis.size() == 1);
  CHECK(gb2.basis[0] == P(r, "x"));
  const auto id = ideal(r, {"x*y-1", "y^2-1"});
  auto gb3 = buchberger(id);
  CHECK(normal_form(P(r, "x-y"), gb3).is_zero());
  // x - y = y*(x*y - 1) - x*(y^2 - 1): membership without a basis
  CHECK(P(r, "y") * P(r, "x*y-1") - P(r, "x") * P(r, "y^2-1") == P(r, "x-y"));
  CHECK(verify_reduced_basis(gb3, id.generators).ok());
  CHECK(buchberger(ideal(r, {})).is_zero_ideal());
  CHECK(buchberger(ideal(r, {"2*x", "x+3"})).is_unit_ideal());
}

TEST_CASE("buchberger under another order") {
  auto r = ring_q({"x", "y"});
  const auto id = ideal(r, {"x^2 + y", "x*y - 1"});
  auto lex = buchberger(id, MonomialOrder::lex());
  CHECK(lex.ring->order() == MonomialOrder::lex());
  std::vector<Polynomial> moved;
  for (const auto& g : id.generators) moved.push_back(change_ring(g, lex.ring));
  CHECK(verify_reduced_basis(lex, moved).ok());
  // lex basis contains a univariate polynomial in y
  bool has_y_only = false;
  for (const auto& g : lex.basis) has_y_only |= g.degree_in(0) == 0;
  CHECK(has_y_only);
}

TEST_CASE("budget exceeded is a distinct error") {
  auto r = ring_q({"x", "y", "z"});
  const auto id = ideal(r, {"x^3*y - z^2", "y^3*z - x^2", "z^3*x - y^2"});
  CHECK_THROWS_AS(buchberger(id, MonomialOrder::degrevlex(), GroebnerBudget{3, 4000}), BudgetExceeded);
  CHECK_THROWS_AS(buchberger(id, MonomialOrder::degrevlex(), GroebnerBudget{200000, 3}), BudgetExceeded);
}

TEST_CASE("s-polynomial") {
  auto r = ring_q({"x", "y"});
  CHECK(s_polynomial(P(r, "x^2 - y"), P(r, "x*y - 1")) == P(r, "-y^2 + x"));
}

TEST_CASE("exact division") {
  auto r = ring_q({"x", "y"});
  CHECK(exact_divide(P(r, "x^2*y - y"), P(r, "x - 1")) == P(r, "x*y + y"));
  CHECK_FALSE(exact_divide(P(r, "x^2 + 1"), P(r, "x - 1")).has_value());
}

TEST_CASE("verify_reduced_basis detects defects") {
  auto r = ring_q({"x", "y"});
  GroebnerBasis not_interreduced{r, {P(r, "x"), P(r, "x^2 + y")}};
  CHECK_FALSE(verify_reduced_basis(not_interreduced, {}).interreduced);
  GroebnerBasis not_monic{r, {P(r, "2*x")}};
  CHECK_FALSE(verify_reduced_basis(not_monic, {}).monic);
  GroebnerBasis incomplete{r, {P(r, "x*y - 1"), P(r, "y^2 - 1")}};
  CHECK_FALSE(verify_reduced_basis(incomplete, {}).s_pairs_reduce);
  GroebnerBasis missing{r, {P(r, "x")}};
  CHECK_FALSE(verify_reduced_basis(missing, {P(r, "y")}).generators_reduce);
}

TEST_CASE("elimination examples") {
  auto r = ring_q({"t", "x"});
  const auto id = ideal(r, {"t*x - 1", "t^2"});
  const auto elim = eliminate(id, {0});
  CHECK(ideal_contains(elim, P(r, "x^2")));
  // 1 = x^2*t^2 - (x*t + 1)*(t*x - 1), so the ideal is the unit ideal
  CHECK(P(r, "x^2") * P(r, "t^2") - P(r, "x*t + 1") * P(r, "t*x - 1") == P(r, "1"));
  CHECK(ideal_contains(elim, P(r, "1")));
  for (const auto& g : elim.generators) CHECK(g.degree_in(0) == 0);

  auto r2 = ring_q({"x", "y"});
  const auto same = eliminate(ideal(r2, {"x - y"}), {});
  CHECK(ideals_equal(same, ideal(r2, {"x - y"})));
  auto r3 = ring_q({"t", "x"});
  const auto zero = eliminate(ideal(r3, {"t"}), {0});
  CHECK(buchberger(zero).is_zero_ideal());
}

TEST_CASE("elimination of a parametrized curve") {
  auto r = ring_q({"t", "x", "y"});
  const auto elim = eliminate(ideal(r, {"x - t^2", "y - t^3"}), {0});
  CHECK(ideal_contains(elim, P(r, "x^3 - y^2")));
  CHECK_FALSE(ideal_contains(elim, P(r, "x - y")));
}

TEST_CASE("intersection examples") {
  auto r = ring_q({"x", "y"});
  const auto i = ideal_intersection(ideal(r, {"x"}), ideal(r, {"y"}));
  CHECK(ideal_contains(i, P(r, "x*y")));
  for (const auto& g : i.generators) {
    CHECK(exact_divide(g, P(r, "x")).has_value());
    CHECK(exact_divide(g, P(r, "y")).has_value());
  }
  CHECK(ideals_equal(i, ideal(r, {"x*y"})));
  const auto j = ideal(r, {"x^2 + y", "y^3"});
  CHECK(ideals_equal(ideal_intersection(j, ideal(r, {"1"})), j));
  CHECK(ideals_equal(ideal_intersection(ideal(r, {"x^2"}), ideal(r, {"x"})), ideal(r, {"x^2"})));
  CHECK_THROWS_AS(ideal_intersection(ideal(r, {"x"}), ideal(ring_q({"z"}), {"z"})), AmbientMismatch);
}

TEST_CASE("quotient examples") {
  auto r = ring_q({"x"});
  CHECK(ideals_equal(ideal_quotient(ideal(r, {"x^2"}), P(r, "x")), ideal(r, {"x"})));
  const auto q = ideal_quotient(ideal(r, {"x^2 - 1"}), P(r, "x - 1"));
  CHECK(ideals_equal(q, ideal(r, {"x + 1"})));
  // (x + 1)(x - 1) leaves remainder 0 on division by x^2 - 1
  CHECK(univariate_divmod(P(r, "x + 1") * P(r, "x - 1"), P(r, "x^2 - 1")).second.is_zero());
  CHECK_FALSE(ideal_contains(q, P(r, "1")));
  const auto j = ideal(r, {"x^3 - x"});
  CHECK(ideals_equal(ideal_quotient(j, P(r, "1")), j));
  CHECK_THROWS_AS(ideal_quotient(j, Polynomial(r)), std::invalid_argument);
}

TEST_CASE("zero-dimensionality and dimension examples") {
  auto r = ring_q({"x", "y"});
  auto a = quotient(r, {"x^2 - 1", "y^3"});
  CHECK(is_zero_dimensional(*a));
  CHECK(dim_K(*a) == 6u);
  CHECK_FALSE(is_zero_dimensional(*quotient(r, {"x*y"})));
  CHECK_FALSE(dim_K(*quotient(r, {"x*y"})).has_value());
  auto rx = ring_q({"x"});
  CHECK(dim_K(*quotient(rx, {"x"})) == 1u);
  auto zero = make_quotient_ring(IdealPresentation(rx));
  CHECK_FALSE(is_zero_dimensional(*zero));
  CHECK_FALSE(dim_K(*zero).has_value());
  auto k = make_quotient_ring(IdealPresentation(ring_q({})));
  CHECK(dim_K(*k) == 1u);
  CHECK(dim_K(*quotient(r, {"x^2", "x*y", "y^2"})) == 3u);
}

TEST_CASE("multiplication matrix examples") {
  auto r = ring_q({"x"});
  auto qr = quotient(r, {"x^2"});
  CHECK(multiplication_matrix(*qr, P(r, "1")) == Matrix::identity(qr->field(), 2));
  const Matrix m = multiplication_matrix(*qr, P(r, "x"));
  REQUIRE(qr->standard_monomials().size() == 2);
  // standard monomials ascend: 1, x
  CHECK(m(0, 0) == 0);
  CHECK(m(1, 0) == 1);
  CHECK(m(0, 1) == 0);
  CHECK(m(1, 1) == 0);
  CHECK((m * m).is_zero());
  CHECK_THROWS_AS(multiplication_matrix(*make_quotient_ring(IdealPresentation(r)), P(r, "x")), std::logic_error);
}

TEST_CASE("minimal polynomial examples") {
  auto r = ring_q({"x", "y"});
  auto qr = quotient(r, {"x^2 - 1", "y^2"});
  auto mx = minimal_polynomial(*qr, 0);
  auto my = minimal_polynomial(*qr, 1);
  CHECK(mx == P(mx.ring(), "t^2 - 1"));
  CHECK(my == P(my.ring(), "t^2"));
  auto rx = ring_q({"x"});
  auto m = minimal_polynomial(*quotient(rx, {"x"}), 0);
  CHECK(m == P(m.ring(), "t"));
  auto qr2 = quotient(r, {"x^2 - 1", "y - x"});
  auto my2 = minimal_polynomial(*qr2, 1);
  CHECK(my2 == P(my2.ring(), "t^2 - 1"));
  // y^2 - 1 = (y - x)(y + x) + (x^2 - 1)
  CHECK(P(r, "y - x") * P(r, "y + x") + P(r, "x^2 - 1") == P(r, "y^2 - 1"));
}

TEST_CASE("minimal polynomial matches matrix powers") {
  auto r = ring_q({"x", "y"});
  auto qr = quotient(r, {"x^2 - y", "y^2 - 2*x + 1"});
  const Polynomial b = P(r, "x + 2*y");
  const Polynomial m = minimal_polynomial_of(*qr, b);
  // evaluate m at the multiplication matrix of b
  const Matrix mb = multiplication_matrix(*qr, b);
  const std::size_t d = mb.rows();
  Matrix acc(qr->field(), d, d);
  Matrix power = Matrix::identity(qr->field(), d);
  for (std::uint32_t e = 0; e <= m.total_degree(); ++e) {
    for (const auto& t : m.terms()) {
      if (t.mono.degree() != e) continue;
      Matrix scaled = power;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) scaled(i, j) *= t.coeff;
      acc = acc + scaled;
    }
    power = power * mb;
  }
  CHECK(acc.is_zero());
}

TEST_CASE("unit examples") {
  auto r = ring_q({"x"});
  auto a = quotient(r, {"x^2 - 1"});
  auto u = is_unit(*a, P(r, "x"));
  CHECK(u.unit);
  REQUIRE(u.inverse);
  CHECK(*u.inverse == P(r, "x"));
  CHECK_FALSE(is_unit(*quotient(r, {"x^2"}), P(r, "x")).unit);
  auto c = is_unit(*quotient(r, {"x"}), P(r, "2"));
  CHECK(c.unit);
  REQUIRE(c.inverse);
  CHECK(*c.inverse == P(r, "1/2"));
  auto poly = make_quotient_ring(IdealPresentation(r));
  CHECK_FALSE(is_unit(*poly, P(r, "x")).unit);
  CHECK(is_unit(*poly, P(r, "3")).unit);
}

TEST_CASE("zero-divisor examples") {
  auto r = ring_q({"x"});
  auto a = quotient(r, {"x^2 - 1"});
  auto z = is_zero_divisor(*a, P(r, "x + 1"));
  CHECK(z.zero_divisor);
  REQUIRE(z.witness);
  CHECK(a->reduce(*z.witness * P(r, "x + 1")).is_zero());
  CHECK_FALSE(a->reduce(*z.witness).is_zero());
  CHECK(*z.witness == P(r, "x - 1"));
  auto poly = make_quotient_ring(IdealPresentation(r));
  CHECK_FALSE(is_zero_divisor(*poly, P(r, "x")).zero_divisor);
  CHECK(is_zero_divisor(*a, Polynomial(r)).zero_divisor);
  CHECK(is_zero_divisor(*poly, Polynomial(r)).zero_divisor);
  auto r2 = ring_q({"x", "y"});
  auto b = quotient(r2, {"x*y"});
  auto zb = is_zero_divisor(*b, P(r2, "x"));
  CHECK(zb.zero_divisor);
  REQUIRE(zb.witness);
  CHECK(b->reduce(*zb.witness * P(r2, "x")).is_zero());
  CHECK_FALSE(b->reduce(*zb.witness).is_zero());
  CHECK_FALSE(is_zero_divisor(*b, P(r2, "x + y + 1")).zero_divisor);
}

TEST_CASE("radical examples") {
  auto r = ring_q({"x"});
  auto a = is_radical(*quotient(r, {"x^2 - x"}));
  CHECK(a.answer == TriState::yes);
  CHECK(a.method == "seidenberg");
  auto r2 = ring_q({"x", "y"});
  auto b = is_radical(*quotient(r2, {"x^2", "y - 1"}));
  CHECK(b.answer == TriState::no);
  REQUIRE(b.minimal_polynomials.size() == 2);
  CHECK(b.minimal_polynomials[0].variable == "x");
  CHECK(b.minimal_polynomials[0].polynomial == P(b.minimal_polynomials[0].polynomial.ring(), "t^2"));
  CHECK_FALSE(b.minimal_polynomials[0].squarefree);
  auto c = is_radical(*quotient(r2, {"x*y"}));
  CHECK(c.answer == TriState::unknown);
  CHECK(c.method == "undecided");
  CHECK(is_radical(*make_quotient_ring(IdealPresentation(r2))).answer == TriState::yes);
  auto p = is_radical(*quotient(r2, {"x^3 - x"}));
  CHECK(p.answer == TriState::yes);
  CHECK(p.method == "principal-univariate");
  auto p2 = is_radical(*quotient(r2, {"(y - 1)^2"}));
  CHECK(p2.answer == TriState::no);
}

TEST_CASE("etale examples") {
  auto r = ring_q({"x"});
  CHECK(is_etale(*quotient(r, {"x^2 - 2"})).etale);
  CHECK_FALSE(is_etale(*quotient(r, {"x^2"})).etale);
  CHECK_FALSE(is_etale(*make_quotient_ring(IdealPresentation(r))).etale);
  CHECK(is_etale(*quotient(ring_p(5, {"x"}), {"x^5 - x"})).etale);
}

TEST_CASE("quotient ring coordinates round-trip") {
  auto r = ring_q({"x", "y"});
  auto qr = quotient(r, {"x^2 - y", "y^2 - 1"});
  const Polynomial f = P(r, "3*x^3 + x*y - 2");
  CHECK(qr->from_coordinates(qr->coordinates(f)) == qr->reduce(f));
  CHECK(qr->one() == P(r, "1"));
  CHECK(quotient(r, {"1"})->is_zero_ring());
}

}  // TEST_SUITE
