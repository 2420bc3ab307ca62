#include "cellalg/univariate.hpp"

#include <stdexcept>

#include "cellalg/errors.hpp"

namespace cellalg {

std::optional<std::size_t> univariate_variable(const Polynomial& f) {
  const auto vars = f.support();
  if (vars.size() > 1) throw std::invalid_argument("polynomial is not univariate: " + f.to_string());
  if (vars.empty()) return std::nullopt;
  return vars.front();
}

namespace {

void check_common_variable(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring())) throw AmbientMismatch("gcd operands in different rings");
  const auto vf = univariate_variable(f);
  const auto vg = univariate_variable(g);
  if (vf && vg && *vf != *vg) throw std::invalid_argument("operands are in different variables");
}

}  // namespace

std::pair<Polynomial, Polynomial> univariate_divmod(const Polynomial& f, const Polynomial& g) {
  check_common_variable(f, g);
  if (g.is_zero()) throw DivisionByZero("univariate division by zero");
  const auto& field = f.field();
  const Monomial& lm = g.leading_monomial();
  const Scalar lc_inv = field.inv(g.leading_coeff());
  Polynomial q(f.ring());
  Polynomial r = f;
  // Univariate: every order sorts by degree, so the leading term is the top degree.
  while (!r.is_zero() && lm.divides(r.leading_monomial())) {
    const Monomial m = r.leading_monomial() / lm;
    const Scalar c = field.mul(r.leading_coeff(), lc_inv);
    q += Polynomial::monomial(f.ring(), m, c);
    r = r.sub_mul_term(c, m, g);
  }
  return {std::move(q), std::move(r)};
}

Polynomial gcd_univariate(const Polynomial& f, const Polynomial& g) {
  check_common_variable(f, g);
  Polynomial a = f;
  Polynomial b = g;
  while (!b.is_zero()) {
    Polynomial r = univariate_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool is_separable_univariate(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("separability of the zero polynomial");
  const auto var = univariate_variable(f);
  if (!var) return true;
  return gcd_univariate(f, partial_derivative(f, *var)).is_constant();
}

}  // namespace cellalg
