#pragma once

#include <optional>
#include <utility>

#include "cellalg/polynomial.hpp"

namespace cellalg {

/// The single variable a polynomial depends on, or nullopt for constants.
/// Throws std::invalid_argument when more than one variable occurs.
std::optional<std::size_t> univariate_variable(const Polynomial& f);

/// Euclidean division of univariate polynomials in the same variable.
/// Returns {quotient, remainder}; throws DivisionByZero when g == 0.
std::pair<Polynomial, Polynomial> univariate_divmod(const Polynomial& f, const Polynomial& g);

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.  Throws
/// std::invalid_argument for multivariate input or inputs in different
/// variables.
Polynomial gcd_univariate(const Polynomial& f, const Polynomial& g);

/// True iff gcd(f, f') is constant, i.e. f has no repeated root over the
/// algebraic closure.  Throws std::invalid_argument on the zero polynomial.
bool is_separable_univariate(const Polynomial& f);

/// Over a perfect field squarefree and separable coincide; kept as a
/// separate name for the radical test.
inline bool is_squarefree_univariate(const Polynomial& f) { return is_separable_univariate(f); }

}  // namespace cellalg
