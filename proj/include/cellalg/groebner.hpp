#pragma once

#include <atomic>
#include <cstddef>
#include <string>
#include <vector>

#include "cellalg/polynomial.hpp"

namespace cellalg {

/// Generators of an ideal in an ambient ring.  An empty generator list is
/// the zero ideal.
struct IdealPresentation {
  RingPtr ring;
  std::vector<Polynomial> generators;

  IdealPresentation(RingPtr r, std::vector<Polynomial> gens = {});
};

/// A reduced Gröbner basis: monic, interreduced, sorted by ascending leading
/// monomial.  The order is the order of `ring`.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> basis;

  const MonomialOrder& order() const { return ring->order(); }
  bool is_unit_ideal() const { return basis.size() == 1 && basis[0].is_constant(); }
  bool is_zero_ideal() const { return basis.empty(); }
  std::vector<Monomial> leading_monomials() const;
};

/// Limits for a single Buchberger run.  Exceeding either throws
/// BudgetExceeded.
struct GroebnerBudget {
  std::size_t max_pairs = 200000;
  std::size_t max_basis = 4000;
};

/// Process-wide default budget used when none is passed explicitly.
GroebnerBudget default_budget();
void set_default_budget(GroebnerBudget budget);

/// Remainder of full multivariate division of f by gb.  Throws
/// AmbientMismatch when f and gb live in different rings.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
/// Division by an arbitrary list of divisors (not necessarily a basis).
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors);

/// Reduced Gröbner basis of `ideal`.  When `order` differs from the ideal's
/// ring order the result lives in a copy of the ring carrying `order`.
GroebnerBasis buchberger(const IdealPresentation& ideal, const MonomialOrder& order,
                         const GroebnerBudget& budget);
GroebnerBasis buchberger(const IdealPresentation& ideal, const MonomialOrder& order);
/// Uses the ring's own order.
GroebnerBasis buchberger(const IdealPresentation& ideal);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Result of checking the defining properties of a reduced Gröbner basis.
struct BasisCheck {
  bool monic = true;
  bool interreduced = true;
  bool s_pairs_reduce = true;
  bool generators_reduce = true;
  std::string detail;

  bool ok() const { return monic && interreduced && s_pairs_reduce && generators_reduce; }
};

/// Exhaustive check: leading coefficients 1, no term divisible by another
/// leading monomial, every S-polynomial and every generator reduces to 0.
BasisCheck verify_reduced_basis(const GroebnerBasis& gb, const std::vector<Polynomial>& generators);

/// Global postcondition auditing.  When enabled, every buchberger() call
/// verifies its own output with verify_reduced_basis and tallies the result.
struct BasisAudit {
  std::size_t checked = 0;
  std::size_t failed = 0;
};
void enable_basis_audit(bool on);
BasisAudit basis_audit();
void reset_basis_audit();

/// Exact division f / g; nullopt when g does not divide f.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

}  // namespace cellalg
