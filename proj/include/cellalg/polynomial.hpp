#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cellalg/field.hpp"
#include "cellalg/monomial.hpp"
#include "cellalg/ring.hpp"

namespace cellalg {

struct Term {
  Monomial mono;
  Scalar coeff;

  bool operator==(const Term&) const = default;
};

/// Exact multivariate polynomial.  Terms are stored in strictly decreasing
/// monomial order of the ambient ring with no zero coefficients, so equal
/// polynomials have identical term sequences.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Monomial m, const Scalar& c);
  /// Sorts, merges like terms and reduces coefficients into the field.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const FieldSpec& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Constant coefficient (zero for the zero polynomial).  Requires is_constant().
  Scalar constant_value() const;

  // Leading data; callers must check is_zero() first.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Scalar& leading_coeff() const { return terms_.front().coeff; }

  std::uint64_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  /// Indices of variables that occur with positive exponent.
  std::vector<std::size_t> support() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scale(const Scalar& c) const;
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned e) const;
  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  /// this - c*m*g, fused.  Used by division loops.
  Polynomial sub_mul_term(const Scalar& c, const Monomial& m, const Polynomial& g) const;

  /// Canonical text accepted by parse_polynomial.
  std::string to_string() const;

  bool operator==(const Polynomial& o) const;

 private:
  void check_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial partial_derivative(const Polynomial& f, std::size_t var);

/// Ring homomorphism sending variable i of f's ring to images[i], which all
/// live in the target ring.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images,
                      const RingPtr& target);

/// Re-expresses f in a ring whose variables include all variables f uses,
/// matched by name.  Throws std::invalid_argument on a missing variable.
Polynomial change_ring(const Polynomial& f, const RingPtr& target);

}  // namespace cellalg
