#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cellalg/groebner.hpp"
#include "cellalg/linalg.hpp"

namespace cellalg {

enum class TriState { no, yes, unknown };

std::string to_string(TriState t);

/// B = K[x]/I, represented by normal forms modulo a reduced Gröbner basis.
class QuotientRing {
 public:
  explicit QuotientRing(IdealPresentation presentation);
  QuotientRing(IdealPresentation presentation, const GroebnerBudget& budget);

  const RingPtr& ring() const { return presentation_.ring; }
  const FieldSpec& field() const { return presentation_.ring->field(); }
  const IdealPresentation& presentation() const { return presentation_; }
  const GroebnerBasis& gb() const { return gb_; }

  bool zero_dimensional() const { return zero_dimensional_; }
  /// 1 ∈ I.
  bool is_zero_ring() const { return gb_.is_unit_ideal(); }
  /// Ascending in the ring order; empty unless zero-dimensional.
  const std::vector<Monomial>& standard_monomials() const { return standard_; }
  /// dim_K(B); nullopt means infinite.
  std::optional<std::size_t> dimension() const;

  Polynomial reduce(const Polynomial& f) const { return normal_form(f, gb_); }
  Polynomial zero() const { return Polynomial(ring()); }
  Polynomial one() const { return reduce(Polynomial::constant(ring(), Scalar(1))); }

  /// Coordinates of NF(f) on the standard monomials.  Zero-dimensional only.
  Vector coordinates(const Polynomial& f) const;
  Polynomial from_coordinates(const Vector& v) const;

 private:
  void require_zero_dimensional(const char* what) const;
  void build();

  IdealPresentation presentation_;
  GroebnerBasis gb_;
  bool zero_dimensional_ = false;
  std::vector<Monomial> standard_;
  std::map<std::vector<std::uint32_t>, std::size_t> index_;

  friend Matrix multiplication_matrix(const QuotientRing&, const Polynomial&);
};

using QuotientRingPtr = std::shared_ptr<const QuotientRing>;

QuotientRingPtr make_quotient_ring(IdealPresentation presentation);

bool is_zero_dimensional(const QuotientRing& qr);
std::optional<std::size_t> dim_K(const QuotientRing& qr);

/// Matrix of multiplication by b on the standard-monomial basis; column j
/// is the image of standard_monomials()[j].  Throws std::logic_error when qr
/// is not zero-dimensional.
Matrix multiplication_matrix(const QuotientRing& qr, const Polynomial& b);

/// Monic minimal polynomial, in a one-variable ring K[t], of the element b.
Polynomial minimal_polynomial_of(const QuotientRing& qr, const Polynomial& b);
/// Minimal polynomial of the variable with index var.
Polynomial minimal_polynomial(const QuotientRing& qr, std::size_t var);

struct UnitResult {
  bool unit = false;
  /// c with NF(b·c) = 1, present when unit and a witness was computable
  /// (always in the zero-dimensional case).
  std::optional<Polynomial> inverse;
};
UnitResult is_unit(const QuotientRing& qr, const Polynomial& b);

struct ZeroDivisorResult {
  bool zero_divisor = false;
  /// g with NF(g) ≠ 0 and NF(g·b) = 0, present when zero_divisor.
  std::optional<Polynomial> witness;
};
/// 0 counts as a zero-divisor.
ZeroDivisorResult is_zero_divisor(const QuotientRing& qr, const Polynomial& b);

struct MinimalPolynomialEntry {
  std::string variable;
  Polynomial polynomial;
  bool squarefree = false;
};

struct RadicalCertificate {
  TriState answer = TriState::unknown;
  /// "seidenberg", "zero-ideal", "principal-univariate" or "undecided".
  std::string method;
  std::vector<MinimalPolynomialEntry> minimal_polynomials;
  /// For the principal univariate case, the generator and its status.
  std::optional<MinimalPolynomialEntry> generator;
};
RadicalCertificate is_radical(const QuotientRing& qr);

struct EtaleCertificate {
  bool etale = false;
  std::string reason;
  std::vector<MinimalPolynomialEntry> minimal_polynomials;
};
EtaleCertificate is_etale(const QuotientRing& qr);

}  // namespace cellalg
