#include "cellalg/quotient_ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "cellalg/errors.hpp"
#include "cellalg/ideal.hpp"
#include "cellalg/univariate.hpp"

namespace cellalg {

std::string to_string(TriState t) {
  switch (t) {
    case TriState::no:
      return "false";
    case TriState::yes:
      return "true";
    case TriState::unknown:
      return "unknown";
  }
  return "unknown";
}

QuotientRing::QuotientRing(IdealPresentation presentation)
    : QuotientRing(std::move(presentation), default_budget()) {}

QuotientRing::QuotientRing(IdealPresentation presentation, const GroebnerBudget& budget)
    : presentation_(std::move(presentation)),
      gb_(buchberger(presentation_, presentation_.ring->order(), budget)) {
  build();
}

void QuotientRing::build() {
  const std::size_t n = ring()->nvars();
  if (gb_.is_unit_ideal()) {
    zero_dimensional_ = true;
    return;
  }
  // Zero-dimensional iff every variable has a pure power among the leading monomials.
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& lm : gb_.leading_monomials()) {
    const auto sup = [&] {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i) {
        if (lm[i] != 0) s.push_back(i);
      }
      return s;
    }();
    if (sup.size() == 1) {
      const std::size_t v = sup[0];
      bound[v] = bound[v] == 0 ? lm[v] : std::min(bound[v], lm[v]);
    }
  }
  zero_dimensional_ = std::all_of(bound.begin(), bound.end(), [](std::uint32_t b) { return b > 0; });
  if (!zero_dimensional_) return;

  const auto lms = gb_.leading_monomials();
  std::vector<std::uint32_t> e(n, 0);
  for (;;) {
    Monomial m(e);
    const bool standard =
        std::none_of(lms.begin(), lms.end(), [&](const Monomial& lm) { return lm.divides(m); });
    if (standard) standard_.push_back(std::move(m));
    std::size_t i = 0;
    while (i < n && ++e[i] >= bound[i]) e[i++] = 0;
    if (i == n) break;
  }
  const auto& order = ring()->order();
  std::sort(standard_.begin(), standard_.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
  for (std::size_t k = 0; k < standard_.size(); ++k) index_[standard_[k].exponents()] = k;
}

std::optional<std::size_t> QuotientRing::dimension() const {
  if (!zero_dimensional_) return std::nullopt;
  return standard_.size();
}

void QuotientRing::require_zero_dimensional(const char* what) const {
  if (!zero_dimensional_) {
    throw std::logic_error(std::string(what) + " requires a zero-dimensional quotient ring");
  }
}

Vector QuotientRing::coordinates(const Polynomial& f) const {
  require_zero_dimensional("coordinates");
  Vector v(standard_.size(), Scalar(0));
  const Polynomial r = reduce(f);
  for (const auto& t : r.terms()) v.at(index_.at(t.mono.exponents())) = t.coeff;
  return v;
}

Polynomial QuotientRing::from_coordinates(const Vector& v) const {
  require_zero_dimensional("from_coordinates");
  if (v.size() != standard_.size()) throw std::invalid_argument("coordinate vector length mismatch");
  std::vector<Term> terms;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!FieldSpec::is_zero(v[k])) terms.push_back({standard_[k], v[k]});
  }
  return Polynomial::from_terms(ring(), std::move(terms));
}

QuotientRingPtr make_quotient_ring(IdealPresentation presentation) {
  return std::make_shared<const QuotientRing>(std::move(presentation));
}

bool is_zero_dimensional(const QuotientRing& qr) { return qr.zero_dimensional(); }

std::optional<std::size_t> dim_K(const QuotientRing& qr) { return qr.dimension(); }

Matrix multiplication_matrix(const QuotientRing& qr, const Polynomial& b) {
  qr.require_zero_dimensional("multiplication_matrix");
  const std::size_t d = qr.standard_.size();
  Matrix m(qr.field(), d, d);
  const Polynomial nb = qr.reduce(b);
  for (std::size_t j = 0; j < d; ++j) {
    m.set_column(j, qr.coordinates(nb.mul_term(qr.standard_[j], Scalar(1))));
  }
  return m;
}

Polynomial minimal_polynomial_of(const QuotientRing& qr, const Polynomial& b) {
  if (!qr.zero_dimensional()) {
    throw std::logic_error("minimal_polynomial requires a zero-dimensional quotient ring");
  }
  const std::size_t d = *qr.dimension();
  RingPtr tring = make_ring(qr.field(), {"t"});
  // In a unital commutative algebra p(M_b) = M_{p(b)}, which vanishes iff
  // p(b) = 0, so the Krylov sequence of the identity element suffices.
  std::vector<Vector> powers;
  Polynomial p = qr.one();
  const Polynomial nb = qr.reduce(b);
  for (std::size_t k = 0; k <= d; ++k) {
    powers.push_back(qr.coordinates(p));
    if (auto dep = first_dependency(qr.field(), powers)) {
      const std::size_t deg = dep->size();
      std::vector<Term> terms{{Monomial::variable(1, 0, static_cast<std::uint32_t>(deg)), Scalar(1)}};
      for (std::size_t i = 0; i < deg; ++i) {
        terms.push_back({Monomial::variable(1, 0, static_cast<std::uint32_t>(i)), qr.field().neg((*dep)[i])});
      }
      return Polynomial::from_terms(tring, std::move(terms));
    }
    p = qr.reduce(p * nb);
  }
  throw InternalInconsistency("no linear dependency among d+1 powers");
}

Polynomial minimal_polynomial(const QuotientRing& qr, std::size_t var) {
  return minimal_polynomial_of(qr, Polynomial::variable(qr.ring(), var));
}

UnitResult is_unit(const QuotientRing& qr, const Polynomial& b) {
  UnitResult result;
  std::vector<Polynomial> gens = qr.gb().basis;
  gens.push_back(b);
  result.unit = buchberger(IdealPresentation(qr.ring(), gens)).is_unit_ideal();
  if (qr.is_zero_ring()) {
    result.inverse = qr.zero();
    return result;
  }
  const Polynomial nb = qr.reduce(b);
  if (qr.zero_dimensional()) {
    auto c = solve(multiplication_matrix(qr, nb), qr.coordinates(qr.one()));
    if (c.has_value() != result.unit) {
      throw InternalInconsistency("unit test disagrees with the multiplication matrix for " + b.to_string());
    }
    if (c) result.inverse = qr.from_coordinates(*c);
  } else if (result.unit && nb.is_constant()) {
    result.inverse = Polynomial::constant(qr.ring(), qr.field().inv(nb.constant_value()));
  }
  return result;
}

ZeroDivisorResult is_zero_divisor(const QuotientRing& qr, const Polynomial& b) {
  ZeroDivisorResult result;
  const Polynomial nb = qr.reduce(b);
  if (nb.is_zero()) {
    result.zero_divisor = true;
    if (!qr.is_zero_ring()) result.witness = qr.one();
    return result;
  }
  if (qr.zero_dimensional()) {
    const auto ker = kernel(multiplication_matrix(qr, nb));
    result.zero_divisor = !ker.empty();
    if (result.zero_divisor) result.witness = qr.from_coordinates(ker.front());
    return result;
  }
  const IdealPresentation quotient = ideal_quotient(qr.presentation(), nb);
  for (const auto& g : quotient.generators) {
    Polynomial r = qr.reduce(g);
    if (!r.is_zero()) {
      result.zero_divisor = true;
      result.witness = std::move(r);
      break;
    }
  }
  return result;
}

namespace {

std::vector<MinimalPolynomialEntry> minimal_polynomial_entries(const QuotientRing& qr) {
  std::vector<MinimalPolynomialEntry> out;
  for (std::size_t i = 0; i < qr.ring()->nvars(); ++i) {
    Polynomial m = minimal_polynomial(qr, i);
    const bool sf = is_squarefree_univariate(m);
    out.push_back({qr.ring()->variables()[i], std::move(m), sf});
  }
  return out;
}

}  // namespace

RadicalCertificate is_radical(const QuotientRing& qr) {
  RadicalCertificate cert;
  if (qr.zero_dimensional()) {
    cert.method = "seidenberg";
    cert.minimal_polynomials = minimal_polynomial_entries(qr);
    const bool all_sf = std::all_of(cert.minimal_polynomials.begin(), cert.minimal_polynomials.end(),
                                    [](const MinimalPolynomialEntry& e) { return e.squarefree; });
    cert.answer = all_sf ? TriState::yes : TriState::no;
    return cert;
  }
  const auto& basis = qr.gb().basis;
  if (basis.empty()) {
    cert.method = "zero-ideal";
    cert.answer = TriState::yes;
    return cert;
  }
  if (basis.size() == 1 && basis[0].support().size() == 1) {
    cert.method = "principal-univariate";
    const std::size_t v = basis[0].support()[0];
    const bool sf = is_squarefree_univariate(basis[0]);
    cert.generator = MinimalPolynomialEntry{qr.ring()->variables()[v], basis[0], sf};
    cert.answer = sf ? TriState::yes : TriState::no;
    return cert;
  }
  cert.method = "undecided";
  cert.answer = TriState::unknown;
  return cert;
}

EtaleCertificate is_etale(const QuotientRing& qr) {
  EtaleCertificate cert;
  if (!qr.zero_dimensional()) {
    cert.reason = "not finite-dimensional";
    return cert;
  }
  cert.minimal_polynomials = minimal_polynomial_entries(qr);
  for (const auto& e : cert.minimal_polynomials) {
    if (!e.squarefree) {
      cert.reason = "minimal polynomial of " + e.variable + " is inseparable: " + e.polynomial.to_string();
      return cert;
    }
  }
  cert.etale = true;
  cert.reason = "all minimal polynomials separable";
  return cert;
}

}  // namespace cellalg
