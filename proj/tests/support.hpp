#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cellalg/cellular.hpp"
#include "cellalg/parse.hpp"
#include "cellalg/quotient_ring.hpp"

namespace testsupport {

using namespace cellalg;

inline RingPtr ring_q(std::vector<std::string> vars) { return make_ring(FieldSpec::rationals(), std::move(vars)); }
inline RingPtr ring_p(std::uint64_t p, std::vector<std::string> vars) {
  return make_ring(FieldSpec::prime_field(p), std::move(vars));
}

inline Polynomial P(const RingPtr& r, const std::string& text) { return parse_polynomial(text, r); }

inline IdealPresentation ideal(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(r, g));
  return IdealPresentation(r, ps);
}

inline QuotientRingPtr quotient(const RingPtr& r, const std::vector<std::string>& gens) {
  return make_quotient_ring(ideal(r, gens));
}

inline std::vector<std::vector<Polynomial>> rows(const QuotientRingPtr& qr,
                                                 const std::vector<std::vector<std::string>>& text) {
  std::vector<std::vector<Polynomial>> out;
  for (const auto& row : text) {
    out.emplace_back();
    for (const auto& e : row) out.back().push_back(P(qr->ring(), e));
  }
  return out;
}

inline CellLayerPtr layer(const QuotientRingPtr& qr, const std::vector<std::vector<std::string>>& phi) {
  return std::make_shared<const CellLayer>(CellLayer::make(qr, rows(qr, phi)));
}

inline CellularAlgebraSpec spec_of(std::vector<CellLayerPtr> layers) {
  CellularAlgebraSpec s;
  s.field = layers.front()->ring->field();
  s.layers = std::move(layers);
  return s;
}

// One-layer spec over Q[x]/(f) with the given phi.
inline CellularAlgebraSpec univariate_spec(const std::string& f, const std::vector<std::vector<std::string>>& phi,
                                           FieldSpec field = FieldSpec::rationals()) {
  auto r = make_ring(field, {"x"});
  auto qr = f == "0" ? make_quotient_ring(IdealPresentation(r)) : quotient(r, {f});
  return spec_of({layer(qr, phi)});
}

inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& r, unsigned max_deg, unsigned max_terms,
                              long coeff_range = 5) {
  std::uniform_int_distribution<unsigned> nterms(0, max_terms);
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::uniform_int_distribution<long> coeff(-coeff_range, coeff_range);
  std::uniform_int_distribution<long> den(1, 3);
  std::vector<Term> terms;
  const unsigned k = nterms(rng);
  for (unsigned i = 0; i < k; ++i) {
    Monomial m(r->nvars());
    for (std::size_t v = 0; v < r->nvars(); ++v) m.set(v, deg(rng) / static_cast<unsigned>(r->nvars()));
    const long dn = den(rng);
    mpq_class c(coeff(rng), r->field().is_rationals() ? dn : 1);
    c.canonicalize();
    terms.push_back({m, c});
  }
  return Polynomial::from_terms(r, std::move(terms));
}

// Dense univariate arithmetic, written independently of the library: the
// reference for gcd and separability values.
struct Dense {
  std::vector<mpq_class> c;  // c[i] is the coefficient of x^i
  std::uint64_t p = 0;       // 0 for Q
};

inline mpq_class dense_norm(const mpq_class& v, std::uint64_t p) {
  if (p == 0) return v;
  mpz_class num = v.get_num() % mpz_class(static_cast<unsigned long>(p));
  mpz_class den = v.get_den() % mpz_class(static_cast<unsigned long>(p));
  if (num < 0) num += static_cast<unsigned long>(p);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(static_cast<unsigned long>(p)).get_mpz_t());
  mpz_class r = (num * inv) % static_cast<unsigned long>(p);
  return mpq_class(r);
}

inline void dense_trim(Dense& a) {
  for (auto& v : a.c) v = dense_norm(v, a.p);
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

inline Dense dense(std::vector<long> coeffs_low_to_high, std::uint64_t p = 0) {
  Dense d;
  d.p = p;
  for (long v : coeffs_low_to_high) d.c.emplace_back(v);
  dense_trim(d);
  return d;
}

inline mpq_class dense_inv(const mpq_class& v, std::uint64_t p) {
  if (p == 0) return 1 / v;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), v.get_num().get_mpz_t(), mpz_class(static_cast<unsigned long>(p)).get_mpz_t());
  return mpq_class(inv);
}

inline Dense dense_rem(Dense a, const Dense& b) {
  dense_trim(a);
  const mpq_class lead_inv = dense_inv(b.c.back(), b.p);
  while (a.c.size() >= b.c.size() && !a.c.empty()) {
    const std::size_t shift = a.c.size() - b.c.size();
    const mpq_class q = dense_norm(a.c.back() * lead_inv, a.p);
    for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i + shift] -= q * b.c[i];
    dense_trim(a);
  }
  return a;
}

inline Dense dense_gcd(Dense a, Dense b) {
  dense_trim(a);
  dense_trim(b);
  while (!b.c.empty()) {
    Dense r = dense_rem(a, b);
    a = b;
    b = r;
  }
  if (!a.c.empty()) {
    const mpq_class inv = dense_inv(a.c.back(), a.p);
    for (auto& v : a.c) v = dense_norm(v * inv, a.p);
  }
  return a;
}

inline Dense dense_derivative(const Dense& a) {
  Dense d;
  d.p = a.p;
  for (std::size_t i = 1; i < a.c.size(); ++i) d.c.push_back(a.c[i] * static_cast<long>(i));
  dense_trim(d);
  return d;
}

inline bool dense_separable(const Dense& f) { return dense_gcd(f, dense_derivative(f)).c.size() == 1; }

inline Dense to_dense(const Polynomial& f) {
  Dense d;
  d.p = f.field().characteristic();
  for (const auto& t : f.terms()) {
    const std::uint32_t e = t.mono.size() == 0 ? 0 : t.mono.degree();
    if (d.c.size() <= e) d.c.resize(e + 1, mpq_class(0));
    d.c[e] = t.coeff;
  }
  dense_trim(d);
  return d;
}

inline Polynomial from_dense(const Dense& d, const RingPtr& r) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < d.c.size(); ++i) {
    if (d.c[i] != 0) terms.push_back({Monomial::variable(r->nvars(), 0, static_cast<std::uint32_t>(i)), d.c[i]});
  }
  return Polynomial::from_terms(r, std::move(terms));
}

}  // namespace testsupport
