#include "cellalg/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "cellalg/errors.hpp"

namespace cellalg {

namespace {

// Sorts descending by the ring order and merges equal monomials.
void canonicalize(const Ring& ring, std::vector<Term>& terms) {
  const auto& order = ring.order();
  const auto& field = ring.field();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return FieldSpec::is_zero(t.coeff); });
  terms = std::move(out);
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  const std::size_t n = ring->nvars();
  return monomial(std::move(ring), Monomial(n), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw std::out_of_range("variable index out of range");
  const std::size_t n = ring->nvars();
  return monomial(std::move(ring), Monomial::variable(n, index), Scalar(1));
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Scalar& c) {
  Polynomial p(std::move(ring));
  Scalar v = p.field().from_rational(c);
  if (!FieldSpec::is_zero(v)) p.terms_.push_back({std::move(m), std::move(v)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  for (auto& t : terms) {
    if (t.mono.size() != p.ring_->nvars()) throw AmbientMismatch("monomial has wrong arity");
    t.coeff = p.field().from_rational(t.coeff);
  }
  canonicalize(*p.ring_, terms);
  p.terms_ = std::move(terms);
  return p;
}

Scalar Polynomial::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.empty() ? Scalar(0) : terms_[0].coeff;
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    if (degree_in(i) > 0) out.push_back(i);
  }
  return out;
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) throw AmbientMismatch("polynomials live in different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  const auto& order = ring_->order();
  const auto& field = ring_->field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const int c = order.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = field.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!FieldSpec::is_zero(s)) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i), terms_.end());
  r.terms_.insert(r.terms_.end(), o.terms_.begin() + static_cast<std::ptrdiff_t>(j), o.terms_.end());
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, field().neg(t.coeff)});
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, field().mul(a.coeff, b.coeff)});
  }
  Polynomial r(ring_);
  canonicalize(*ring_, prod);
  r.terms_ = std::move(prod);
  return r;
}

Polynomial Polynomial::scale(const Scalar& c) const {
  Scalar v = field().from_rational(c);
  if (FieldSpec::is_zero(v)) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, field().mul(t.coeff, v)});
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  Scalar v = field().from_rational(c);
  if (FieldSpec::is_zero(v)) return Polynomial(ring_);
  // Multiplying by a monomial preserves the order, so no re-sort is needed.
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field().mul(t.coeff, v)});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, Scalar(1));
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scale(field().inv(leading_coeff()));
}

Polynomial Polynomial::sub_mul_term(const Scalar& c, const Monomial& m, const Polynomial& g) const {
  return *this - g.mul_term(m, c);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = ring_->field().is_rationals() && sgn(t.coeff) < 0;
    Scalar mag = negative ? Scalar(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool unit = mag == 1;
    if (t.mono.is_one()) {
      out += mag.get_str();
    } else {
      if (!unit) out += mag.get_str() + "*";
      out += t.mono.to_string(ring_->variables());
    }
  }
  return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
  if (var >= f.ring()->nvars()) throw std::out_of_range("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    const std::uint32_t e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({std::move(m), f.field().mul(t.coeff, f.field().from_integer(e))});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images,
                      const RingPtr& target) {
  if (images.size() != f.ring()->nvars()) {
    throw std::invalid_argument("substitution needs one image per variable");
  }
  for (const auto& img : images) {
    if (!same_ring(img.ring(), target)) throw AmbientMismatch("substitution image in wrong ring");
  }
  if (!(f.field() == target->field())) throw AmbientMismatch("substitution changes the field");
  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (t.mono[i] != 0) term = term * images[i].pow(t.mono[i]);
    }
    result += term;
  }
  return result;
}

Polynomial change_ring(const Polynomial& f, const RingPtr& target) {
  if (same_ring(f.ring(), target)) return f;
  if (!(f.field() == target->field())) throw AmbientMismatch("rings have different fields");
  const auto& names = f.ring()->variables();
  std::vector<std::size_t> map(names.size(), target->nvars());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (auto idx = target->index_of(names[i])) map[i] = *idx;
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (map[i] == target->nvars()) {
        throw std::invalid_argument("variable '" + names[i] + "' missing from target ring");
      }
      m.set(map[i], t.mono[i]);
    }
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

}  // namespace cellalg
