#include "cellalg/field.hpp"

#include <stdexcept>

#include "cellalg/errors.hpp"

namespace cellalg {

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) {
    throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  }
  FieldSpec f;
  f.kind_ = FieldKind::prime_field;
  f.p_ = p;
  return f;
}

namespace {

mpz_class modulus(std::uint64_t p) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  return z;
}

Scalar residue(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus(p).get_mpz_t());
  return Scalar(r);
}

}  // namespace

Scalar FieldSpec::from_rational(const mpq_class& q) const {
  if (is_rationals()) {
    Scalar r(q);
    r.canonicalize();
    return r;
  }
  const mpz_class m = modulus(p_);
  mpz_class den;
  mpz_fdiv_r(den.get_mpz_t(), q.get_den_mpz_t(), m.get_mpz_t());
  if (den == 0) throw DivisionByZero("denominator is divisible by the characteristic");
  mpz_class den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  return residue(mpz_class(q.get_num() * den_inv), p_);
}

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const {
  if (is_rationals()) return Scalar(a + b);
  return residue(mpz_class(a.get_num() + b.get_num()), p_);
}

Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const {
  if (is_rationals()) return Scalar(a - b);
  return residue(mpz_class(a.get_num() - b.get_num()), p_);
}

Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const {
  if (is_rationals()) return Scalar(a * b);
  return residue(mpz_class(a.get_num() * b.get_num()), p_);
}

Scalar FieldSpec::neg(const Scalar& a) const {
  if (is_rationals()) return Scalar(-a);
  return residue(mpz_class(-a.get_num()), p_);
}

Scalar FieldSpec::inv(const Scalar& a) const {
  if (is_zero(a)) throw DivisionByZero("inverse of zero");
  if (is_rationals()) return Scalar(1 / a);
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), modulus(p_).get_mpz_t());
  return Scalar(r);
}

Scalar FieldSpec::pow(const Scalar& a, unsigned long e) const {
  Scalar result = one();
  Scalar base = a;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

std::string FieldSpec::name() const {
  if (is_rationals()) return "Q";
  return "Fp " + std::to_string(p_);
}

}  // namespace cellalg
