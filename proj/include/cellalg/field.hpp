#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cellalg {

// Field elements are carried as GMP rationals.  Over F_p the value is always
// the canonical residue in [0, p) with denominator 1.
using Scalar = mpq_class;

enum class FieldKind { rationals, prime_field };

/// The ground field: either the rationals or a prime field F_p.  Both are
/// perfect, which the separability and radical tests rely on.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws std::invalid_argument unless p is prime.
  static FieldSpec prime_field(std::uint64_t p);

  FieldKind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == FieldKind::rationals; }
  std::uint64_t characteristic() const { return p_; }

  /// Maps an arbitrary rational into the field (reduction mod p for F_p).
  /// Throws DivisionByZero if the denominator vanishes mod p.
  Scalar from_rational(const mpq_class& q) const;
  Scalar from_integer(long v) const { return from_rational(mpq_class(v)); }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  Scalar pow(const Scalar& a, unsigned long e) const;

  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }
  static bool is_one(const Scalar& a) { return a == 1; }

  std::string to_string(const Scalar& a) const { return a.get_str(); }
  std::string name() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  FieldKind kind_ = FieldKind::rationals;
  std::uint64_t p_ = 0;
};

}  // namespace cellalg
