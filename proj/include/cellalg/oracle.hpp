#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cellalg/cellular.hpp"
#include "cellalg/decide.hpp"
#include "cellalg/linalg.hpp"

namespace cellalg::oracle {

using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// Finite-dimensional associative algebra given by structure constants:
/// e_i · e_j = Σ_k table[i*d + j][k] e_k.
class StructureConstantAlgebra {
 public:
  using Element = Vector;

  /// Verifies associativity on all basis triples and, when given, that
  /// `identity` is a two-sided unit.  Throws std::invalid_argument otherwise.
  StructureConstantAlgebra(FieldSpec field, std::vector<std::string> labels, std::vector<SparseVector> table,
                           std::optional<Vector> identity = std::nullopt);

  const FieldSpec& field() const { return field_; }
  std::size_t dimension() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const SparseVector& product(std::size_t i, std::size_t j) const { return table_[i * dimension() + j]; }
  const std::optional<Vector>& identity() const { return identity_; }
  bool unital() const { return identity_.has_value(); }

  Vector basis_vector(std::size_t i) const;
  Vector zero() const { return Vector(dimension(), Scalar(0)); }

  Element multiply(const Element& a, const Element& b) const;
  Element add(const Element& a, const Element& b) const;
  Element scale(const Scalar& c, const Element& a) const;

 private:
  FieldSpec field_;
  std::vector<std::string> labels_;
  std::vector<SparseVector> table_;
  std::optional<Vector> identity_;
};

/// K·1 ⊕ A with a new identity placed first.
StructureConstantAlgebra unitalize(const StructureConstantAlgebra& alg);

/// M_n(K) on the matrix units E_st, ordered row-major.
StructureConstantAlgebra matrix_algebra(const FieldSpec& field, std::size_t n);

/// B = K[x]/I on its standard monomials.  B must be zero-dimensional.
StructureConstantAlgebra quotient_ring_algebra(const QuotientRing& qr);

/// Unitalization of ⊕_j S(M_{n_j}(B_j), phi_j) with cross-layer products 0.
/// Basis: 1, then E_st·μ per layer ordered by (layer, s, t, μ).  Requires
/// every B_j finite-dimensional and every phi_j symmetric with identity
/// sigma; throws std::invalid_argument otherwise.
StructureConstantAlgebra build_realization(const CellularAlgebraSpec& spec);

/// Matrix of left multiplication by a.
Matrix regular_representation(const StructureConstantAlgebra& alg, const Vector& a);

/// Jacobson radical over Q by Dickson's trace-form criterion: the kernel of
/// (a, b) ↦ tr(L_{ab}) on the unitalization, intersected back with A.  The
/// returned basis is verified to span a nilpotent two-sided ideal.
/// Throws std::invalid_argument for fields other than Q.
std::vector<Vector> dickson_radical(const StructureConstantAlgebra& alg);

bool is_semisimple_oracle(const StructureConstantAlgebra& alg);

/// Same space with product a ∘ b = a·a0·b.  Not unital.
StructureConstantAlgebra switch_realization(const StructureConstantAlgebra& alg, const Vector& a0);

/// A / span(subspace) for a two-sided ideal, on the complement of the
/// echelon pivots.
StructureConstantAlgebra quotient_algebra(const StructureConstantAlgebra& alg, const std::vector<Vector>& ideal);

bool spans_ideal(const StructureConstantAlgebra& alg, const std::vector<Vector>& subspace);
bool spans_nilpotent(const StructureConstantAlgebra& alg, const std::vector<Vector>& subspace);

/// Whether a0 is a zero-divisor in a unital algebra: some nonzero x with
/// a0·x = 0 or x·a0 = 0 (0 counts as a zero-divisor).
bool is_zero_divisor_element(const StructureConstantAlgebra& alg, const Vector& a0);

/// Criteria-versus-oracle comparison for one spec: check_semisimple on the
/// spec extended by the top layer against the trace-form radical of
/// build_realization(spec).
struct OracleCheck {
  bool applicable = false;
  std::string reason;  // why not applicable
  std::size_t dimension = 0;
  std::size_t radical_dimension = 0;
  bool oracle_semisimple = false;
  Answer criteria_answer = Answer::unknown;
  bool agrees = false;
};

/// Applicable over Q when every layer is finite-dimensional with symmetric
/// phi and identity sigma.
OracleCheck oracle_check(const CellularAlgebraSpec& spec);

struct RandomParams {
  std::size_t max_layers = 3;
  std::size_t max_n = 2;
  std::size_t max_deg = 3;
  FieldSpec field = FieldSpec::rationals();
};

/// Reproducible random spec: univariate B_j = K[x]/(f_j) with 1 ≤ deg f_j ≤
/// max_deg, symmetric phi_j, identity sigma_j.
CellularAlgebraSpec random_instance(std::uint64_t seed, const RandomParams& params);

/// Seed of the i-th instance of a corpus run.
std::uint64_t corpus_seed(std::uint64_t seed, std::size_t i);

}  // namespace cellalg::oracle
