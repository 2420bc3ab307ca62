#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cellalg/linalg.hpp"
#include "cellalg/quotient_ring.hpp"

namespace cellalg {

/// Square matrix over a quotient ring B; entries are kept in normal form.
class BMatrix {
 public:
  BMatrix(QuotientRingPtr ring, std::size_t n);

  static BMatrix identity(QuotientRingPtr ring, std::size_t n);
  /// Entries given row-major; each is reduced to normal form.
  static BMatrix from_rows(QuotientRingPtr ring, const std::vector<std::vector<Polynomial>>& rows);

  const QuotientRingPtr& ring() const { return ring_; }
  std::size_t size() const { return n_; }

  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  void set(std::size_t r, std::size_t c, const Polynomial& value);

  BMatrix operator*(const BMatrix& o) const;
  BMatrix operator+(const BMatrix& o) const;
  BMatrix operator-(const BMatrix& o) const;
  BMatrix scale(const Polynomial& b) const;
  BMatrix transpose() const;
  bool is_zero() const;

  bool operator==(const BMatrix& o) const;

  std::string to_string() const;

 private:
  void check_compatible(const BMatrix& o) const;

  QuotientRingPtr ring_;
  std::size_t n_;
  std::vector<Polynomial> entries_;
};

/// Determinant by cofactor expansion, reduced to normal form.
Polynomial determinant(const BMatrix& m);
BMatrix adjugate(const BMatrix& m);

/// One layer V ⊗ B ⊗ V of an affine cellular algebra: rank n of V, the
/// algebra B, the Gram matrix phi of the bilinear form, and the involution
/// sigma of B given by the image of each variable.
struct CellLayer {
  std::size_t vdim = 0;
  QuotientRingPtr ring;
  BMatrix phi;
  std::vector<Polynomial> sigma;

  /// Normalizes phi and sigma.  `sigma` defaults to the identity.  Throws
  /// std::invalid_argument on shape mismatches.
  static CellLayer make(QuotientRingPtr ring, const std::vector<std::vector<Polynomial>>& phi_rows,
                        std::optional<std::vector<Polynomial>> sigma = std::nullopt);

  bool sigma_is_identity() const;
  /// σ applied to b (then reduced).
  Polynomial apply_sigma(const Polynomial& b) const;
};

using CellLayerPtr = std::shared_ptr<const CellLayer>;

/// Layers listed bottom to top of the cell chain.
struct CellularAlgebraSpec {
  FieldSpec field;
  std::vector<CellLayerPtr> layers;
};

/// Appends the top layer (V = K, B = K, phi = (1)), i.e. the unitalization.
CellularAlgebraSpec extend_with_top_layer(const CellularAlgebraSpec& spec);

struct ValidationIssue {
  std::size_t layer;  // 1-based; 0 for spec-level issues
  std::string check;
  std::string witness;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Checks every layer: B ≠ 0, shapes, normal forms, σ² = id, σ(I) ⊆ I and
/// σ(phi)ᵀ = phi.  Failures are collected, never thrown.
ValidationReport validate_spec(const CellularAlgebraSpec& spec);

/// Element of a layer under the identification v_s ⊗ b ⊗ v_t ↔ b at (s, t).
struct LayerElement {
  CellLayerPtr layer;
  BMatrix coords;
};

LayerElement make_layer_element(CellLayerPtr layer, BMatrix coords);
/// Basis element v_s ⊗ b ⊗ v_t.
LayerElement layer_basis_element(CellLayerPtr layer, std::size_t s, const Polynomial& b, std::size_t t);

/// coords(a) · phi · coords(b).  Throws std::invalid_argument on layer mismatch.
LayerElement layer_multiply(const LayerElement& a, const LayerElement& b);

Polynomial det_phi(const CellLayer& layer);

/// phi⁻¹ = det⁻¹ · adj(phi) when det_phi is a unit with a computable
/// inverse; nullopt otherwise.
std::optional<BMatrix> phi_inverse(const CellLayer& layer);

struct AsymptoticSummand {
  std::size_t layer;  // 1-based
  std::size_t n;
  std::string ring;
  std::optional<std::size_t> ring_dimension;
  std::optional<std::size_t> dimension;  // n² · dim_K(B)
};

/// The direct sum of the matrix rings M_{n_j}(B_j).
struct AsymptoticAlgebra {
  std::vector<AsymptoticSummand> summands;
  std::optional<std::size_t> dimension;

  std::string description() const;
};

AsymptoticAlgebra asymptotic_algebra(const CellularAlgebraSpec& spec);

/// coords(a) · phi: the homomorphism from the layer into M_n(B).
BMatrix asymptotic_map(const CellLayer& layer, const LayerElement& a);

/// K-linear operator X ↦ X·pivot on M_n(B), on the basis E_st·μ_k ordered
/// by (s, t, k).  B must be zero-dimensional.
Matrix right_multiplication_operator(const BMatrix& pivot);

/// Flattening of an element of M_n(B) in the same basis.
Vector flatten(const BMatrix& m);
BMatrix unflatten(const QuotientRingPtr& ring, std::size_t n, const Vector& v);

/// A nonzero X with X·phi = 0 when the asymptotic map is not injective.
/// Requires a zero-dimensional ring.
std::optional<LayerElement> asymptotic_kernel_element(const CellLayerPtr& layer);

std::string ring_description(const QuotientRing& qr);

}  // namespace cellalg
