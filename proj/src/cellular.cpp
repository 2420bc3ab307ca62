#include "cellalg/cellular.hpp"

#include <sstream>
#include <stdexcept>

#include "cellalg/errors.hpp"

namespace cellalg {

BMatrix::BMatrix(QuotientRingPtr ring, std::size_t n)
    : ring_(std::move(ring)), n_(n), entries_(n * n, Polynomial(ring_->ring())) {}

BMatrix BMatrix::identity(QuotientRingPtr ring, std::size_t n) {
  BMatrix m(std::move(ring), n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, m.ring_->one());
  return m;
}

BMatrix BMatrix::from_rows(QuotientRingPtr ring, const std::vector<std::vector<Polynomial>>& rows) {
  BMatrix m(std::move(ring), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      throw std::invalid_argument("matrix row " + std::to_string(r + 1) + " has " +
                                  std::to_string(rows[r].size()) + " entries, expected " +
                                  std::to_string(rows.size()));
    }
    for (std::size_t c = 0; c < rows.size(); ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void BMatrix::set(std::size_t r, std::size_t c, const Polynomial& value) {
  if (r >= n_ || c >= n_) throw std::out_of_range("matrix index out of range");
  entries_[r * n_ + c] = ring_->reduce(value);
}

void BMatrix::check_compatible(const BMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
  if (ring_ != o.ring_ && !same_ring(ring_->ring(), o.ring_->ring())) {
    throw AmbientMismatch("matrices over different rings");
  }
}

BMatrix BMatrix::operator*(const BMatrix& o) const {
  check_compatible(o);
  BMatrix out(ring_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      Polynomial acc(ring_->ring());
      for (std::size_t k = 0; k < n_; ++k) {
        const Polynomial& a = (*this)(i, k);
        const Polynomial& b = o(k, j);
        if (!a.is_zero() && !b.is_zero()) acc += a * b;
      }
      out.set(i, j, acc);
    }
  }
  return out;
}

BMatrix BMatrix::operator+(const BMatrix& o) const {
  check_compatible(o);
  BMatrix out(ring_, n_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + o.entries_[i];
  return out;
}

BMatrix BMatrix::operator-(const BMatrix& o) const {
  check_compatible(o);
  BMatrix out(ring_, n_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - o.entries_[i];
  return out;
}

BMatrix BMatrix::scale(const Polynomial& b) const {
  BMatrix out(ring_, n_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = ring_->reduce(entries_[i] * b);
  return out;
}

BMatrix BMatrix::transpose() const {
  BMatrix out(ring_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out.entries_[j * n_ + i] = (*this)(i, j);
  }
  return out;
}

bool BMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool BMatrix::operator==(const BMatrix& o) const { return n_ == o.n_ && entries_ == o.entries_; }

std::string BMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    out += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j != 0) out += ", ";
      out += (*this)(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

namespace {

BMatrix minor_of(const BMatrix& m, std::size_t row, std::size_t col) {
  const std::size_t n = m.size();
  BMatrix out(m.ring(), n - 1);
  for (std::size_t i = 0, r = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, c = 0; j < n; ++j) {
      if (j == col) continue;
      out.set(r, c++, m(i, j));
    }
    ++r;
  }
  return out;
}

}  // namespace

Polynomial determinant(const BMatrix& m) {
  const auto& qr = *m.ring();
  const std::size_t n = m.size();
  if (n == 0) return qr.one();
  if (n == 1) return m(0, 0);
  Polynomial det = qr.zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Polynomial term = m(0, j) * determinant(minor_of(m, 0, j));
    det = j % 2 == 0 ? det + term : det - term;
  }
  return qr.reduce(det);
}

BMatrix adjugate(const BMatrix& m) {
  const std::size_t n = m.size();
  BMatrix adj(m.ring(), n);
  if (n == 1) {
    adj.set(0, 0, m.ring()->one());
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial c = determinant(minor_of(m, i, j));
      adj.set(j, i, (i + j) % 2 == 0 ? c : -c);
    }
  }
  return adj;
}

CellLayer CellLayer::make(QuotientRingPtr ring, const std::vector<std::vector<Polynomial>>& phi_rows,
                          std::optional<std::vector<Polynomial>> sigma) {
  if (phi_rows.empty()) throw std::invalid_argument("a layer needs vdim >= 1");
  BMatrix phi = BMatrix::from_rows(ring, phi_rows);
  std::vector<Polynomial> images;
  const auto& r = ring->ring();
  if (sigma) {
    if (sigma->size() != r->nvars()) throw std::invalid_argument("sigma needs one image per variable");
    for (const auto& img : *sigma) images.push_back(ring->reduce(img));
  } else {
    for (std::size_t i = 0; i < r->nvars(); ++i) images.push_back(ring->reduce(Polynomial::variable(r, i)));
  }
  return CellLayer{phi_rows.size(), std::move(ring), std::move(phi), std::move(images)};
}

bool CellLayer::sigma_is_identity() const {
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (!(sigma[i] == ring->reduce(Polynomial::variable(ring->ring(), i)))) return false;
  }
  return true;
}

Polynomial CellLayer::apply_sigma(const Polynomial& b) const {
  return ring->reduce(substitute(b, sigma, ring->ring()));
}

CellularAlgebraSpec extend_with_top_layer(const CellularAlgebraSpec& spec) {
  CellularAlgebraSpec out = spec;
  RingPtr k = make_ring(spec.field, {});
  auto qr = make_quotient_ring(IdealPresentation(k));
  out.layers.push_back(std::make_shared<const CellLayer>(
      CellLayer::make(qr, {{Polynomial::constant(k, Scalar(1))}})));
  return out;
}

ValidationReport validate_spec(const CellularAlgebraSpec& spec) {
  ValidationReport report;
  if (spec.layers.empty()) report.issues.push_back({0, "layers", "spec has no layers"});
  for (std::size_t j = 0; j < spec.layers.size(); ++j) {
    const std::size_t idx = j + 1;
    const CellLayer& layer = *spec.layers[j];
    const QuotientRing& qr = *layer.ring;
    auto issue = [&](std::string check, std::string witness) {
      report.issues.push_back({idx, std::move(check), std::move(witness)});
    };
    if (!(qr.field() == spec.field)) {
      issue("field", "layer field " + qr.field().name() + " differs from " + spec.field.name());
      continue;
    }
    if (qr.is_zero_ring()) {
      issue("nonzero-ring", "ideal contains 1, so B = 0");
      continue;
    }
    if (layer.vdim == 0 || layer.phi.size() != layer.vdim) {
      issue("phi-shape", "phi is " + std::to_string(layer.phi.size()) + "x" +
                             std::to_string(layer.phi.size()) + " but vdim is " + std::to_string(layer.vdim));
      continue;
    }
    for (std::size_t s = 0; s < layer.vdim; ++s) {
      for (std::size_t t = 0; t < layer.vdim; ++t) {
        if (!(qr.reduce(layer.phi(s, t)) == layer.phi(s, t))) {
          issue("phi-normal-form", "phi(" + std::to_string(s + 1) + "," + std::to_string(t + 1) +
                                       ") = " + layer.phi(s, t).to_string() + " is not reduced");
        }
      }
    }
    const auto& ring = qr.ring();
    if (layer.sigma.size() != ring->nvars()) {
      issue("sigma-shape", "sigma has " + std::to_string(layer.sigma.size()) + " images for " +
                               std::to_string(ring->nvars()) + " variables");
      continue;
    }
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      const Polynomial x = Polynomial::variable(ring, i);
      const Polynomial twice = layer.apply_sigma(layer.sigma[i]);
      if (!qr.reduce(twice - x).is_zero()) {
        issue("sigma-involutive",
              "sigma(sigma(" + ring->variables()[i] + ")) = " + twice.to_string() + " != " + x.to_string());
      }
    }
    for (const auto& g : qr.presentation().generators) {
      const Polynomial image = layer.apply_sigma(g);
      if (!image.is_zero()) {
        issue("sigma-preserves-ideal",
              "sigma(" + g.to_string() + ") has nonzero normal form " + image.to_string());
      }
    }
    for (std::size_t s = 0; s < layer.vdim; ++s) {
      for (std::size_t t = 0; t < layer.vdim; ++t) {
        const Polynomial lhs = layer.apply_sigma(layer.phi(s, t));
        if (!(lhs == layer.phi(t, s))) {
          issue("phi-compatibility", "sigma(phi(" + std::to_string(s + 1) + "," + std::to_string(t + 1) +
                                         ")) = " + lhs.to_string() + " != phi(" + std::to_string(t + 1) +
                                         "," + std::to_string(s + 1) + ") = " + layer.phi(t, s).to_string());
        }
      }
    }
  }
  return report;
}

LayerElement make_layer_element(CellLayerPtr layer, BMatrix coords) {
  if (coords.size() != layer->vdim) throw std::invalid_argument("layer element has the wrong size");
  if (!same_ring(coords.ring()->ring(), layer->ring->ring())) {
    throw AmbientMismatch("layer element over a different ring");
  }
  return LayerElement{std::move(layer), std::move(coords)};
}

LayerElement layer_basis_element(CellLayerPtr layer, std::size_t s, const Polynomial& b, std::size_t t) {
  BMatrix m(layer->ring, layer->vdim);
  m.set(s, t, b);
  return make_layer_element(std::move(layer), std::move(m));
}

LayerElement layer_multiply(const LayerElement& a, const LayerElement& b) {
  if (a.layer != b.layer) throw std::invalid_argument("layer elements belong to different layers");
  return LayerElement{a.layer, a.coords * a.layer->phi * b.coords};
}

Polynomial det_phi(const CellLayer& layer) { return determinant(layer.phi); }

std::optional<BMatrix> phi_inverse(const CellLayer& layer) {
  const Polynomial det = det_phi(layer);
  const UnitResult unit = is_unit(*layer.ring, det);
  if (!unit.unit || !unit.inverse) return std::nullopt;
  BMatrix inv = adjugate(layer.phi).scale(*unit.inverse);
  if (!(layer.phi * inv == BMatrix::identity(layer.ring, layer.vdim))) {
    throw InternalInconsistency("phi * phi^-1 != Id for phi = " + layer.phi.to_string());
  }
  return inv;
}

std::string ring_description(const QuotientRing& qr) {
  std::string out = qr.field().is_rationals() ? "Q" : "F" + std::to_string(qr.field().characteristic());
  const auto& vars = qr.ring()->variables();
  if (vars.empty() && qr.presentation().generators.empty()) return out;
  out += "[";
  for (std::size_t i = 0; i < vars.size(); ++i) out += (i == 0 ? "" : ",") + vars[i];
  out += "]";
  if (!qr.gb().is_zero_ideal()) {
    out += "/(";
    const auto& basis = qr.gb().basis;
    for (std::size_t i = 0; i < basis.size(); ++i) out += (i == 0 ? "" : ", ") + basis[i].to_string();
    out += ")";
  }
  return out;
}

std::string AsymptoticAlgebra::description() const {
  std::string out;
  for (const auto& s : summands) {
    if (!out.empty()) out += " + ";
    out += "M_" + std::to_string(s.n) + "(" + s.ring + ")";
  }
  return out;
}

AsymptoticAlgebra asymptotic_algebra(const CellularAlgebraSpec& spec) {
  AsymptoticAlgebra alg;
  std::optional<std::size_t> total = 0;
  for (std::size_t j = 0; j < spec.layers.size(); ++j) {
    const CellLayer& layer = *spec.layers[j];
    AsymptoticSummand s{j + 1, layer.vdim, ring_description(*layer.ring), dim_K(*layer.ring), std::nullopt};
    if (s.ring_dimension) s.dimension = layer.vdim * layer.vdim * *s.ring_dimension;
    if (total && s.dimension) {
      *total += *s.dimension;
    } else {
      total.reset();
    }
    alg.summands.push_back(std::move(s));
  }
  alg.dimension = total;
  return alg;
}

BMatrix asymptotic_map(const CellLayer& layer, const LayerElement& a) {
  if (a.layer.get() != &layer) throw std::invalid_argument("element does not belong to this layer");
  return a.coords * layer.phi;
}

Vector flatten(const BMatrix& m) {
  const QuotientRing& qr = *m.ring();
  const std::size_t d = *qr.dimension();
  Vector out;
  out.reserve(m.size() * m.size() * d);
  for (std::size_t s = 0; s < m.size(); ++s) {
    for (std::size_t t = 0; t < m.size(); ++t) {
      const Vector c = qr.coordinates(m(s, t));
      out.insert(out.end(), c.begin(), c.end());
    }
  }
  return out;
}

BMatrix unflatten(const QuotientRingPtr& ring, std::size_t n, const Vector& v) {
  const std::size_t d = *ring->dimension();
  if (v.size() != n * n * d) throw std::invalid_argument("flattened vector has the wrong length");
  BMatrix m(ring, n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      const auto first = v.begin() + static_cast<std::ptrdiff_t>((s * n + t) * d);
      m.set(s, t, ring->from_coordinates(Vector(first, first + static_cast<std::ptrdiff_t>(d))));
    }
  }
  return m;
}

Matrix right_multiplication_operator(const BMatrix& pivot) {
  const QuotientRingPtr& ring = pivot.ring();
  if (!ring->zero_dimensional()) {
    throw std::logic_error("right_multiplication_operator requires a zero-dimensional ring");
  }
  const std::size_t n = pivot.size();
  const std::size_t d = *ring->dimension();
  Matrix op(ring->field(), n * n * d, n * n * d);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t k = 0; k < d; ++k) {
        BMatrix basis(ring, n);
        basis.set(s, t, Polynomial::monomial(ring->ring(), ring->standard_monomials()[k], Scalar(1)));
        op.set_column((s * n + t) * d + k, flatten(basis * pivot));
      }
    }
  }
  return op;
}

std::optional<LayerElement> asymptotic_kernel_element(const CellLayerPtr& layer) {
  const auto ker = kernel(right_multiplication_operator(layer->phi));
  if (ker.empty()) return std::nullopt;
  return make_layer_element(layer, unflatten(layer->ring, layer->vdim, ker.front()));
}

}  // namespace cellalg
