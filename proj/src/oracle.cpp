#include "cellalg/oracle.hpp"

#include <map>
#include <stdexcept>

#include "cellalg/errors.hpp"

namespace cellalg::oracle {

namespace {

using Accumulator = std::map<std::size_t, Scalar>;

void accumulate(const FieldSpec& f, Accumulator& acc, const Scalar& c, const SparseVector& v) {
  for (const auto& [k, x] : v) {
    auto [it, inserted] = acc.try_emplace(k, Scalar(0));
    it->second = f.add(it->second, f.mul(c, x));
  }
}

bool same(const Accumulator& a, const Accumulator& b) {
  auto nonzero = [](const Accumulator& m) {
    Accumulator out;
    for (const auto& [k, v] : m) {
      if (!FieldSpec::is_zero(v)) out.emplace(k, v);
    }
    return out;
  };
  return nonzero(a) == nonzero(b);
}

SparseVector sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!FieldSpec::is_zero(v[i])) out.emplace_back(i, v[i]);
  }
  return out;
}

// Rows of the reduced echelon form of span(vectors), with their pivots.
std::pair<std::vector<Vector>, std::vector<std::size_t>> echelon(const FieldSpec& f, std::size_t dim,
                                                                 const std::vector<Vector>& vectors) {
  Matrix m(f, vectors.size(), dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = vectors[r][c];
  }
  const auto pivots = row_reduce(m);
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Vector row(dim);
    for (std::size_t c = 0; c < dim; ++c) row[c] = m(r, c);
    rows.push_back(std::move(row));
  }
  return {std::move(rows), pivots};
}

// Reduces v modulo an echelon basis; zero iff v lies in the span.
Vector reduce_mod(const FieldSpec& f, Vector v, const std::vector<Vector>& rows,
                  const std::vector<std::size_t>& pivots) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Scalar c = v[pivots[r]];
    if (FieldSpec::is_zero(c)) continue;
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = f.sub(v[k], f.mul(c, rows[r][k]));
  }
  return v;
}

}  // namespace

StructureConstantAlgebra::StructureConstantAlgebra(FieldSpec field, std::vector<std::string> labels,
                                                   std::vector<SparseVector> table, std::optional<Vector> identity)
    : field_(field), labels_(std::move(labels)), table_(std::move(table)), identity_(std::move(identity)) {
  const std::size_t d = labels_.size();
  if (table_.size() != d * d) throw std::invalid_argument("multiplication table must have d*d entries");
  for (auto& entry : table_) {
    SparseVector cleaned;
    for (auto& [k, c] : entry) {
      if (k >= d) throw std::invalid_argument("structure constant index out of range");
      Scalar v = field_.from_rational(c);
      if (!FieldSpec::is_zero(v)) cleaned.emplace_back(k, std::move(v));
    }
    entry = std::move(cleaned);
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        Accumulator lhs;
        Accumulator rhs;
        for (const auto& [l, c] : product(i, j)) accumulate(field_, lhs, c, product(l, k));
        for (const auto& [l, c] : product(j, k)) accumulate(field_, rhs, c, product(i, l));
        if (!same(lhs, rhs)) {
          throw std::invalid_argument("multiplication table is not associative at (" + labels_[i] + ", " +
                                      labels_[j] + ", " + labels_[k] + ")");
        }
      }
    }
  }
  if (identity_) {
    if (identity_->size() != d) throw std::invalid_argument("identity has the wrong length");
    for (std::size_t i = 0; i < d; ++i) {
      const Vector e = basis_vector(i);
      if (!(multiply(*identity_, e) == e) || !(multiply(e, *identity_) == e)) {
        throw std::invalid_argument("identity does not act as a unit on " + labels_[i]);
      }
    }
  }
}

Vector StructureConstantAlgebra::basis_vector(std::size_t i) const {
  Vector v = zero();
  v.at(i) = 1;
  return v;
}

Vector StructureConstantAlgebra::multiply(const Vector& a, const Vector& b) const {
  const std::size_t d = dimension();
  Vector out = zero();
  for (std::size_t i = 0; i < d; ++i) {
    if (FieldSpec::is_zero(a[i])) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (FieldSpec::is_zero(b[j])) continue;
      const Scalar ab = field_.mul(a[i], b[j]);
      for (const auto& [k, c] : product(i, j)) out[k] = field_.add(out[k], field_.mul(ab, c));
    }
  }
  return out;
}

Vector StructureConstantAlgebra::add(const Vector& a, const Vector& b) const {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = field_.add(a[i], b[i]);
  return out;
}

Vector StructureConstantAlgebra::scale(const Scalar& c, const Vector& a) const {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = field_.mul(c, a[i]);
  return out;
}

StructureConstantAlgebra unitalize(const StructureConstantAlgebra& alg) {
  const std::size_t d = alg.dimension();
  const std::size_t n = d + 1;
  std::vector<std::string> labels{"1"};
  labels.insert(labels.end(), alg.labels().begin(), alg.labels().end());
  std::vector<SparseVector> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    table[i] = {{i, Scalar(1)}};
    table[i * n] = {{i, Scalar(1)}};
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      SparseVector shifted;
      for (const auto& [k, c] : alg.product(i, j)) shifted.emplace_back(k + 1, c);
      table[(i + 1) * n + (j + 1)] = std::move(shifted);
    }
  }
  Vector one(n, Scalar(0));
  one[0] = 1;
  return StructureConstantAlgebra(alg.field(), std::move(labels), std::move(table), std::move(one));
}

StructureConstantAlgebra matrix_algebra(const FieldSpec& field, std::size_t n) {
  const std::size_t d = n * n;
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) labels.push_back("E" + std::to_string(s + 1) + std::to_string(t + 1));
  }
  std::vector<SparseVector> table(d * d);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t v = 0; v < n; ++v) table[(s * n + t) * d + (t * n + v)] = {{s * n + v, Scalar(1)}};
    }
  }
  Vector one(d, Scalar(0));
  for (std::size_t s = 0; s < n; ++s) one[s * n + s] = 1;
  return StructureConstantAlgebra(field, std::move(labels), std::move(table), std::move(one));
}

StructureConstantAlgebra quotient_ring_algebra(const QuotientRing& qr) {
  if (!qr.zero_dimensional()) throw std::invalid_argument("quotient ring is not finite-dimensional");
  const auto& mons = qr.standard_monomials();
  const std::size_t d = mons.size();
  std::vector<std::string> labels;
  for (const auto& m : mons) labels.push_back(m.to_string(qr.ring()->variables()));
  std::vector<SparseVector> table(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Polynomial p = Polynomial::monomial(qr.ring(), mons[i] * mons[j], Scalar(1));
      table[i * d + j] = sparse(qr.coordinates(p));
    }
  }
  return StructureConstantAlgebra(qr.field(), std::move(labels), std::move(table), qr.coordinates(qr.one()));
}

StructureConstantAlgebra build_realization(const CellularAlgebraSpec& spec) {
  struct Block {
    std::size_t offset;
    const CellLayer* layer;
    std::size_t d;
  };
  std::vector<Block> blocks;
  std::vector<std::string> labels{"1"};
  for (std::size_t j = 0; j < spec.layers.size(); ++j) {
    const CellLayer& layer = *spec.layers[j];
    const QuotientRing& qr = *layer.ring;
    if (!qr.zero_dimensional()) {
      throw std::invalid_argument("layer " + std::to_string(j + 1) + " is not finite-dimensional");
    }
    if (!layer.sigma_is_identity() || !(layer.phi == layer.phi.transpose())) {
      throw std::invalid_argument("layer " + std::to_string(j + 1) +
                                  " needs a symmetric phi with identity sigma for the realization");
    }
    const std::size_t d = *qr.dimension();
    blocks.push_back({labels.size(), &layer, d});
    for (std::size_t s = 0; s < layer.vdim; ++s) {
      for (std::size_t t = 0; t < layer.vdim; ++t) {
        for (const auto& mu : qr.standard_monomials()) {
          labels.push_back("L" + std::to_string(j + 1) + ":E" + std::to_string(s + 1) + std::to_string(t + 1) +
                           "*" + mu.to_string(qr.ring()->variables()));
        }
      }
    }
  }
  const std::size_t dim = labels.size();
  std::vector<SparseVector> table(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    table[i] = {{i, Scalar(1)}};
    table[i * dim] = {{i, Scalar(1)}};
  }
  for (const auto& blk : blocks) {
    const CellLayer& layer = *blk.layer;
    const QuotientRing& qr = *layer.ring;
    const auto& mons = qr.standard_monomials();
    const std::size_t n = layer.vdim;
    auto index = [&](std::size_t s, std::size_t t, std::size_t k) { return blk.offset + (s * n + t) * blk.d + k; };
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t u = 0; u < n; ++u) {
        const Polynomial& pivot = layer.phi(t, u);
        for (std::size_t k = 0; k < blk.d; ++k) {
          for (std::size_t l = 0; l < blk.d; ++l) {
            const Vector c = qr.coordinates(pivot.mul_term(mons[k] * mons[l], Scalar(1)));
            for (std::size_t s = 0; s < n; ++s) {
              for (std::size_t v = 0; v < n; ++v) {
                SparseVector entry;
                for (std::size_t m = 0; m < blk.d; ++m) {
                  if (!FieldSpec::is_zero(c[m])) entry.emplace_back(index(s, v, m), c[m]);
                }
                table[index(s, t, k) * dim + index(u, v, l)] = std::move(entry);
              }
            }
          }
        }
      }
    }
  }
  Vector one(dim, Scalar(0));
  one[0] = 1;
  return StructureConstantAlgebra(spec.field, std::move(labels), std::move(table), std::move(one));
}

Matrix regular_representation(const StructureConstantAlgebra& alg, const Vector& a) {
  const std::size_t d = alg.dimension();
  Matrix m(alg.field(), d, d);
  for (std::size_t j = 0; j < d; ++j) m.set_column(j, alg.multiply(a, alg.basis_vector(j)));
  return m;
}

bool spans_ideal(const StructureConstantAlgebra& alg, const std::vector<Vector>& subspace) {
  const auto& f = alg.field();
  const auto [rows, pivots] = echelon(f, alg.dimension(), subspace);
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < alg.dimension(); ++k) {
      const Vector e = alg.basis_vector(k);
      if (!is_zero_vector(reduce_mod(f, alg.multiply(r, e), rows, pivots))) return false;
      if (!is_zero_vector(reduce_mod(f, alg.multiply(e, r), rows, pivots))) return false;
    }
  }
  return true;
}

bool spans_nilpotent(const StructureConstantAlgebra& alg, const std::vector<Vector>& subspace) {
  const auto& f = alg.field();
  auto [base, base_pivots] = echelon(f, alg.dimension(), subspace);
  std::vector<Vector> power = base;
  for (std::size_t step = 0; step <= alg.dimension() + 1; ++step) {
    if (power.empty()) return true;
    std::vector<Vector> next;
    for (const auto& a : power) {
      for (const auto& b : base) next.push_back(alg.multiply(a, b));
    }
    power = echelon(f, alg.dimension(), next).first;
  }
  return power.empty();
}

std::vector<Vector> dickson_radical(const StructureConstantAlgebra& alg) {
  if (!alg.field().is_rationals()) {
    throw std::invalid_argument("the trace-form radical needs characteristic 0");
  }
  const auto& f = alg.field();
  if (!alg.unital()) {
    const StructureConstantAlgebra plus = unitalize(alg);
    const std::vector<Vector> rad = dickson_radical(plus);
    // Intersect with A: combinations whose identity coordinate vanishes.
    Matrix first(f, 1, rad.size());
    for (std::size_t i = 0; i < rad.size(); ++i) first(0, i) = rad[i][0];
    std::vector<Vector> out;
    for (const auto& combo : kernel(first)) {
      Vector v(alg.dimension(), Scalar(0));
      for (std::size_t i = 0; i < rad.size(); ++i) {
        if (FieldSpec::is_zero(combo[i])) continue;
        for (std::size_t k = 0; k < alg.dimension(); ++k) v[k] = f.add(v[k], f.mul(combo[i], rad[i][k + 1]));
      }
      out.push_back(std::move(v));
    }
    return echelon(f, alg.dimension(), out).first;
  }
  const std::size_t d = alg.dimension();
  // tr(L_{e_k}) = Σ_l coefficient of e_l in e_k·e_l.
  Vector trace(d, Scalar(0));
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = 0; l < d; ++l) {
      for (const auto& [m, c] : alg.product(k, l)) {
        if (m == l) trace[k] = f.add(trace[k], c);
      }
    }
  }
  Matrix gram(f, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Scalar s = 0;
      for (const auto& [m, c] : alg.product(i, j)) s = f.add(s, f.mul(c, trace[m]));
      gram(i, j) = s;
    }
  }
  std::vector<Vector> rad = kernel(gram);
  if (!spans_ideal(alg, rad)) throw InternalInconsistency("trace-form radical is not a two-sided ideal");
  if (!spans_nilpotent(alg, rad)) throw InternalInconsistency("trace-form radical is not nilpotent");
  return rad;
}

bool is_semisimple_oracle(const StructureConstantAlgebra& alg) { return dickson_radical(alg).empty(); }

StructureConstantAlgebra switch_realization(const StructureConstantAlgebra& alg, const Vector& a0) {
  const std::size_t d = alg.dimension();
  std::vector<SparseVector> table(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    const Vector left = alg.multiply(alg.basis_vector(i), a0);
    for (std::size_t j = 0; j < d; ++j) table[i * d + j] = sparse(alg.multiply(left, alg.basis_vector(j)));
  }
  std::vector<std::string> labels;
  for (const auto& l : alg.labels()) labels.push_back("~" + l);
  return StructureConstantAlgebra(alg.field(), std::move(labels), std::move(table));
}

StructureConstantAlgebra quotient_algebra(const StructureConstantAlgebra& alg, const std::vector<Vector>& ideal) {
  const auto& f = alg.field();
  const auto [rows, pivots] = echelon(f, alg.dimension(), ideal);
  std::vector<bool> is_pivot(alg.dimension(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < alg.dimension(); ++k) {
    if (!is_pivot[k]) keep.push_back(k);
  }
  auto project = [&](const Vector& v) {
    const Vector r = reduce_mod(f, v, rows, pivots);
    Vector out(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) out[i] = r[keep[i]];
    return out;
  };
  const std::size_t q = keep.size();
  std::vector<std::string> labels;
  std::vector<SparseVector> table(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    labels.push_back("[" + alg.labels()[keep[i]] + "]");
    for (std::size_t j = 0; j < q; ++j) {
      table[i * q + j] = sparse(project(alg.multiply(alg.basis_vector(keep[i]), alg.basis_vector(keep[j]))));
    }
  }
  std::optional<Vector> one;
  if (alg.identity()) one = project(*alg.identity());
  return StructureConstantAlgebra(f, std::move(labels), std::move(table), std::move(one));
}

bool is_zero_divisor_element(const StructureConstantAlgebra& alg, const Vector& a0) {
  if (is_zero_vector(a0)) return true;
  const std::size_t d = alg.dimension();
  Matrix left = regular_representation(alg, a0);
  Matrix right(alg.field(), d, d);
  for (std::size_t j = 0; j < d; ++j) right.set_column(j, alg.multiply(alg.basis_vector(j), a0));
  return rank(left) < d || rank(right) < d;
}

}  // namespace cellalg::oracle

namespace cellalg::oracle {

OracleCheck oracle_check(const CellularAlgebraSpec& spec) {
  OracleCheck out;
  if (!spec.field.is_rationals()) {
    out.reason = "the trace-form radical needs characteristic 0";
    return out;
  }
  for (std::size_t j = 0; j < spec.layers.size(); ++j) {
    const CellLayer& layer = *spec.layers[j];
    if (!layer.ring->zero_dimensional()) {
      out.reason = "layer " + std::to_string(j + 1) + " is not finite-dimensional";
      return out;
    }
    if (!layer.sigma_is_identity() || !(layer.phi == layer.phi.transpose())) {
      out.reason = "layer " + std::to_string(j + 1) + " is outside the realization corpus (needs symmetric phi, identity sigma)";
      return out;
    }
  }
  const StructureConstantAlgebra alg = build_realization(spec);
  const auto rad = dickson_radical(alg);
  out.applicable = true;
  out.dimension = alg.dimension();
  out.radical_dimension = rad.size();
  out.oracle_semisimple = rad.empty();
  out.criteria_answer = check_semisimple(extend_with_top_layer(spec)).answer;
  out.agrees = (out.criteria_answer == Answer::yes) == out.oracle_semisimple;
  return out;
}

}  // namespace cellalg::oracle
