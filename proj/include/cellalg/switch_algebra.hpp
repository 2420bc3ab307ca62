#pragma once

#include <stdexcept>
#include <utility>

#include "cellalg/cellular.hpp"

namespace cellalg {

/// M_n(B) as an algebra for switch constructions.
struct MatrixAlgebra {
  using Element = BMatrix;

  QuotientRingPtr ring;
  std::size_t n;

  Element multiply(const Element& a, const Element& b) const { return a * b; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element scale(const Scalar& c, const Element& a) const {
    return a.scale(Polynomial::constant(ring->ring(), c));
  }
};

/// Element ã of the switch algebra S(Λ, a₀).  Addition and scalars act on
/// the underlying element; the product is ã·b̃ = (a a₀ b)~.
template <class Algebra>
struct SwitchElement {
  typename Algebra::Element value;
  typename Algebra::Element pivot;
};

template <class Algebra>
SwitchElement<Algebra> make_switch_element(typename Algebra::Element value,
                                           typename Algebra::Element pivot) {
  return {std::move(value), std::move(pivot)};
}

template <class Algebra>
SwitchElement<Algebra> switch_multiply(const Algebra& alg, const SwitchElement<Algebra>& a,
                                       const SwitchElement<Algebra>& b) {
  if (!(a.pivot == b.pivot)) throw std::invalid_argument("switch elements have different pivots");
  return {alg.multiply(alg.multiply(a.value, a.pivot), b.value), a.pivot};
}

template <class Algebra>
SwitchElement<Algebra> switch_add(const Algebra& alg, const SwitchElement<Algebra>& a,
                                  const SwitchElement<Algebra>& b) {
  if (!(a.pivot == b.pivot)) throw std::invalid_argument("switch elements have different pivots");
  return {alg.add(a.value, b.value), a.pivot};
}

template <class Algebra>
SwitchElement<Algebra> switch_scale(const Algebra& alg, const Scalar& c, const SwitchElement<Algebra>& a) {
  return {alg.scale(c, a.value), a.pivot};
}

}  // namespace cellalg
