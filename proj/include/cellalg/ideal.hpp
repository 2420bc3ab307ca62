#pragma once

#include <vector>

#include "cellalg/groebner.hpp"

namespace cellalg {

/// Generators of I ∩ K[remaining variables], computed from a block-order
/// basis with `front_vars` (indices into I's ring) as the eliminated block.
/// The result lives in I's ring and never mentions the eliminated variables.
IdealPresentation eliminate(const IdealPresentation& ideal, const std::vector<std::size_t>& front_vars);

/// I ∩ J via a fresh tag variable t: eliminate t from t·I + (1−t)·J.
IdealPresentation ideal_intersection(const IdealPresentation& i, const IdealPresentation& j);

/// (I : b) = {g : g·b ∈ I}, as the generators of I ∩ (b) divided by b.
/// Throws std::invalid_argument for b = 0 and InternalInconsistency if an
/// element of I ∩ (b) fails to divide exactly.
IdealPresentation ideal_quotient(const IdealPresentation& ideal, const Polynomial& b);

/// Membership f ∈ I.
bool ideal_contains(const IdealPresentation& ideal, const Polynomial& f);
/// J ⊆ I.
bool ideal_includes(const IdealPresentation& ideal, const IdealPresentation& j);
bool ideals_equal(const IdealPresentation& a, const IdealPresentation& b);

}  // namespace cellalg
