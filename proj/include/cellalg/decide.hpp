#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cellalg/cellular.hpp"

namespace cellalg {

enum class Property { artinian, semisimple, jacobson_semisimple, semiprime, separable };
enum class Answer { yes, no, unknown };

std::string to_string(Property p);
std::string to_string(Answer a);
/// Accepts the CLI spellings: artinian, semisimple, jacobson, semiprime, separable.
std::optional<Property> property_from_string(const std::string& name);

/// Everything the decision procedures need to know about one layer.
struct LayerCertificate {
  std::size_t index = 0;  // 1-based
  std::optional<std::size_t> dimension;
  bool zero_dimensional = false;
  RadicalCertificate radical;
  EtaleCertificate etale;
  Polynomial det_phi;
  UnitResult det_unit;
  ZeroDivisorResult det_zero_divisor;
};

LayerCertificate analyze_layer(const CellLayer& layer, std::size_t index);
std::vector<LayerCertificate> analyze(const CellularAlgebraSpec& spec);

struct Verdict {
  Property property = Property::artinian;
  Answer answer = Answer::unknown;
  std::vector<LayerCertificate> layers;
  std::string cited_statement;
  /// Why the answer is what it is: the first failing condition for NO, the
  /// failed sufficient condition for UNKNOWN.
  std::string reason;
  std::optional<std::size_t> failing_layer;
};

// Each check accepts either a spec (analyzed on the spot) or layer
// certificates already computed by analyze().
Verdict check_artinian(const CellularAlgebraSpec& spec);
Verdict check_artinian(const std::vector<LayerCertificate>& layers);
Verdict check_semisimple(const CellularAlgebraSpec& spec);
Verdict check_semisimple(const std::vector<LayerCertificate>& layers);
/// Sufficient criterion: YES or UNKNOWN, never NO.
Verdict check_jacobson_sufficient(const CellularAlgebraSpec& spec);
Verdict check_jacobson_sufficient(const std::vector<LayerCertificate>& layers);
/// Same conditions as the Jacobson criterion, reported as semiprimeness.
Verdict check_semiprime_sufficient(const CellularAlgebraSpec& spec);
Verdict check_semiprime_sufficient(const std::vector<LayerCertificate>& layers);
/// Throws InternalInconsistency if the answer differs from check_semisimple.
Verdict check_separable(const CellularAlgebraSpec& spec);
Verdict check_separable(const std::vector<LayerCertificate>& layers);

Verdict check(Property property, const CellularAlgebraSpec& spec);

struct FullReport {
  std::vector<LayerCertificate> layers;
  Verdict artinian;
  Verdict semisimple;
  Verdict jacobson;
  Verdict semiprime;
  Verdict separable;
  AsymptoticAlgebra asymptotic;
  bool isomorphic_to_asymptotic = false;  // every det(phi_j) a unit
  bool reduced_zero_dimensional = false;  // every B_j reduced and finite-dimensional
  /// semisimple ⟺ isomorphic_to_asymptotic ∧ reduced_zero_dimensional.
  bool asymptotic_equivalence_holds = false;

  std::vector<const Verdict*> verdicts() const {
    return {&artinian, &semisimple, &jacobson, &semiprime, &separable};
  }
};

/// All five verdicts plus cross-verdict consistency checks; throws
/// InternalInconsistency when one fails.
FullReport full_report(const CellularAlgebraSpec& spec);

}  // namespace cellalg
