#include "cellalg/report.hpp"

namespace cellalg {

using nlohmann::json;

namespace {

json dimension_json(const std::optional<std::size_t>& d) {
  if (d) return *d;
  return "infinite";
}

json minimal_polynomials_json(const std::vector<MinimalPolynomialEntry>& entries) {
  json arr = json::array();
  for (const auto& e : entries) {
    arr.push_back({{"variable", e.variable}, {"polynomial", e.polynomial.to_string()}, {"squarefree", e.squarefree}});
  }
  return arr;
}

}  // namespace

json to_json(const LayerCertificate& layer) {
  json radical = {{"answer", to_string(layer.radical.answer)},
                  {"method", layer.radical.method},
                  {"minimal_polynomials", minimal_polynomials_json(layer.radical.minimal_polynomials)}};
  if (layer.radical.generator) {
    radical["generator"] = {{"polynomial", layer.radical.generator->polynomial.to_string()},
                            {"squarefree", layer.radical.generator->squarefree}};
  }
  json out = {{"index", layer.index},
              {"dimK", dimension_json(layer.dimension)},
              {"radical", radical},
              {"etale", layer.etale.etale},
              {"detPhi", layer.det_phi.to_string()},
              {"detPhiUnit", layer.det_unit.unit},
              {"detPhiZeroDivisor", layer.det_zero_divisor.zero_divisor},
              {"witness", nullptr}};
  if (layer.det_zero_divisor.witness) out["witness"] = layer.det_zero_divisor.witness->to_string();
  if (layer.det_unit.inverse) out["detPhiInverse"] = layer.det_unit.inverse->to_string();
  return out;
}

json to_json(const Verdict& verdict) {
  json layers = json::array();
  for (const auto& l : verdict.layers) layers.push_back(to_json(l));
  json out = {{"property", to_string(verdict.property)},
              {"answer", to_string(verdict.answer)},
              {"reason", verdict.reason},
              {"layers", layers},
              {"citedStatement", verdict.cited_statement}};
  if (verdict.failing_layer) out["failingLayer"] = *verdict.failing_layer;
  return out;
}

json to_json(const AsymptoticAlgebra& alg) {
  json summands = json::array();
  for (const auto& s : alg.summands) {
    summands.push_back({{"layer", s.layer},
                        {"n", s.n},
                        {"ring", s.ring},
                        {"ringDimK", dimension_json(s.ring_dimension)},
                        {"dimK", dimension_json(s.dimension)}});
  }
  return {{"description", alg.description()}, {"summands", summands}, {"dimK", dimension_json(alg.dimension)}};
}

json to_json(const ValidationReport& report) {
  json issues = json::array();
  for (const auto& i : report.issues) {
    issues.push_back({{"layer", i.layer}, {"check", i.check}, {"witness", i.witness}});
  }
  return {{"valid", report.ok()}, {"issues", issues}};
}

json to_json(const oracle::OracleCheck& check) {
  if (!check.applicable) return {{"applicable", false}, {"reason", check.reason}};
  return {{"applicable", true},
          {"realizationDimK", check.dimension},
          {"radicalDimK", check.radical_dimension},
          {"oracleSemisimple", check.oracle_semisimple},
          {"criteriaAnswer", to_string(check.criteria_answer)},
          {"agrees", check.agrees}};
}

json to_json(const FullReport& report, const oracle::OracleCheck* oracle) {
  json verdicts = json::array();
  for (const Verdict* v : report.verdicts()) verdicts.push_back(to_json(*v));
  json out = {{"verdicts", verdicts},
              {"asymptotic", to_json(report.asymptotic)},
              {"asymptoticEquivalence",
               {{"isomorphicToAsymptotic", report.isomorphic_to_asymptotic},
                {"reducedZeroDimensional", report.reduced_zero_dimensional},
                {"semisimple", report.semisimple.answer == Answer::yes},
                {"holds", report.asymptotic_equivalence_holds}}}};
  if (oracle) out["oracle"] = to_json(*oracle);
  return out;
}

}  // namespace cellalg
