#pragma once

#include "json.hpp"

#include "cellalg/decide.hpp"
#include "cellalg/oracle.hpp"

namespace cellalg {

// JSON surfaces of the CLI.  Key names are part of the external format.

nlohmann::json to_json(const LayerCertificate& layer);
nlohmann::json to_json(const Verdict& verdict);
nlohmann::json to_json(const AsymptoticAlgebra& alg);
nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const oracle::OracleCheck& check);

/// {"verdicts": [...], "asymptotic": ..., "asymptoticEquivalence": ..., "oracle": ...?}
nlohmann::json to_json(const FullReport& report, const oracle::OracleCheck* oracle = nullptr);

}  // namespace cellalg
