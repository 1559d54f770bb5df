#pragma once

#include <string>

#include <json.hpp>

#include "vkg/fox.hpp"
#include "vkg/nilpotent.hpp"
#include "vkg/presentation.hpp"

namespace vkg {

/// {"generators": [names], "relators": [word strings]}
nlohmann::json presentation_to_json(const GroupPresentation& p);
GroupPresentation presentation_from_json(const nlohmann::json& j);

/// {"rank": r, "torsion": [d1, ...]}
nlohmann::json abelian_to_json(const AbelianStructure& st);

/// {"k": k, "rank": r, "torsion": [...], "relationMatrix": [[...]]}
nlohmann::json layer_to_json(const GradedLayer& layer);

/// {foxDerivatives, clearedVector, minimalPolynomial, evaluations, verdict,
///  convention, point}
nlohmann::json certificate_to_json(const KishinoCertificate& cert);

}  // namespace vkg
