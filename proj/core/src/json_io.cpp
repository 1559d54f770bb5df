#include "vkg/json_io.hpp"

#include <sstream>

namespace vkg {

nlohmann::json presentation_to_json(const GroupPresentation& p) {
  nlohmann::json j;
  j["generators"] = nlohmann::json::array();
  for (int g = 0; g < p.generators().rank(); ++g) j["generators"].push_back(p.generators().label(g));
  j["relators"] = nlohmann::json::array();
  for (const Word& r : p.relators()) j["relators"].push_back(r.str());
  return j;
}

GroupPresentation presentation_from_json(const nlohmann::json& j) {
  std::vector<std::string> labels;
  for (const auto& g : j.at("generators")) labels.push_back(g.get<std::string>());
  Alphabet a(labels);
  std::vector<Word> relators;
  for (const auto& r : j.at("relators")) relators.push_back(Word::parse(a, r.get<std::string>()));
  return GroupPresentation(a, std::move(relators));
}

nlohmann::json abelian_to_json(const AbelianStructure& st) {
  nlohmann::json j;
  j["rank"] = st.rank;
  j["torsion"] = nlohmann::json::array();
  for (const Int& d : st.torsion) j["torsion"].push_back(d.str());
  return j;
}

nlohmann::json layer_to_json(const GradedLayer& layer) {
  nlohmann::json j;
  j["k"] = layer.k;
  j["rank"] = layer.structure.rank;
  j["torsion"] = nlohmann::json::array();
  for (const Int& d : layer.structure.torsion) j["torsion"].push_back(d.str());
  j["relationMatrix"] = nlohmann::json::array();
  for (std::size_t r = 0; r < layer.relation_matrix.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < layer.relation_matrix.cols(); ++c)
      row.push_back(layer.relation_matrix.at(r, c).str());
    j["relationMatrix"].push_back(row);
  }
  return j;
}

nlohmann::json certificate_to_json(const KishinoCertificate& cert) {
  nlohmann::json j;
  j["convention"] = cert.convention;
  j["foxDerivatives"] = nlohmann::json::object();
  for (const auto& [g, p] : cert.fox_derivatives) j["foxDerivatives"][g] = p.str();
  j["clearedVector"] = nlohmann::json::array();
  for (const auto& p : cert.cleared_vector) j["clearedVector"].push_back(p.str());
  j["minimalPolynomial"] = cert.minimal_polynomial;
  j["point"] = nlohmann::json::object();
  for (const auto& [g, v] : cert.point) j["point"][g] = v.str();
  j["evaluations"] = nlohmann::json::array();
  for (const auto& v : cert.evaluations) j["evaluations"].push_back(v.str());
  j["allVanish"] = cert.all_vanish;
  j["pointInvertible"] = cert.point_invertible;
  j["monomialsNonzero"] = cert.monomials_nonzero;
  j["verdict"] = cert.verdict;
  return j;
}

}  // namespace vkg
