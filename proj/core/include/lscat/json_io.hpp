#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lscat/catalog.hpp"

namespace lscat {

// Everything a custom run needs, mirroring the domain types one-to-one
// so catalog exports round-trip.
struct PresentationBundle {
    AlgebraPresentation algebra;
    ActionTable action_table;  // validated
    std::vector<ZClass> z_classes;
    std::optional<CoalgebraPresentation> coalgebra;
    std::vector<DifferentialSpec> differentials;
};

nlohmann::json op_to_json(const BasicOp& op, int prime);
BasicOp op_from_json(const nlohmann::json& j, int prime);

nlohmann::json element_to_json(const AlgebraPresentation& a, const Element& e);
Element element_from_json(const AlgebraPresentation& a, const nlohmann::json& j);

nlohmann::json generators_to_json(const AlgebraPresentation& a);
nlohmann::json coalgebra_to_json(const CoalgebraPresentation& c);
CoalgebraPresentation coalgebra_from_json(int prime, const nlohmann::json& j);

nlohmann::json bundle_to_json(const PresentationBundle& b);
PresentationBundle bundle_from_json(const nlohmann::json& j);
PresentationBundle load_bundle_file(const std::string& path);

nlohmann::json entry_to_json(const CatalogEntry& e);  // superset of the bundle schema
PresentationBundle bundle_from_entry(const CatalogEntry& e);

nlohmann::json certificate_to_json(const AlgebraPresentation& a, const WitnessCertificate& c);
nlohmann::json invariant_report_to_json(const AlgebraPresentation& a, const InvariantReport& r);
nlohmann::json dims_to_json(const BigradedDims& d);
nlohmann::json entry_report_to_json(const EntryReport& r);

}  // namespace lscat
