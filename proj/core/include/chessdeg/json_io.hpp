#pragma once

#include "chessdeg/chessboard.hpp"
#include "chessdeg/degree.hpp"
#include "chessdeg/geometry.hpp"
#include "chessdeg/homology.hpp"
#include "chessdeg/scenario.hpp"
#include "chessdeg/simplicial.hpp"

#include <json.hpp>

// JSON documents exchanged by the CLI. Every number that is not a small
// count (matrix entries, coordinates, weights, torsion) is written as a
// decimal or "p/q" string so that no floating point ever appears.
namespace chessdeg::io {

using nlohmann::json;

json complex_to_json(const SimplicialComplex& k);
/// {"name", "vertex_count", "labels", "facets"}; throws MalformedInput.
SimplicialComplex complex_from_json(const json& doc);

json matrix_to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const json& doc);

json chain_to_json(const IntegerChain& chain, const SimplicialComplex& k);
json homology_to_json(const HomologyProfile& h);
json pseudomanifold_to_json(const PseudomanifoldReport& report);

/// {"vertex_map": [...]}
std::vector<VertexId> vertex_map_from_json(const json& doc);
json map_to_json(const SimplicialMap& f);

/// {"generator": [...]}
VertexPermutation generator_from_json(const json& doc);

json degree_to_json(const DegreeReport& report);
json audit_to_json(const CongruenceAudit& audit);

ColoredConfig config_from_json(const json& doc);
json config_to_json(const ColoredConfig& config);
json partition_to_json(const RainbowPartition& partition);
json certificate_point_to_json(const IntersectionCertificate& cert);
json certificate_weights_to_json(const IntersectionCertificate& cert);

/// Report JSON; elapsed time is omitted when `include_timing` is false.
json scenario_report_to_json(const ScenarioReport& report, bool include_timing = true);

/// Reads and parses a JSON file; throws MalformedInput.
json read_json_file(const std::string& path);

}  // namespace chessdeg::io
