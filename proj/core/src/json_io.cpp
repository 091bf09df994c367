#include "chessdeg/json_io.hpp"

#include "chessdeg/errors.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace chessdeg::io {

namespace {

template <typename T>
T field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw MalformedInput(std::string("missing field \"") + key + "\"");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("field \"") + key + "\": " + e.what());
  }
}

std::vector<VertexId> ids_from_json(const json& v, const char* what) {
  if (!v.is_array()) throw MalformedInput(std::string(what) + " must be an array of vertex ids");
  std::vector<VertexId> out;
  for (const auto& x : v) {
    if (!x.is_number_unsigned() || x.get<std::uint64_t>() > std::numeric_limits<VertexId>::max())
      throw MalformedInput(std::string(what) + ": not a vertex id: " + x.dump());
    out.push_back(x.get<VertexId>());
  }
  return out;
}

std::vector<VertexId> id_field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw MalformedInput(std::string("missing field \"") + key + "\"");
  return ids_from_json(doc.at(key), key);
}

Rational rational_from_json(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw MalformedInput("coordinate must be an integer or a string, got " + v.dump());
}

// Small integers stay JSON numbers; anything beyond 64 bits becomes a string.
json integer(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v < lo || v > hi) return v.str();
  return v.convert_to<std::int64_t>();
}

json rationals(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

}  // namespace

json complex_to_json(const SimplicialComplex& k) {
  json facets = json::array();
  for (const auto& f : k.facets()) facets.push_back(f);
  return json{{"name", k.name()}, {"vertex_count", k.vertex_count()}, {"labels", k.labels()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("facets") || !doc.at("facets").is_array())
    throw MalformedInput("missing field \"facets\"");
  std::vector<std::vector<VertexId>> facets;
  for (const auto& f : doc.at("facets")) facets.push_back(ids_from_json(f, "facets"));
  std::optional<std::vector<std::string>> labels;
  if (doc.contains("labels")) labels = field<std::vector<std::string>>(doc, "labels");
  std::optional<std::size_t> n;
  if (doc.contains("vertex_count")) n = field<std::size_t>(doc, "vertex_count");
  std::string name = doc.contains("name") ? field<std::string>(doc, "name") : std::string("K");
  return build_complex(facets, labels, name, n);
}

json matrix_to_json(const IntegerMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

IntegerMatrix matrix_from_json(const json& doc) {
  const auto rows = field<std::size_t>(doc, "rows");
  const auto cols = field<std::size_t>(doc, "cols");
  const auto entries = field<std::vector<std::vector<std::string>>>(doc, "entries");
  if (entries.size() != rows) throw MalformedInput("matrix row count mismatch");
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (entries[i].size() != cols) throw MalformedInput("matrix column count mismatch");
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational v = parse_rational(entries[i][j]);
      if (denominator(v) != 1) throw MalformedInput("matrix entries must be integers");
      m(i, j) = numerator(v);
    }
  }
  return m;
}

json chain_to_json(const IntegerChain& chain, const SimplicialComplex& k) {
  json terms = json::array();
  for (const auto& [s, c] : chain.terms()) {
    json labels = json::array();
    for (VertexId v : s) labels.push_back(k.label(v));
    terms.push_back(json{{"simplex", s}, {"labels", labels}, {"coefficient", c.str()}});
  }
  return json{{"dimension", chain.dimension()}, {"terms", terms}};
}

json homology_to_json(const HomologyProfile& h) {
  json torsion = json::array();
  for (const auto& t : h.torsion) {
    json row = json::array();
    for (const auto& v : t) row.push_back(v.str());
    torsion.push_back(std::move(row));
  }
  return json{{"reduced", h.reduced}, {"betti", h.betti}, {"torsion", torsion}};
}

json pseudomanifold_to_json(const PseudomanifoldReport& report) {
  json out{{"pure", report.pure},
           {"ridge_regular", report.ridge_regular},
           {"strongly_connected", report.strongly_connected},
           {"orientable", report.orientable},
           {"pseudomanifold", report.is_pseudomanifold()}};
  if (!report.witness.empty()) out["witness"] = json{{"kind", report.witness_kind}, {"simplices", report.witness}};
  return out;
}

std::vector<VertexId> vertex_map_from_json(const json& doc) { return id_field(doc, "vertex_map"); }

json map_to_json(const SimplicialMap& f) { return json{{"vertex_map", f.vertex_map()}}; }

VertexPermutation generator_from_json(const json& doc) { return id_field(doc, "generator"); }

json degree_to_json(const DegreeReport& report) {
  json out{{"degree", integer(report.value)}, {"method", to_string(report.method)}};
  if (report.residue_mod) out["mod"] = json::array({report.residue_mod->first, report.residue_mod->second});
  return out;
}

json audit_to_json(const CongruenceAudit& audit) {
  json degrees = json::array();
  for (const auto& d : audit.degrees) degrees.push_back(integer(d));
  json out{{"modulus", audit.modulus},
           {"prime_modulus", audit.prime_modulus},
           {"expected_residue", audit.expected_residue},
           {"degrees", degrees},
           {"methods_agree", audit.methods_agree},
           {"pairwise_congruent", audit.pairwise_congruent},
           {"sign_convention", audit.sign_convention},
           {"passed", audit.passed},
           {"warnings", audit.warnings}};
  if (audit.offending_map) out["offending_map"] = *audit.offending_map;
  return out;
}

ColoredConfig config_from_json(const json& doc) {
  const int dim = field<int>(doc, "dim");
  if (!doc.contains("points") || !doc.at("points").is_array()) throw MalformedInput("missing field \"points\"");
  std::vector<ColoredPoint> points;
  for (const auto& p : doc.at("points")) {
    ColoredPoint pt;
    if (!p.contains("x") || !p.at("x").is_array()) throw MalformedInput("point without coordinate array \"x\"");
    for (const auto& v : p.at("x")) pt.coords.push_back(rational_from_json(v));
    pt.color = field<int>(p, "color");
    points.push_back(std::move(pt));
  }
  return ColoredConfig(dim, std::move(points));
}

json config_to_json(const ColoredConfig& config) {
  json points = json::array();
  for (const auto& p : config.points()) points.push_back(json{{"x", rationals(p.coords)}, {"color", p.color}});
  return json{{"dim", config.dim()}, {"points", points}};
}

json partition_to_json(const RainbowPartition& partition) { return partition.blocks; }

json certificate_point_to_json(const IntersectionCertificate& cert) { return rationals(cert.point); }

json certificate_weights_to_json(const IntersectionCertificate& cert) {
  json out = json::array();
  for (const auto& w : cert.weights) out.push_back(rationals(w));
  return out;
}

json scenario_report_to_json(const ScenarioReport& report, bool include_timing) {
  const auto& s = report.spec;
  json params{{"r", s.r}, {"d", s.d}, {"k", s.k}, {"l", s.l}, {"p", s.p},
              {"mode", s.mode == SearchMode::exhaustive ? "exhaustive" : "stochastic"},
              {"budget", s.budget}, {"plan", report.plan}};
  if (s.mode == SearchMode::stochastic) params["search_seed"] = s.search_seed;
  json out{{"scenario", report.scenario}, {"params", params}};
  const auto found = report.found();
  out["found"] = found ? json(*found) : json(nullptr);
  out["partition"] = report.partition ? partition_to_json(*report.partition) : json(nullptr);
  out["point"] = report.certificate ? certificate_point_to_json(*report.certificate) : json(nullptr);
  out["weights"] = report.certificate ? certificate_weights_to_json(*report.certificate) : json(nullptr);
  out["lp_calls"] = report.lp_calls;
  out["partitions_examined"] = report.partitions_examined;
  if (s.mode == SearchMode::stochastic) out["restarts"] = report.restarts;
  if (include_timing) out["elapsed_ms"] = static_cast<std::int64_t>(report.elapsed_ms);
  out["seed"] = report.config_seed ? json(*report.config_seed) : json(nullptr);
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

}  // namespace chessdeg::io

namespace chessdeg {

ColoredConfig parse_config(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput(e.what());
  }
  return io::config_from_json(doc);
}

}  // namespace chessdeg
