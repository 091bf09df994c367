#include "chessdeg/chessboard.hpp"
#include "chessdeg/degree.hpp"
#include "chessdeg/errors.hpp"
#include "chessdeg/homology.hpp"
#include "chessdeg/json_io.hpp"
#include "chessdeg/parallel.hpp"
#include "chessdeg/scenario.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace chessdeg;
using chessdeg::io::json;

namespace {

enum Exit { ok = 0, refuted = 1, inconclusive = 2, input_error = 3 };

struct Globals {
  std::uint64_t seed = 0;
  bool json_out = false;
  std::int64_t budget = 1'000'000;
  bool exhaustive = false;
  bool stochastic = false;
  unsigned threads = 1;
  bool deterministic = false;
  std::string out;
  std::string command;  // argv without flags that cannot change results
};

// Wall-clock time per named phase, reported unless --deterministic.
class Phases {
 public:
  void start(std::string name) {
    name_ = std::move(name);
    t0_ = std::chrono::steady_clock::now();
  }
  void stop() {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
    times_[name_] = static_cast<std::int64_t>(ms);
  }
  json to_json() const { return times_; }

 private:
  std::string name_;
  std::chrono::steady_clock::time_point t0_;
  std::map<std::string, std::int64_t> times_;
};

json manifest(const Globals& g, const json& params, const Phases& phases) {
  json m{{"command", g.command}, {"seed", g.seed}, {"params", params}, {"version", CHESSDEG_VERSION}};
  if (!g.deterministic) m["phases_ms"] = phases.to_json();
  return m;
}

void emit(const Globals& g, const json& doc, const std::string& text) {
  std::string body = g.json_out ? doc.dump(2) + "\n" : text;
  if (g.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw MalformedInput("cannot write " + g.out);
  f << body;
}

std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// --complex FILE | --chessboard M N | --skeleton M K
struct ComplexSource {
  std::string file;
  std::vector<int> chessboard;
  std::vector<int> skeleton;

  void add_to(CLI::App* app) {
    auto* f = app->add_option("--complex", file, "complex JSON file");
    auto* c = app->add_option("--chessboard", chessboard, "chessboard complex M N")->expected(2);
    auto* s = app->add_option("--skeleton", skeleton, "skeleton [M]^(K)")->expected(2);
    f->excludes(c)->excludes(s);
    c->excludes(s);
  }

  SimplicialComplex load() const {
    if (!file.empty()) return io::complex_from_json(io::read_json_file(file));
    if (chessboard.size() == 2) return chessboard_complex(chessboard[0], chessboard[1]);
    if (skeleton.size() == 2) return simplex_skeleton(skeleton[0], skeleton[1]);
    throw ParameterError("give one of --complex, --chessboard, --skeleton");
  }

  json echo() const {
    if (!file.empty()) return json{{"complex", file}};
    if (chessboard.size() == 2) return json{{"chessboard", chessboard}};
    return json{{"skeleton", skeleton}};
  }
};

// Group actions for equimaps and audit-congruence.
struct ActionSource {
  std::string prefix;
  std::string file, generator;
  std::vector<int> chessboard;  // row action on the M x N board
  std::vector<int> skeleton;    // vertex shift on [M]^(K)
  std::vector<int> join_source; // d-fold join of Delta_{r,r-1}
  std::vector<int> sphere;      // representation sphere model (r, d)
  bool extra_point = false;

  explicit ActionSource(std::string p) : prefix(std::move(p)) {}

  void add_to(CLI::App* app) {
    app->add_option("--" + prefix, file, prefix + " complex JSON file");
    app->add_option("--" + prefix + "-gen", generator, prefix + " generator JSON file {\"generator\": [...]}");
    app->add_option("--" + prefix + "-chessboard", chessboard, "row action on the M x N chessboard")->expected(2);
    app->add_option("--" + prefix + "-skeleton", skeleton, "vertex shift on [M]^(K)")->expected(2);
    app->add_option("--" + prefix + "-join-source", join_source, "R D: d-fold join of Delta_{R,R-1}")->expected(2);
    app->add_option("--" + prefix + "-sphere", sphere, "R D: join of D copies of the boundary of the (R-1)-simplex")
        ->expected(2);
    if (prefix == "dom") app->add_flag("--extra-point", extra_point, "join the source once more with [R]");
  }

  PermutationAction load() const {
    int given = !file.empty() + (chessboard.size() == 2) + (skeleton.size() == 2) + (join_source.size() == 2) +
                (sphere.size() == 2);
    if (given != 1) throw ParameterError("give exactly one " + prefix + " action source");
    if (!file.empty()) {
      if (generator.empty()) throw ParameterError("--" + prefix + " needs --" + prefix + "-gen");
      auto k = make_complex(io::complex_from_json(io::read_json_file(file)));
      return PermutationAction(k, io::generator_from_json(io::read_json_file(generator)));
    }
    if (chessboard.size() == 2) return cyclic_row_action(chessboard[0], chessboard[1]);
    if (skeleton.size() == 2)
      return cyclic_vertex_action(make_complex(simplex_skeleton(skeleton[0], skeleton[1])), skeleton[0]);
    if (join_source.size() == 2) return chessboard_join_source(join_source[0], join_source[1], extra_point);
    return representation_sphere(sphere[0], sphere[1]).action;
  }
};

FundamentalClass orient_or_explain(const ComplexPtr& k) {
  try {
    return orient(k);
  } catch (const OrientationError& e) {
    throw ParameterError(std::string("cannot orient ") + k->name() + ": " + e.what());
  }
}

int run_complex(const Globals& g, const std::string& kind, const std::vector<int>& mn, const std::vector<std::string>& files) {
  Phases ph;
  ph.start("build");
  SimplicialComplex k;
  json params{{"kind", kind}};
  if (kind == "chessboard") {
    k = chessboard_complex(mn.at(0), mn.at(1));
    params["m"] = mn[0];
    params["n"] = mn[1];
  } else if (kind == "skeleton") {
    k = simplex_skeleton(mn.at(0), mn.at(1));
    params["m"] = mn[0];
    params["k"] = mn[1];
  } else {
    if (files.size() != 2) throw ParameterError("complex join needs two files");
    k = join(io::complex_from_json(io::read_json_file(files[0])), io::complex_from_json(io::read_json_file(files[1])));
    params["files"] = files;
  }
  ph.stop();
  json doc = io::complex_to_json(k);
  doc["f_vector"] = f_vector(k);
  doc["manifest"] = manifest(g, params, ph);
  emit(g, doc,
       k.name() + ": " + std::to_string(k.vertex_count()) + " vertices, dim " + std::to_string(k.dimension()) +
           ", f-vector (" + join_ints(f_vector(k)) + ")\n");
  return ok;
}

int run_homology(const Globals& g, const ComplexSource& src, bool unreduced, std::optional<int> max_dim,
                 bool prime_powers) {
  Phases ph;
  ph.start("build");
  const auto k = src.load();
  ph.stop();
  ph.start("homology");
  auto h = homology(k, !unreduced, max_dim);
  ph.stop();
  json doc = io::homology_to_json(h);
  if (prime_powers) {
    json pp = json::array();
    for (const auto& t : h.torsion) {
      json row = json::array();
      for (const auto& v : prime_power_decomposition(t)) row.push_back(v.str());
      pp.push_back(row);
    }
    doc["torsion_prime_powers"] = pp;
  }
  json params = src.echo();
  params["reduced"] = !unreduced;
  if (max_dim) params["max_dim"] = *max_dim;
  doc["manifest"] = manifest(g, params, ph);
  std::string text = std::string(unreduced ? "betti" : "reduced betti") + " (" + join_ints(h.betti) + ")";
  for (std::size_t q = 0; q < h.torsion.size(); ++q)
    for (const auto& t : h.torsion[q]) text += ", torsion Z/" + t.str() + " in dim " + std::to_string(q);
  emit(g, doc, text + "\n");
  return ok;
}

int run_pseudo(const Globals& g, const ComplexSource& src) {
  Phases ph;
  ph.start("check");
  const auto k = src.load();
  auto rep = pseudomanifold_check(k);
  ph.stop();
  json doc = io::pseudomanifold_to_json(rep);
  doc["manifest"] = manifest(g, src.echo(), ph);
  std::ostringstream text;
  text << "pure " << rep.pure << ", ridge-regular " << rep.ridge_regular << ", strongly connected "
       << rep.strongly_connected << ", orientable " << rep.orientable << "\n";
  if (!rep.witness_kind.empty()) text << "witness: " << rep.witness_kind << "\n";
  emit(g, doc, text.str());
  return ok;
}

int run_orient(const Globals& g, const ComplexSource& src) {
  Phases ph;
  ph.start("orient");
  auto k = make_complex(src.load());
  auto fc = orient_or_explain(k);
  ph.stop();
  json doc{{"chain", io::chain_to_json(fc.chain(), *k)}};
  doc["manifest"] = manifest(g, src.echo(), ph);
  std::ostringstream text;
  for (const auto& [s, c] : fc.chain().terms()) {
    text << (c > 0 ? "+ " : "- ");
    for (std::size_t i = 0; i < s.size(); ++i) text << (i ? " " : "") << k->label(s[i]);
    text << "\n";
  }
  emit(g, doc, text.str());
  return ok;
}

struct DegreeArgs {
  std::string map_file, dom_file, cod_file;
  std::vector<int> xi;
  int join_power = 1;
  std::string method = "both";
  std::vector<VertexId> target;
  int modulus = 0;
};

int run_degree(const Globals& g, const DegreeArgs& a) {
  Phases ph;
  ph.start("build");
  std::optional<SimplicialMap> f;
  json params;
  int modulus = a.modulus;
  if (a.xi.size() == 2) {
    if (!a.map_file.empty()) throw ParameterError("--xi and --map are exclusive");
    f = join_map_power(canonical_projection(a.xi[0], a.xi[1]), a.join_power);
    params["xi"] = a.xi;
    params["join"] = a.join_power;
    if (modulus == 0) modulus = a.xi[0];
  } else {
    if (a.map_file.empty() || a.dom_file.empty() || a.cod_file.empty())
      throw ParameterError("degree needs --xi R K or all of --map, --dom, --cod");
    auto dom = make_complex(io::complex_from_json(io::read_json_file(a.dom_file)));
    auto cod = make_complex(io::complex_from_json(io::read_json_file(a.cod_file)));
    f.emplace(dom, cod, io::vertex_map_from_json(io::read_json_file(a.map_file)));
    params = json{{"map", a.map_file}, {"dom", a.dom_file}, {"cod", a.cod_file}};
  }
  params["method"] = a.method;
  ph.stop();

  ph.start("orient");
  auto fd = orient_or_explain(f->domain());
  auto fc = orient_or_explain(f->codomain());
  ph.stop();

  ph.start("degree");
  std::optional<DegreeReport> homological, preimage;
  if (a.method == "homological" || a.method == "both") homological = degree_homological(*f, fd, fc);
  if (a.method == "preimage" || a.method == "both") {
    Simplex target = a.target.empty() ? f->codomain()->facets().front() : a.target;
    std::sort(target.begin(), target.end());
    preimage = degree_by_preimage(*f, fd, fc, target);
    params["target"] = target;
  }
  ph.stop();
  if (homological && preimage && homological->value != preimage->value)
    throw IntegrityError("degree algorithms disagree: " + homological->value.str() + " vs " + preimage->value.str());

  DegreeReport report = homological ? *homological : *preimage;
  if (modulus > 0) report.residue_mod = std::make_pair(std::int64_t{modulus}, mod_residue(report.value, modulus));
  json doc = io::degree_to_json(report);
  if (homological && preimage) doc["method"] = "both";
  doc["orientation"] = "lexicographic";
  doc["manifest"] = manifest(g, params, ph);
  std::string text = "degree " + report.value.str();
  if (report.residue_mod)
    text += " (= " + std::to_string(report.residue_mod->second) + " mod " + std::to_string(modulus) + ")";
  emit(g, doc, text + "\n");
  return ok;
}

json maps_json(const std::vector<SimplicialMap>& maps) {
  json out = json::array();
  for (const auto& m : maps) out.push_back(io::map_to_json(m));
  return out;
}

int run_equimaps(const Globals& g, const ActionSource& src, const ActionSource& tgt, int cap) {
  Phases ph;
  ph.start("enumerate");
  auto a = src.load();
  auto b = tgt.load();
  auto maps = enumerate_equivariant_maps(a, b, cap);
  ph.stop();
  json doc{{"count", maps.size()}, {"maps", maps_json(maps)}};
  doc["manifest"] = manifest(g, json{{"cap", cap}, {"source", a.complex()->name()}, {"target", b.complex()->name()}}, ph);
  std::ostringstream text;
  text << maps.size() << " equivariant maps " << a.complex()->name() << " -> " << b.complex()->name() << "\n";
  for (const auto& m : maps) text << "  " << io::map_to_json(m).dump() << "\n";
  emit(g, doc, text.str());
  return ok;
}

int run_audit(const Globals& g, const ActionSource& src, const ActionSource& tgt, int cap, int r,
              std::int64_t expected, const std::string& maps_file) {
  Phases ph;
  ph.start("enumerate");
  auto a = src.load();
  auto b = tgt.load();
  std::vector<SimplicialMap> maps;
  if (maps_file.empty()) {
    maps = enumerate_equivariant_maps(a, b, cap);
  } else {
    auto doc = io::read_json_file(maps_file);
    if (!doc.is_array()) throw MalformedInput("maps file must hold an array of {\"vertex_map\": [...]}");
    for (const auto& m : doc) maps.emplace_back(a.complex(), b.complex(), io::vertex_map_from_json(m));
  }
  ph.stop();
  if (r == 0) r = a.order();
  ph.start("audit");
  ParallelFor pool(g.threads);
  auto fd = orient_or_explain(a.complex());
  auto fc = orient_or_explain(b.complex());
  auto audit = congruence_audit(maps, fd, fc, r, expected, &pool);
  ph.stop();
  json doc = io::audit_to_json(audit);
  doc["maps"] = maps_json(maps);
  doc["manifest"] = manifest(
      g, json{{"cap", cap}, {"r", r}, {"expected", expected}, {"source", a.complex()->name()},
              {"target", b.complex()->name()}},
      ph);
  std::ostringstream text;
  text << maps.size() << " maps, degrees";
  for (const auto& d : audit.degrees) text << " " << d;
  text << "; " << (audit.passed ? "PASS" : "FAIL") << " (mod " << r << ", expected +-" << expected << ")\n";
  for (const auto& w : audit.warnings) text << "warning: " << w << "\n";
  emit(g, doc, text.str());
  return audit.passed ? ok : refuted;
}

struct ScenarioArgs {
  std::string name;
  int r = 0, d = 0, k = 0, l = 0, p = 0;
  int trials = 1;
  std::string config_file;
  std::int64_t bound = 1000;
};

int run_scenario_cmd(const Globals& g, const ScenarioArgs& a) {
  ScenarioSpec spec;
  spec.kind = parse_scenario_name(a.name);
  spec.r = a.r;
  spec.d = a.d;
  spec.k = a.k;
  spec.l = a.l;
  spec.p = a.p;
  spec.budget = g.budget;
  spec.mode = g.stochastic ? SearchMode::stochastic : SearchMode::exhaustive;
  spec = resolve_scenario(spec);
  if (a.trials < 1) throw ParameterError("--trials must be positive");

  Phases ph;
  ph.start("search");
  std::vector<ScenarioReport> reports;
  if (!a.config_file.empty()) {
    spec.search_seed = g.seed;
    reports.push_back(run_scenario(spec, io::config_from_json(io::read_json_file(a.config_file))));
  } else {
    reports.resize(static_cast<std::size_t>(a.trials));
    ParallelFor pool(g.threads);
    pool(reports.size(), [&](std::size_t i) {
      auto s = spec;
      s.search_seed = g.seed + i;
      reports[i] = run_scenario(s, g.seed + i, a.bound);
    });
  }
  ph.stop();

  std::int64_t found = 0, refuted_count = 0, unknown = 0;
  for (const auto& rep : reports) {
    if (rep.outcome == ScenarioOutcome::found) ++found;
    if (rep.outcome == ScenarioOutcome::refuted) ++refuted_count;
    if (rep.outcome == ScenarioOutcome::inconclusive) ++unknown;
  }
  json params{{"scenario", scenario_name(spec.kind)}, {"r", spec.r}, {"d", spec.d}, {"k", spec.k}, {"l", spec.l},
              {"p", spec.p}, {"trials", a.trials}, {"bound", a.bound}};
  if (!a.config_file.empty()) params["config"] = a.config_file;
  json doc;
  if (reports.size() == 1) {
    doc = io::scenario_report_to_json(reports[0], !g.deterministic);
  } else {
    json list = json::array();
    for (const auto& rep : reports) list.push_back(io::scenario_report_to_json(rep, !g.deterministic));
    doc = json{{"scenario", scenario_name(spec.kind)}, {"trials", reports.size()}, {"found", found},
               {"refuted", refuted_count}, {"inconclusive", unknown}, {"reports", list}};
  }
  doc["manifest"] = manifest(g, params, ph);

  std::ostringstream text;
  text << scenario_name(spec.kind) << ": " << found << " found, " << refuted_count << " refuted, " << unknown
       << " inconclusive of " << reports.size() << "\n";
  if (reports.size() == 1 && reports[0].certificate) {
    text << "partition " << io::partition_to_json(*reports[0].partition).dump() << ", point "
         << io::certificate_point_to_json(*reports[0].certificate).dump() << "\n";
  }
  emit(g, doc, text.str());
  if (refuted_count > 0) return refuted;
  if (unknown > 0) return inconclusive;
  return ok;
}

int run_random_config(const Globals& g, int d, const std::vector<std::size_t>& sizes, std::int64_t bound) {
  Phases ph;
  ph.start("generate");
  auto c = random_config(d, sizes, g.seed, bound);
  ph.stop();
  json doc = io::config_to_json(c);
  doc["manifest"] = manifest(g, json{{"d", d}, {"sizes", sizes}, {"bound", bound}}, ph);
  // The config itself is the useful output, so it is JSON in both modes.
  Globals as_json = g;
  as_json.json_out = true;
  emit(as_json, doc, "");
  return ok;
}

std::string recorded_command(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--threads" || arg == "--out") {
      ++i;
      continue;
    }
    if (arg.rfind("--threads=", 0) == 0 || arg.rfind("--out=", 0) == 0) continue;
    if (i == 0) arg = "chessdeg";
    out += (out.empty() ? "" : " ") + arg;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chessboard complexes, mapping degrees and colored Tverberg certificates"};
  app.set_version_flag("--version", CHESSDEG_VERSION);
  app.require_subcommand(1);
  Globals g;
  auto* seed = app.add_option("--seed", g.seed, "random seed (scenario trials use seed, seed+1, ...)");
  auto* jsonf = app.add_flag("--json", g.json_out, "write the JSON report instead of a text summary");
  auto* budget = app.add_option("--budget", g.budget, "LP calls allowed per scenario instance");
  auto* exh = app.add_flag("--exhaustive", g.exhaustive, "walk every maximal rainbow partition (default)");
  auto* sto = app.add_flag("--stochastic", g.stochastic, "local search; can only find or give up");
  exh->excludes(sto);
  auto* threads = app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1u, 256u));
  auto* det = app.add_flag("--deterministic", g.deterministic, "omit timings so reruns are byte-identical");
  auto* out = app.add_option("--out", g.out, "write the report to a file");
  for (auto* o : {seed, jsonf, budget, exh, sto, threads, det, out}) o->group("Global");
  app.fallthrough();

  // complex
  auto* complex_cmd = app.add_subcommand("complex", "build a complex and print it as JSON");
  complex_cmd->require_subcommand(1);
  std::vector<int> mn(2, 0);
  auto* cb = complex_cmd->add_subcommand("chessboard", "chessboard complex Delta_{m,n}");
  cb->add_option("--m", mn[0], "rows")->required();
  cb->add_option("--n", mn[1], "columns")->required();
  std::vector<int> mk(2, 0);
  auto* sk = complex_cmd->add_subcommand("skeleton", "[m]^(k): subsets of [m] of size at most k");
  sk->add_option("--m", mk[0])->required();
  sk->add_option("--k", mk[1])->required();
  std::vector<std::string> join_files;
  auto* jn = complex_cmd->add_subcommand("join", "join of two complex files");
  jn->add_option("files", join_files, "A.json B.json")->expected(2)->required();
  for (auto* s : {cb, sk, jn}) s->fallthrough();
  complex_cmd->fallthrough();

  // homology
  auto* hom = app.add_subcommand("homology", "integral homology via Smith normal form");
  ComplexSource hom_src;
  hom_src.add_to(hom);
  bool reduced_flag = false, unreduced = false, prime_powers = false;
  std::optional<int> max_dim;
  auto* red = hom->add_flag("--reduced", reduced_flag, "reduced homology (default)");
  hom->add_flag("--unreduced", unreduced, "unreduced homology")->excludes(red);
  hom->add_option("--max-dim", max_dim, "highest dimension to compute");
  hom->add_flag("--prime-powers", prime_powers, "also list torsion as prime powers");

  auto* pseudo = app.add_subcommand("pseudo", "pseudomanifold and orientability check");
  ComplexSource pseudo_src;
  pseudo_src.add_to(pseudo);

  auto* orient_cmd = app.add_subcommand("orient", "fundamental class of an orientable pseudomanifold");
  ComplexSource orient_src;
  orient_src.add_to(orient_cmd);

  // degree
  auto* deg = app.add_subcommand("degree", "degree of a simplicial map between oriented pseudomanifolds");
  DegreeArgs da;
  deg->add_option("--map", da.map_file, "map JSON {\"vertex_map\": [...]}");
  deg->add_option("--dom", da.dom_file, "domain complex JSON");
  deg->add_option("--cod", da.cod_file, "codomain complex JSON");
  deg->add_option("--xi", da.xi, "R K: the projection Delta_{R,K} -> [R]^(K)")->expected(2);
  deg->add_option("--join", da.join_power, "with --xi, take the D-fold join of the projection")
      ->check(CLI::PositiveNumber);
  deg->add_option("--method", da.method, "homological, preimage or both")
      ->check(CLI::IsMember({"homological", "preimage", "both"}));
  deg->add_option("--target", da.target, "codomain facet for the preimage count")->delimiter(',');
  deg->add_option("--mod", da.modulus, "report the residue modulo this number (default R with --xi)");

  // equimaps / audit
  ActionSource eq_src("dom"), eq_tgt("cod");
  int eq_cap = 4;
  auto* eq = app.add_subcommand("equimaps", "all equivariant simplicial maps between two complexes");
  eq_src.add_to(eq);
  eq_tgt.add_to(eq);
  eq->add_option("--cap", eq_cap, "refuse when the source has more vertex orbits than this");

  ActionSource au_src("dom"), au_tgt("cod");
  int au_cap = 4, au_r = 0;
  std::int64_t au_expected = 0;
  std::string au_maps;
  auto* audit = app.add_subcommand("audit-congruence", "degrees of equivariant maps are congruent mod r");
  au_src.add_to(audit);
  au_tgt.add_to(audit);
  audit->add_option("--cap", au_cap, "orbit cap for the enumeration");
  audit->add_option("--r", au_r, "modulus (default: order of the action)");
  audit->add_option("--expected", au_expected, "expected residue, checked up to sign")->required();
  audit->add_option("--maps", au_maps, "audit these maps instead of enumerating");

  // scenario
  ScenarioArgs sa;
  std::string catalogue = "\nScenarios:\n";
  for (const auto& line : scenario_catalogue()) catalogue += "  " + line + "\n";
  auto* scen = app.add_subcommand("scenario", "search for a colored Tverberg partition with a certificate");
  scen->footer(catalogue);
  scen->add_option("name", sa.name, "scenario name")->required();
  scen->add_option("--r", sa.r);
  scen->add_option("--d", sa.d);
  scen->add_option("--k", sa.k);
  scen->add_option("--l", sa.l);
  scen->add_option("--p", sa.p);
  scen->add_option("--trials", sa.trials, "random configurations, seeds seed..seed+trials-1");
  scen->add_option("--config", sa.config_file, "run on this configuration instead");
  scen->add_option("--bound", sa.bound, "coordinate bound for random configurations");

  // random-config
  int rc_d = 0;
  std::vector<std::size_t> rc_sizes;
  std::int64_t rc_bound = 1000;
  auto* rc = app.add_subcommand("random-config", "seeded random colored configuration");
  rc->add_option("--d", rc_d, "dimension")->required();
  rc->add_option("--sizes", rc_sizes, "color class sizes, e.g. 3,1,1")->delimiter(',')->required();
  rc->add_option("--bound", rc_bound, "coordinates in [-bound, bound]");

  for (auto* s : {hom, pseudo, orient_cmd, deg, eq, audit, scen, rc}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    if (e.get_exit_code() == 0) return ok;
    std::cerr << app.help() << "\n";
    return input_error;
  }
  g.command = recorded_command(argc, argv);

  try {
    if (*complex_cmd) {
      if (*cb) return run_complex(g, "chessboard", mn, {});
      if (*sk) return run_complex(g, "skeleton", mk, {});
      return run_complex(g, "join", {}, join_files);
    }
    if (*hom) return run_homology(g, hom_src, unreduced, max_dim, prime_powers);
    if (*pseudo) return run_pseudo(g, pseudo_src);
    if (*orient_cmd) return run_orient(g, orient_src);
    if (*deg) return run_degree(g, da);
    if (*eq) return run_equimaps(g, eq_src, eq_tgt, eq_cap);
    if (*audit) return run_audit(g, au_src, au_tgt, au_cap, au_r, au_expected, au_maps);
    if (*scen) return run_scenario_cmd(g, sa);
    if (*rc) return run_random_config(g, rc_d, rc_sizes, rc_bound);
  } catch (const EnumerationCapExceeded& e) {
    std::cerr << "error: " << e.what() << " (" << e.candidate_count() << " candidate maps)\n";
    return input_error;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity failure: " << e.what() << "\n";
    return refuted;
  } catch (const MalformedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  }
  return input_error;
}
