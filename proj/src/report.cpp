#include "ghostchar/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ghostchar/cover.hpp"
#include "ghostchar/ghost.hpp"
#include "ghostchar/repcheck.hpp"

namespace ghostchar {

namespace {

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::pair<const char*, Command> kCommands[] = {
    {"diagram", Command::Diagram}, {"f2", Command::F2},         {"solve", Command::Solve},
    {"ghosts", Command::Ghosts},   {"find", Command::Ghosts},   {"cover", Command::Cover},
    {"repcheck", Command::Repcheck}, {"phihat", Command::Phihat}};

nlohmann::json complex_json(std::complex<double> z) { return {z.real(), z.imag()}; }

nlohmann::json provenance(const std::string& module, const std::string& arithmetic) {
  return {{"module", module}, {"arithmetic", arithmetic}};
}

BraidWord braid_of(const RunConfig& c) {
  if (c.braid.empty()) throw UsageFailure("--braid is required");
  try {
    return parse_braid(c.braid);
  } catch (const std::exception& e) {
    throw UsageFailure(std::string("bad braid: ") + e.what());
  }
}

F2Presentation presentation_of(const Diagram& d, const RunConfig& c) {
  F2Presentation pres = eliminate(d);
  if (c.symmetry) pres = symmetry_reduce(pres, d.closure_permutation);
  return pres;
}

int builtin_index(const std::string& spec, std::size_t colon, int fallback) {
  if (colon == std::string::npos) return fallback;
  try {
    return std::stoi(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageFailure("bad representation index in " + spec);
  }
}

Representation representation_of(const RunConfig& c) {
  Representation rep;
  if (!c.builtin_rep.empty()) {
    const std::size_t colon = c.builtin_rep.find(':');
    const std::string name = c.builtin_rep.substr(0, colon);
    const int k = builtin_index(c.builtin_rep, colon, 0);
    if (name == "ghost" && (k == 0 || k == 1)) rep = t45::ghost_representation(k);
    else if (name == "ghost-printed" && (k == 0 || k == 1)) rep = t45::ghost_representation_as_printed(k);
    else if (name == "diagonal" && k >= 0 && k < 5) rep = t45::diagonal_representation(k);
    else if (name == "beta" && k >= 0 && k < 4) rep = t45::beta_representation(k);
    else throw UsageFailure("unknown built-in representation " + c.builtin_rep);
  } else if (!c.rep_path.empty()) {
    std::ifstream in(c.rep_path);
    if (!in) throw UsageFailure("cannot read " + c.rep_path);
    try {
      rep = Representation::from_json(nlohmann::json::parse(in));
    } catch (const std::exception& e) {
      throw UsageFailure(std::string("bad representation file: ") + e.what());
    }
  } else {
    throw UsageFailure("repcheck needs --rep or --builtin");
  }
  rep.tolerance = c.tolerance;
  return rep;
}

RunResult diagram_report(const RunConfig& c) {
  Diagram d = build_diagram(braid_of(c));
  nlohmann::json out = d.to_json();
  nlohmann::json rels = nlohmann::json::array();
  for (std::size_t k : relator_order(d)) {
    nlohmann::json word = nlohmann::json::array();
    const GroupWord rel = wirtinger_relator(d.crossings[k]);
    for (const auto& l : rel.letters()) word.push_back({l.generator, l.exponent});
    rels.push_back(word);
  }
  out["relators"] = rels;
  return {Success, out};
}

RunResult f2_report(const RunConfig& c) {
  Diagram d = build_diagram(braid_of(c));
  return {Success, presentation_of(d, c).to_json()};
}

nlohmann::json solution_json(const SolveResult& s) {
  nlohmann::json elim = nlohmann::json::object();
  for (const auto& [v, coeffs] : s.eliminants) {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& z : coeffs) cs.push_back(z.get_str());
    elim[v.to_string()] = cs;
  }
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : s.points) pts.push_back(p.to_json());
  nlohmann::json out = {{"status", to_string(s.status)},
                        {"eliminants", elim},
                        {"points", pts},
                        {"provenance", provenance("exactalg", "exact-algebraic")}};
  if (!s.diagnostic.empty()) out["diagnostic"] = s.diagnostic;
  return out;
}

RunResult solve_report(const RunConfig& c) {
  Diagram d = build_diagram(braid_of(c));
  F2Presentation pres = presentation_of(d, c);
  SolveResult s = solve_zero_dim(pres.polynomials(), pres.base_vars);
  nlohmann::json out = solution_json(s);
  out["base_vars"] = pres.to_json()["base_vars"];
  return {s.status == SolveStatus::PositiveDimensional ? Anomaly : Success, out};
}

RunResult ghosts_report(const RunConfig& c) {
  FindOptions opts;
  opts.symmetry = c.symmetry;
  opts.classify.all_rectangles = c.all_rectangles;
  opts.classify.numeric_tolerance = c.zero_tolerance;
  GhostReport g = find_ghosts(braid_of(c), opts);
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : g.points) {
    nlohmann::json entry = p.certificate.to_json();
    entry["coords"] = p.base.to_json();
    entry["provenance"] = provenance("ghost", p.certificate.arithmetic);
    pts.push_back(entry);
  }
  nlohmann::json out = {{"braid", g.braid.to_string()},
                        {"arcs", g.diagram.arc_count},
                        {"base_vars", g.presentation.to_json()["base_vars"]},
                        {"status", to_string(g.solution.status)},
                        {"points", pts},
                        {"ghost_count", g.ghost_count()},
                        {"symmetry_reduced", g.presentation.symmetry_reduced}};
  if (!g.presentation.diagnostics.empty()) out["diagnostics"] = g.presentation.diagnostics;
  if (!g.solution.diagnostic.empty()) out["diagnostic"] = g.solution.diagnostic;
  return {g.solution.status == SolveStatus::PositiveDimensional ? Anomaly : Success, out};
}

RunResult cover_report(const RunConfig& c) {
  Diagram d = build_diagram(braid_of(c));
  if (c.dropped_relator && *c.dropped_relator >= d.crossings.size())
    throw UsageFailure("dropped relator index out of range");
  CoverComputation cc = compute_cover(d, c.dropped_relator);
  nlohmann::json out = cc.cover.to_json();
  nlohmann::json inv = nlohmann::json::array();
  for (const auto& z : abelian_invariants(cc.cover)) inv.push_back(z.get_str());
  out["abelian_invariants"] = inv;
  out["h1_order"] = first_homology_order(cc.cover).get_str();
  out["eliminated"] = cc.tietze.eliminated;
  out["provenance"] = provenance("cover", "exact-integer");
  int status = Success;
  if (!cc.tietze.diagnostic.empty()) {
    out["diagnostic"] = cc.tietze.diagnostic;
    status = Anomaly;
  }
  return {status, out};
}

RunResult repcheck_report(const RunConfig& c) {
  Diagram d = build_diagram(braid_of(c));
  Representation rep = representation_of(c);
  CoverComputation cc = compute_cover(d, c.dropped_relator);
  double residual = 0;
  try {
    residual = verify(cc.cover, rep);
  } catch (const std::invalid_argument& e) {
    throw UsageFailure(e.what());
  }
  const double det = det_defect(rep);
  std::vector<GroupWord> gens;
  for (int g : cc.cover.generators) gens.push_back(GroupWord::generator(g));
  nlohmann::json tr = nlohmann::json::object();
  for (const auto& [w, t] : traces(cc.cover, rep, gens)) tr[w] = complex_json(t);

  F2Presentation pres = presentation_of(d, c);
  SnappedPoint sp = rep_to_f2_point(rep, cc.cover, pres);
  nlohmann::json pair = nlohmann::json::object();
  for (const auto& [v, t] : sp.raw_traces) pair[v.to_string()] = complex_json(t);
  nlohmann::json out = {{"residual", residual},
                        {"det_defect", det},
                        {"tolerance", rep.tolerance},
                        {"traces", tr},
                        {"pair_traces", pair},
                        {"max_snap_error", sp.max_snap_error},
                        {"satisfies_equations", sp.satisfies_equations},
                        {"provenance", provenance("repcheck", "numeric-double")}};
  bool ok = residual < rep.tolerance && det < rep.tolerance && sp.satisfies_equations;
  if (!sp.diagnostic.empty()) out["diagnostic"] = sp.diagnostic;
  if (sp.satisfies_equations) {
    ClassifyOptions opts;
    opts.all_rectangles = c.all_rectangles;
    opts.numeric_tolerance = c.zero_tolerance;
    LiftCertificate cert = classify_point(pres, sp.point, opts);
    out["f2_point"] = sp.point.to_json();
    out["certificate"] = cert.to_json(false);
    out["verdict"] = to_string(cert.verdict);
  }
  return {ok ? Success : Anomaly, out};
}

RunResult phihat_report(const RunConfig& c) {
  Diagram d = build_diagram(braid_of(c));
  F2Presentation pres = presentation_of(d, c);
  const int n = c.phihat_arcs ? c.phihat_arcs : d.strands;
  if (n < 1 || n > d.arc_count) throw UsageFailure("--arcs out of range");
  SolveResult s = solve_zero_dim(pres.polynomials(), pres.base_vars);
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : s.points) {
    FullPoint full = extend_point(pres, p, c.zero_tolerance);
    TraceFreeCharacter chi;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) chi.pairs[PairVar(i, j)] = approx_value(full, i, j);
    CoverCharacterCoordinates z = phi_hat(chi, n);
    nlohmann::json zs = nlohmann::json::object();
    for (const auto& [v, val] : z.z_pairs) zs["z[" + std::to_string(v.i) + "," + std::to_string(v.j) + "]"] = complex_json(val);
    for (const auto& [k, val] : z.z_quads)
      zs["z[" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + "," +
         std::to_string(k[3]) + "]"] = complex_json(val);
    pts.push_back({{"coords", p.to_json()}, {"z", zs}});
  }
  nlohmann::json out = {{"arcs", n},
                        {"status", to_string(s.status)},
                        {"points", pts},
                        {"provenance", provenance("repcheck", "numeric-double")}};
  return {s.status == SolveStatus::PositiveDimensional ? Anomaly : Success, out};
}

void write_text(const RunConfig& c, const RunResult& r, std::ostream& out) {
  const auto& j = r.report;
  if (j.contains("error")) {
    out << "error: " << j["error"].get<std::string>() << "\n";
    return;
  }
  switch (c.command) {
    case Command::Diagram:
      out << "braid " << j["braid"].get<std::string>() << ": " << j["arcs"] << " arcs, "
          << j["crossings"].size() << " crossings\n";
      for (const auto& x : j["crossings"])
        out << "  crossing over " << x["over"] << " in " << x["in"] << " out " << x["out"] << " sign "
            << x["sign"] << "\n";
      break;
    case Command::F2:
      out << "base variables:";
      for (const auto& v : j["base_vars"]) out << " " << v.get<std::string>();
      out << "\n";
      for (const auto& e : j["equations"])
        out << "  " << e["label"].get<std::string>() << ": " << e["poly"].get<std::string>() << " = 0\n";
      break;
    case Command::Solve:
      out << "status: " << j["status"].get<std::string>() << ", " << j["points"].size() << " points\n";
      for (const auto& p : j["points"]) {
        out << " ";
        for (const auto& [k, v] : p.items()) out << " " << k << " = " << v["value"].get<std::string>();
        out << "\n";
      }
      break;
    case Command::Ghosts:
      out << "braid " << j["braid"].get<std::string>() << ": " << j["points"].size() << " points, "
          << j["ghost_count"] << " ghost characters\n";
      for (const auto& p : j["points"]) {
        out << " ";
        for (const auto& [k, v] : p["coords"].items()) out << " " << k << " = " << v["value"].get<std::string>();
        out << "  -> " << p["verdict"].get<std::string>() << " [" << p["arithmetic"].get<std::string>() << "]\n";
        for (const auto& f : p["failing_rectangles"])
          out << "    failing rectangle " << f["indices"].dump() << " = " << f["value"]["value"].get<std::string>()
              << "\n";
        if (p.contains("hexagon_failure"))
          out << "    hexagon inconsistent at " << p["hexagon_failure"]["first"].get<std::string>() << ", "
              << p["hexagon_failure"]["second"].get<std::string>() << "\n";
      }
      break;
    case Command::Cover:
      out << "generators:";
      for (const auto& g : j["generators"]) out << " " << g.get<std::string>();
      out << "\n";
      for (std::size_t k = 0; k < j["relator_text"].size(); ++k)
        out << "  w" << k + 1 << " = " << j["relator_text"][k].get<std::string>() << "\n";
      out << "|H1| = " << (j["h1_order"] == "0" ? std::string("infinite") : j["h1_order"].get<std::string>())
          << "\n";
      break;
    case Command::Repcheck:
      out << "relator residual " << j["residual"].get<double>() << ", det defect " << j["det_defect"].get<double>()
          << "\n";
      for (const auto& [w, t] : j["traces"].items()) out << "  tr " << w << " = " << t[0] << " + " << t[1] << "i\n";
      if (j.contains("f2_point")) {
        out << "F2 point:";
        for (const auto& [k, v] : j["f2_point"].items()) out << " " << k << " = " << v["value"].get<std::string>();
        out << "\nverdict: " << j["verdict"].get<std::string>() << "\n";
      }
      if (j.contains("diagnostic")) out << j["diagnostic"].get<std::string>() << "\n";
      break;
    case Command::Phihat:
      for (const auto& p : j["points"]) {
        out << "point";
        for (const auto& [k, v] : p["coords"].items()) out << " " << k << " = " << v["value"].get<std::string>();
        out << "\n";
        for (const auto& [k, v] : p["z"].items()) out << "  " << k << " = " << v[0] << " + " << v[1] << "i\n";
      }
      break;
  }
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  for (const auto& [n, c] : kCommands)
    if (name == n) return c;
  return std::nullopt;
}

const char* to_string(Command c) {
  for (const auto& [n, cmd] : kCommands)
    if (cmd == c) return n;
  return "?";
}

RunResult execute(const RunConfig& config) {
  try {
    if (!(config.tolerance > 0) || !(config.zero_tolerance > 0)) throw UsageFailure("tolerance must be positive");
    if (config.precision < 64) throw UsageFailure("precision must be at least 64 bits");
    set_working_precision(config.precision);
    switch (config.command) {
      case Command::Diagram: return diagram_report(config);
      case Command::F2: return f2_report(config);
      case Command::Solve: return solve_report(config);
      case Command::Ghosts: return ghosts_report(config);
      case Command::Cover: return cover_report(config);
      case Command::Repcheck: return repcheck_report(config);
      case Command::Phihat: return phihat_report(config);
    }
  } catch (const UsageFailure& e) {
    return {UsageError, {{"error", e.what()}}};
  } catch (const std::exception& e) {
    return {Anomaly, {{"error", e.what()}}};
  }
  return {UsageError, {{"error", "unknown command"}}};
}

std::string dump_report(const nlohmann::json& report) { return report.dump(2) + "\n"; }

int run(const RunConfig& config, std::ostream& out) {
  RunResult r = execute(config);
  if (config.json)
    out << dump_report(r.report);
  else
    write_text(config, r, out);
  return r.status;
}

}  // namespace ghostchar
