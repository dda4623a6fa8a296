// tkt: twist-family knot tools.
//
// Subcommands compute the HOMFLYPT polynomial of a diagram, the classical
// bound set, full per-n family reports with slope detection, braid-side
// family words, and the satellite / meridional-norm arithmetic.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tkt/bounds.hpp"
#include "tkt/braid.hpp"
#include "tkt/diagram.hpp"
#include "tkt/errors.hpp"
#include "tkt/report.hpp"
#include "tkt/skein.hpp"
#include "tkt/twist.hpp"

namespace {

using tkt::LinkDiagram;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tkt::ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LinkDiagram diagram_from_json_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw tkt::ParseError(std::string("bad diagram JSON: ") + e.what());
  }
  std::vector<tkt::CrossingTuple> xs;
  try {
    for (const auto& t : j.at("crossings")) {
      if (!t.is_array() || t.size() != 4)
        throw tkt::ParseError("each crossing must be a 4-tuple");
      xs.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>(),
                    t[3].get<int>()});
    }
    int unknots = j.value("unknot_components", 0);
    return LinkDiagram::make(std::move(xs), unknots);
  } catch (const nlohmann::json::exception& e) {
    throw tkt::ParseError(std::string("bad diagram JSON: ") + e.what());
  }
}

// Inline "PD[...]" text, or a path to a PD/JSON diagram file.
LinkDiagram load_diagram(const std::string& arg) {
  std::string text = arg;
  if (arg.rfind("PD[", 0) != 0) text = slurp(arg);
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '{')
    return diagram_from_json_text(text);
  return LinkDiagram::parse_pd(text);
}

tkt::TwistRegion load_region(const std::string& path) {
  ordered_json j;
  try {
    j = ordered_json::parse(slurp(path));
    std::vector<tkt::TwistStrand> strands;
    for (const auto& s : j.at("strands")) {
      if (!s.is_array() || s.size() != 2)
        throw tkt::ParseError("each region strand must be [arc, dir]");
      strands.push_back({s[0].get<int>(), s[1].get<int>()});
    }
    return tkt::TwistRegion(std::move(strands));
  } catch (const nlohmann::json::exception& e) {
    throw tkt::ParseError(std::string("bad region JSON: ") + e.what());
  }
}

tkt::BraidWord braid_from_json(const ordered_json& j) {
  tkt::BraidWord b;
  b.strands = j.at("strands").get<int>();
  for (const auto& e : j.at("word")) b.word.push_back(e.get<int>());
  b.validate();
  return b;
}

tkt::BraidTwistFamily load_braid_family(const std::string& path) {
  try {
    ordered_json j = ordered_json::parse(slurp(path));
    tkt::BraidTwistFamily f;
    f.beta1 = braid_from_json(j.at("beta1"));
    f.beta2 = braid_from_json(j.at("beta2"));
    f.p = j.at("p").get<int>();
    f.q = j.at("q").get<int>();
    f.validate();
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw tkt::ParseError(std::string("bad braid family JSON: ") + e.what());
  }
}

ordered_json polynomial_json(const tkt::LaurentPoly2& p) {
  return ordered_json::parse(tkt::polynomial_to_json(p));
}

int run_homfly(const std::string& diagram_arg, bool as_json) {
  LinkDiagram d = load_diagram(diagram_arg);
  tkt::SkeinEngine engine(tkt::SkeinEngine::Options::from_env());
  tkt::LaurentPoly2 p = engine.homfly(d);
  auto jones = engine.jones_check(d);
  if (!jones.matches)
    throw std::logic_error("jones specialization check failed");
  if (as_json) {
    ordered_json out;
    out["polynomial"] = polynomial_json(p);
    out["pretty"] = p.pretty();
    out["E"] = p.max_l_degree();
    out["e"] = p.min_l_degree();
    out["components"] = d.component_count();
    out["writhe"] = d.writhe();
    out["jones_at_root"] = jones.value.to_string();
    out["nodes"] = engine.stats().nodes;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "P = " << p.pretty() << "\n";
    std::cout << "E = " << p.max_l_degree() << ", e = " << p.min_l_degree()
              << ", components = " << d.component_count()
              << ", writhe = " << d.writhe() << "\n";
    std::cout << "V(sqrt(-1)) = " << jones.value.to_string() << " = (-2)^"
              << (jones.components - 1) << "\n";
  }
  return kExitOk;
}

int run_bounds(const std::string& diagram_arg) {
  LinkDiagram d = load_diagram(diagram_arg);
  tkt::SkeinEngine engine(tkt::SkeinEngine::Options::from_env());
  tkt::LaurentPoly2 p = engine.homfly(d);
  tkt::SeifertData sd = tkt::seifert_data(d);
  auto jones = engine.jones_check(d);

  ordered_json out;
  out["crossings"] = d.crossing_count();
  out["components"] = d.component_count();
  out["writhe"] = d.writhe();
  out["seifert_circles"] = sd.circles;
  out["chi"] = sd.chi;
  if (sd.canonical_genus) out["canonical_genus"] = *sd.canonical_genus;
  out["E"] = p.max_l_degree();
  out["e"] = p.min_l_degree();
  long long mfw = tkt::mfw_lb(p);
  out["mfw_lb"] = mfw;
  out["ohyama_lb"] = tkt::ohyama_lb(mfw);
  if (d.component_count() == 1) {
    long long alex = tkt::alexander_genus_lb(p);
    out["alex_g_lb"] = alex;
    out["diao_lb"] = tkt::diao_lb(alex, mfw);
  }
  out["jones_at_root"] = jones.value.to_string();
  out["jones_ok"] = jones.matches;
  out["polynomial"] = polynomial_json(p);
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int run_family(const std::string& diagram_arg, const std::string& region_path,
               int n, const std::string& mode_name,
               const std::string& braid_path, const std::string& out_path,
               const std::string& format) {
  LinkDiagram d = load_diagram(diagram_arg);
  tkt::TwistFamily fam = tkt::TwistFamily::make(d, load_region(region_path));

  tkt::ReportMode mode;
  if (mode_name == "diagram") mode = tkt::ReportMode::diagram;
  else if (mode_name == "braid") mode = tkt::ReportMode::braid;
  else if (mode_name == "both") mode = tkt::ReportMode::both;
  else throw tkt::ParseError("mode must be diagram, braid or both");

  tkt::FamilyReportOptions opt;
  opt.engine = tkt::SkeinEngine::Options::from_env();
  if (!braid_path.empty()) opt.braid = load_braid_family(braid_path);

  tkt::StableReport rep = tkt::family_report(fam, n, mode, opt);

  std::ostringstream body;
  if (format == "csv") tkt::emit_csv(rep, body);
  else if (format == "json") tkt::emit_json(rep, body);
  else throw tkt::ParseError("format must be csv or json");

  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw tkt::ParseError("cannot write file: " + out_path);
    out << body.str();
  }
  return rep.resource_capped ? kExitResource : kExitOk;
}

int run_braid_family(const std::string& path, int n, bool check) {
  tkt::BraidTwistFamily f = load_braid_family(path);
  tkt::SkeinEngine engine(tkt::SkeinEngine::Options::from_env());

  ordered_json out;
  out["strand_counts"] = tkt::braid_index_ub_sequence(f, n);
  out["words"] = ordered_json::array();
  for (int k = 0; k <= n; ++k) {
    tkt::BraidWord w = tkt::braid_family_word(f, k);
    ordered_json jw;
    jw["n"] = k;
    jw["strands"] = w.strands;
    jw["word"] = w.word;
    jw["closure_crossings"] = static_cast<int>(w.word.size());
    if (check) {
      tkt::TwistFamily fam = tkt::braid_family_diagram(f);
      bool ok = engine.homfly(tkt::closure(w)) ==
                engine.homfly(tkt::twist(fam, k));
      jw["matches_diagram"] = ok;
      if (!ok)
        throw tkt::ValidationError(
            "braid word does not close to the twisted diagram at n = " +
            std::to_string(k));
    }
    out["words"].push_back(std::move(jw));
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int run_satellite(int eta_k, int omega_k, int eta_p, int omega_p) {
  tkt::SatelliteData d{eta_k, omega_k, eta_p, omega_p};
  tkt::SatelliteVerdict v = tkt::satellite_slope_check(d);
  ordered_json out;
  out["eta_k"] = eta_k;
  out["omega_k"] = omega_k;
  out["eta_p"] = eta_p;
  out["omega_p"] = omega_p;
  out["eta_K"] = v.eta_K;
  out["omega_K"] = v.omega_K;
  out["applicable"] = v.applicable;
  out["hyp_winding_ratio"] = v.hyp_winding_ratio;
  out["hyp_pattern_wraps"] = v.hyp_pattern_wraps;
  out["hypotheses_hold"] = v.hypotheses_hold;
  out["x_K_min"] = v.x_K_min;
  out["slope_inequality"] = v.slope_inequality;
  out["strengthened"] = v.strengthened;
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int run_norm(int eta, int omega) {
  tkt::NormBounds nb = tkt::meridional_norm_bounds(eta, omega);
  ordered_json out;
  out["eta"] = eta;
  out["omega"] = omega;
  out["lower"] = nb.lower;
  out["upper"] = nb.upper;
  out["exact"] = nb.exact;
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tkt: exact invariants and bounds for twist families of knots"};
  app.require_subcommand(1);

  std::string diagram_arg, region_path, braid_path, out_path;
  std::string mode_name = "diagram", format = "csv";
  int n = 0;
  bool as_json = false, check = false;
  int eta = 0, omega = 0, eta_k = 0, omega_k = 0, eta_p = 0, omega_p = 0;

  auto* homfly =
      app.add_subcommand("homfly", "HOMFLYPT polynomial of a diagram");
  homfly->add_option("diagram", diagram_arg, "PD code or diagram file")
      ->required();
  homfly->add_flag("--json", as_json, "machine-readable output");

  auto* bounds =
      app.add_subcommand("bounds", "crossing/braid/genus bounds of a diagram");
  bounds->add_option("diagram", diagram_arg, "PD code or diagram file")
      ->required();

  auto* family = app.add_subcommand(
      "family", "per-n report over a marked twist region");
  family->add_option("diagram", diagram_arg, "PD code or diagram file")
      ->required();
  family->add_option("--region", region_path, "twist region JSON file")
      ->required();
  family->add_option("--n", n, "largest twist parameter")->required();
  family->add_option("--mode", mode_name, "diagram | braid | both");
  family->add_option("--braid", braid_path,
                     "braid family JSON (modes braid/both)");
  family->add_option("--out", out_path, "output path (default stdout)");
  family->add_option("--format", format, "csv | json");

  auto* braid_family = app.add_subcommand(
      "braid-family", "braid words of a (beta1, beta2, p, q) family");
  braid_family->add_option("family", braid_path, "braid family JSON file")
      ->required();
  braid_family->add_option("--n", n, "largest twist parameter")->required();
  braid_family->add_flag("--check", check,
                         "verify closures against the diagram side");

  auto* satellite = app.add_subcommand(
      "satellite", "twisted-satellite wrapping/winding arithmetic");
  satellite->add_option("--eta-k", eta_k, "companion wrapping")->required();
  satellite->add_option("--omega-k", omega_k, "companion winding")->required();
  satellite->add_option("--eta-p", eta_p, "pattern wrapping")->required();
  satellite->add_option("--omega-p", omega_p, "pattern winding")->required();

  auto* norm =
      app.add_subcommand("norm", "meridional norm bounds from (eta, omega)");
  norm->add_option("--eta", eta, "wrapping number")->required();
  norm->add_option("--omega", omega, "winding number")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (app.got_subcommand(homfly)) return run_homfly(diagram_arg, as_json);
    if (app.got_subcommand(bounds)) return run_bounds(diagram_arg);
    if (app.got_subcommand(family))
      return run_family(diagram_arg, region_path, n, mode_name, braid_path,
                        out_path, format);
    if (app.got_subcommand(braid_family))
      return run_braid_family(braid_path, n, check);
    if (app.got_subcommand(satellite))
      return run_satellite(eta_k, omega_k, eta_p, omega_p);
    if (app.got_subcommand(norm)) return run_norm(eta, omega);
  } catch (const tkt::ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const tkt::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const tkt::ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
