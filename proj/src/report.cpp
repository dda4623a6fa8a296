#include "tkt/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "tkt/errors.hpp"

#include <json.hpp>

namespace tkt {

using ordered_json = nlohmann::ordered_json;

SlopeEstimate slope_estimate(const std::vector<long long>& seq) {
  if (seq.size() < 3)
    throw ValidationError("slope_estimate needs at least three values");
  std::vector<long long> diff;
  for (std::size_t i = 1; i < seq.size(); ++i)
    diff.push_back(seq[i] - seq[i - 1]);
  // smallest onset whose trailing differences are constant
  std::size_t onset = diff.size() - 1;
  while (onset > 0 && diff[onset - 1] == diff.back()) --onset;
  if (diff.size() - onset < 2) return {false, 0, 0};
  return {true, diff.back(), static_cast<int>(onset)};
}

namespace {

const char* const kColumns[] = {"c_ub",      "s",         "g_c",  "E",
                                "e",         "mfw_lb",    "ohyama_lb",
                                "alex_g_lb", "diao_lb",   "braid_ub"};

std::string agreement_statement(const ReportVerdicts& v) {
  std::ostringstream os;
  os << "c_ub slope " << v.c_ub_slope << " = eta(eta-1)";
  if (v.slopes_agree) {
    os << "; lower and upper crossing slopes agree at " << v.c_ub_slope
       << ", consistent with stable crossing number " << v.c_ub_slope;
  } else if (v.lower_slope.stabilized) {
    os << "; crossing slope bracketed in [" << v.lower_slope.slope << ", "
       << v.c_ub_slope << "]";
  } else {
    os << "; no stabilized crossing lower bound in range";
  }
  os << "; genus slope bound omega*x in [" << v.genus_2g_slope_lower << ", "
     << v.genus_2g_slope_upper << "]";
  if (v.wrap2_applicable)
    os << "; degree rule applies: consistent with b_s = " << v.wrap2_b_s
       << " and c_s = " << v.wrap2_c_s;
  return os.str();
}

}  // namespace

StableReport family_report(const TwistFamily& f, int N, ReportMode mode,
                           const FamilyReportOptions& opt) {
  if (N < 2) throw ValidationError("family_report needs N >= 2");
  if ((mode == ReportMode::braid || mode == ReportMode::both) && !opt.braid)
    throw ValidationError("braid mode needs a braid family");
  if (opt.braid) opt.braid->validate();

  RegionStats st = region_stats(f);
  bool wrap2 = (st.eta == 2 && st.omega == 0);
  SkeinEngine engine(opt.engine);

  StableReport rep;
  rep.mode = mode == ReportMode::diagram ? "diagram"
             : mode == ReportMode::braid ? "braid"
                                         : "both";
  rep.c0 = f.base().crossing_count();
  rep.node_cap = opt.engine.node_cap;

  LaurentPoly2 p0, pinf;
  bool have_polys = true;
  try {
    p0 = engine.homfly(f.base());
    if (wrap2) pinf = engine.homfly(resolve(f));
  } catch (const ResourceCapError&) {
    have_polys = false;
    rep.resource_capped = true;
  }

  long long step = static_cast<long long>(st.eta) * (st.eta - 1);
  TwistFamily cur = f;
  for (int n = 0; n <= N; ++n) {
    if (n > 0) cur = twisted_family(cur, 1);
    const LinkDiagram& dn = cur.base();

    ReportRow row;
    row.n = n;
    row.c_ub = dn.crossing_count();
    if (row.c_ub != rep.c0 + n * step)
      throw std::logic_error("twisted diagram crossing count off the ladder");
    SeifertData sd = seifert_data(dn);
    row.s = sd.circles;
    if (!sd.canonical_genus)
      throw std::logic_error("twisted family member is not a knot diagram");
    row.g_c = *sd.canonical_genus;

    std::optional<LaurentPoly2> pn_opt;
    if (have_polys && !rep.resource_capped) {
      try {
        LaurentPoly2 pn;
        if (wrap2) {
          pn = twist_closed_form(p0, pinf, n);
          if (n <= opt.direct_window && engine.homfly(dn) != pn)
            throw std::logic_error(
                "closed-form twist polynomial disagrees with the direct "
                "computation");
        } else {
          pn = engine.homfly(dn);
        }
        pn_opt = pn;
        auto [E, e] = ell_degrees(pn);
        row.E = E;
        row.e = e;
        long long mfw = mfw_lb(pn);
        row.mfw_lb = mfw;
        row.ohyama_lb = ohyama_lb(mfw);
        long long alex = alexander_genus_lb(pn);
        row.alex_g_lb = alex;
        row.diao_lb = diao_lb(alex, mfw);
        for (long long lb : {*row.ohyama_lb, *row.diao_lb})
          if (lb > row.c_ub)
            throw std::logic_error(
                "crossing lower bound exceeds the diagrammatic upper bound");
      } catch (const ResourceCapError&) {
        rep.resource_capped = true;
      }
    }

    if (mode == ReportMode::diagram) {
      // Seifert circles bound the braid index from above on any diagram
      row.braid_ub = row.s;
    } else {
      row.braid_ub = opt.braid->strand_count() +
                     static_cast<long long>(n) * opt.braid->q;
      if (mode == ReportMode::both && n <= opt.braid_check_window &&
          pn_opt.has_value()) {
        BraidWord wn = braid_family_word(*opt.braid, n);
        if (engine.homfly(closure(wn)) != *pn_opt)
          throw ValidationError(
              "braid family does not match the diagram family at n = " +
              std::to_string(n));
      }
    }
    rep.rows.push_back(std::move(row));
  }

  // slopes over complete columns
  auto column = [&](const char* name) {
    std::vector<long long> vals;
    for (const auto& row : rep.rows) {
      std::optional<long long> v;
      std::string c = name;
      if (c == "c_ub") v = row.c_ub;
      else if (c == "s") v = row.s;
      else if (c == "g_c") v = row.g_c;
      else if (c == "E") v = row.E;
      else if (c == "e") v = row.e;
      else if (c == "mfw_lb") v = row.mfw_lb;
      else if (c == "ohyama_lb") v = row.ohyama_lb;
      else if (c == "alex_g_lb") v = row.alex_g_lb;
      else if (c == "diao_lb") v = row.diao_lb;
      else v = row.braid_ub;
      if (!v) break;
      vals.push_back(*v);
    }
    return vals;
  };
  for (const char* name : kColumns) {
    std::vector<long long> vals = column(name);
    SlopeEstimate est =
        vals.size() >= 3 ? slope_estimate(vals) : SlopeEstimate{};
    rep.slopes.emplace_back(name, est);
  }

  auto slope_of = [&](const std::string& name) {
    for (const auto& [col, est] : rep.slopes)
      if (col == name) return est;
    return SlopeEstimate{};
  };

  ReportVerdicts v;
  v.eta = st.eta;
  v.omega = st.omega;
  v.coherent = st.coherent;
  v.x = meridional_norm_bounds(st.eta, st.omega);
  v.c_ub_slope = step;
  SlopeEstimate diao = slope_of("diao_lb"), ohy = slope_of("ohyama_lb");
  if (diao.stabilized && (!ohy.stabilized || diao.slope >= ohy.slope))
    v.lower_slope = diao;
  else if (ohy.stabilized)
    v.lower_slope = ohy;
  v.slopes_agree = v.lower_slope.stabilized && v.lower_slope.slope == step;
  GenusSlopeReport gs = genus_slope_report(st.omega, v.x);
  v.genus_2g_slope_lower = gs.two_g_slope_lower;
  v.genus_2g_slope_upper = gs.two_g_slope_upper;
  v.genus_slope_exact = gs.exact;
  v.braid_ub_slope = slope_of("braid_ub");
  v.braid_slope_cap = (st.eta - st.omega) / 2;
  if (wrap2 && have_polys) {
    Wrap2Verdict w2 = wrap2_stable_check(p0, pinf);
    v.wrap2_applicable = w2.applicable;
    if (w2.applicable) {
      v.wrap2_b_s = w2.stable_braid_index;
      v.wrap2_c_s = w2.stable_crossing;
    }
  }
  v.statement = agreement_statement(v);
  rep.verdicts = std::move(v);

  SkeinStats stats = engine.stats();
  rep.nodes = stats.nodes;
  rep.memo_hits = stats.memo_hits;
  return rep;
}

void emit_csv(const StableReport& r, std::ostream& os) {
  if (r.rows.empty()) throw ValidationError("cannot emit an empty report");
  os << "n,c_ub,s,g_c,E,e,mfw_lb,ohyama_lb,alex_g_lb,diao_lb,braid_ub\n";
  auto cell = [](const std::optional<long long>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  for (const auto& row : r.rows) {
    os << row.n << ',' << row.c_ub << ',' << row.s << ',' << row.g_c << ','
       << cell(row.E) << ',' << cell(row.e) << ',' << cell(row.mfw_lb) << ','
       << cell(row.ohyama_lb) << ',' << cell(row.alex_g_lb) << ','
       << cell(row.diao_lb) << ',' << row.braid_ub << '\n';
  }
}

namespace {

ordered_json slope_json(const SlopeEstimate& e) {
  return ordered_json{
      {"stabilized", e.stabilized}, {"slope", e.slope}, {"onset", e.onset}};
}

SlopeEstimate slope_from_json(const ordered_json& j) {
  return {j.at("stabilized").get<bool>(), j.at("slope").get<long long>(),
          j.at("onset").get<int>()};
}

ordered_json opt_json(const std::optional<long long>& v) {
  if (v) return *v;
  return nullptr;
}

std::optional<long long> opt_from_json(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<long long>();
}

}  // namespace

void emit_json(const StableReport& r, std::ostream& os) {
  if (r.rows.empty()) throw ValidationError("cannot emit an empty report");
  ordered_json j;
  j["mode"] = r.mode;
  j["c0"] = r.c0;
  j["rows"] = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json jr;
    jr["n"] = row.n;
    jr["c_ub"] = row.c_ub;
    jr["s"] = row.s;
    jr["g_c"] = row.g_c;
    jr["E"] = opt_json(row.E);
    jr["e"] = opt_json(row.e);
    jr["mfw_lb"] = opt_json(row.mfw_lb);
    jr["ohyama_lb"] = opt_json(row.ohyama_lb);
    jr["alex_g_lb"] = opt_json(row.alex_g_lb);
    jr["diao_lb"] = opt_json(row.diao_lb);
    jr["braid_ub"] = row.braid_ub;
    j["rows"].push_back(std::move(jr));
  }
  j["slopes"] = ordered_json::object();
  for (const auto& [col, est] : r.slopes) j["slopes"][col] = slope_json(est);
  const ReportVerdicts& v = r.verdicts;
  j["verdicts"] = ordered_json{
      {"eta", v.eta},
      {"omega", v.omega},
      {"coherent", v.coherent},
      {"x", {{"lower", v.x.lower}, {"upper", v.x.upper}, {"exact", v.x.exact}}},
      {"c_ub_slope", v.c_ub_slope},
      {"lower_slope", slope_json(v.lower_slope)},
      {"slopes_agree", v.slopes_agree},
      {"genus_2g_slope_lower", v.genus_2g_slope_lower},
      {"genus_2g_slope_upper", v.genus_2g_slope_upper},
      {"genus_slope_exact", v.genus_slope_exact},
      {"braid_ub_slope", slope_json(v.braid_ub_slope)},
      {"braid_slope_cap", v.braid_slope_cap},
      {"wrap2_applicable", v.wrap2_applicable},
      {"wrap2_b_s", v.wrap2_b_s},
      {"wrap2_c_s", v.wrap2_c_s},
      {"statement", v.statement}};
  j["resource"] = ordered_json{{"capped", r.resource_capped},
                               {"nodes", r.nodes},
                               {"memo_hits", r.memo_hits},
                               {"node_cap", r.node_cap}};
  os << j.dump(2) << "\n";
}

StableReport report_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad report JSON: ") + e.what());
  }
  StableReport r;
  try {
    r.mode = j.at("mode").get<std::string>();
    r.c0 = j.at("c0").get<long long>();
    for (const auto& jr : j.at("rows")) {
      ReportRow row;
      row.n = jr.at("n").get<int>();
      row.c_ub = jr.at("c_ub").get<long long>();
      row.s = jr.at("s").get<long long>();
      row.g_c = jr.at("g_c").get<long long>();
      row.E = opt_from_json(jr.at("E"));
      row.e = opt_from_json(jr.at("e"));
      row.mfw_lb = opt_from_json(jr.at("mfw_lb"));
      row.ohyama_lb = opt_from_json(jr.at("ohyama_lb"));
      row.alex_g_lb = opt_from_json(jr.at("alex_g_lb"));
      row.diao_lb = opt_from_json(jr.at("diao_lb"));
      row.braid_ub = jr.at("braid_ub").get<long long>();
      r.rows.push_back(std::move(row));
    }
    for (const auto& [col, est] : j.at("slopes").items())
      r.slopes.emplace_back(col, slope_from_json(est));
    const auto& jv = j.at("verdicts");
    ReportVerdicts v;
    v.eta = jv.at("eta").get<int>();
    v.omega = jv.at("omega").get<int>();
    v.coherent = jv.at("coherent").get<bool>();
    v.x = NormBounds{jv.at("x").at("lower").get<int>(),
                     jv.at("x").at("upper").get<int>(),
                     jv.at("x").at("exact").get<bool>()};
    v.c_ub_slope = jv.at("c_ub_slope").get<long long>();
    v.lower_slope = slope_from_json(jv.at("lower_slope"));
    v.slopes_agree = jv.at("slopes_agree").get<bool>();
    v.genus_2g_slope_lower = jv.at("genus_2g_slope_lower").get<long long>();
    v.genus_2g_slope_upper = jv.at("genus_2g_slope_upper").get<long long>();
    v.genus_slope_exact = jv.at("genus_slope_exact").get<bool>();
    v.braid_ub_slope = slope_from_json(jv.at("braid_ub_slope"));
    v.braid_slope_cap = jv.at("braid_slope_cap").get<long long>();
    v.wrap2_applicable = jv.at("wrap2_applicable").get<bool>();
    v.wrap2_b_s = jv.at("wrap2_b_s").get<int>();
    v.wrap2_c_s = jv.at("wrap2_c_s").get<int>();
    v.statement = jv.at("statement").get<std::string>();
    r.verdicts = std::move(v);
    const auto& jr = j.at("resource");
    r.resource_capped = jr.at("capped").get<bool>();
    r.nodes = jr.at("nodes").get<std::uint64_t>();
    r.memo_hits = jr.at("memo_hits").get<std::uint64_t>();
    r.node_cap = jr.at("node_cap").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad report JSON: ") + e.what());
  }
  return r;
}

std::string polynomial_to_json(const LaurentPoly2& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [key, coeff] : p.terms()) {
    ordered_json t = ordered_json::array();
    t.push_back(key.first);
    t.push_back(key.second);
    if (coeff.fits_int64())
      t.push_back(coeff.to_int64());
    else
      t.push_back(coeff.to_string());
    terms.push_back(std::move(t));
  }
  return ordered_json{{"terms", std::move(terms)}}.dump();
}

LaurentPoly2 polynomial_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad polynomial JSON: ") + e.what());
  }
  LaurentPoly2 p;
  try {
    for (const auto& t : j.at("terms")) {
      ZInt coeff = t.at(2).is_string()
                       ? ZInt::from_string(t.at(2).get<std::string>())
                       : ZInt(t.at(2).get<long long>());
      p += LaurentPoly2::monomial(t.at(0).get<int>(), t.at(1).get<int>(),
                                  coeff);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad polynomial JSON: ") + e.what());
  }
  return p;
}

}  // namespace tkt
