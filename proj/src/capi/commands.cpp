#include "commands.hpp"

#include "kottwitz/adlv_pi0.hpp"
#include "kottwitz/affine_weyl.hpp"
#include "kottwitz/config.hpp"
#include "kottwitz/errors.hpp"
#include "kottwitz/shtuka_pi0.hpp"
#include "kottwitz/tori.hpp"

#include <set>

namespace kottwitz::app {

using nlohmann::json;

namespace {

json int_json(const Int& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

json vec_json(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

json rat_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json factors_json(const std::vector<Int>& f) { return vec_json(IntVec(f.begin(), f.end())); }

json matrix_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vec_json(m.row(r)));
  return a;
}

json columns_json(const IntMatrix& m) {
  json a = json::array();
  for (const auto& c : m.columns()) a.push_back(vec_json(c));
  return a;
}

json size_list(const std::vector<std::size_t>& v) {
  json a = json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

std::optional<std::string> opt_string(const json& o, const char* key) {
  if (!o.contains(key) || o[key].is_null()) return std::nullopt;
  if (!o[key].is_string()) throw ParseError(std::string("option --") + key + " must be a string");
  return o[key].get<std::string>();
}

bool opt_flag(const json& o, const char* key) {
  if (!o.contains(key) || o[key].is_null()) return false;
  if (!o[key].is_boolean()) throw ParseError(std::string("option --") + key + " must be a boolean");
  return o[key].get<bool>();
}

IntVec require_vec(const json& o, const char* key, std::size_t len) {
  auto s = opt_string(o, key);
  if (!s) throw ParseError(std::string("missing required option --") + key);
  IntVec v = parse_int_vec(*s);
  if (v.size() != len)
    throw ParseError(std::string("--") + key + " needs " + std::to_string(len) + " entries, got " +
                     std::to_string(v.size()));
  return v;
}

ArtinNormalization artin_of(const json& o) {
  auto a = opt_string(o, "artin").value_or("arithmetic");
  if (a == "arithmetic") return ArtinNormalization::arithmetic;
  if (a == "geometric") return ArtinNormalization::geometric;
  throw ParseError("--artin must be arithmetic or geometric, got '" + a + "'");
}

json class_json(const KottwitzSet& ks, const SigmaConjClass& c, const IntVec& mu) {
  json j;
  j["newton"] = rat_json(c.newton);
  j["kappa"] = vec_json(c.kappa);
  j["basic"] = ks.is_basic(c);
  j["hn_irreducible"] = ks.is_hn_irreducible(c, mu);
  return j;
}

// Class given by --nu/--kappa, or the basic class of kappa(mu).
SigmaConjClass class_of(const KottwitzSet& ks, const json& o, const IntVec& mu) {
  auto nu = opt_string(o, "nu");
  auto kappa = opt_string(o, "kappa");
  if (!nu && !kappa) return ks.basic_element(ks.kappa(mu));
  if (!nu || !kappa) throw ParseError("--nu and --kappa must be given together");
  SigmaConjClass c{parse_rat_vec(*nu), parse_int_vec(*kappa)};
  if (c.newton.size() != ks.datum().rank())
    throw ParseError("--nu needs " + std::to_string(ks.datum().rank()) + " entries");
  if (c.kappa.size() != ks.pi1().coinvariants().num_coords())
    throw ParseError("--kappa needs " + std::to_string(ks.pi1().coinvariants().num_coords()) + " entries");
  ks.validate(c);
  return c;
}

json torsor_json(const TorsorDescription& t) {
  json j;
  j["invariant_factors"] = factors_json(t.invariant_factors);
  j["generators"] = columns_json(t.generators);
  j["coset_label"] = vec_json(t.coset_label);
  j["cardinality"] = t.cardinality ? int_json(*t.cardinality) : json("infinite");
  j["label_is_choice"] = t.label_is_choice;
  return j;
}

json datum_json(const RootDatum& rd) {
  json j;
  j["label"] = rd.label();
  j["rank"] = rd.rank();
  j["roots"] = json::array();
  for (const auto& r : rd.roots()) j["roots"].push_back(vec_json(r));
  j["coroots"] = json::array();
  for (const auto& r : rd.coroots()) j["coroots"].push_back(vec_json(r));
  j["simple"] = size_list(rd.simple_indices());
  j["frobenius"] = matrix_json(rd.frobenius());
  return j;
}

json cmd_validate(const RootDatum& g) {
  json j;
  j["valid"] = true;
  j["rank"] = g.rank();
  j["num_roots"] = g.num_roots();
  j["num_simple"] = g.num_simple();
  j["frobenius_order"] = g.frobenius_order();
  j["is_split"] = g.is_split();
  j["cartan"] = matrix_json(g.cartan());
  j["weyl_group_order"] = g.weyl_group_order();
  return j;
}

json cmd_pi1(const RootDatum& g, const json& o) {
  Pi1 p(g);
  const bool coinv = opt_flag(o, "coinvariants");
  const bool inv = opt_flag(o, "invariants");
  if (coinv && inv) throw ParseError("--coinvariants and --invariants are exclusive");
  json j;
  if (coinv) {
    j["quantity"] = "coinvariants";
    j["invariant_factors"] = factors_json(p.coinvariants().invariant_factors());
  } else if (inv) {
    j["quantity"] = "invariants";
    j["invariant_factors"] = factors_json(p.invariants().structure.invariant_factors());
    j["generators"] = columns_json(p.invariants().generators);
  } else {
    j["quantity"] = "pi1";
    j["invariant_factors"] = factors_json(p.group().invariant_factors());
    j["frobenius"] = matrix_json(p.action());
  }
  return j;
}

json cmd_bgmu(const RootDatum& g, const json& o) {
  KottwitzSet ks(g);
  IntVec mu = require_vec(o, "mu", g.rank());
  json j;
  j["mu"] = vec_json(mu);
  j["mu_bar"] = rat_json(g.galois_average(mu));
  j["classes"] = json::array();
  for (const auto& c : ks.enumerate(mu)) j["classes"].push_back(class_json(ks, c, mu));
  return j;
}

json cmd_hn_irred(const RootDatum& g, const json& o) {
  KottwitzSet ks(g);
  IntVec mu = require_vec(o, "mu", g.rank());
  if (!opt_string(o, "nu") || !opt_string(o, "kappa")) throw ParseError("hn-irred needs --nu and --kappa");
  SigmaConjClass c = class_of(ks, o, mu);
  json j;
  j["mu"] = vec_json(mu);
  j["class"] = {{"newton", rat_json(c.newton)}, {"kappa", vec_json(c.kappa)}};
  const bool in = ks.in_b_g_mu(c, mu);
  j["in_b_g_mu"] = in;
  if (!in) throw PreconditionError("class is not in B(G, μ)");
  auto d = ks.defect(c, mu);
  j["defect_coefficients"] = rat_json(d.coefficients);
  auto bad = ks.hn_obstruction(c, mu);
  j["hn_irreducible"] = !bad.has_value();
  j["obstruction"] = bad ? json(*bad) : json(nullptr);
  return j;
}

json cmd_adlv_pi0(const RootDatum& g, const json& o) {
  AdlvPi0 a(g);
  IntVec mu = require_vec(o, "mu", g.rank());
  SigmaConjClass c = class_of(a.kottwitz_set(), o, mu);
  json j;
  j["mu"] = vec_json(mu);
  j["class"] = {{"newton", rat_json(c.newton)}, {"kappa", vec_json(c.kappa)}};
  j["torsor"] = torsor_json(a.compute(c, mu));
  auto rep = a.cartesian_check(c, mu);
  j["cartesian_check"] = {{"ok", rep.ok()},
                          {"equivariant", rep.equivariant},
                          {"invariants_map", rep.invariants_map},
                          {"group_match", rep.group_match},
                          {"labels_compatible", rep.labels_compatible},
                          {"fiber_product_invariants", factors_json(rep.fiber_product_invariants)},
                          {"adjoint_torsor", torsor_json(rep.adjoint)}};
  return j;
}

json cmd_sht_pi0(const RootDatum& g, const json& o) {
  KottwitzSet ks(g);
  IntVec mu = require_vec(o, "mu", g.rank());
  SigmaConjClass c = class_of(ks, o, mu);
  auto lv = opt_string(o, "level").value_or("hyperspecial");
  ShtLevel level;
  if (lv == "hyperspecial")
    level = ShtLevel::hyperspecial;
  else if (lv == "infinite")
    level = ShtLevel::infinite;
  else
    throw ParseError("--level must be hyperspecial or infinite, got '" + lv + "'");
  ShtPi0 s = pi0_sht(g, c, mu, level, artin_of(o));
  json j;
  j["mu"] = vec_json(mu);
  j["class"] = {{"newton", rat_json(c.newton)}, {"kappa", vec_json(c.kappa)}};
  j["level"] = to_string(level);
  const auto& gc = s.gcircle;
  j["g_circle"] = {
      {"mode", gc.mode == GCirclePresentation::Mode::direct ? "direct" : "via_z_extension"},
      {"cocenter_rank", gc.cocenter.rank()},
      {"cocenter_frobenius", matrix_json(gc.cocenter.frobenius())},
      {"kernel_map", matrix_json(gc.kernel_map)},
      {"shadow_invariant_factors", factors_json(gc.shadow.invariant_factors())},
      {"shadow_to_pi1", matrix_json(gc.shadow_to_pi1)}};
  j["weil"] = {{"reflex_degree", s.weil.reflex_degree},
               {"mu_lift", vec_json(s.weil.mu_lift)},
               {"norm_lattice_map", matrix_json(s.weil.norm_lattice_map)},
               {"projection", matrix_json(s.weil.projection)},
               {"artin", to_string(s.weil.artin)}};
  j["jb"] = {{"levi_simple", size_list(s.jb.levi.simple_subset)},
             {"levi_roots", size_list(s.jb.levi.root_subset)},
             {"composite", matrix_json(s.jb.composite)},
             {"det_shadow", matrix_json(s.jb.det_shadow)},
             {"inverse_convention", s.jb.inverse_convention}};
  j["frobenius_translation"] = vec_json(s.frobenius_translation);
  j["torsor"] = s.torsor ? torsor_json(*s.torsor) : json("symbolic G°-torsor");
  return j;
}

json cmd_adm(const RootDatum& g, const json& o) {
  AffineWeylGroup w(g);
  IntVec mu = require_vec(o, "mu", g.rank());
  auto adm = w.admissible_set(mu);
  json j;
  j["mu"] = vec_json(mu);
  j["count"] = adm.size();
  j["elements"] = json::array();
  for (const auto& x : adm)
    j["elements"].push_back({{"translation", vec_json(x.translation)},
                             {"finite_word", size_list(w.finite_word(x.finite))},
                             {"length", int_json(w.length(x))},
                             {"omega", vec_json(x.omega)}});
  return j;
}

json cmd_norm_map(const RootDatum& g, const json& o) {
  IntVec mu = require_vec(o, "mu", g.rank());
  std::optional<std::size_t> degree;
  if (auto d = opt_string(o, "degree")) {
    IntVec v = parse_int_vec(*d);
    if (v.size() != 1 || v[0] < 1 || !v[0].fits_slong_p()) throw ParseError("--degree must be a positive integer");
    degree = v[0].get_ui();
  }
  IntMatrix n = norm_map(g, mu, degree);
  json j;
  j["mu"] = vec_json(mu);
  j["degree"] = n.cols();
  j["orbit_size"] = g.sigma_orbit(mu).size();
  j["matrix"] = matrix_json(n);
  return j;
}

json zext_json(const ZExtension& z) {
  json j;
  j["is_identity"] = z.is_identity;
  j["source"] = datum_json(z.source);
  j["quotient_map"] = matrix_json(z.quotient_map);
  j["kernel"] = columns_json(z.kernel);
  j["kernel_frobenius"] = matrix_json(z.kernel_frobenius);
  j["kernel_blocks"] = size_list(z.kernel_blocks);
  j["source_pi1"] = factors_json(Pi1(z.source).group().invariant_factors());
  return j;
}

json cmd_lift_mu(const RootDatum& g, const json& o) {
  IntVec mu = require_vec(o, "mu", g.rank());
  ZExtension z = z_extension(g);
  IntVec lifted = lift_mu(z, mu);
  json j;
  j["mu"] = vec_json(mu);
  j["mu_lift"] = vec_json(lifted);
  j["reflex_degree"] = g.reflex_degree(mu);
  j["lift_reflex_degree"] = z.source.reflex_degree(lifted);
  j["z_extension_source"] = datum_json(z.source);
  return j;
}

const std::set<std::string>& known_options() {
  static const std::set<std::string> k{"mu", "nu", "kappa", "level", "artin", "coinvariants", "invariants", "degree"};
  return k;
}

}  // namespace

json run_command(const RootDatum& g, const std::string& command, const json& options) {
  if (!options.is_object()) throw ParseError("options must be a JSON object");
  for (const auto& [k, v] : options.items())
    if (!known_options().count(k)) throw ParseError("unknown option '" + k + "'");
  if (command == "validate") return cmd_validate(g);
  if (command == "pi1") return cmd_pi1(g, options);
  if (command == "bgmu") return cmd_bgmu(g, options);
  if (command == "hn-irred") return cmd_hn_irred(g, options);
  if (command == "adlv-pi0") return cmd_adlv_pi0(g, options);
  if (command == "sht-pi0") return cmd_sht_pi0(g, options);
  if (command == "adm") return cmd_adm(g, options);
  if (command == "norm-map") return cmd_norm_map(g, options);
  if (command == "zext") return zext_json(z_extension(g));
  if (command == "lift-mu") return cmd_lift_mu(g, options);
  throw ParseError("unknown command '" + command + "'");
}

json make_report(const RootDatum& g, const std::string& command, const json& options, json result) {
  json r;
  r["command"] = command;
  r["tool_version"] = kToolVersion;
  r["status"] = "ok";
  r["group"] = {{"label", g.label()},
                {"fingerprint", g.fingerprint()},
                {"rank", g.rank()},
                {"frobenius_order", g.frobenius_order()}};
  json inputs = json::object();
  for (const auto& [k, v] : options.items()) inputs[k] = v;
  r["inputs"] = inputs;
  r["normalization"] = {{"artin", options.value("artin", std::string("arithmetic"))}};
  r["result"] = std::move(result);
  return r;
}

json make_error(const std::string& command, const std::string& kind, const std::string& message,
                const std::vector<std::string>& violations) {
  json r;
  r["command"] = command;
  r["tool_version"] = kToolVersion;
  r["status"] = "error";
  r["error"] = {{"kind", kind}, {"message", message}, {"violations", violations}};
  return r;
}

}  // namespace kottwitz::app
