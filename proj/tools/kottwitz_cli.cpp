// kottwitz: command-line front end over the C API.

#include "kottwitz.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int emit_error(const std::string& command, kw_status status, const std::string& diagnostic_error, bool pretty) {
  nlohmann::json r;
  r["command"] = command;
  r["status"] = "error";
  r["tool_version"] = kw_version();
  r["error"] = nlohmann::json::parse(diagnostic_error);
  std::cout << (pretty ? r.dump(2) : r.dump()) << "\n";
  std::cerr << "kottwitz: " << r["error"]["message"].get<std::string>() << "\n";
  return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kottwitz sets, pi_1 invariants and connected components of ADLVs and shtuka moduli"};
  app.set_version_flag("--version", std::string(kw_version()));

  std::string command, preset, config, mu, nu, kappa, level, artin = "arithmetic", degree, format = "json";
  bool coinvariants = false, invariants = false;
  app.add_option("command", command,
                 "validate | pi1 | bgmu | hn-irred | adlv-pi0 | sht-pi0 | adm | norm-map | zext | lift-mu")
      ->required();
  auto* g_preset = app.add_option("--preset", preset, "preset group, e.g. GL(2), PGL(3), U(3,unramified)");
  auto* g_config = app.add_option("--config", config, "YAML group description");
  g_preset->excludes(g_config);
  g_config->excludes(g_preset);
  app.add_option("--mu", mu, "cocharacter, comma separated integers");
  app.add_option("--nu", nu, "Newton point, comma separated a/b terms");
  app.add_option("--kappa", kappa, "Kottwitz class in pi_1(G)_Gamma coordinates");
  app.add_option("--level", level, "hyperspecial | infinite")->check(CLI::IsMember({"hyperspecial", "infinite"}));
  app.add_option("--artin", artin, "Artin normalization")->check(CLI::IsMember({"arithmetic", "geometric"}));
  app.add_option("--degree", degree, "norm map degree");
  app.add_flag("--coinvariants", coinvariants, "pi1: Galois coinvariants");
  app.add_flag("--invariants", invariants, "pi1: Galois invariants");
  app.add_option("--format", format, "json | pretty")->check(CLI::IsMember({"json", "pretty"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    nlohmann::json err{{"kind", "parse"}, {"message", e.what()}, {"violations", nlohmann::json::array()}};
    return emit_error(command, KW_ERR_PARSE, err.dump(), format == "pretty");
  }
  const bool pretty = format == "pretty";

  kw_group* group = nullptr;
  kw_status st;
  if (!config.empty()) {
    std::ifstream in(config);
    if (!in) {
      nlohmann::json err{
          {"kind", "parse"}, {"message", "cannot read " + config}, {"violations", nlohmann::json::array()}};
      return emit_error(command, KW_ERR_PARSE, err.dump(), pretty);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    st = kw_group_from_config(ss.str().c_str(), &group);
  } else if (!preset.empty()) {
    st = kw_group_from_preset(preset.c_str(), &group);
  } else {
    nlohmann::json err{
        {"kind", "parse"}, {"message", "one of --preset or --config is required"}, {"violations", nlohmann::json::array()}};
    return emit_error(command, KW_ERR_PARSE, err.dump(), pretty);
  }
  if (st != KW_OK) return emit_error(command, st, kw_last_error(), pretty);

  nlohmann::json options = nlohmann::json::object();
  if (!mu.empty() || app.count("--mu")) options["mu"] = mu;
  if (app.count("--nu")) options["nu"] = nu;
  if (app.count("--kappa")) options["kappa"] = kappa;
  if (app.count("--level")) options["level"] = level;
  if (app.count("--degree")) options["degree"] = degree;
  if (coinvariants) options["coinvariants"] = true;
  if (invariants) options["invariants"] = true;
  options["artin"] = artin;

  kw_report* report = nullptr;
  st = kw_run(group, command.c_str(), options.dump().c_str(), &report);
  char* text = kw_report_json(report, pretty ? 1 : 0);
  std::cout << text << "\n";
  if (st != KW_OK) std::cerr << "kottwitz: " << nlohmann::json::parse(kw_last_error())["message"].get<std::string>() << "\n";
  kw_string_free(text);
  kw_report_free(report);
  kw_group_free(group);
  return static_cast<int>(st);
}
