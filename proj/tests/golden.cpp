#include "golden.hpp"

#include "kottwitz.h"
#include "kottwitz/presets.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace golden {

namespace {

std::string vec_text(const kottwitz::IntVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s;
}

}  // namespace

std::vector<Invocation> invocations_for(const std::string& preset) {
  kottwitz::RootDatum rd = kottwitz::preset(preset);
  kottwitz::IntVec mu = kottwitz::zero_vec(rd.rank());
  if (!mu.empty()) mu[0] = 1;
  mu = rd.dominantize(mu);
  nlohmann::json m{{"mu", vec_text(mu)}};
  std::vector<Invocation> out{{"validate", "{}"},
                              {"pi1", "{}"},
                              {"pi1", R"({"coinvariants":true})"},
                              {"pi1", R"({"invariants":true})"},
                              {"zext", "{}"},
                              {"bgmu", m.dump()},
                              {"adlv-pi0", m.dump()},
                              {"sht-pi0", m.dump()},
                              {"norm-map", m.dump()},
                              {"lift-mu", m.dump()},
                              {"adm", m.dump()}};
  nlohmann::json inf = m;
  inf["level"] = "infinite";
  inf["artin"] = "geometric";
  out.push_back({"sht-pi0", inf.dump()});
  return out;
}

std::string render(const std::string& preset) {
  nlohmann::json doc = nlohmann::json::object();
  kw_group* g = nullptr;
  if (kw_group_from_preset(preset.c_str(), &g) != KW_OK) return "group construction failed: " + preset;
  for (const auto& inv : invocations_for(preset)) {
    kw_report* r = nullptr;
    kw_run(g, inv.command.c_str(), inv.options_json.c_str(), &r);
    char* text = kw_report_json(r, 0);
    doc[inv.command + " " + inv.options_json] = nlohmann::json::parse(text);
    kw_string_free(text);
    kw_report_free(r);
  }
  kw_group_free(g);
  return doc.dump(2) + "\n";
}

std::string file_name(const std::string& preset) {
  std::string s;
  for (char c : preset) s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return s + ".json";
}

Outcome check_all(const std::string& dir, bool update) {
  Outcome o;
  for (const auto& p : kottwitz::preset_catalog()) {
    const std::string path = dir + "/" + file_name(p);
    const std::string now = render(p);
    if (update) {
      std::ofstream(path) << now;
    } else {
      std::ifstream in(path);
      std::stringstream ss;
      ss << in.rdbuf();
      if (!in || ss.str() != now) o.mismatches.push_back(p);
    }
    ++o.checked;
  }
  return o;
}

}  // namespace golden
