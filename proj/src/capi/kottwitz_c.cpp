#include "kottwitz.h"

#include "commands.hpp"
#include "kottwitz/config.hpp"
#include "kottwitz/errors.hpp"
#include "kottwitz/presets.hpp"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>

using nlohmann::json;

struct kw_group {
  kottwitz::RootDatum datum;
};

struct kw_report {
  kw_status status;
  json body;
};

namespace {

thread_local std::string last_error = "{}";

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

struct Failure {
  kw_status status;
  json diagnostic;
};

// Runs f, mapping library exceptions to a status and a diagnostic.
template <class F>
Failure guarded(const std::string& command, F&& f) {
  try {
    f();
    return {KW_OK, json()};
  } catch (const kottwitz::ValidationError& e) {
    return {KW_ERR_VALIDATION, kottwitz::app::make_error(command, "validation", e.what(), e.violations())};
  } catch (const kottwitz::PreconditionError& e) {
    return {KW_ERR_PRECONDITION, kottwitz::app::make_error(command, "precondition", e.what())};
  } catch (const kottwitz::ParseError& e) {
    return {KW_ERR_PARSE, kottwitz::app::make_error(command, "parse", e.what())};
  } catch (const json::exception& e) {
    return {KW_ERR_PARSE, kottwitz::app::make_error(command, "parse", e.what())};
  } catch (const std::exception& e) {
    return {KW_ERR_INTERNAL, kottwitz::app::make_error(command, "internal", e.what())};
  }
}

kw_status record(const Failure& f) {
  if (f.status != KW_OK) last_error = f.diagnostic["error"].dump();
  return f.status;
}

kw_status make_group(const std::string& what, kw_group** out, const std::function<kottwitz::RootDatum()>& build) {
  if (!out) return KW_ERR_INTERNAL;
  *out = nullptr;
  return record(guarded(what, [&] { *out = new kw_group{build()}; }));
}

}  // namespace

extern "C" {

const char* kw_version(void) { return kottwitz::app::kToolVersion; }

kw_status kw_group_from_preset(const char* name, kw_group** out) {
  std::string n = name ? name : "";
  return make_group("preset", out, [&] { return kottwitz::preset(n); });
}

kw_status kw_group_from_config(const char* yaml_text, kw_group** out) {
  std::string t = yaml_text ? yaml_text : "";
  return make_group("config", out, [&] { return kottwitz::group_from_yaml(t); });
}

void kw_group_free(kw_group* g) { delete g; }

char* kw_group_label(const kw_group* g) { return g ? dup(g->datum.label()) : nullptr; }

kw_status kw_run(const kw_group* g, const char* command, const char* options_json, kw_report** out) {
  if (!out) return KW_ERR_INTERNAL;
  *out = nullptr;
  const std::string cmd = command ? command : "";
  auto* r = new kw_report{KW_OK, json()};
  Failure f = guarded(cmd, [&] {
    if (!g) throw std::invalid_argument("null group handle");
    json options = options_json && *options_json ? json::parse(options_json) : json::object();
    json result = kottwitz::app::run_command(g->datum, cmd, options);
    r->body = kottwitz::app::make_report(g->datum, cmd, options, std::move(result));
  });
  if (f.status != KW_OK) {
    r->body = std::move(f.diagnostic);
    last_error = r->body["error"].dump();
  }
  r->status = f.status;
  *out = r;
  return f.status;
}

kw_status kw_report_status(const kw_report* r) { return r ? r->status : KW_ERR_INTERNAL; }

char* kw_report_json(const kw_report* r, int pretty) {
  if (!r) return nullptr;
  return dup(pretty ? r->body.dump(2) : r->body.dump());
}

void kw_report_free(kw_report* r) { delete r; }

const char* kw_last_error(void) { return last_error.c_str(); }

void kw_string_free(char* s) { std::free(s); }

}  // extern "C"
