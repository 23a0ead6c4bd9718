#pragma once

// Command dispatch behind the C API. Reports are nlohmann::json objects whose
// keys serialize in sorted order.

#include "kottwitz/root_datum.hpp"

#include <json.hpp>

#include <string>

namespace kottwitz::app {

inline constexpr const char* kToolVersion = "0.1.0";

/// The `result` member for one command. Throws the library's error types.
nlohmann::json run_command(const RootDatum& g, const std::string& command, const nlohmann::json& options);

/// Full report: command echo, group block, inputs, normalization, result.
nlohmann::json make_report(const RootDatum& g, const std::string& command, const nlohmann::json& options,
                           nlohmann::json result);
/// Structured diagnostic for a failure. `kind` is one of validation,
/// precondition, parse, internal.
nlohmann::json make_error(const std::string& command, const std::string& kind, const std::string& message,
                          const std::vector<std::string>& violations = {});

}  // namespace kottwitz::app
