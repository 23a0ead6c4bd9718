#pragma once

// Group descriptions in YAML and the textual vector syntax of the CLI.

#include "kottwitz/root_datum.hpp"

#include <string>

namespace kottwitz {

/// Either `preset: <name>` or explicit `rank`, `roots`, `coroots`, `simple`
/// and optional `frobenius` (rows). `label` is optional in both forms.
/// Throws ParseError on malformed text and ValidationError on a bad datum.
RootDatum group_from_yaml(const std::string& text);
RootDatum group_from_yaml_file(const std::string& path);

/// "1,0,-2"; the empty string is the empty vector.
IntVec parse_int_vec(const std::string& text);
/// "1/2,1/2,0".
RatVec parse_rat_vec(const std::string& text);

}  // namespace kottwitz
