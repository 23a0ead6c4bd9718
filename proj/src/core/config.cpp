#include "kottwitz/config.hpp"

#include "kottwitz/errors.hpp"
#include "kottwitz/presets.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <sstream>

namespace kottwitz {

namespace {

Int parse_int(const std::string& s, const std::string& what) {
  Int v;
  if (s.empty() || v.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
    throw ParseError("bad integer '" + s + "' in " + what);
  return v;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  if (!text.empty() && text.back() == ',') out.push_back("");
  return out;
}

IntVec int_row(const YAML::Node& n, const std::string& what) {
  if (!n.IsSequence()) throw ParseError(what + " must be a list of integers");
  IntVec v;
  for (const auto& x : n) {
    if (!x.IsScalar()) throw ParseError(what + " must be a list of integers");
    v.push_back(parse_int(x.Scalar(), what));
  }
  return v;
}

std::vector<IntVec> int_rows(const YAML::Node& n, const std::string& what) {
  if (!n.IsSequence()) throw ParseError(what + " must be a list of integer lists");
  std::vector<IntVec> rows;
  std::size_t i = 0;
  for (const auto& r : n) rows.push_back(int_row(r, what + "[" + std::to_string(i++) + "]"));
  return rows;
}

}  // namespace

IntVec parse_int_vec(const std::string& text) {
  IntVec v;
  for (const auto& s : split(text)) v.push_back(parse_int(s, "'" + text + "'"));
  return v;
}

RatVec parse_rat_vec(const std::string& text) {
  RatVec v;
  for (const auto& s : split(text)) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      v.emplace_back(parse_int(s, "'" + text + "'"));
      continue;
    }
    Int num = parse_int(s.substr(0, slash), "'" + text + "'");
    Int den = parse_int(s.substr(slash + 1), "'" + text + "'");
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    Rat q(num, den);
    q.canonicalize();
    v.push_back(q);
  }
  return v;
}

RootDatum group_from_yaml(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ParseError(std::string("YAML: ") + e.what());
  }
  if (!root.IsMap()) throw ParseError("group config must be a mapping");
  for (const auto& kv : root) {
    const std::string k = kv.first.as<std::string>();
    if (k != "preset" && k != "label" && k != "rank" && k != "roots" && k != "coroots" && k != "simple" &&
        k != "frobenius")
      throw ParseError("unknown key '" + k + "' in group config");
  }
  const bool has_preset = bool(root["preset"]);
  const bool has_explicit = root["rank"] || root["roots"] || root["coroots"] || root["simple"] || root["frobenius"];
  if (has_preset == has_explicit)
    throw ParseError("group config needs exactly one of `preset` or explicit `rank`/`roots`/`coroots`/`simple`");
  std::string label;
  if (root["label"]) label = root["label"].as<std::string>();

  if (has_preset) {
    RootDatum rd = preset(root["preset"].as<std::string>());
    if (label.empty()) return rd;
    RootDatumSpec s = rd.spec();
    s.label = label;
    return RootDatum::create(std::move(s));
  }
  for (const char* k : {"rank", "roots", "coroots", "simple"})
    if (!root[k]) throw ParseError(std::string("group config is missing `") + k + "`");
  RootDatumSpec s;
  Int rank = parse_int(root["rank"].Scalar(), "rank");
  if (rank < 0 || !rank.fits_slong_p()) throw ParseError("rank must be a nonnegative integer");
  s.rank = rank.get_ui();
  s.roots = int_rows(root["roots"], "roots");
  s.coroots = int_rows(root["coroots"], "coroots");
  for (const auto& x : int_row(root["simple"], "simple")) {
    if (x < 0 || !x.fits_slong_p()) throw ParseError("simple indices must be nonnegative");
    s.simple.push_back(x.get_ui());
  }
  if (root["frobenius"]) {
    auto rows = int_rows(root["frobenius"], "frobenius");
    for (const auto& r : rows)
      if (r.size() != s.rank) throw ValidationError({"frobenius row length differs from rank"});
    if (rows.size() != s.rank) throw ValidationError({"frobenius must have rank rows"});
    s.frobenius = IntMatrix::from_rows(rows, s.rank);
  }
  s.label = label.empty() ? "custom" : label;
  return RootDatum::create(std::move(s));
}

RootDatum group_from_yaml_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return group_from_yaml(ss.str());
}

}  // namespace kottwitz
