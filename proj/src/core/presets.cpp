#include "kottwitz/presets.hpp"

#include "kottwitz/errors.hpp"

#include <regex>

namespace kottwitz {

namespace {

// Builds a datum from positive roots/coroots (negatives appended) and the
// vectors of the simple roots.
RootDatum from_positive(std::size_t rank, const std::vector<IntVec>& pos_roots,
                        const std::vector<IntVec>& pos_coroots, const std::vector<IntVec>& simple_roots,
                        IntMatrix frobenius, const std::string& label) {
  RootDatumSpec s;
  s.rank = rank;
  s.label = label;
  s.frobenius = frobenius.rows() ? std::move(frobenius) : IntMatrix::identity(rank);
  s.roots = pos_roots;
  s.coroots = pos_coroots;
  for (std::size_t i = 0; i < pos_roots.size(); ++i) {
    s.roots.push_back(-pos_roots[i]);
    s.coroots.push_back(-pos_coroots[i]);
  }
  for (const auto& a : simple_roots)
    for (std::size_t i = 0; i < s.roots.size(); ++i)
      if (s.roots[i] == a) s.simple.push_back(i);
  return RootDatum::create(std::move(s));
}

IntVec e(std::size_t n, std::size_t i) { return unit_vec(n, i); }

RootDatum gl(std::size_t n, IntMatrix frobenius, const std::string& label) {
  std::vector<IntVec> pos, simple;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pos.push_back(e(n, i) - e(n, j));
  for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(e(n, i) - e(n, i + 1));
  return from_positive(n, pos, pos, simple, std::move(frobenius), label);
}

RootDatum symplectic(std::size_t n, const std::string& label) {
  std::vector<IntVec> r, c, simple;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      r.push_back(e(n, i) - e(n, j));
      c.push_back(e(n, i) - e(n, j));
      r.push_back(e(n, i) + e(n, j));
      c.push_back(e(n, i) + e(n, j));
    }
  for (std::size_t i = 0; i < n; ++i) {
    r.push_back(Int(2) * e(n, i));
    c.push_back(e(n, i));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(e(n, i) - e(n, i + 1));
  simple.push_back(Int(2) * e(n, n - 1));
  return from_positive(n, r, c, simple, {}, label);
}

RootDatum odd_orthogonal(std::size_t n, const std::string& label) {
  std::vector<IntVec> r, c, simple;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      r.push_back(e(n, i) - e(n, j));
      c.push_back(e(n, i) - e(n, j));
      r.push_back(e(n, i) + e(n, j));
      c.push_back(e(n, i) + e(n, j));
    }
  for (std::size_t i = 0; i < n; ++i) {
    r.push_back(e(n, i));
    c.push_back(Int(2) * e(n, i));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(e(n, i) - e(n, i + 1));
  simple.push_back(e(n, n - 1));
  return from_positive(n, r, c, simple, {}, label);
}

RootDatum even_orthogonal(std::size_t n, const std::string& label) {
  std::vector<IntVec> r, simple;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      r.push_back(e(n, i) - e(n, j));
      r.push_back(e(n, i) + e(n, j));
    }
  for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(e(n, i) - e(n, i + 1));
  if (n >= 2) simple.push_back(e(n, n - 2) + e(n, n - 1));
  return from_positive(n, r, r, simple, {}, label);
}

RootDatum unitary(std::size_t n, const std::string& label) {
  // x |-> (-x_n, ..., -x_1)
  IntMatrix f(n, n);
  for (std::size_t i = 0; i < n; ++i) f(i, n - 1 - i) = -1;
  return gl(n, std::move(f), label);
}

RootDatum induced_torus(std::size_t s, const std::string& label) {
  RootDatumSpec spec;
  spec.rank = s;
  spec.label = label;
  spec.frobenius = IntMatrix(s, s);
  for (std::size_t k = 0; k < s; ++k) spec.frobenius((k + 1) % s, k) = 1;
  return RootDatum::create(std::move(spec));
}

std::size_t parse_size(const std::string& text, const std::string& name) {
  try {
    std::size_t pos = 0;
    unsigned long v = std::stoul(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad size in preset " + name);
  }
}

RootDatum single_preset(const std::string& name) {
  static const std::regex classical(R"(^(GL|SL|PGL|Sp|SO)\((\d+)\)$)");
  static const std::regex unitary_re(R"(^U\((\d+),\s*unramified\)$)");
  static const std::regex res_re(R"(^ResE/Qp-Gm\((\d+)\)$)");
  std::smatch m;
  if (std::regex_match(name, m, classical)) {
    const std::string kind = m[1];
    const std::size_t n = parse_size(m[2], name);
    if (kind == "GL") {
      if (n < 1) throw ParseError("GL(n) needs n >= 1");
      return gl(n, {}, name);
    }
    if (kind == "SL" || kind == "PGL") {
      if (n < 2) throw ParseError(kind + "(n) needs n >= 2");
      RootDatum g = gl(n, {}, "GL(" + std::to_string(n) + ")");
      RootDatum out = kind == "SL" ? simply_connected_cover(g) : adjoint_quotient(g).datum;
      RootDatumSpec s = out.spec();
      s.label = name;
      return RootDatum::create(std::move(s));
    }
    if (kind == "Sp") {
      if (n < 2 || n % 2) throw ParseError("Sp(m) needs an even m >= 2");
      return symplectic(n / 2, name);
    }
    if (n < 2) throw ParseError("SO(m) needs m >= 2");
    return n % 2 ? odd_orthogonal(n / 2, name) : even_orthogonal(n / 2, name);
  }
  if (std::regex_match(name, m, unitary_re)) {
    const std::size_t n = parse_size(m[1], name);
    if (n < 1) throw ParseError("U(n,unramified) needs n >= 1");
    return unitary(n, name);
  }
  if (std::regex_match(name, m, res_re)) {
    const std::size_t s = parse_size(m[1], name);
    if (s < 1) throw ParseError("ResE/Qp-Gm(s) needs s >= 1");
    return induced_torus(s, name);
  }
  throw ParseError("unknown preset '" + name + "'");
}

}  // namespace

RootDatum preset(const std::string& name) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : name) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == 'x' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  RootDatum out = single_preset(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) out = product(out, single_preset(parts[i]));
  if (parts.size() > 1) {
    RootDatumSpec s = out.spec();
    s.label = name;
    out = RootDatum::create(std::move(s));
  }
  return out;
}

std::vector<std::string> preset_catalog() {
  return {"GL(1)",  "GL(2)",          "GL(3)",          "GL(4)",           "SL(2)",
          "SL(3)",  "PGL(2)",         "PGL(3)",         "Sp(4)",           "SO(3)",
          "SO(5)",  "SO(4)",          "U(2,unramified)", "U(3,unramified)", "ResE/Qp-Gm(2)",
          "ResE/Qp-Gm(3)", "GL(2)xGL(2)", "GL(2)xPGL(2)"};
}

AdjointQuotient adjoint_quotient(const RootDatum& g) {
  const std::size_t k = g.num_simple();
  IntMatrix phi(k, g.rank());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < g.rank(); ++c) phi(i, c) = g.simple_root(i)[c];
  RootDatumSpec s;
  s.rank = k;
  s.label = g.label() + "/center";
  for (std::size_t r = 0; r < g.num_roots(); ++r) {
    s.roots.push_back(g.root_coefficients(r));
    s.coroots.push_back(phi * g.coroot(r));
  }
  s.simple = g.simple_indices();
  s.frobenius = IntMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) s.frobenius(g.simple_permutation()[i], i) = 1;
  return {RootDatum::create(std::move(s)), std::move(phi)};
}

RootDatum simply_connected_cover(const RootDatum& g) {
  const std::size_t k = g.num_simple();
  std::vector<IntVec> simple_coroots;
  for (std::size_t i = 0; i < k; ++i) simple_coroots.push_back(g.simple_coroot(i));
  IntMatrix basis = IntMatrix::from_columns(g.rank(), simple_coroots);
  RootDatumSpec s;
  s.rank = k;
  s.label = g.label() + "/sc";
  for (std::size_t r = 0; r < g.num_roots(); ++r) {
    IntVec pairings(k);
    for (std::size_t i = 0; i < k; ++i) pairings[i] = dot(g.root(r), g.simple_coroot(i));
    s.roots.push_back(pairings);
    auto c = solve_integer(basis, g.coroot(r));
    if (!c) throw std::logic_error("coroot outside the simple coroot lattice");
    s.coroots.push_back(*c);
  }
  s.simple = g.simple_indices();
  s.frobenius = IntMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) s.frobenius(g.simple_permutation()[i], i) = 1;
  return RootDatum::create(std::move(s));
}

}  // namespace kottwitz
