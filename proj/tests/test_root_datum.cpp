#include "doctest.h"
#include "kottwitz/errors.hpp"
#include "kottwitz/presets.hpp"

#include <random>

using namespace kottwitz;

namespace {
Rat q(long a, long b) {
  Rat r(a, b);
  r.canonicalize();
  return r;
}
}  // namespace

TEST_CASE("presets validate") {
  for (const auto& name : preset_catalog()) {
    CAPTURE(name);
    CHECK_NOTHROW(preset(name));
  }
  CHECK_THROWS_AS(preset("E(8)"), ParseError);
  CHECK_THROWS_AS(preset("Sp(3)"), ParseError);
}

TEST_CASE("validation reports broken pairings") {
  RootDatumSpec s;
  s.rank = 2;
  s.roots = {IntVec{1, -1}, IntVec{-1, 1}};
  s.coroots = {IntVec{1, 0}, IntVec{-1, 0}};
  s.simple = {0};
  s.frobenius = IntMatrix::identity(2);
  auto bad = RootDatum::check(s);
  REQUIRE_FALSE(bad.empty());
  CHECK(bad.front().find("⟨α,α∨⟩ ≠ 2") != std::string::npos);
  CHECK_THROWS_AS(RootDatum::create(s), ValidationError);
}

TEST_CASE("frobenius must preserve the pinning") {
  RootDatum gl3 = preset("GL(3)");
  RootDatumSpec s = gl3.spec();
  // Swapping the first two coordinates moves e1-e2 to e2-e1.
  s.frobenius = IntMatrix::from_rows({IntVec{0, 1, 0}, IntVec{1, 0, 0}, IntVec{0, 0, 1}}, 3);
  CHECK_FALSE(RootDatum::check(s).empty());
  RootDatum u3 = preset("U(3,unramified)");
  CHECK(u3.frobenius_order() == 2);
  CHECK(u3.simple_permutation() == std::vector<std::size_t>{1, 0});
}

TEST_CASE("dominantize") {
  RootDatum gl2 = preset("GL(2)");
  auto [d, w] = gl2.dominantize(RatVec{0, 1});
  CHECK(d == RatVec{1, 0});
  CHECK(w == std::vector<std::size_t>{0});
  CHECK(gl2.dominantize(RatVec{1, 0}).second.empty());
  RootDatum gl3 = preset("GL(3)");
  auto r = gl3.dominantize(RatVec{0, 2, 1});
  CHECK(r.first == RatVec{2, 1, 0});

  std::mt19937 rng(3);
  for (const char* name : {"GL(3)", "Sp(4)", "SO(5)", "PGL(3)", "U(3,unramified)", "GL(2)xPGL(2)"}) {
    RootDatum rd = preset(name);
    for (int t = 0; t < 50; ++t) {
      RatVec x(rd.rank());
      for (auto& v : x) v = q(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3);
      auto [dom, word] = rd.dominantize(x);
      CHECK(rd.is_dominant(dom));
      CHECK(rd.dominantize(dom).first == dom);
      RatVec back = dom;
      for (auto it = word.rbegin(); it != word.rend(); ++it) back = rd.reflect(*it, back);
      CHECK(back == x);
    }
  }
}

TEST_CASE("galois average and reflex degree") {
  CHECK(preset("GL(2)").galois_average(IntVec{1, 0}) == RatVec{1, 0});
  RootDatum res = preset("ResE/Qp-Gm(2)");
  CHECK(res.galois_average(IntVec{1, 0}) == RatVec{q(1, 2), q(1, 2)});
  CHECK(res.reflex_degree(IntVec{1, 0}) == 2);
  CHECK(res.reflex_degree(IntVec{1, 1}) == 1);
  RootDatum u3 = preset("U(3,unramified)");
  RatVec avg = u3.galois_average(IntVec{1, 0, 0});
  CHECK(avg == RatVec{q(1, 2), 0, q(-1, 2)});
  CHECK(u3.apply_frobenius(avg) == avg);
  CHECK(u3.is_dominant(avg));
  CHECK_THROWS_AS(u3.galois_average(IntVec{0, 1, 0}), PreconditionError);
}

TEST_CASE("coroot expansion") {
  RootDatum gl2 = preset("GL(2)");
  auto e = gl2.coroot_expansion(RatVec{q(1, 2), q(-1, 2)});
  CHECK(e.coefficients == RatVec{q(1, 2)});
  CHECK(is_zero(e.residual));
  e = gl2.coroot_expansion(RatVec{1, 1});
  CHECK(e.coefficients == RatVec{0});
  CHECK(e.residual == RatVec{1, 1});
  e = preset("GL(3)").coroot_expansion(RatVec{1, 0, -1});
  CHECK(e.coefficients == RatVec{1, 1});

  RootDatum sp4 = preset("Sp(4)");
  std::mt19937 rng(9);
  for (int t = 0; t < 50; ++t) {
    RootDatum rd = preset(t % 2 ? "GL(2)xPGL(2)" : "U(3,unramified)");
    RatVec x(rd.rank());
    for (auto& v : x) v = q(static_cast<long>(rng() % 9) - 4, 1 + rng() % 4);
    auto ex = rd.coroot_expansion(x);
    RatVec back = ex.residual;
    for (std::size_t i = 0; i < rd.num_simple(); ++i)
      back = back + ex.coefficients[i] * to_rat(rd.simple_coroot(i));
    CHECK(back == x);
    for (const auto& a : rd.roots()) CHECK(rd.pairing(a, ex.residual) == 0);
  }
}

TEST_CASE("weyl orbits") {
  RootDatum gl2 = preset("GL(2)");
  CHECK(gl2.weyl_orbit(IntVec{1, 0}) == std::vector<IntVec>{IntVec{0, 1}, IntVec{1, 0}});
  CHECK(gl2.weyl_orbit(IntVec{1, 1}).size() == 1);
  RootDatum gl3 = preset("GL(3)");
  CHECK(gl3.weyl_orbit(IntVec{2, 1, 0}).size() == 6);
  CHECK(gl3.weyl_group_order() == 6);
  CHECK(preset("Sp(4)").weyl_group_order() == 8);
  CHECK(preset("GL(4)").weyl_group_order() == 24);
  CHECK(preset("GL(1)").weyl_group_order() == 1);
  for (const char* name : {"Sp(4)", "SO(5)", "GL(3)", "SO(4)"}) {
    RootDatum rd = preset(name);
    IntVec v = zero_vec(rd.rank());
    v[0] = 1;
    CHECK(rd.weyl_group_order() % rd.weyl_orbit(v).size() == 0);
  }
}

TEST_CASE("adjoint quotient and simply connected cover") {
  RootDatum gl3 = preset("GL(3)");
  auto ad = adjoint_quotient(gl3);
  CHECK(ad.datum.rank() == 2);
  CHECK(ad.map.rows() == 2);
  // phi sends coroots to coroots.
  for (std::size_t i = 0; i < gl3.num_roots(); ++i) CHECK(ad.map * gl3.coroot(i) == ad.datum.coroot(i));
  RootDatum u3 = preset("U(3,unramified)");
  auto adu = adjoint_quotient(u3);
  CHECK(adu.datum.frobenius_order() == 2);
  CHECK(adu.map * u3.frobenius() == adu.datum.frobenius() * adu.map);
  CHECK(simply_connected_cover(gl3).rank() == 2);
}

TEST_CASE("fingerprints are stable and distinguish data") {
  CHECK(preset("GL(2)").fingerprint() == preset("GL(2)").fingerprint());
  CHECK(preset("GL(2)").fingerprint() != preset("PGL(2)").fingerprint());
  CHECK(preset("GL(2)").fingerprint().size() == 16);
}
