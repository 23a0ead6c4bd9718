#include "doctest.h"
#include "kottwitz/errors.hpp"
#include "kottwitz/presets.hpp"
#include "kottwitz/shtuka_pi0.hpp"

using namespace kottwitz;

namespace {

// Lattice in pi_1 coordinates spanned by the generators and the torsion relations.
IntMatrix span_with_relations(const LatticeQuotient& q, const IntMatrix& gens) {
  std::vector<IntVec> cols = gens.columns();
  for (std::size_t i = 0; i < q.num_coords(); ++i)
    if (q.invariant_factors()[i] != 0) cols.push_back(q.invariant_factors()[i] * unit_vec(q.num_coords(), i));
  return IntMatrix::from_columns(q.num_coords(), cols);
}

bool same_span(const IntMatrix& a, const IntMatrix& b) {
  for (const auto& c : a.columns())
    if (!solve_integer(b, c)) return false;
  for (const auto& c : b.columns())
    if (!solve_integer(a, c)) return false;
  return true;
}

}  // namespace

TEST_CASE("G° presentation modes") {
  auto gl2 = g_circle_presentation(preset("GL(2)"));
  CHECK(gl2.mode == GCirclePresentation::Mode::direct);
  CHECK(gl2.cocenter.rank() == 1);
  auto sp4 = g_circle_presentation(preset("Sp(4)"));
  CHECK(sp4.mode == GCirclePresentation::Mode::direct);
  CHECK(sp4.cocenter.rank() == 0);
  CHECK(sp4.shadow.is_trivial());
  auto pgl2 = g_circle_presentation(preset("PGL(2)"));
  CHECK(pgl2.mode == GCirclePresentation::Mode::via_z_extension);
  CHECK(pgl2.z.kernel.cols() == 1);
  CHECK(pgl2.shadow.invariant_factors() == std::vector<Int>{2});
}

TEST_CASE("G° shadow matches pi_1 invariants") {
  std::vector<RootDatum> groups;
  for (const auto& name : preset_catalog()) groups.push_back(preset(name));
  groups.push_back(adjoint_quotient(preset("U(3,unramified)")).datum);
  for (const auto& g : groups) {
    CAPTURE(g.label());
    auto gc = g_circle_presentation(g);
    Pi1 p(g);
    CHECK(normalize_invariants(gc.shadow.invariant_factors()) ==
          normalize_invariants(p.invariants().structure.invariant_factors()));
    CHECK(same_span(span_with_relations(p.group(), gc.shadow_to_pi1),
                    span_with_relations(p.group(), p.invariants().generators)));
  }
}

TEST_CASE("Weil descriptor examples") {
  auto gl2 = g_circle_presentation(preset("GL(2)"));
  auto w = weil_descriptor(gl2, IntVec{1, 0});
  CHECK(w.reflex_degree == 1);
  CHECK(w.frobenius_image(Pi1(preset("GL(2)"))) == IntVec{1});
  RootDatum r2 = preset("ResE/Qp-Gm(2)");
  auto wr = weil_descriptor(g_circle_presentation(r2), IntVec{1, 0});
  CHECK(wr.reflex_degree == 2);
  CHECK(wr.norm_lattice_map.is_identity());
  auto ws = weil_descriptor(g_circle_presentation(preset("Sp(4)")), IntVec{1, 0});
  CHECK(ws.frobenius_image(Pi1(preset("Sp(4)"))).empty());
}

TEST_CASE("Frobenius translation examples") {
  KottwitzSet gl2(preset("GL(2)"));
  CHECK(frobenius_translation_class(gl2, gl2.basic_element(IntVec{1}), IntVec{1, 0}) == IntVec{1});
  CHECK(frobenius_translation_class(gl2, gl2.basic_element(IntVec{1}), IntVec{1, 0}, ArtinNormalization::geometric) ==
        IntVec{-1});
  RootDatum r2 = preset("ResE/Qp-Gm(2)");
  CHECK(torus_translation_direct(r2, IntVec{1, 0}) == IntVec{1, 1});
  CHECK(torus_translation_via_norm(r2, IntVec{1, 0}) == IntVec{1, 1});
  KottwitzSet sl2(preset("SL(2)"));
  CHECK(frobenius_translation_class(sl2, sl2.basic_element(IntVec{}), IntVec{1}).empty());
}

TEST_CASE("Frobenius translation is additive and fixed") {
  RootDatum u3 = preset("U(3,unramified)");
  KottwitzSet ks(u3);
  Pi1 p(u3);
  auto t = [&](const IntVec& mu) {
    auto b = ks.basic_element(ks.kappa(mu));
    return frobenius_translation_class(ks, b, mu);
  };
  IntVec a{1, 0, 0}, b{1, 1, 0};
  IntVec sum = p.group().reduce(t(a) + t(b));
  CHECK(sum == t(a + b));
  CHECK(p.group().reduce(p.action() * t(a)) == t(a));
}

TEST_CASE("J_b descriptor") {
  RootDatum gl2 = preset("GL(2)");
  auto gc = g_circle_presentation(gl2);
  KottwitzSet ks(gl2);
  auto basic = ks.basic_element(IntVec{1});
  auto d = jb_descriptor(gc, basic, IntVec{1, 0});
  CHECK(d.levi.datum.num_roots() == 2);
  CHECK(d.det_shadow == IntMatrix::from_rows({IntVec{1, 1}}, 2));
  CHECK(d.composite.is_identity());
  auto ord = ks.ordinary_element(IntVec{1, 0});
  auto d2 = jb_descriptor(gc, ord, IntVec{1, 0});
  CHECK(d2.levi.datum.is_torus());
  CHECK(d2.composite == IntMatrix::from_rows({IntVec{1, 1}}, 2));
  auto sp = preset("Sp(4)");
  auto dsp = jb_descriptor(g_circle_presentation(sp), KottwitzSet(sp).basic_element(IntVec{}), IntVec{1, 0});
  CHECK(dsp.composite.rows() == 0);
}

TEST_CASE("pi0 at hyperspecial level equals adlv pi0") {
  struct Case {
    const char* name;
    IntVec mu;
  };
  for (const Case& c : {Case{"GL(2)", {1, 0}}, Case{"GL(3)", {2, 1, 0}}, Case{"SL(2)", {1}}, Case{"PGL(2)", {1}},
                        Case{"PGL(3)", {1, 0}}, Case{"PGL(3)", {2, 1}}, Case{"SO(5)", {1, 0}},
                        Case{"U(3,unramified)", {1, 0, 0}}, Case{"GL(2)xPGL(2)", {1, 0, 1}},
                        Case{"ResE/Qp-Gm(2)", {1, 0}}}) {
    CAPTURE(std::string(c.name));
    RootDatum g = preset(c.name);
    AdlvPi0 adlv(g);
    for (const auto& b : adlv.kottwitz_set().enumerate(c.mu)) {
      if (!adlv.kottwitz_set().is_hn_irreducible(b, c.mu)) continue;
      auto s = pi0_sht(g, b, c.mu, ShtLevel::hyperspecial);
      auto a = adlv.compute(b, c.mu);
      REQUIRE(s.torsor.has_value());
      CHECK(normalize_invariants(s.torsor->invariant_factors) == normalize_invariants(a.invariant_factors));
      CHECK(s.torsor->coset_label == a.coset_label);
      CHECK(same_span(span_with_relations(adlv.pi1().group(), s.torsor->generators),
                      span_with_relations(adlv.pi1().group(), a.generators)));
    }
  }
}

TEST_CASE("pi0 at infinite level") {
  RootDatum sl2 = preset("SL(2)");
  auto s = pi0_sht(sl2, KottwitzSet(sl2).basic_element(IntVec{}), IntVec{1}, ShtLevel::infinite);
  CHECK_FALSE(s.torsor.has_value());
  CHECK(s.gcircle.shadow.is_trivial());
  RootDatum gl2 = preset("GL(2)");
  SigmaConjClass ord{RatVec{1, 0}, IntVec{1}};
  CHECK_THROWS_AS(pi0_sht(gl2, ord, IntVec{1, 0}, ShtLevel::infinite), PreconditionError);
}
