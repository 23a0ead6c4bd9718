#include "doctest.h"
#include "kottwitz/pi1.hpp"
#include "kottwitz/presets.hpp"
#include "oracles.hpp"

using namespace kottwitz;

TEST_CASE("pi1 of standard presets") {
  CHECK(Pi1(preset("GL(2)")).group().invariant_factors() == std::vector<Int>{0});
  CHECK(Pi1(preset("SL(2)")).group().is_trivial());
  CHECK(Pi1(preset("PGL(2)")).group().invariant_factors() == std::vector<Int>{2});
  CHECK(Pi1(preset("PGL(3)")).group().invariant_factors() == std::vector<Int>{3});
  CHECK(Pi1(preset("Sp(4)")).group().is_trivial());
  CHECK(Pi1(preset("SO(5)")).group().invariant_factors() == std::vector<Int>{2});
  CHECK(Pi1(preset("SO(4)")).group().invariant_factors() == std::vector<Int>{2});
}

TEST_CASE("kottwitz class") {
  Pi1 p(preset("GL(2)"));
  CHECK(p.kappa(IntVec{2, 1}) == IntVec{3});
  CHECK(Pi1(preset("SL(2)")).kappa(IntVec{5}).empty());
  Pi1 r(preset("ResE/Qp-Gm(2)"));
  CHECK(r.coinvariants().invariant_factors() == std::vector<Int>{0});
  CHECK(r.kappa_coinvariant(IntVec{1, 0}) == IntVec{1});
  CHECK(r.kappa_coinvariant(IntVec{0, 1}) == IntVec{1});
  CHECK(r.to_coinvariants(r.kappa(IntVec{3, -1})) == IntVec{2});
}

TEST_CASE("kottwitz class is additive and Weyl invariant") {
  for (const char* name : {"GL(3)", "PGL(3)", "U(3,unramified)", "SO(5)", "GL(2)xPGL(2)"}) {
    RootDatum rd = preset(name);
    Pi1 p(rd);
    IntVec a = zero_vec(rd.rank()), b = zero_vec(rd.rank());
    for (std::size_t i = 0; i < rd.rank(); ++i) {
      a[i] = static_cast<long>(i) + 1;
      b[i] = 2 - static_cast<long>(i * i);
    }
    CHECK(p.kappa(a + b) == p.group().reduce(p.kappa(a) + p.kappa(b)));
    for (const auto& w : rd.weyl_orbit(a)) CHECK(p.kappa(w) == p.kappa(a));
    // Coinvariant projection kills sigma - 1.
    CHECK(p.kappa_coinvariant(rd.frobenius() * a) == p.kappa_coinvariant(a));
  }
}

TEST_CASE("invariants") {
  Pi1 r(preset("ResE/Qp-Gm(2)"));
  CHECK(r.invariants().structure.invariant_factors() == std::vector<Int>{0});
  IntVec g = r.invariants().embed(IntVec{1});
  CHECK(r.group().reduce(r.action() * g) == g);
  CHECK(r.group().lift(g) == IntVec{1, 1});
  Pi1 gl(preset("GL(2)"));
  CHECK(gl.invariants().structure.invariant_factors() == std::vector<Int>{0});
  Pi1 pg(preset("PGL(2)"));
  CHECK(pg.invariants().structure.invariant_factors() == std::vector<Int>{2});
}

TEST_CASE("Z/3 with inversion has trivial invariants") {
  // PGL(3) with the outer automorphism is the adjoint unitary group.
  RootDatum pu3 = adjoint_quotient(preset("U(3,unramified)")).datum;
  Pi1 p(pu3);
  CHECK(p.group().invariant_factors() == std::vector<Int>{3});
  CHECK(p.invariants().structure.is_trivial());
  CHECK(oracle::finite_pi1_invariants_order(pu3) == 1);
  // And the coinvariants are trivial too: Z/3 / 2(Z/3) = 0.
  CHECK(p.coinvariants().is_trivial());
}

TEST_CASE("pi1 agrees with determinantal-divisor oracle") {
  for (const auto& name : preset_catalog()) {
    CAPTURE(name);
    RootDatum rd = preset(name);
    Pi1 p(rd);
    IntMatrix c = IntMatrix::from_columns(rd.rank(), rd.coroots());
    CHECK(p.group().invariant_factors() == oracle::quotient_invariants(c));
    IntMatrix sm1 = rd.frobenius() - IntMatrix::identity(rd.rank());
    CHECK(p.coinvariants().invariant_factors() == oracle::quotient_invariants(c.hconcat(sm1)));
    CHECK(p.invariants().structure.free_rank() == oracle::pi1_invariants_rank(rd));
    if (p.group().is_finite())
      CHECK(p.invariants().structure.order() == oracle::finite_pi1_invariants_order(rd));
  }
}
