#include "doctest.h"
#include "kottwitz/errors.hpp"
#include "kottwitz/kottwitz_set.hpp"
#include "kottwitz/presets.hpp"
#include "oracles.hpp"

#include <set>

using namespace kottwitz;

namespace {
Rat q(long a, long b) {
  Rat r(a, b);
  r.canonicalize();
  return r;
}

std::vector<RatVec> newton_points(const std::vector<SigmaConjClass>& cs) {
  std::vector<RatVec> out;
  for (const auto& c : cs) out.push_back(c.newton);
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

TEST_CASE("basic classes") {
  KottwitzSet gl2(preset("GL(2)"));
  CHECK(gl2.is_basic({RatVec{q(1, 2), q(1, 2)}, IntVec{1}}));
  CHECK_FALSE(gl2.is_basic({RatVec{1, 0}, IntVec{1}}));
  CHECK_FALSE(KottwitzSet(preset("GL(3)")).is_basic({RatVec{1, 1, 0}, IntVec{2}}));
  CHECK(gl2.basic_element(IntVec{1}).newton == RatVec{q(1, 2), q(1, 2)});
  CHECK(KottwitzSet(preset("SL(2)")).basic_element(IntVec{}).newton == RatVec{0});
  CHECK(KottwitzSet(preset("ResE/Qp-Gm(2)")).basic_element(IntVec{1}).newton == RatVec{q(1, 2), q(1, 2)});
}

TEST_CASE("membership and HN-irreducibility") {
  KottwitzSet gl2(preset("GL(2)"));
  IntVec mu{1, 0};
  SigmaConjClass basic{RatVec{q(1, 2), q(1, 2)}, IntVec{1}};
  SigmaConjClass ord{RatVec{1, 0}, IntVec{1}};
  CHECK(gl2.in_b_g_mu(basic, mu));
  CHECK(gl2.in_b_g_mu(ord, mu));
  CHECK_FALSE(gl2.in_b_g_mu({RatVec{1, 1}, IntVec{2}}, mu));
  CHECK(gl2.is_hn_irreducible(basic, mu));
  CHECK_FALSE(gl2.is_hn_irreducible(ord, mu));
  CHECK_THROWS_AS(gl2.is_hn_irreducible({RatVec{1, 1}, IntVec{2}}, mu), PreconditionError);
  KottwitzSet gl1(preset("GL(1)"));
  CHECK(gl1.is_hn_irreducible({RatVec{3}, IntVec{3}}, IntVec{3}));
}

TEST_CASE("enumeration examples") {
  KottwitzSet gl2(preset("GL(2)"));
  auto a = gl2.enumerate(IntVec{1, 0});
  REQUIRE(a.size() == 2);
  CHECK(a[0] == SigmaConjClass{RatVec{q(1, 2), q(1, 2)}, IntVec{1}});
  CHECK(a[1] == SigmaConjClass{RatVec{1, 0}, IntVec{1}});
  auto b = gl2.enumerate(IntVec{2, 0});
  REQUIRE(b.size() == 2);
  CHECK(b[0].newton == RatVec{1, 1});
  CHECK(b[1].newton == RatVec{2, 0});
  auto c = KottwitzSet(preset("GL(1)")).enumerate(IntVec{3});
  REQUIRE(c.size() == 1);
  CHECK(c[0] == SigmaConjClass{RatVec{3}, IntVec{3}});
  CHECK_THROWS_AS(gl2.enumerate(IntVec{0, 1}), PreconditionError);
}

TEST_CASE("GL(n) oracle") {
  RootDatum gl2 = preset("GL(2)");
  CHECK(newton_oracle_gln(gl2, IntVec{1, 0}) == std::vector<RatVec>{RatVec{q(1, 2), q(1, 2)}, RatVec{1, 0}});
  CHECK(newton_oracle_gln(gl2, IntVec{2, 0}) == std::vector<RatVec>{RatVec{1, 1}, RatVec{2, 0}});
  CHECK(newton_oracle_gln(preset("GL(1)"), IntVec{5}) == std::vector<RatVec>{RatVec{5}});
  CHECK_THROWS_AS(newton_oracle_gln(preset("SL(2)"), IntVec{1}), PreconditionError);
  // Library oracle, test oracle and enumeration agree.
  for (const IntVec& mu : {IntVec{3, 1, 0, 0}, IntVec{2, 2, 1, 0}, IntVec{4, 0, 0}, IntVec{3, 3, 0, -1}}) {
    RootDatum rd = preset("GL(" + std::to_string(mu.size()) + ")");
    auto lib = newton_oracle_gln(rd, mu);
    CHECK(lib == oracle::newton_gln(mu));
    CHECK(newton_points(KottwitzSet(rd).enumerate(mu)) == lib);
  }
}

TEST_CASE("known B(G, mu) outside GL(n)") {
  // Unramified U(3), signature (2,1): basic and mu-ordinary only.
  KottwitzSet u3(preset("U(3,unramified)"));
  auto cl = u3.enumerate(IntVec{1, 0, 0});
  REQUIRE(cl.size() == 2);
  CHECK(cl[0].newton == RatVec{0, 0, 0});
  CHECK(cl[1].newton == RatVec{q(1, 2), 0, q(-1, 2)});
  // GL(2) x GL(2): B is the product of the factors' sets.
  KottwitzSet prod(preset("GL(2)xGL(2)"));
  CHECK(prod.enumerate(IntVec{1, 0, 2, 0}).size() == 4);
  // Sp(4), mu = (1,1): inside GL(4) these are the symmetric polygons below
  // (1,1,-1,-1), a chain of four.
  KottwitzSet sp4(preset("Sp(4)"));
  auto s = sp4.enumerate(IntVec{1, 1});
  REQUIRE(s.size() == 4);
  CHECK(s[0].newton == RatVec{0, 0});
  CHECK(s[1].newton == RatVec{q(1, 2), q(1, 2)});
  CHECK(s[2].newton == RatVec{1, 0});
  CHECK(s[3].newton == RatVec{1, 1});
}

TEST_CASE("enumeration invariants") {
  for (const char* name : {"GL(3)", "PGL(3)", "U(3,unramified)", "Sp(4)", "SO(5)", "GL(2)xPGL(2)"}) {
    RootDatum rd = preset(name);
    KottwitzSet ks(rd);
    std::vector<IntVec> mus;
    IntVec v = zero_vec(rd.rank());
    v[0] = 2;
    mus.push_back(rd.dominantize(v));
    v[rd.rank() - 1] = -1;
    mus.push_back(rd.dominantize(v));
    for (const auto& mu : mus) {
      CAPTURE(name);
      CAPTURE(to_string(mu));
      auto cls = ks.enumerate(mu);
      REQUIRE_FALSE(cls.empty());
      auto basic = ks.basic_element(ks.kappa(mu));
      CHECK(cls.front() == basic);
      CHECK(std::find(cls.begin(), cls.end(), ks.ordinary_element(mu)) != cls.end());
      std::set<std::pair<RatVec, IntVec>> uniq;
      for (const auto& c : cls) {
        CHECK(ks.in_b_g_mu(c, mu));
        CHECK_NOTHROW(ks.validate(c));
        CHECK(rd.dominance_leq(basic.newton, c.newton));
        CHECK(ks.is_basic(c) == (ks.levi_of(c.newton).root_subset.size() == rd.num_roots()));
        uniq.insert({c.newton, c.kappa});
      }
      CHECK(uniq.size() == cls.size());
    }
  }
}

TEST_CASE("levi of a Newton point") {
  KottwitzSet gl3(preset("GL(3)"));
  auto l = gl3.levi_of(RatVec{1, 0, 0});
  CHECK(l.root_subset.size() == 2);
  CHECK(l.simple_subset == std::vector<std::size_t>{1});
  KottwitzSet gl2(preset("GL(2)"));
  CHECK(gl2.levi_of(RatVec{q(1, 2), q(1, 2)}).root_subset.size() == 2);
  CHECK(gl2.levi_of(RatVec{1, 0}).root_subset.empty());
}

TEST_CASE("certification rejects non-Newton points") {
  KottwitzSet gl2(preset("GL(2)"));
  CHECK_FALSE(gl2.certify_newton_point(RatVec{q(3, 2), q(1, 2)}, IntVec{2}));
  CHECK(gl2.certify_newton_point(RatVec{1, 1}, IntVec{2}));
  CHECK_FALSE(gl2.certify_newton_point(RatVec{1, 1}, IntVec{3}));
}
