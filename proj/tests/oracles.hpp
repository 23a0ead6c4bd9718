#pragma once

// Independent reference computations used by the unit and acceptance tests.
// None of these go through the Smith-form code paths of the library.

#include "kottwitz/lattice.hpp"
#include "kottwitz/root_datum.hpp"

#include <optional>
#include <vector>

namespace oracle {

using kottwitz::Int;
using kottwitz::IntMatrix;
using kottwitz::IntVec;
using kottwitz::Rat;
using kottwitz::RatVec;

/// gcd of all k x k minors.
Int determinantal_divisor(const IntMatrix& a, std::size_t k);
/// Invariant factors of Z^n / span(columns of rel) from determinantal
/// divisors: torsion factors > 1 ascending, then one 0 per free generator.
std::vector<Int> quotient_invariants(const IntMatrix& rel);

/// Order of pi_1(G)^Gamma for finite pi_1, by enumerating classes of a box.
Int finite_pi1_invariants_order(const kottwitz::RootDatum& rd);
/// Rank of pi_1(G)^Gamma (= n - rank[sigma - 1 | coroots]).
std::size_t pi1_invariants_rank(const kottwitz::RootDatum& rd);

/// Newton points of B(GL_n, mu) by enumerating slope polygons.
std::vector<RatVec> newton_gln(const IntVec& mu);

}  // namespace oracle

namespace oracle {

/// t^lambda w as a pair, acting by v |-> lambda + w v.
struct AffineElt {
  IntVec lambda;
  IntMatrix w;
  bool operator==(const AffineElt& o) const { return lambda == o.lambda && w == o.w; }
};
AffineElt affine_mul(const AffineElt& x, const AffineElt& y);

/// Number of affine root hyperplanes separating a generic point of the
/// dominant base alcove from its image under x.
Int alcove_length(const kottwitz::RootDatum& rd, const AffineElt& x);
/// y = word[0] ... word[k-1] rest with rest of length zero, every letter a
/// length-one affine reflection and k = length(y).
std::pair<std::vector<AffineElt>, AffineElt> reduced_word(const kottwitz::RootDatum& rd, const AffineElt& y);
/// x <= y by the subword property of a reduced word of y in the length-one
/// affine reflections.
bool bruhat_subword(const kottwitz::RootDatum& rd, const AffineElt& x, const AffineElt& y);

}  // namespace oracle
