#pragma once

// pi_1(G) = X_*(T) / coroot lattice with its Frobenius action, the
// coinvariants pi_1(G)_Gamma and the invariants pi_1(G)^Gamma.

#include "kottwitz/lattice.hpp"
#include "kottwitz/root_datum.hpp"

namespace kottwitz {

class Pi1 {
 public:
  Pi1() = default;
  explicit Pi1(const RootDatum& rd);

  const LatticeQuotient& group() const { return group_; }
  /// Frobenius on pi_1 coordinates.
  const IntMatrix& action() const { return action_; }
  /// pi_1(G)_Gamma, presented directly as a quotient of X_*(T).
  const LatticeQuotient& coinvariants() const { return coinv_; }
  /// pi_1 coordinates -> pi_1_Gamma coordinates (before reduction).
  const IntMatrix& coinvariant_projection() const { return coinv_proj_; }
  /// pi_1(G)^Gamma as a subgroup of pi_1(G).
  const Subgroup& invariants() const { return invariants_; }
  /// {x in X_*(T) : (sigma - 1) x in the coroot lattice}, a basis.
  const IntMatrix& invariant_lattice() const { return invariant_lattice_; }
  const IntMatrix& coroot_matrix() const { return coroots_; }

  /// Kottwitz class of a cocharacter in pi_1.
  IntVec kappa(const IntVec& lambda) const { return group_.project(lambda); }
  /// ... and in pi_1_Gamma.
  IntVec kappa_coinvariant(const IntVec& lambda) const { return coinv_.project(lambda); }
  IntVec to_coinvariants(const IntVec& pi1_coords) const;
  /// Free coordinates of pi_1_Gamma (x) Q evaluated on a rational cocharacter.
  RatVec rational_class(const RatVec& x) const;
  /// Free part of pi_1_Gamma coordinates.
  RatVec rational_class_of_kappa(const IntVec& kappa) const;

 private:
  LatticeQuotient group_;
  IntMatrix action_;
  LatticeQuotient coinv_;
  IntMatrix coinv_proj_;
  Subgroup invariants_;
  IntMatrix invariant_lattice_;
  IntMatrix coroots_;
};

}  // namespace kottwitz
