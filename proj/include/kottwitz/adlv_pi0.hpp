#pragma once

// Connected components of affine Deligne-Lusztig varieties at hyperspecial
// level: pi_0(X_mu(b)) = c_{b,mu} pi_1(G)^Gamma for HN-irreducible (b, mu).

#include "kottwitz/kottwitz_set.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kottwitz {

struct TorsorDescription {
  std::vector<Int> invariant_factors;  // of the acting group
  IntMatrix generators;                // in pi_1 coordinates, one column per generator
  IntVec coset_label;                  // in pi_1 coordinates
  std::optional<Int> cardinality;      // nullopt: infinite
  bool label_is_choice = true;         // c_{b,mu} is only defined up to the acting group
};

struct CartesianReport {
  bool equivariant = false;           // phi commutes with Frobenius
  bool invariants_map = false;        // phi(pi_1^Gamma) lands in pi_1(G_ad)^Gamma
  bool group_match = false;           // fiber product has the invariant factors of pi_1^Gamma
  bool labels_compatible = false;     // phi(c) and c_ad lift the same class
  std::vector<Int> fiber_product_invariants;
  TorsorDescription adjoint;
  bool ok() const { return equivariant && invariants_map && group_match && labels_compatible; }
};

class AdlvPi0 {
 public:
  explicit AdlvPi0(const RootDatum& rd) : ks_(rd) {}

  const KottwitzSet& kottwitz_set() const { return ks_; }
  const RootDatum& datum() const { return ks_.datum(); }
  const Pi1& pi1() const { return ks_.pi1(); }

  /// Canonical lift of kappa in pi_1(G)_Gamma to pi_1(G): the Hermite-reduced
  /// representative modulo (sigma - 1) pi_1(G).
  IntVec coset_label(const IntVec& kappa) const;
  /// Throws PreconditionError unless c is in B(G, mu) and HN-irreducible.
  void require_hn_irreducible(const SigmaConjClass& c, const IntVec& mu) const;
  TorsorDescription compute(const SigmaConjClass& c, const IntVec& mu) const;

  /// pi_0 for G against the fiber product through the adjoint group.
  CartesianReport cartesian_check(const SigmaConjClass& c, const IntVec& mu) const;
  /// pi_1(G)^Gamma against X_*(G^ab)^Gamma; needs a simply connected derived group.
  bool det_fiber_check(const SigmaConjClass& c, const IntVec& mu) const;

 private:
  KottwitzSet ks_;
};

/// Canonical invariant factors of the direct sum of cyclic groups.
std::vector<Int> normalize_invariants(const std::vector<Int>& factors);

}  // namespace kottwitz
