#pragma once

// sigma-conjugacy classes as (Newton point, Kottwitz class) pairs, the sets
// B(G, mu) and HN-irreducibility.

#include "kottwitz/pi1.hpp"
#include "kottwitz/root_datum.hpp"

#include <vector>

namespace kottwitz {

struct SigmaConjClass {
  RatVec newton;  // dominant, sigma-fixed
  IntVec kappa;   // pi_1(G)_Gamma coordinates

  bool operator==(const SigmaConjClass& o) const { return newton == o.newton && kappa == o.kappa; }
};

struct LeviDatum {
  std::vector<std::size_t> root_subset;    // roots orthogonal to nu
  std::vector<std::size_t> simple_subset;  // simple indices orthogonal to nu
  RootDatum datum;
};

class KottwitzSet {
 public:
  explicit KottwitzSet(const RootDatum& rd);

  const RootDatum& datum() const { return rd_; }
  const Pi1& pi1() const { return pi1_; }

  /// Throws ValidationError if the Newton point is not dominant and
  /// sigma-fixed or disagrees rationally with the Kottwitz class.
  void validate(const SigmaConjClass& c) const;
  bool is_basic(const SigmaConjClass& c) const;
  SigmaConjClass basic_element(const IntVec& kappa) const;
  /// (mu-bar, kappa(mu)): the mu-ordinary class.
  SigmaConjClass ordinary_element(const IntVec& mu) const;
  IntVec kappa(const IntVec& mu) const { return pi1_.kappa_coinvariant(mu); }

  /// Coroot expansion of mu-bar - nu.
  CorootExpansion defect(const SigmaConjClass& c, const IntVec& mu) const;
  bool in_b_g_mu(const SigmaConjClass& c, const IntVec& mu) const;
  /// Throws PreconditionError if c is not in B(G, mu).
  bool is_hn_irreducible(const SigmaConjClass& c, const IntVec& mu) const;
  /// Index of the first simple coroot with non-positive coefficient, if any.
  std::optional<std::size_t> hn_obstruction(const SigmaConjClass& c, const IntVec& mu) const;

  /// B(G, mu) sorted by coroot height of the Newton point, then
  /// lexicographically; the basic class comes first.
  std::vector<SigmaConjClass> enumerate(const IntVec& mu) const;
  /// nu is the Newton point of a basic class of its centralizer M whose
  /// Kottwitz class maps to kappa.
  bool certify_newton_point(const RatVec& nu, const IntVec& kappa) const;

  LeviDatum levi_of(const RatVec& nu) const;

 private:
  void require_dominant(const IntVec& mu) const;
  /// Projection of a rational cocharacter onto the orthogonal complement of
  /// the coroots indexed by J (simple indices).
  RatVec project_off(const std::vector<std::size_t>& j, const RatVec& x) const;
  RatVec sigma_average(const RatVec& x) const;

  RootDatum rd_;
  Pi1 pi1_;
  std::vector<std::vector<std::size_t>> simple_orbits_;
};

/// Newton points of B(GL_n, mu) from concave lattice polygons below the
/// Hodge polygon of mu. Rejects data other than the GL(n) preset.
std::vector<RatVec> newton_oracle_gln(const RootDatum& rd, const IntVec& mu);

}  // namespace kottwitz
