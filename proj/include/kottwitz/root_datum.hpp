#pragma once

// Based root data on X_*(T) = Z^rank with a pinned Frobenius action.
// Characters and cocharacters are both integer vectors of length rank and
// pair by the dot product. Frobenius is given on cocharacters; on characters
// it acts by the inverse transpose.

#include "kottwitz/lattice.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kottwitz {

struct RootDatumSpec {
  std::size_t rank = 0;
  std::vector<IntVec> roots;
  std::vector<IntVec> coroots;
  std::vector<std::size_t> simple;  // indices into roots
  IntMatrix frobenius;              // empty means identity
  std::string label;
};

struct CorootExpansion {
  RatVec coefficients;  // one per simple coroot
  RatVec residual;      // central part, orthogonal to every root
};

class RootDatum {
 public:
  RootDatum() = default;

  /// Every violated invariant, empty when the spec describes a valid datum.
  static std::vector<std::string> check(const RootDatumSpec& spec);
  /// Throws ValidationError listing the violations.
  static RootDatum create(RootDatumSpec spec);

  const RootDatumSpec& spec() const { return spec_; }
  const std::string& label() const { return spec_.label; }
  std::size_t rank() const { return spec_.rank; }
  std::size_t num_roots() const { return spec_.roots.size(); }
  const IntVec& root(std::size_t i) const { return spec_.roots[i]; }
  const IntVec& coroot(std::size_t i) const { return spec_.coroots[i]; }
  const std::vector<IntVec>& roots() const { return spec_.roots; }
  const std::vector<IntVec>& coroots() const { return spec_.coroots; }
  std::size_t num_simple() const { return spec_.simple.size(); }
  const std::vector<std::size_t>& simple_indices() const { return spec_.simple; }
  const IntVec& simple_root(std::size_t i) const { return spec_.roots[spec_.simple[i]]; }
  const IntVec& simple_coroot(std::size_t i) const { return spec_.coroots[spec_.simple[i]]; }
  bool is_torus() const { return spec_.roots.empty(); }

  /// Cartan matrix A(i, j) = <alpha_i, alpha_j^vee>.
  const IntMatrix& cartan() const { return cartan_; }
  /// Simple-root coefficients of every root.
  const IntVec& root_coefficients(std::size_t i) const { return root_coeffs_[i]; }
  bool is_positive(std::size_t i) const;
  std::vector<std::size_t> positive_roots() const;
  /// Index of the given root vector, or num_roots() if absent.
  std::size_t find_root(const IntVec& v) const;

  const IntMatrix& frobenius() const { return spec_.frobenius; }
  const IntMatrix& frobenius_on_characters() const { return frobenius_dual_; }
  unsigned frobenius_order() const { return frobenius_order_; }
  bool is_split() const { return frobenius_order_ == 1; }
  /// sigma(alpha_i) = alpha_{simple_permutation()[i]}.
  const std::vector<std::size_t>& simple_permutation() const { return simple_perm_; }

  Rat pairing(const IntVec& character, const RatVec& cocharacter) const;
  /// s_i applied to a cocharacter.
  RatVec reflect(std::size_t simple, const RatVec& x) const;
  IntVec reflect(std::size_t simple, const IntVec& x) const;
  bool is_dominant(const RatVec& x) const;
  bool is_dominant(const IntVec& x) const { return is_dominant(to_rat(x)); }

  /// Dominant representative and a reduced word [i1..ik] (0-based simple
  /// indices) with s_{i1}...s_{ik} applied to the result giving back x.
  std::pair<RatVec, std::vector<std::size_t>> dominantize(const RatVec& x) const;
  IntVec dominantize(const IntVec& x) const;
  /// Weyl orbit, deduplicated, lexicographically sorted.
  std::vector<IntVec> weyl_orbit(const IntVec& x) const;
  std::size_t weyl_group_order() const;

  /// Frobenius orbit of a cocharacter, starting at x.
  std::vector<IntVec> sigma_orbit(const IntVec& x) const;
  RatVec apply_frobenius(const RatVec& x) const { return spec_.frobenius * x; }
  /// Average over the Frobenius orbit; rejects non-dominant input.
  RatVec galois_average(const IntVec& mu) const;
  /// Size of the Frobenius orbit; rejects non-dominant input.
  std::size_t reflex_degree(const IntVec& mu) const;
  /// delta = sum c_i alpha_i^vee + z with z orthogonal to every root.
  CorootExpansion coroot_expansion(const RatVec& delta) const;
  /// a <= b in the rational dominance order (b - a a nonnegative rational
  /// combination of positive coroots).
  bool dominance_leq(const RatVec& a, const RatVec& b) const;

  /// Sub-datum on a subset of roots whose simple system is the given subset
  /// of simple indices; keeps the lattice and the Frobenius action.
  RootDatum sub_datum(const std::vector<std::size_t>& root_indices,
                      const std::vector<std::size_t>& simple_subset, const std::string& label) const;

  std::string canonical_serialization() const;
  /// FNV-1a 64 hash of the canonical serialization, as 16 hex digits.
  std::string fingerprint() const;

 private:
  void finish();

  RootDatumSpec spec_;
  IntMatrix cartan_;
  std::vector<IntVec> root_coeffs_;
  IntMatrix frobenius_dual_;
  unsigned frobenius_order_ = 1;
  std::vector<std::size_t> simple_perm_;
};

/// Block-diagonal product.
RootDatum product(const RootDatum& a, const RootDatum& b);

}  // namespace kottwitz
