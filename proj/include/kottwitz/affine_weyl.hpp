#pragma once

// Extended affine Weyl group X_*(T) x W of a split datum: length, Bruhat
// order and mu-admissible sets. An element t^lambda w acts on X_*(T) (x) R by
// v |-> lambda + w v; the base alcove is the dominant one.

#include "kottwitz/pi1.hpp"
#include "kottwitz/root_datum.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace kottwitz {

struct AffineWeylElement {
  IntVec translation;  // lambda
  IntMatrix finite;    // w acting on X_*(T)
  IntVec omega;        // class in pi_1(G)

  /// lambda followed by the entries of w row by row.
  std::vector<Int> key() const;
  bool operator==(const AffineWeylElement& o) const { return translation == o.translation && finite == o.finite; }
};

class AffineWeylGroup {
 public:
  /// Rejects non-split data with PreconditionError.
  explicit AffineWeylGroup(const RootDatum& rd);

  const RootDatum& datum() const { return rd_; }
  const Pi1& pi1() const { return pi1_; }

  AffineWeylElement make(const IntVec& lambda, const IntMatrix& w) const;
  AffineWeylElement identity() const;
  AffineWeylElement translation(const IntVec& lambda) const;
  /// t^{k alpha^vee} s_alpha, the reflection in <alpha, v> = k.
  AffineWeylElement reflection(std::size_t root, const Int& k) const;
  /// Finite Weyl element from a word in the simple reflections (leftmost first).
  IntMatrix finite_from_word(const std::vector<std::size_t>& word) const;
  /// Reduced word of a finite Weyl element, w = s_{i1} s_{i2} ...
  std::vector<std::size_t> finite_word(const IntMatrix& w) const;

  AffineWeylElement multiply(const AffineWeylElement& x, const AffineWeylElement& y) const;
  AffineWeylElement inverse(const AffineWeylElement& x) const;

  Int length(const AffineWeylElement& x) const;
  /// The affine reflections of length one.
  const std::vector<AffineWeylElement>& simple_affine_reflections() const { return simple_affine_; }

  /// Elements r x with r an affine reflection and l(r x) < l(x).
  std::vector<AffineWeylElement> lower_neighbours(const AffineWeylElement& x) const;
  bool bruhat_leq(const AffineWeylElement& x, const AffineWeylElement& y) const;
  /// {x : x <= y}, sorted by (length, key).
  std::vector<AffineWeylElement> lower_ideal(const AffineWeylElement& y) const;

  /// {w : w <= t^lambda for some lambda in W mu}, sorted by (length, key).
  std::vector<AffineWeylElement> admissible_set(const IntVec& mu) const;

 private:
  using Ideal = std::map<std::vector<Int>, AffineWeylElement>;
  std::shared_ptr<const Ideal> ideal(const AffineWeylElement& y) const;
  std::vector<AffineWeylElement> sorted(const Ideal& s) const;

  RootDatum rd_;
  Pi1 pi1_;
  std::vector<std::size_t> positive_;
  std::vector<IntMatrix> reflection_matrix_;  // per root
  std::vector<AffineWeylElement> simple_affine_;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::vector<Int>, std::shared_ptr<const Ideal>> cache_;
};

}  // namespace kottwitz
