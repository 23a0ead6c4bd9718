#pragma once

// pi_0 of moduli of p-adic shtukas as a G°-torsor, G° = G(Q_p)/Im(G^sc(Q_p)),
// at the level of valuation lattices. Compact parts of torus points act
// trivially on pi_0 and are not modeled.

#include "kottwitz/adlv_pi0.hpp"
#include "kottwitz/tori.hpp"

#include <optional>
#include <string>

namespace kottwitz {

enum class ArtinNormalization { arithmetic, geometric };
std::string to_string(ArtinNormalization a);

struct GCirclePresentation {
  enum class Mode { direct, via_z_extension } mode = Mode::direct;
  ZExtension z;            // identity in direct mode
  RootDatum cocenter;      // torus with X_* = pi_1(G) (direct) or pi_1(G') (z-extension)
  IntMatrix kernel_map;    // X_*(Z) -> X_*(cocenter); zero columns in direct mode
  /// Valuation shadow of G°: X_*(cocenter)^Gamma modulo the image of X_*(Z)^Gamma.
  LatticeQuotient shadow;
  IntMatrix shadow_lattice;  // basis of X_*(cocenter)^Gamma, columns
  /// Shadow coordinates -> pi_1(G) coordinates.
  IntMatrix shadow_to_pi1;
};

GCirclePresentation g_circle_presentation(const RootDatum& g);

struct WeilDescriptor {
  std::size_t reflex_degree = 1;
  IntVec mu_lift;              // mu' in X_*(T')
  IntMatrix norm_lattice_map;  // Z^{s_E} -> X_*(T'), e_k |-> sigma^k mu'
  IntMatrix projection;        // X_*(T') -> pi_1(G) coordinates
  ArtinNormalization artin = ArtinNormalization::arithmetic;

  /// Image of a Frobenius lift in W_E, in pi_1(G) coordinates.
  IntVec frobenius_image(const Pi1& pi1) const;
};

WeilDescriptor weil_descriptor(const GCirclePresentation& gc, const IntVec& mu,
                               ArtinNormalization artin = ArtinNormalization::arithmetic);

/// Class of the sum of the Frobenius orbit of mu in pi_1(G)^Gamma, negated
/// for the geometric normalization.
IntVec frobenius_translation_class(const KottwitzSet& ks, const SigmaConjClass& c, const IntVec& mu,
                                   ArtinNormalization artin = ArtinNormalization::arithmetic);

/// For a torus T: the same translation through the universal cocharacter of
/// Res_{E/Q_p} G_m and the norm map. Returned in X_*(T) coordinates.
IntVec torus_translation_via_norm(const RootDatum& t, const IntVec& mu,
                                  ArtinNormalization artin = ArtinNormalization::arithmetic);
/// The direct orbit sum in X_*(T).
IntVec torus_translation_direct(const RootDatum& t, const IntVec& mu,
                                ArtinNormalization artin = ArtinNormalization::arithmetic);

struct DetDescriptor {
  LeviDatum levi;          // M_b in G
  LeviDatum levi_lift;     // M_b' in G' (same as levi in direct mode)
  SigmaConjClass lifted;   // b' in G'
  /// pi_1(M_b') coordinates -> pi_1(G) coordinates; J_b acts through its
  /// inverse image.
  IntMatrix composite;
  /// X_*(T) -> pi_1(G) coordinates, the det shadow of G.
  IntMatrix det_shadow;
  bool inverse_convention = true;
};

DetDescriptor jb_descriptor(const GCirclePresentation& gc, const SigmaConjClass& c, const IntVec& mu);

enum class ShtLevel { hyperspecial, infinite };
std::string to_string(ShtLevel l);

struct ShtPi0 {
  ShtLevel level = ShtLevel::hyperspecial;
  GCirclePresentation gcircle;
  WeilDescriptor weil;
  DetDescriptor jb;
  IntVec frobenius_translation;         // pi_1(G) coordinates
  std::optional<TorsorDescription> torsor;  // hyperspecial level only
};

ShtPi0 pi0_sht(const RootDatum& g, const SigmaConjClass& c, const IntVec& mu, ShtLevel level,
               ArtinNormalization artin = ArtinNormalization::arithmetic);

}  // namespace kottwitz
