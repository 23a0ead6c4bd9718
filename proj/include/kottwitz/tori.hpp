#pragma once

// Induced tori, norm maps on cocharacters and z-extensions G' -> G.

#include "kottwitz/kottwitz_set.hpp"

#include <optional>

namespace kottwitz {

struct UniversalCocharacter {
  RootDatum torus;  // Res_{Q_{p^s}/Q_p} G_m
  IntVec mu;        // e_0
};
UniversalCocharacter universal_cocharacter(std::size_t s);

/// Z^d -> X_*(T), e_k |-> sigma^k mu. The degree defaults to the reflex
/// degree of mu and must be a multiple of it.
IntMatrix norm_map(const RootDatum& t, const IntVec& mu, std::optional<std::size_t> degree = std::nullopt);

struct ZExtension {
  RootDatum source;            // G'
  RootDatum target;            // G
  IntMatrix quotient_map;      // X_*(T') -> X_*(T)
  IntMatrix kernel;            // basis of X_*(Z) inside X_*(T'), one column per vector
  IntMatrix kernel_frobenius;  // Frobenius on that basis (a block permutation)
  std::vector<std::size_t> kernel_blocks;  // degrees of the induced summands of Z
  bool is_identity = false;
};

/// A z-extension whose kernel is a sum of induced tori of the splitting
/// degree of G. Identity when pi_1(G) is already torsion-free.
ZExtension z_extension(const RootDatum& g);
/// Componentwise extension of a product.
ZExtension product(const ZExtension& a, const ZExtension& b);

/// Dominant mu' over mu with the same reflex degree.
IntVec lift_mu(const ZExtension& z, const IntVec& mu);
/// The class of B(G', mu') over c, with its HN-irreducibility cross-checked.
SigmaConjClass lift_b(const ZExtension& z, const SigmaConjClass& c, const IntVec& mu, const IntVec& mu_prime);

}  // namespace kottwitz
