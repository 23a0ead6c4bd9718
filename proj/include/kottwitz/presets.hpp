#pragma once

#include "kottwitz/root_datum.hpp"

#include <string>
#include <vector>

namespace kottwitz {

/// GL(n), SL(n), PGL(n), Sp(2n), SO(m), U(n,unramified), ResE/Qp-Gm(s), and
/// products written with 'x', e.g. GL(2)xGL(2). Throws ParseError.
RootDatum preset(const std::string& name);

/// Names used by the golden-file catalog.
std::vector<std::string> preset_catalog();

/// Datum on the coweight lattice of the adjoint group. The map
/// X_*(T) -> X_*(T_ad) is lambda |-> (<alpha_i, lambda>)_i.
struct AdjointQuotient {
  RootDatum datum;
  IntMatrix map;
};
AdjointQuotient adjoint_quotient(const RootDatum& g);

/// Datum on the coroot lattice (basis: simple coroots), i.e. the simply
/// connected cover of the derived group.
RootDatum simply_connected_cover(const RootDatum& g);

}  // namespace kottwitz
