#include "kottwitz/pi1.hpp"

namespace kottwitz {

Pi1::Pi1(const RootDatum& rd) {
  const std::size_t n = rd.rank();
  coroots_ = IntMatrix::from_columns(n, rd.coroots());
  group_ = LatticeQuotient(n, coroots_);
  action_ = group_.induced(rd.frobenius());

  IntMatrix sigma_minus_one = rd.frobenius() - IntMatrix::identity(n);
  coinv_ = LatticeQuotient(n, coroots_.hconcat(sigma_minus_one));
  coinv_proj_ = coinv_.projection() * group_.section();

  invariant_lattice_ = preimage_lattice(sigma_minus_one, coroots_);
  invariants_ = subgroup_from_lattice(group_, invariant_lattice_);
}

IntVec Pi1::to_coinvariants(const IntVec& pi1_coords) const {
  return coinv_.reduce(coinv_proj_ * pi1_coords);
}

RatVec Pi1::rational_class(const RatVec& x) const {
  RatVec full = coinv_.projection() * x;
  RatVec out;
  for (std::size_t i = 0; i < full.size(); ++i)
    if (coinv_.invariant_factors()[i] == 0) out.push_back(full[i]);
  return out;
}

RatVec Pi1::rational_class_of_kappa(const IntVec& kappa) const {
  RatVec out;
  for (std::size_t i = 0; i < kappa.size(); ++i)
    if (coinv_.invariant_factors()[i] == 0) out.push_back(Rat(kappa[i]));
  return out;
}

}  // namespace kottwitz
