#include "kottwitz/adlv_pi0.hpp"

#include "kottwitz/errors.hpp"
#include "kottwitz/presets.hpp"

namespace kottwitz {

namespace {

// Relations of a quotient in its own coordinates: d_i e_i per torsion coordinate.
IntMatrix coordinate_relations(const LatticeQuotient& q) {
  std::vector<IntVec> cols;
  for (std::size_t i = 0; i < q.num_coords(); ++i)
    if (q.invariant_factors()[i] != 0) cols.push_back(q.invariant_factors()[i] * unit_vec(q.num_coords(), i));
  return IntMatrix::from_columns(q.num_coords(), cols);
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!solve_integer(b, a.column(j))) return false;
  for (std::size_t j = 0; j < b.cols(); ++j)
    if (!solve_integer(a, b.column(j))) return false;
  return true;
}

}  // namespace

std::vector<Int> normalize_invariants(const std::vector<Int>& factors) {
  IntMatrix d(factors.size(), factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) d(i, i) = factors[i];
  return LatticeQuotient(factors.size(), d).invariant_factors();
}

IntVec AdlvPi0::coset_label(const IntVec& kappa) const {
  const Pi1& p = pi1();
  const LatticeQuotient& g = p.group();
  IntVec v = g.project(p.coinvariants().lift(p.coinvariants().reduce(kappa)));
  const std::size_t n = g.num_coords();
  std::vector<IntVec> rows;
  IntMatrix sm1 = p.action() - IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) rows.push_back(sm1.column(j));
  for (const auto& c : coordinate_relations(g).columns()) rows.push_back(c);
  if (rows.empty()) return v;
  IntMatrix h = row_hermite_form(IntMatrix::from_rows(rows, n));
  return g.reduce(reduce_mod_hermite(h, v));
}

void AdlvPi0::require_hn_irreducible(const SigmaConjClass& c, const IntVec& mu) const {
  ks_.validate(c);
  auto bad = ks_.hn_obstruction(c, mu);
  if (bad) {
    auto d = ks_.defect(c, mu);
    throw PreconditionError("(b, μ) is not HN-irreducible: coefficient of α" + std::to_string(*bad + 1) +
                            "∨ in μ̄ − ν is " + to_string(d.coefficients[*bad]) + ", not > 0");
  }
}

TorsorDescription AdlvPi0::compute(const SigmaConjClass& c, const IntVec& mu) const {
  require_hn_irreducible(c, mu);
  const Subgroup& inv = pi1().invariants();
  TorsorDescription t;
  t.invariant_factors = inv.structure.invariant_factors();
  t.generators = inv.generators;
  t.coset_label = coset_label(c.kappa);
  t.cardinality = inv.structure.order();
  return t;
}

CartesianReport AdlvPi0::cartesian_check(const SigmaConjClass& c, const IntVec& mu) const {
  CartesianReport rep;
  TorsorDescription own = compute(c, mu);
  const RootDatum& rd = datum();
  AdjointQuotient ad = adjoint_quotient(rd);
  AdlvPi0 adj(ad.datum);
  const IntMatrix& phi = ad.map;
  rep.equivariant = phi * rd.frobenius() == ad.datum.frobenius() * phi;

  const Pi1& p = pi1();
  const Pi1& pa = adj.pi1();
  SigmaConjClass cad{phi * c.newton, pa.kappa_coinvariant(phi * p.coinvariants().lift(c.kappa))};
  IntVec muad = phi * mu;
  rep.adjoint = adj.compute(cad, muad);

  // phi on pi_1 coordinates.
  IntMatrix big_phi = pa.group().projection() * phi * p.group().section();
  rep.invariants_map = true;
  for (std::size_t j = 0; j < own.generators.cols(); ++j) {
    IntVec y = pa.group().reduce(big_phi * own.generators.column(j));
    if (pa.group().reduce(pa.action() * y) != y) rep.invariants_map = false;
  }

  // {(a, y) in pi_1^Gamma x pi_1(G_ad)^Gamma : phi(a) = y}.
  const Subgroup& ig = p.invariants();
  const Subgroup& ia = pa.invariants();
  IntMatrix neg_ea(ia.generators.rows(), ia.generators.cols());
  for (std::size_t r = 0; r < neg_ea.rows(); ++r)
    for (std::size_t col = 0; col < neg_ea.cols(); ++col) neg_ea(r, col) = -ia.generators(r, col);
  IntMatrix m = (big_phi * ig.generators).hconcat(neg_ea);
  IntMatrix lattice = preimage_lattice(m, coordinate_relations(pa.group()));
  const std::size_t dim = ig.structure.num_coords() + ia.structure.num_coords();
  LatticeQuotient parent(dim, block_diagonal(coordinate_relations(ig.structure), coordinate_relations(ia.structure)));
  Subgroup fiber = subgroup_from_lattice(parent, lattice);
  rep.fiber_product_invariants = fiber.structure.invariant_factors();
  rep.group_match = normalize_invariants(rep.fiber_product_invariants) == normalize_invariants(own.invariant_factors);

  IntVec pushed = pa.group().reduce(big_phi * own.coset_label);
  rep.labels_compatible = pa.to_coinvariants(pushed) == pa.to_coinvariants(rep.adjoint.coset_label) &&
                          pa.to_coinvariants(rep.adjoint.coset_label) == cad.kappa &&
                          p.to_coinvariants(own.coset_label) == c.kappa;
  return rep;
}

bool AdlvPi0::det_fiber_check(const SigmaConjClass& c, const IntVec& mu) const {
  const Pi1& p = pi1();
  if (!p.group().torsion_factors().empty())
    throw PreconditionError("det_fiber_check needs a simply connected derived group, but π₁(G) has torsion");
  TorsorDescription own = compute(c, mu);
  const RootDatum& rd = datum();
  // Characters of G^ab: the kernel of C^T, C the coroot matrix.
  IntMatrix chars = kernel_basis(p.coroot_matrix().transpose());  // n x k
  const std::size_t k = chars.cols();
  IntMatrix f = chars.transpose();  // X_*(T) -> Hom(X^*(G^ab), Z)
  // Frobenius in the coordinates of f.
  IntMatrix s(k, k);
  IntMatrix st = rd.frobenius().transpose();
  for (std::size_t j = 0; j < k; ++j) {
    auto y = solve_integer(chars, st * chars.column(j));
    if (!y) return false;
    for (std::size_t i = 0; i < k; ++i) s(i, j) = (*y)[i];
  }
  IntMatrix sigma_ab = s.transpose();
  if (f * rd.frobenius() != sigma_ab * f) return false;

  IntMatrix d = f * p.group().section();  // pi_1 coords -> Z^k
  if (kernel_basis(d).cols() != 0) return false;
  IntMatrix l = image_basis(f);
  IntMatrix fixed = l * kernel_basis((sigma_ab - IntMatrix::identity(k)) * l);
  IntMatrix img = d * own.generators;
  return same_lattice(img, fixed);
}

}  // namespace kottwitz
