#include "kottwitz/shtuka_pi0.hpp"

#include "kottwitz/errors.hpp"

namespace kottwitz {

namespace {

RootDatum torus_on(std::size_t rank, const IntMatrix& action, const std::string& label) {
  RootDatumSpec s;
  s.rank = rank;
  s.frobenius = action;
  s.label = label;
  return RootDatum::create(std::move(s));
}

IntVec signed_vec(ArtinNormalization artin, const IntVec& v) {
  return artin == ArtinNormalization::arithmetic ? v : -v;
}

IntVec orbit_sum(const RootDatum& t, const IntVec& mu) {
  IntVec sum = zero_vec(t.rank());
  for (const auto& x : t.sigma_orbit(mu)) sum = sum + x;
  return sum;
}

}  // namespace

std::string to_string(ArtinNormalization a) { return a == ArtinNormalization::arithmetic ? "arithmetic" : "geometric"; }
std::string to_string(ShtLevel l) { return l == ShtLevel::hyperspecial ? "hyperspecial" : "infinite"; }

GCirclePresentation g_circle_presentation(const RootDatum& g) {
  GCirclePresentation gc;
  Pi1 p(g);
  gc.z = z_extension(g);
  if (gc.z.is_identity) {
    gc.mode = GCirclePresentation::Mode::direct;
    const std::size_t r = p.group().num_coords();
    gc.cocenter = torus_on(r, p.action(), g.label() + "^ab");
    gc.kernel_map = IntMatrix(r, 0);
    gc.shadow_lattice = kernel_basis(p.action() - IntMatrix::identity(r));
    const std::size_t k = gc.shadow_lattice.cols();
    gc.shadow = LatticeQuotient(k, IntMatrix(k, 0));
    gc.shadow_to_pi1 = gc.shadow_lattice * gc.shadow.section();
    return gc;
  }
  gc.mode = GCirclePresentation::Mode::via_z_extension;
  Pi1 p2(gc.z.source);
  const std::size_t r2 = p2.group().num_coords();
  gc.cocenter = torus_on(r2, p2.action(), gc.z.source.label() + "^ab");
  gc.kernel_map = p2.group().projection() * gc.z.kernel;
  const std::size_t dk = gc.z.kernel.cols();
  IntMatrix kfix = kernel_basis(gc.z.kernel_frobenius - IntMatrix::identity(dk));
  gc.shadow_lattice = kernel_basis(p2.action() - IntMatrix::identity(r2));
  const std::size_t k = gc.shadow_lattice.cols();
  std::vector<IntVec> rel;
  IntMatrix img = gc.kernel_map * kfix;
  for (std::size_t j = 0; j < img.cols(); ++j) {
    auto y = solve_integer(gc.shadow_lattice, img.column(j));
    if (!y) throw std::logic_error("Frobenius-fixed kernel does not land in the fixed lattice");
    rel.push_back(*y);
  }
  gc.shadow = LatticeQuotient(k, IntMatrix::from_columns(k, rel));
  gc.shadow_to_pi1 =
      p.group().projection() * gc.z.quotient_map * p2.group().section() * gc.shadow_lattice * gc.shadow.section();
  return gc;
}

IntVec WeilDescriptor::frobenius_image(const Pi1& pi1) const {
  IntVec ones(reflex_degree, Int(1));
  return pi1.group().reduce(signed_vec(artin, projection * (norm_lattice_map * ones)));
}

WeilDescriptor weil_descriptor(const GCirclePresentation& gc, const IntVec& mu, ArtinNormalization artin) {
  const RootDatum& g = gc.z.target;
  WeilDescriptor w;
  w.reflex_degree = g.reflex_degree(mu);
  w.mu_lift = lift_mu(gc.z, mu);
  w.norm_lattice_map = norm_map(gc.z.source, w.mu_lift, w.reflex_degree);
  w.projection = Pi1(g).group().projection() * gc.z.quotient_map;
  w.artin = artin;
  return w;
}

IntVec frobenius_translation_class(const KottwitzSet& ks, const SigmaConjClass& c, const IntVec& mu,
                                   ArtinNormalization artin) {
  ks.validate(c);
  if (ks.hn_obstruction(c, mu)) throw PreconditionError("(b, μ) is not HN-irreducible");
  const RootDatum& g = ks.datum();
  return ks.pi1().group().reduce(signed_vec(artin, ks.pi1().kappa(orbit_sum(g, mu))));
}

IntVec torus_translation_via_norm(const RootDatum& t, const IntVec& mu, ArtinNormalization artin) {
  if (!t.is_torus()) throw PreconditionError("torus_translation_via_norm needs a torus");
  const std::size_t e = t.sigma_orbit(mu).size();
  UniversalCocharacter u = universal_cocharacter(e);
  IntVec uni = orbit_sum(u.torus, u.mu);
  return signed_vec(artin, norm_map(t, mu, e) * uni);
}

IntVec torus_translation_direct(const RootDatum& t, const IntVec& mu, ArtinNormalization artin) {
  if (!t.is_torus()) throw PreconditionError("torus_translation_direct needs a torus");
  IntVec sum = zero_vec(t.rank());
  IntVec x = mu;
  do {
    sum = sum + x;
    x = t.frobenius() * x;
  } while (x != mu);
  return signed_vec(artin, sum);
}

DetDescriptor jb_descriptor(const GCirclePresentation& gc, const SigmaConjClass& c, const IntVec& mu) {
  const RootDatum& g = gc.z.target;
  KottwitzSet ks(g);
  ks.validate(c);
  DetDescriptor d;
  d.levi = ks.levi_of(c.newton);
  Pi1 pg(g);
  if (gc.z.is_identity) {
    d.lifted = c;
    d.levi_lift = d.levi;
  } else {
    d.lifted = lift_b(gc.z, c, mu, lift_mu(gc.z, mu));
    d.levi_lift = KottwitzSet(gc.z.source).levi_of(d.lifted.newton);
  }
  Pi1 pm(d.levi_lift.datum);
  d.composite = pg.group().projection() * gc.z.quotient_map * pm.group().section();
  d.det_shadow = pg.group().projection();
  return d;
}

ShtPi0 pi0_sht(const RootDatum& g, const SigmaConjClass& c, const IntVec& mu, ShtLevel level,
               ArtinNormalization artin) {
  AdlvPi0 adlv(g);
  adlv.require_hn_irreducible(c, mu);
  const Pi1& p = adlv.pi1();
  ShtPi0 out;
  out.level = level;
  out.gcircle = g_circle_presentation(g);
  out.weil = weil_descriptor(out.gcircle, mu, artin);
  out.jb = jb_descriptor(out.gcircle, c, mu);
  out.frobenius_translation = frobenius_translation_class(adlv.kottwitz_set(), c, mu, artin);
  if (out.weil.frobenius_image(p) != out.frobenius_translation)
    throw std::logic_error("Weil descriptor and orbit sum disagree on the Frobenius translation");
  if (level == ShtLevel::infinite) return out;

  const GCirclePresentation& gc = out.gcircle;
  TorsorDescription t;
  t.invariant_factors = gc.shadow.invariant_factors();
  std::vector<IntVec> gens;
  for (std::size_t j = 0; j < gc.shadow_to_pi1.cols(); ++j) gens.push_back(p.group().reduce(gc.shadow_to_pi1.column(j)));
  t.generators = IntMatrix::from_columns(p.group().num_coords(), gens);
  t.cardinality = gc.shadow.order();
  if (gc.z.is_identity) {
    t.coset_label = adlv.coset_label(c.kappa);
  } else {
    AdlvPi0 lifted(gc.z.source);
    IntVec label2 = lifted.coset_label(out.jb.lifted.kappa);
    IntVec pushed = p.group().project(gc.z.quotient_map * lifted.pi1().group().section() * label2);
    if (p.to_coinvariants(pushed) != c.kappa) throw std::logic_error("lifted coset label does not push down to κ");
    t.coset_label = adlv.coset_label(p.to_coinvariants(pushed));
  }
  out.torsor = std::move(t);
  return out;
}

}  // namespace kottwitz
