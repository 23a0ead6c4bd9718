#include "kottwitz/tori.hpp"

#include "kottwitz/errors.hpp"
#include "kottwitz/presets.hpp"

namespace kottwitz {

namespace {

IntVec coords_in(const IntMatrix& basis, const IntVec& v) {
  auto y = solve_integer(basis, v);
  if (!y) throw std::logic_error("vector outside the expected lattice");
  return *y;
}

// Matrix of an endomorphism in a lattice basis.
IntMatrix restrict_to(const IntMatrix& basis, const IntMatrix& map) {
  std::vector<IntVec> cols;
  for (std::size_t j = 0; j < basis.cols(); ++j) cols.push_back(coords_in(basis, map * basis.column(j)));
  return IntMatrix::from_columns(basis.cols(), cols);
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

// Cyclic shift on `blocks` copies of Z^s, index block * s + k.
IntMatrix shift_matrix(std::size_t blocks, std::size_t s) {
  IntMatrix m(blocks * s, blocks * s);
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t k = 0; k < s; ++k) m(b * s + (k + 1) % s, b * s + k) = 1;
  return m;
}

ZExtension identity_extension(const RootDatum& g) {
  ZExtension z;
  z.source = g;
  z.target = g;
  z.quotient_map = IntMatrix::identity(g.rank());
  z.kernel = IntMatrix(g.rank(), 0);
  z.kernel_frobenius = IntMatrix(0, 0);
  z.is_identity = true;
  return z;
}

}  // namespace

UniversalCocharacter universal_cocharacter(std::size_t s) {
  if (s < 1) throw PreconditionError("universal_cocharacter needs s >= 1");
  return {preset("ResE/Qp-Gm(" + std::to_string(s) + ")"), unit_vec(s, 0)};
}

IntMatrix norm_map(const RootDatum& t, const IntVec& mu, std::optional<std::size_t> degree) {
  if (mu.size() != t.rank()) throw ValidationError({"μ has the wrong length"});
  const std::size_t e = t.sigma_orbit(mu).size();
  const std::size_t d = degree.value_or(e);
  if (d == 0 || d % e != 0)
    throw PreconditionError("norm_map: degree " + std::to_string(d) + " is not a multiple of the reflex degree " +
                            std::to_string(e));
  std::vector<IntVec> cols;
  IntVec v = mu;
  for (std::size_t k = 0; k < d; ++k) {
    cols.push_back(v);
    v = t.frobenius() * v;
  }
  return IntMatrix::from_columns(t.rank(), cols);
}

ZExtension z_extension(const RootDatum& g) {
  Pi1 p(g);
  if (p.group().torsion_factors().empty()) return identity_extension(g);

  const std::size_t n = g.rank();
  const std::size_t r = p.group().num_coords();
  const std::size_t s = g.frobenius_order();
  const IntMatrix& sigma = g.frobenius();
  const IntMatrix& coroots = p.coroot_matrix();

  // F = Z[C_s]^r, psi(e_{j,k}) = sigma^k g_j lifted to X_*(T).
  IntMatrix psi(n, r * s);
  for (std::size_t j = 0; j < r; ++j) {
    IntVec x = p.group().section().column(j);
    for (std::size_t k = 0; k < s; ++k) {
      for (std::size_t i = 0; i < n; ++i) psi(i, j * s + k) = x[i];
      x = sigma * x;
    }
  }
  IntMatrix sigma_f = shift_matrix(r, s);

  // Fiber product M = {(x, f) : x - psi f in the coroot lattice}.
  IntMatrix neg_psi(n, r * s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < r * s; ++c) neg_psi(i, c) = -psi(i, c);
  IntMatrix bm = preimage_lattice(IntMatrix::identity(n).hconcat(neg_psi), coroots);
  IntMatrix bk = preimage_lattice(psi, coroots);  // ker psi inside F
  const std::size_t dm = bm.cols();
  const std::size_t dk = bk.cols();
  IntMatrix sigma_m = restrict_to(bm, block_diagonal(sigma, sigma_f));

  auto m_coords_of_f = [&](const IntVec& f) {
    IntVec v = zero_vec(n + r * s);
    for (std::size_t i = 0; i < f.size(); ++i) v[n + i] = f[i];
    return coords_in(bm, v);
  };
  auto m_coords_of_x = [&](const IntVec& x) {
    IntVec v = zero_vec(n + r * s);
    for (std::size_t i = 0; i < n; ++i) v[i] = x[i];
    return coords_in(bm, v);
  };
  IntMatrix x_part(n, dm);
  for (std::size_t c = 0; c < dm; ++c)
    for (std::size_t i = 0; i < n; ++i) x_part(i, c) = bm(i, c);

  ZExtension z;
  z.target = g;
  RootDatumSpec spec;
  spec.label = g.label() + "'";
  spec.simple = g.simple_indices();
  std::vector<IntVec> lifted_coroots;

  if (s == 1) {
    spec.rank = dm;
    spec.frobenius = sigma_m;
    z.quotient_map = x_part;
    for (const auto& c : g.coroots()) lifted_coroots.push_back(m_coords_of_x(c));
    std::vector<IntVec> kcols;
    for (std::size_t t = 0; t < dk; ++t) kcols.push_back(m_coords_of_f(bk.column(t)));
    z.kernel = IntMatrix::from_columns(dm, kcols);
    z.kernel_frobenius = IntMatrix::identity(dk);
    z.kernel_blocks.assign(dk, 1);
  } else {
    // Push out along K -> I = K^s, iota(k)_j = sigma^{-j} k, so that the
    // kernel becomes induced. Index of (slot j, basis vector t): t * s + j.
    const std::size_t di = dk * s;
    const std::size_t da = dm + di;
    IntMatrix sigma_f_inv = sigma_f.inverse();
    std::vector<IntVec> rel;
    for (std::size_t t = 0; t < dk; ++t) {
      IntVec v = zero_vec(da);
      IntVec mc = m_coords_of_f(bk.column(t));
      for (std::size_t i = 0; i < dm; ++i) v[i] = mc[i];
      IntVec k = bk.column(t);
      for (std::size_t j = 0; j < s; ++j) {
        IntVec y = coords_in(bk, k);
        for (std::size_t u = 0; u < dk; ++u) v[dm + u * s + j] -= y[u];
        k = sigma_f_inv * k;
      }
      rel.push_back(v);
    }
    LatticeQuotient q(da, IntMatrix::from_columns(da, rel));
    if (!q.torsion_factors().empty()) throw std::logic_error("z-extension pushout has torsion");
    IntMatrix sigma_a = block_diagonal(sigma_m, shift_matrix(dk, s));
    spec.rank = q.num_coords();
    spec.frobenius = q.induced(sigma_a);
    IntMatrix x_ext(n, da);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < dm; ++c) x_ext(i, c) = x_part(i, c);
    z.quotient_map = x_ext * q.section();
    for (const auto& c : g.coroots()) {
      IntVec v = zero_vec(da);
      IntVec mc = m_coords_of_x(c);
      for (std::size_t i = 0; i < dm; ++i) v[i] = mc[i];
      lifted_coroots.push_back(q.project(v));
    }
    std::vector<IntVec> kcols;
    for (std::size_t idx = 0; idx < di; ++idx) kcols.push_back(q.project(unit_vec(da, dm + idx)));
    z.kernel = IntMatrix::from_columns(q.num_coords(), kcols);
    z.kernel_frobenius = shift_matrix(dk, s);
    z.kernel_blocks.assign(dk, s);
  }

  spec.coroots = lifted_coroots;
  for (const auto& a : g.roots()) spec.roots.push_back(z.quotient_map.transpose() * a);
  z.source = RootDatum::create(std::move(spec));

  // Sanity: the pieces fit together.
  if (z.quotient_map * z.source.frobenius() != sigma * z.quotient_map)
    throw std::logic_error("z-extension quotient map is not Frobenius-equivariant");
  if (!(z.quotient_map * z.kernel == IntMatrix(n, z.kernel.cols())))
    throw std::logic_error("z-extension kernel does not map to zero");
  if (!Pi1(z.source).group().torsion_factors().empty())
    throw std::logic_error("z-extension has torsion in pi_1(G')");
  return z;
}

ZExtension product(const ZExtension& a, const ZExtension& b) {
  ZExtension z;
  z.source = product(a.source, b.source);
  z.target = product(a.target, b.target);
  z.quotient_map = block_diagonal(a.quotient_map, b.quotient_map);
  z.kernel = block_diagonal(a.kernel, b.kernel);
  z.kernel_frobenius = block_diagonal(a.kernel_frobenius, b.kernel_frobenius);
  z.kernel_blocks = a.kernel_blocks;
  z.kernel_blocks.insert(z.kernel_blocks.end(), b.kernel_blocks.begin(), b.kernel_blocks.end());
  z.is_identity = a.is_identity && b.is_identity;
  return z;
}

IntVec lift_mu(const ZExtension& z, const IntVec& mu) {
  const RootDatum& g = z.target;
  if (mu.size() != g.rank()) throw ValidationError({"μ has the wrong length"});
  const std::size_t e = g.reflex_degree(mu);
  if (z.is_identity) return mu;
  auto base = solve_integer(z.quotient_map, mu);
  if (!base) throw std::logic_error("quotient map is not surjective");
  // Correct by a kernel vector so that sigma'^e fixes the lift.
  const IntMatrix se = power(z.source.frobenius(), static_cast<unsigned>(e));
  const IntMatrix ke = power(z.kernel_frobenius, static_cast<unsigned>(e));
  const std::size_t k = z.kernel.cols();
  IntVec defect = se * *base - *base;
  auto dcoords = solve_integer(z.kernel, defect);
  if (!dcoords) throw std::logic_error("Frobenius defect of the lift is not in the kernel");
  auto y = solve_integer(ke - IntMatrix::identity(k), -*dcoords);
  if (!y) throw std::logic_error("no Frobenius-stable lift of μ found");
  IntVec lifted = *base + z.kernel * *y;
  if (z.source.reflex_degree(lifted) != e) throw std::logic_error("lift changed the reflex degree");
  return lifted;
}

SigmaConjClass lift_b(const ZExtension& z, const SigmaConjClass& c, const IntVec& mu, const IntVec& mu_prime) {
  KottwitzSet ks(z.target);
  KottwitzSet ks2(z.source);
  ks.validate(c);
  if (mu_prime.size() != z.source.rank() || z.quotient_map * mu_prime != mu)
    throw PreconditionError("μ' does not map to μ");
  if (!ks.in_b_g_mu(c, mu)) throw PreconditionError("class is not in B(G, μ)");
  auto d = ks.defect(c, mu);
  RatVec nu2 = z.source.galois_average(mu_prime);
  for (std::size_t i = 0; i < z.source.num_simple(); ++i)
    nu2 = nu2 - d.coefficients[i] * to_rat(z.source.simple_coroot(i));
  SigmaConjClass lifted{nu2, ks2.kappa(mu_prime)};
  ks2.validate(lifted);
  if (!ks2.certify_newton_point(lifted.newton, lifted.kappa) || !ks2.in_b_g_mu(lifted, mu_prime))
    throw std::logic_error("lifted class is not in B(G', μ')");
  // Project back.
  if (z.quotient_map * lifted.newton != c.newton) throw std::logic_error("lifted Newton point does not project back");
  IntVec back = ks.pi1().kappa_coinvariant(z.quotient_map * ks2.pi1().coinvariants().lift(lifted.kappa));
  if (back != c.kappa) throw std::logic_error("lifted Kottwitz class does not project back");
  if (ks.is_hn_irreducible(c, mu) != ks2.is_hn_irreducible(lifted, mu_prime))
    throw std::logic_error("HN-irreducibility not preserved by the lift");
  return lifted;
}

}  // namespace kottwitz
