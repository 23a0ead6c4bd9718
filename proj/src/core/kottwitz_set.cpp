#include "kottwitz/kottwitz_set.hpp"

#include "kottwitz/errors.hpp"
#include "kottwitz/presets.hpp"

#include <algorithm>
#include <functional>

namespace kottwitz {

namespace {

Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rat sum(const RatVec& v) {
  Rat s = 0;
  for (const auto& x : v) s += x;
  return s;
}

}  // namespace

KottwitzSet::KottwitzSet(const RootDatum& rd) : rd_(rd), pi1_(rd) {
  const auto& perm = rd_.simple_permutation();
  std::vector<bool> seen(rd_.num_simple(), false);
  for (std::size_t i = 0; i < rd_.num_simple(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t k = i; !seen[k]; k = perm[k]) {
      seen[k] = true;
      orbit.push_back(k);
    }
    std::sort(orbit.begin(), orbit.end());
    simple_orbits_.push_back(orbit);
  }
}

void KottwitzSet::require_dominant(const IntVec& mu) const {
  if (mu.size() != rd_.rank()) throw ValidationError({"μ has length " + std::to_string(mu.size()) +
                                                      ", expected " + std::to_string(rd_.rank())});
  if (!rd_.is_dominant(mu)) throw PreconditionError("μ = " + to_string(mu) + " is not dominant");
}

void KottwitzSet::validate(const SigmaConjClass& c) const {
  std::vector<std::string> bad;
  if (c.newton.size() != rd_.rank()) bad.push_back("Newton point has wrong length");
  if (c.kappa.size() != pi1_.coinvariants().num_coords())
    bad.push_back("Kottwitz class has " + std::to_string(c.kappa.size()) + " coordinates, expected " +
                  std::to_string(pi1_.coinvariants().num_coords()));
  if (!bad.empty()) throw ValidationError(bad);
  if (!rd_.is_dominant(c.newton)) bad.push_back("Newton point " + to_string(c.newton) + " is not dominant");
  if (rd_.apply_frobenius(c.newton) != c.newton)
    bad.push_back("Newton point " + to_string(c.newton) + " is not Frobenius-fixed");
  if (pi1_.coinvariants().reduce(c.kappa) != c.kappa)
    bad.push_back("Kottwitz class " + to_string(c.kappa) + " is not in reduced coordinates");
  if (pi1_.rational_class(c.newton) != pi1_.rational_class_of_kappa(c.kappa))
    bad.push_back("Newton point and Kottwitz class disagree rationally");
  if (!bad.empty()) throw ValidationError(bad);
}

bool KottwitzSet::is_basic(const SigmaConjClass& c) const {
  for (const auto& a : rd_.roots())
    if (rd_.pairing(a, c.newton) != 0) return false;
  return true;
}

RatVec KottwitzSet::sigma_average(const RatVec& x) const {
  RatVec s(rd_.rank(), Rat(0));
  RatVec y = x;
  for (unsigned k = 0; k < rd_.frobenius_order(); ++k) {
    s = s + y;
    y = rd_.apply_frobenius(y);
  }
  return Rat(1, rd_.frobenius_order()) * s;
}

SigmaConjClass KottwitzSet::basic_element(const IntVec& kappa) const {
  const auto& q = pi1_.coinvariants();
  if (kappa.size() != q.num_coords())
    throw ValidationError({"Kottwitz class has " + std::to_string(kappa.size()) + " coordinates, expected " +
                           std::to_string(q.num_coords())});
  IntVec k = q.reduce(kappa);
  RatVec avg = sigma_average(to_rat(q.lift(k)));
  return {rd_.coroot_expansion(avg).residual, k};
}

SigmaConjClass KottwitzSet::ordinary_element(const IntVec& mu) const {
  require_dominant(mu);
  return {rd_.galois_average(mu), kappa(mu)};
}

CorootExpansion KottwitzSet::defect(const SigmaConjClass& c, const IntVec& mu) const {
  return rd_.coroot_expansion(rd_.galois_average(mu) - c.newton);
}

bool KottwitzSet::in_b_g_mu(const SigmaConjClass& c, const IntVec& mu) const {
  require_dominant(mu);
  if (c.kappa != kappa(mu)) return false;
  auto d = defect(c, mu);
  if (!is_zero(d.residual)) return false;
  return std::all_of(d.coefficients.begin(), d.coefficients.end(), [](const Rat& x) { return x >= 0; });
}

std::optional<std::size_t> KottwitzSet::hn_obstruction(const SigmaConjClass& c, const IntVec& mu) const {
  if (!in_b_g_mu(c, mu))
    throw PreconditionError("class (ν=" + to_string(c.newton) + ", κ=" + to_string(c.kappa) +
                            ") is not in B(G, μ) for μ = " + to_string(mu));
  auto d = defect(c, mu);
  for (std::size_t i = 0; i < d.coefficients.size(); ++i)
    if (d.coefficients[i] <= 0) return i;
  return std::nullopt;
}

bool KottwitzSet::is_hn_irreducible(const SigmaConjClass& c, const IntVec& mu) const {
  return !hn_obstruction(c, mu).has_value();
}

RatVec KottwitzSet::project_off(const std::vector<std::size_t>& j, const RatVec& x) const {
  if (j.empty()) return x;
  std::vector<RatVec> a(j.size(), RatVec(j.size()));
  RatVec rhs(j.size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    for (std::size_t c = 0; c < j.size(); ++c) a[r][c] = Rat(rd_.cartan()(j[r], j[c]));
    rhs[r] = rd_.pairing(rd_.simple_root(j[r]), x);
  }
  RatVec coef = *solve_rational(a, rhs);
  RatVec out = x;
  for (std::size_t c = 0; c < j.size(); ++c) out = out - coef[c] * to_rat(rd_.simple_coroot(j[c]));
  return out;
}

std::vector<SigmaConjClass> KottwitzSet::enumerate(const IntVec& mu) const {
  require_dominant(mu);
  const RatVec mubar = rd_.galois_average(mu);
  const IntVec k = kappa(mu);
  const RatVec cmu = rd_.coroot_expansion(mubar).coefficients;
  const std::size_t norb = simple_orbits_.size();

  std::vector<SigmaConjClass> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << norb); ++mask) {
    std::vector<std::size_t> j;
    std::vector<std::size_t> free_orbits;
    for (std::size_t o = 0; o < norb; ++o) {
      if (mask >> o & 1) j.insert(j.end(), simple_orbits_[o].begin(), simple_orbits_[o].end());
      else free_orbits.push_back(o);
    }
    std::sort(j.begin(), j.end());
    const RatVec nu0 = project_off(j, mubar);
    const RatVec c0 = rd_.coroot_expansion(nu0).coefficients;

    // The M_J-basic Newton points over kappa(mu) form nu0 + sum m_O g_O.
    std::vector<RatVec> gens;
    std::vector<Int> lo, hi;
    for (auto o : free_orbits) {
      const auto& orbit = simple_orbits_[o];
      const Rat size(static_cast<unsigned long>(orbit.size()));
      RatVec g(rd_.rank(), Rat(0));
      for (auto i : orbit) g = g + to_rat(rd_.simple_coroot(i));
      gens.push_back(Rat(1) / size * project_off(j, g));
      const std::size_t rep = orbit.front();
      lo.push_back(ceil_rat(-size * c0[rep]));
      hi.push_back(floor_rat(size * (cmu[rep] - c0[rep])));
    }

    std::vector<Int> m(gens.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == gens.size()) {
        RatVec nu = nu0;
        for (std::size_t t = 0; t < gens.size(); ++t) nu = nu + Rat(m[t]) * gens[t];
        if (!rd_.is_dominant(nu)) return;
        for (std::size_t s = 0; s < rd_.num_simple(); ++s) {
          bool in_j = std::binary_search(j.begin(), j.end(), s);
          if (!in_j && rd_.pairing(rd_.simple_root(s), nu) <= 0) return;
        }
        if (!rd_.dominance_leq(nu, mubar)) return;
        out.push_back({nu, k});
        return;
      }
      for (m[i] = lo[i]; m[i] <= hi[i]; ++m[i]) rec(i + 1);
    };
    rec(0);
  }

  std::vector<std::pair<Rat, std::size_t>> keys;
  for (std::size_t i = 0; i < out.size(); ++i) keys.push_back({sum(rd_.coroot_expansion(out[i].newton).coefficients), i});
  std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return out[a.second].newton < out[b.second].newton;
  });
  std::vector<SigmaConjClass> sorted;
  for (const auto& kv : keys) {
    if (!certify_newton_point(out[kv.second].newton, k))
      throw std::logic_error("enumerated Newton point failed certification");
    sorted.push_back(out[kv.second]);
  }
  return sorted;
}

bool KottwitzSet::certify_newton_point(const RatVec& nu, const IntVec& kappa) const {
  if (nu.size() != rd_.rank() || !rd_.is_dominant(nu) || rd_.apply_frobenius(nu) != nu) return false;
  LeviDatum levi = levi_of(nu);
  const auto& j = levi.simple_subset;
  const auto& q = pi1_.coinvariants();
  if (kappa.size() != q.num_coords()) return false;
  // Newton point of the M-basic class of a lift of kappa; the other lifts of
  // kappa to pi_1(M)_Gamma move it by integer multiples of the orbit
  // generators below.
  RatVec nu0 = project_off(j, sigma_average(to_rat(q.lift(q.reduce(kappa)))));
  RatVec diff = nu - nu0;
  RatVec cd = rd_.coroot_expansion(diff).coefficients;
  RatVec rebuilt(rd_.rank(), Rat(0));
  for (const auto& orbit : simple_orbits_) {
    if (std::binary_search(j.begin(), j.end(), orbit.front())) continue;
    const Rat size(static_cast<unsigned long>(orbit.size()));
    Rat m = cd[orbit.front()] * size;
    if (m.get_den() != 1) return false;
    RatVec g(rd_.rank(), Rat(0));
    for (auto i : orbit) g = g + to_rat(rd_.simple_coroot(i));
    rebuilt = rebuilt + m / size * project_off(j, g);
  }
  return rebuilt == diff;
}

LeviDatum KottwitzSet::levi_of(const RatVec& nu) const {
  LeviDatum l;
  for (std::size_t i = 0; i < rd_.num_roots(); ++i)
    if (rd_.pairing(rd_.root(i), nu) == 0) l.root_subset.push_back(i);
  for (std::size_t i = 0; i < rd_.num_simple(); ++i)
    if (rd_.pairing(rd_.simple_root(i), nu) == 0) l.simple_subset.push_back(i);
  l.datum = rd_.sub_datum(l.root_subset, l.simple_subset, "M_ν in " + rd_.label());
  return l;
}

std::vector<RatVec> newton_oracle_gln(const RootDatum& rd, const IntVec& mu) {
  const std::size_t n = rd.rank();
  if (rd.canonical_serialization() != preset("GL(" + std::to_string(n) + ")").canonical_serialization())
    throw PreconditionError("newton_oracle_gln needs the GL(n) preset datum");
  if (mu.size() != n || !rd.is_dominant(mu)) throw PreconditionError("μ must be dominant of length n");
  // Hodge polygon values.
  std::vector<Int> hodge(n + 1, Int(0));
  for (std::size_t i = 0; i < n; ++i) hodge[i + 1] = hodge[i] + mu[i];
  const Int total = hodge[n];

  std::vector<RatVec> out;
  std::vector<std::pair<std::size_t, Int>> vertices{{0, Int(0)}};
  std::function<void()> rec = [&]() {
    const auto [x, y] = vertices.back();
    if (x == n) {
      RatVec nu;
      for (std::size_t v = 1; v < vertices.size(); ++v) {
        const auto [x0, y0] = vertices[v - 1];
        const auto [x1, y1] = vertices[v];
        Rat slope(y1 - y0, Int(static_cast<unsigned long>(x1 - x0)));
        slope.canonicalize();
        for (std::size_t t = x0; t < x1; ++t) nu.push_back(slope);
      }
      out.push_back(nu);
      return;
    }
    for (std::size_t nx = x + 1; nx <= n; ++nx) {
      Int nxi(static_cast<unsigned long>(nx));
      Rat chord(total * nxi, Int(static_cast<unsigned long>(n)));
      chord.canonicalize();
      Int lo = nx == n ? total : ceil_rat(chord);
      Int hi = nx == n ? total : hodge[nx];
      for (Int ny = lo; ny <= hi; ++ny) {
        // Strict concavity at the previous vertex.
        if (vertices.size() >= 2) {
          const auto [px, py] = vertices[vertices.size() - 2];
          Int dx0(static_cast<unsigned long>(x - px)), dx1(static_cast<unsigned long>(nx - x));
          if (!((ny - y) * dx0 < (y - py) * dx1)) continue;
        }
        vertices.push_back({nx, ny});
        rec();
        vertices.pop_back();
      }
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kottwitz
