#include "kottwitz/root_datum.hpp"

#include "kottwitz/errors.hpp"

#include <cstdio>
#include <deque>
#include <set>
#include <sstream>

namespace kottwitz {

namespace {

constexpr unsigned kMaxFrobeniusOrder = 5000;

std::string idx(std::size_t i) { return std::to_string(i); }

// Simple-root coefficients of v, if v lies in their rational span.
std::optional<RatVec> simple_coefficients(const std::vector<IntVec>& simple_roots, std::size_t rank,
                                          const IntVec& v) {
  std::vector<RatVec> a(rank, RatVec(simple_roots.size()));
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t j = 0; j < simple_roots.size(); ++j) a[r][j] = Rat(simple_roots[j][r]);
  return solve_rational(a, to_rat(v));
}

}  // namespace

std::vector<std::string> RootDatum::check(const RootDatumSpec& spec) {
  std::vector<std::string> bad;
  const std::size_t n = spec.rank;
  if (spec.roots.size() != spec.coroots.size()) {
    bad.push_back("roots and coroots must have the same count");
    return bad;
  }
  for (std::size_t i = 0; i < spec.roots.size(); ++i) {
    if (spec.roots[i].size() != n) bad.push_back("root " + idx(i) + " has wrong length");
    if (spec.coroots[i].size() != n) bad.push_back("coroot " + idx(i) + " has wrong length");
  }
  if (spec.frobenius.rows() != n || spec.frobenius.cols() != n)
    bad.push_back("frobenius must be a rank x rank matrix");
  if (!bad.empty()) return bad;

  const std::size_t m = spec.roots.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (dot(spec.roots[i], spec.coroots[i]) != 2)
      bad.push_back("⟨α,α∨⟩ ≠ 2 for root " + idx(i));
    if (is_zero(spec.roots[i])) bad.push_back("root " + idx(i) + " is zero");
    for (std::size_t j = 0; j < i; ++j)
      if (spec.roots[i] == spec.roots[j]) bad.push_back("root " + idx(i) + " repeats root " + idx(j));
  }
  std::set<std::size_t> seen;
  for (auto s : spec.simple) {
    if (s >= m) bad.push_back("simple index " + idx(s) + " out of range");
    else if (!seen.insert(s).second) bad.push_back("simple index " + idx(s) + " repeated");
  }
  if (m > 0 && spec.simple.empty()) bad.push_back("roots present but no simple roots chosen");
  if (!bad.empty()) return bad;

  // Simple reflections permute roots and coroots compatibly.
  for (auto s : spec.simple) {
    const IntVec& a = spec.roots[s];
    const IntVec& av = spec.coroots[s];
    for (std::size_t i = 0; i < m; ++i) {
      IntVec r = spec.roots[i] - dot(spec.roots[i], av) * a;
      IntVec rv = spec.coroots[i] - dot(a, spec.coroots[i]) * av;
      std::size_t j = 0;
      while (j < m && spec.roots[j] != r) ++j;
      if (j == m) {
        bad.push_back("simple reflection " + idx(s) + " maps root " + idx(i) + " outside the root set");
      } else if (spec.coroots[j] != rv) {
        bad.push_back("simple reflection " + idx(s) + " does not permute coroots compatibly at root " +
                      idx(i));
      }
    }
  }

  std::vector<IntVec> simple_roots;
  for (auto s : spec.simple) simple_roots.push_back(spec.roots[s]);
  std::vector<RatVec> cart(spec.simple.size(), RatVec(spec.simple.size()));
  for (std::size_t i = 0; i < spec.simple.size(); ++i)
    for (std::size_t j = 0; j < spec.simple.size(); ++j)
      cart[i][j] = Rat(dot(spec.roots[spec.simple[i]], spec.coroots[spec.simple[j]]));
  if (rational_rank(cart) != spec.simple.size()) {
    bad.push_back("simple roots are linearly dependent (Cartan matrix singular)");
    return bad;
  }
  for (std::size_t i = 0; i < m; ++i) {
    auto c = simple_coefficients(simple_roots, n, spec.roots[i]);
    if (!c) {
      bad.push_back("root " + idx(i) + " is not in the span of the simple roots");
      continue;
    }
    bool integral = true, nonneg = true, nonpos = true;
    for (const auto& x : *c) {
      if (x.get_den() != 1) integral = false;
      if (x < 0) nonneg = false;
      if (x > 0) nonpos = false;
    }
    if (!integral) bad.push_back("root " + idx(i) + " is not an integer combination of simple roots");
    if (!nonneg && !nonpos)
      bad.push_back("root " + idx(i) + " mixes signs in its simple-root expansion");
  }

  // Frobenius: finite order, unimodular, preserves the pinning.
  const IntMatrix& f = spec.frobenius;
  Int det = f.determinant();
  if (det != 1 && det != -1) {
    bad.push_back("frobenius is not invertible over Z");
    return bad;
  }
  IntMatrix p = f;
  unsigned order = 1;
  while (!p.is_identity() && order < kMaxFrobeniusOrder) {
    p = p * f;
    ++order;
  }
  if (!p.is_identity()) bad.push_back("frobenius does not have finite order");
  IntMatrix fdual = f.inverse().transpose();
  for (auto s : spec.simple) {
    IntVec img = f * spec.coroots[s];
    IntVec img_root = fdual * spec.roots[s];
    bool found = false;
    for (auto t : spec.simple)
      if (spec.coroots[t] == img && spec.roots[t] == img_root) found = true;
    if (!found) bad.push_back("frobenius does not permute the simple roots/coroots (at simple index " + idx(s) + ")");
  }
  return bad;
}

RootDatum RootDatum::create(RootDatumSpec spec) {
  if (spec.frobenius.rows() == 0 && spec.rank > 0) spec.frobenius = IntMatrix::identity(spec.rank);
  auto bad = check(spec);
  if (!bad.empty()) throw ValidationError(bad);
  RootDatum rd;
  rd.spec_ = std::move(spec);
  rd.finish();
  return rd;
}

void RootDatum::finish() {
  const std::size_t k = num_simple();
  cartan_ = IntMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) cartan_(i, j) = dot(simple_root(i), simple_coroot(j));
  std::vector<IntVec> simple_roots;
  for (std::size_t i = 0; i < k; ++i) simple_roots.push_back(simple_root(i));
  root_coeffs_.clear();
  for (const auto& r : spec_.roots) root_coeffs_.push_back(*to_int(*simple_coefficients(simple_roots, rank(), r)));
  frobenius_dual_ = spec_.frobenius.inverse().transpose();
  IntMatrix p = spec_.frobenius;
  frobenius_order_ = 1;
  while (!p.is_identity()) {
    p = p * spec_.frobenius;
    ++frobenius_order_;
  }
  simple_perm_.assign(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    IntVec img = spec_.frobenius * simple_coroot(i);
    for (std::size_t j = 0; j < k; ++j)
      if (simple_coroot(j) == img) simple_perm_[i] = j;
  }
}

bool RootDatum::is_positive(std::size_t i) const {
  for (const auto& c : root_coeffs_[i])
    if (c != 0) return c > 0;
  return false;
}

std::vector<std::size_t> RootDatum::positive_roots() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < num_roots(); ++i)
    if (is_positive(i)) out.push_back(i);
  return out;
}

std::size_t RootDatum::find_root(const IntVec& v) const {
  for (std::size_t i = 0; i < num_roots(); ++i)
    if (spec_.roots[i] == v) return i;
  return num_roots();
}

Rat RootDatum::pairing(const IntVec& character, const RatVec& cocharacter) const {
  return dot(character, cocharacter);
}

RatVec RootDatum::reflect(std::size_t s, const RatVec& x) const {
  return x - pairing(simple_root(s), x) * to_rat(simple_coroot(s));
}

IntVec RootDatum::reflect(std::size_t s, const IntVec& x) const {
  return x - dot(simple_root(s), x) * simple_coroot(s);
}

bool RootDatum::is_dominant(const RatVec& x) const {
  for (std::size_t i = 0; i < num_simple(); ++i)
    if (pairing(simple_root(i), x) < 0) return false;
  return true;
}

std::pair<RatVec, std::vector<std::size_t>> RootDatum::dominantize(const RatVec& x) const {
  RatVec y = x;
  std::vector<std::size_t> word;
  for (;;) {
    std::size_t i = 0;
    while (i < num_simple() && pairing(simple_root(i), y) >= 0) ++i;
    if (i == num_simple()) break;
    y = reflect(i, y);
    word.push_back(i);
  }
  return {y, word};
}

IntVec RootDatum::dominantize(const IntVec& x) const {
  return *to_int(dominantize(to_rat(x)).first);
}

std::vector<IntVec> RootDatum::weyl_orbit(const IntVec& x) const {
  std::set<IntVec> seen{x};
  std::deque<IntVec> queue{x};
  while (!queue.empty()) {
    IntVec v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < num_simple(); ++i) {
      IntVec w = reflect(i, v);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return {seen.begin(), seen.end()};
}

std::size_t RootDatum::weyl_group_order() const {
  const std::size_t k = num_simple();
  if (k == 0) return 1;
  std::vector<RatVec> a(k, RatVec(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a[i][j] = Rat(cartan_(i, j));
  RatVec c = *solve_rational(a, RatVec(k, Rat(1)));
  RatVec p(rank(), Rat(0));
  for (std::size_t j = 0; j < k; ++j) p = p + c[j] * to_rat(simple_coroot(j));
  // p is regular, so its orbit is a free W-orbit.
  std::set<RatVec> seen{p};
  std::deque<RatVec> queue{p};
  while (!queue.empty()) {
    RatVec v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < k; ++i) {
      RatVec w = reflect(i, v);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return seen.size();
}

std::vector<IntVec> RootDatum::sigma_orbit(const IntVec& x) const {
  std::vector<IntVec> orbit{x};
  IntVec y = spec_.frobenius * x;
  while (y != x) {
    orbit.push_back(y);
    y = spec_.frobenius * y;
  }
  return orbit;
}

RatVec RootDatum::galois_average(const IntVec& mu) const {
  if (!is_dominant(mu)) throw PreconditionError("galois_average: μ = " + to_string(mu) + " is not dominant");
  auto orbit = sigma_orbit(mu);
  RatVec sum(rank(), Rat(0));
  for (const auto& v : orbit) sum = sum + to_rat(v);
  return Rat(1, static_cast<unsigned long>(orbit.size())) * sum;
}

std::size_t RootDatum::reflex_degree(const IntVec& mu) const {
  if (!is_dominant(mu)) throw PreconditionError("reflex_degree: μ = " + to_string(mu) + " is not dominant");
  return sigma_orbit(mu).size();
}

CorootExpansion RootDatum::coroot_expansion(const RatVec& delta) const {
  const std::size_t k = num_simple();
  CorootExpansion out;
  if (k == 0) {
    out.residual = delta;
    return out;
  }
  std::vector<RatVec> a(k, RatVec(k));
  RatVec rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = Rat(cartan_(i, j));
    rhs[i] = pairing(simple_root(i), delta);
  }
  out.coefficients = *solve_rational(a, rhs);
  out.residual = delta;
  for (std::size_t j = 0; j < k; ++j) out.residual = out.residual - out.coefficients[j] * to_rat(simple_coroot(j));
  return out;
}

bool RootDatum::dominance_leq(const RatVec& a, const RatVec& b) const {
  auto e = coroot_expansion(b - a);
  if (!is_zero(e.residual)) return false;
  for (const auto& c : e.coefficients)
    if (c < 0) return false;
  return true;
}

RootDatum RootDatum::sub_datum(const std::vector<std::size_t>& root_indices,
                               const std::vector<std::size_t>& simple_subset,
                               const std::string& label) const {
  RootDatumSpec s;
  s.rank = rank();
  s.frobenius = spec_.frobenius;
  s.label = label;
  for (auto i : root_indices) {
    s.roots.push_back(root(i));
    s.coroots.push_back(coroot(i));
  }
  for (auto k : simple_subset) {
    std::size_t parent = spec_.simple[k];
    for (std::size_t pos = 0; pos < root_indices.size(); ++pos)
      if (root_indices[pos] == parent) s.simple.push_back(pos);
  }
  return create(std::move(s));
}

std::string RootDatum::canonical_serialization() const {
  std::ostringstream os;
  os << "rank:" << rank() << "|roots:";
  for (const auto& r : spec_.roots) os << to_string(r);
  os << "|coroots:";
  for (const auto& r : spec_.coroots) os << to_string(r);
  os << "|simple:";
  for (auto s : spec_.simple) os << s << ",";
  os << "|frobenius:";
  for (std::size_t r = 0; r < rank(); ++r) os << to_string(spec_.frobenius.row(r));
  return os.str();
}

std::string RootDatum::fingerprint() const {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : canonical_serialization()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RootDatum product(const RootDatum& a, const RootDatum& b) {
  const std::size_t n = a.rank(), m = b.rank();
  RootDatumSpec s;
  s.rank = n + m;
  s.label = a.label() + "x" + b.label();
  auto pad = [&](const IntVec& v, bool first) {
    IntVec out = zero_vec(n + m);
    for (std::size_t i = 0; i < v.size(); ++i) out[(first ? 0 : n) + i] = v[i];
    return out;
  };
  for (std::size_t i = 0; i < a.num_roots(); ++i) {
    s.roots.push_back(pad(a.root(i), true));
    s.coroots.push_back(pad(a.coroot(i), true));
  }
  for (std::size_t i = 0; i < b.num_roots(); ++i) {
    s.roots.push_back(pad(b.root(i), false));
    s.coroots.push_back(pad(b.coroot(i), false));
  }
  for (auto i : a.simple_indices()) s.simple.push_back(i);
  for (auto i : b.simple_indices()) s.simple.push_back(a.num_roots() + i);
  s.frobenius = IntMatrix(n + m, n + m);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) s.frobenius(r, c) = a.frobenius()(r, c);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) s.frobenius(n + r, n + c) = b.frobenius()(r, c);
  return RootDatum::create(std::move(s));
}

}  // namespace kottwitz
