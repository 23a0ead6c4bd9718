#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace oracle {

Int determinantal_divisor(const IntMatrix& a, std::size_t k) {
  Int g = 0;
  std::vector<std::size_t> rs, cs;
  std::function<void(std::size_t)> rec_c = [&](std::size_t start) {
    if (cs.size() == k) {
      Int d = a.select_rows(rs).select_columns(cs).determinant();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      return;
    }
    for (std::size_t j = start; j < a.cols(); ++j) {
      cs.push_back(j);
      rec_c(j + 1);
      cs.pop_back();
    }
  };
  std::function<void(std::size_t)> rec_r = [&](std::size_t start) {
    if (rs.size() == k) {
      rec_c(0);
      return;
    }
    for (std::size_t i = start; i < a.rows(); ++i) {
      rs.push_back(i);
      rec_r(i + 1);
      rs.pop_back();
    }
  };
  rec_r(0);
  return g;
}

std::vector<Int> quotient_invariants(const IntMatrix& rel) {
  const std::size_t n = rel.rows();
  std::vector<Int> torsion;
  Int prev = 1;
  std::size_t rank = 0;
  for (std::size_t k = 1; k <= std::min(n, rel.cols()); ++k) {
    Int d = determinantal_divisor(rel, k);
    if (d == 0) break;
    Int f = d / prev;
    if (f != 1) torsion.push_back(f);
    prev = d;
    rank = k;
  }
  std::vector<Int> out = torsion;
  for (std::size_t i = rank; i < n; ++i) out.push_back(0);
  return out;
}

Int finite_pi1_invariants_order(const kottwitz::RootDatum& rd) {
  const std::size_t n = rd.rank();
  IntMatrix rows = IntMatrix::from_rows(rd.coroots(), n);
  IntMatrix h = kottwitz::row_hermite_form(rows);
  if (h.rows() != n) throw std::logic_error("pi_1 is infinite");
  Int index = 1;
  for (std::size_t i = 0; i < n; ++i) index *= h(i, i);
  long box = index.get_si();
  std::set<IntVec> classes;
  IntVec x = kottwitz::zero_vec(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      classes.insert(kottwitz::reduce_mod_hermite(h, x));
      return;
    }
    for (long v = 0; v < box; ++v) {
      x[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  Int fixed = 0;
  for (const auto& c : classes) {
    IntVec img = rd.frobenius() * c;
    if (kottwitz::reduce_mod_hermite(h, img) == c) fixed += 1;
  }
  return fixed;
}

std::size_t pi1_invariants_rank(const kottwitz::RootDatum& rd) {
  const std::size_t n = rd.rank();
  std::vector<RatVec> rows(n);
  IntMatrix s = rd.frobenius() - IntMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) rows[r].push_back(Rat(s(r, c)));
    for (const auto& cv : rd.coroots()) rows[r].push_back(Rat(cv[r]));
  }
  // Column rank equals row rank.
  return n - kottwitz::rational_rank(rows);
}

namespace {

// Compositions of n into segment lengths; each segment gets an integer height
// sum, slopes strictly decreasing, so every breakpoint is a lattice point.
void polygons(std::size_t remaining_len, const Int& remaining_height, const std::optional<Rat>& last_slope,
              std::vector<std::pair<std::size_t, Int>>& segs, const IntVec& mu,
              std::vector<RatVec>& out, const Int& lo, const Int& hi) {
  if (remaining_len == 0) {
    if (remaining_height != 0) return;
    RatVec nu;
    for (const auto& [len, h] : segs)
      for (std::size_t i = 0; i < len; ++i) {
        Rat q(h, Int(static_cast<long>(len)));
        q.canonicalize();
        nu.push_back(q);
      }
    // nu <= mu: partial sums of nu bounded by those of mu.
    Rat a = 0;
    Int b = 0;
    for (std::size_t i = 0; i < nu.size(); ++i) {
      a += nu[i];
      b += mu[i];
      if (a > Rat(b)) return;
    }
    out.push_back(nu);
    return;
  }
  for (std::size_t len = 1; len <= remaining_len; ++len) {
    Int l(static_cast<long>(len));
    for (Int h = lo * l; h <= hi * l; ++h) {
      Rat slope(h, l);
      slope.canonicalize();
      if (last_slope && !(slope < *last_slope)) continue;
      segs.push_back({len, h});
      polygons(remaining_len - len, remaining_height - h, slope, segs, mu, out, lo, hi);
      segs.pop_back();
    }
  }
}

}  // namespace

std::vector<RatVec> newton_gln(const IntVec& mu) {
  const std::size_t n = mu.size();
  Int total = 0;
  for (const auto& x : mu) total += x;
  Int lo = *std::min_element(mu.begin(), mu.end());
  Int hi = *std::max_element(mu.begin(), mu.end());
  std::vector<RatVec> out;
  std::vector<std::pair<std::size_t, Int>> segs;
  polygons(n, total, std::nullopt, segs, mu, out, lo, hi);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle

namespace oracle {

using namespace kottwitz;

namespace {

RatVec base_point(const kottwitz::RootDatum& rd) {
  const std::size_t k = rd.num_simple();
  RatVec v(rd.rank(), Rat(0));
  if (k == 0) return v;
  std::size_t height = 1;
  for (std::size_t r = 0; r < rd.num_roots(); ++r) {
    std::size_t h = 0;
    for (const auto& c : rd.root_coefficients(r)) h += static_cast<std::size_t>(Int(abs(c)).get_ui());
    height = std::max(height, h);
  }
  std::vector<RatVec> rows(k, RatVec(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = Rat(rd.cartan()(i, j));
  RatVec c(k, Rat(1, static_cast<unsigned long>(height + 1)));
  RatVec d = *kottwitz::solve_rational(rows, c);
  for (std::size_t j = 0; j < k; ++j) v = v + d[j] * kottwitz::to_rat(rd.simple_coroot(j));
  return v;
}

Int floor_rat(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

AffineElt reflection(const kottwitz::RootDatum& rd, std::size_t a, long k) {
  const std::size_t n = rd.rank();
  IntMatrix s = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= rd.coroot(a)[i] * rd.root(a)[j];
  return {Int(k) * rd.coroot(a), s};
}

}  // namespace

AffineElt affine_mul(const AffineElt& x, const AffineElt& y) {
  return {x.lambda + x.w * y.lambda, x.w * y.w};
}

Int alcove_length(const kottwitz::RootDatum& rd, const AffineElt& x) {
  RatVec v = base_point(rd);
  RatVec xv = kottwitz::to_rat(x.lambda) + x.w * v;
  Int count = 0;
  for (std::size_t a = 0; a < rd.num_roots(); ++a) {
    if (!rd.is_positive(a)) continue;
    count += abs(floor_rat(kottwitz::dot(rd.root(a), xv)) - floor_rat(kottwitz::dot(rd.root(a), v)));
  }
  return count;
}

std::pair<std::vector<AffineElt>, AffineElt> reduced_word(const kottwitz::RootDatum& rd, const AffineElt& y) {
  std::vector<AffineElt> simple;
  for (std::size_t a = 0; a < rd.num_roots(); ++a)
    if (rd.is_positive(a))
      for (long k = -2; k <= 3; ++k) {
        AffineElt r = reflection(rd, a, k);
        if (alcove_length(rd, r) == 1) simple.push_back(r);
      }
  std::vector<AffineElt> word;
  AffineElt rest = y;
  for (Int l = alcove_length(rd, rest); l > 0; l = alcove_length(rd, rest)) {
    bool found = false;
    for (const auto& s : simple) {
      AffineElt t = affine_mul(s, rest);
      if (alcove_length(rd, t) < l) {
        word.push_back(s);
        rest = t;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no descent found");
  }
  return {word, rest};
}

bool bruhat_subword(const kottwitz::RootDatum& rd, const AffineElt& x, const AffineElt& y) {
  auto [word, rest] = reduced_word(rd, y);
  // y = word[0] ... word[k-1] rest
  const std::size_t k = word.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
    AffineElt p{kottwitz::zero_vec(rd.rank()), IntMatrix::identity(rd.rank())};
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t(1) << i)) p = affine_mul(p, word[i]);
    if (affine_mul(p, rest) == x) return true;
  }
  return false;
}

}  // namespace oracle
