#include "kottwitz/affine_weyl.hpp"

#include "kottwitz/errors.hpp"

#include <algorithm>
#include <deque>

namespace kottwitz {

std::vector<Int> AffineWeylElement::key() const {
  std::vector<Int> k = translation;
  for (std::size_t r = 0; r < finite.rows(); ++r)
    for (std::size_t c = 0; c < finite.cols(); ++c) k.push_back(finite(r, c));
  return k;
}

AffineWeylGroup::AffineWeylGroup(const RootDatum& rd) : rd_(rd), pi1_(rd) {
  if (!rd.is_split()) throw PreconditionError("affine Weyl combinatorics is only available for split data");
  positive_ = rd.positive_roots();
  const std::size_t n = rd.rank();
  for (std::size_t r = 0; r < rd.num_roots(); ++r) {
    IntMatrix s = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s(i, j) -= rd.coroot(r)[i] * rd.root(r)[j];
    reflection_matrix_.push_back(std::move(s));
  }
  for (std::size_t a : positive_)
    for (long k = -1; k <= 2; ++k) {
      AffineWeylElement r = reflection(a, Int(k));
      if (length(r) == 1) simple_affine_.push_back(std::move(r));
    }
}

AffineWeylElement AffineWeylGroup::make(const IntVec& lambda, const IntMatrix& w) const {
  if (lambda.size() != rd_.rank() || w.rows() != rd_.rank() || w.cols() != rd_.rank())
    throw ValidationError({"affine Weyl element has the wrong shape"});
  return {lambda, w, pi1_.kappa(lambda)};
}

AffineWeylElement AffineWeylGroup::identity() const { return translation(zero_vec(rd_.rank())); }

AffineWeylElement AffineWeylGroup::translation(const IntVec& lambda) const {
  return make(lambda, IntMatrix::identity(rd_.rank()));
}

AffineWeylElement AffineWeylGroup::reflection(std::size_t root, const Int& k) const {
  return make(k * rd_.coroot(root), reflection_matrix_[root]);
}

IntMatrix AffineWeylGroup::finite_from_word(const std::vector<std::size_t>& word) const {
  IntMatrix w = IntMatrix::identity(rd_.rank());
  for (std::size_t i : word) w = w * reflection_matrix_[rd_.simple_indices()[i]];
  return w;
}

std::vector<std::size_t> AffineWeylGroup::finite_word(const IntMatrix& w0) const {
  std::vector<std::size_t> word;
  IntMatrix w = w0;
  for (bool progress = true; progress;) {
    progress = false;
    IntMatrix wt = w.transpose();
    for (std::size_t i = 0; i < rd_.num_simple(); ++i) {
      std::size_t r = rd_.find_root(wt * rd_.simple_root(i));
      if (r < rd_.num_roots() && !rd_.is_positive(r)) {
        word.push_back(i);
        w = reflection_matrix_[rd_.simple_indices()[i]] * w;
        progress = true;
        break;
      }
    }
  }
  return word;
}

AffineWeylElement AffineWeylGroup::multiply(const AffineWeylElement& x, const AffineWeylElement& y) const {
  return make(x.translation + x.finite * y.translation, x.finite * y.finite);
}

AffineWeylElement AffineWeylGroup::inverse(const AffineWeylElement& x) const {
  IntMatrix wi = x.finite.inverse();
  return make(-(wi * x.translation), wi);
}

Int AffineWeylGroup::length(const AffineWeylElement& x) const {
  Int total = 0;
  IntMatrix wt = x.finite.transpose();
  for (std::size_t a : positive_) {
    Int p = dot(rd_.root(a), x.translation);
    std::size_t b = rd_.find_root(wt * rd_.root(a));
    if (b < rd_.num_roots() && rd_.is_positive(b))
      total += abs(p);
    else
      total += abs(p - 1);
  }
  return total;
}

std::vector<AffineWeylElement> AffineWeylGroup::lower_neighbours(const AffineWeylElement& x) const {
  std::vector<AffineWeylElement> out;
  const Int lx = length(x);
  for (std::size_t a : positive_) {
    Int p = dot(rd_.root(a), x.translation);
    Int lo = std::min<Int>(p - 1, 0), hi = std::max<Int>(p + 1, 1);
    for (Int k = lo; k <= hi; ++k) {
      AffineWeylElement y = multiply(reflection(a, k), x);
      if (length(y) < lx) out.push_back(std::move(y));
    }
  }
  return out;
}

std::shared_ptr<const AffineWeylGroup::Ideal> AffineWeylGroup::ideal(const AffineWeylElement& y) const {
  const auto k = y.key();
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
  }
  auto out = std::make_shared<Ideal>();
  std::deque<AffineWeylElement> queue{y};
  out->emplace(k, y);
  while (!queue.empty()) {
    AffineWeylElement cur = std::move(queue.front());
    queue.pop_front();
    for (auto& z : lower_neighbours(cur)) {
      auto zk = z.key();
      if (out->count(zk)) continue;
      out->emplace(std::move(zk), z);
      queue.push_back(std::move(z));
    }
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return cache_.emplace(k, std::move(out)).first->second;
}

std::vector<AffineWeylElement> AffineWeylGroup::sorted(const Ideal& s) const {
  std::vector<std::pair<Int, const AffineWeylElement*>> tmp;
  for (const auto& [k, e] : s) tmp.emplace_back(length(e), &e);
  std::stable_sort(tmp.begin(), tmp.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<AffineWeylElement> out;
  for (const auto& [l, e] : tmp) out.push_back(*e);
  return out;
}

bool AffineWeylGroup::bruhat_leq(const AffineWeylElement& x, const AffineWeylElement& y) const {
  if (x.omega != y.omega) return false;
  if (x == y) return true;
  if (length(x) >= length(y)) return false;
  return ideal(y)->count(x.key()) > 0;
}

std::vector<AffineWeylElement> AffineWeylGroup::lower_ideal(const AffineWeylElement& y) const {
  return sorted(*ideal(y));
}

std::vector<AffineWeylElement> AffineWeylGroup::admissible_set(const IntVec& mu) const {
  if (!rd_.is_dominant(mu)) throw PreconditionError("admissible_set needs a dominant μ");
  Ideal all;
  for (const auto& lambda : rd_.weyl_orbit(mu))
    for (const auto& [k, e] : *ideal(translation(lambda))) all.emplace(k, e);
  return sorted(all);
}

}  // namespace kottwitz
