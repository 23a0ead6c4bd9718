#include "kottwitz/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace kottwitz {

IntVec zero_vec(std::size_t n) { return IntVec(n, Int(0)); }

IntVec unit_vec(std::size_t n, std::size_t i) {
  IntVec v = zero_vec(n);
  v[i] = 1;
  return v;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec operator-(const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IntVec operator*(const Int& k, const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

RatVec to_rat(const IntVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
  return r;
}

RatVec operator+(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec operator*(const Rat& k, const RatVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

bool is_zero(const RatVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

std::optional<IntVec> to_int(const RatVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].get_den() != 1) return std::nullopt;
    r[i] = a[i].get_num();
  }
  return r;
}

std::string to_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ")";
  return os.str();
}

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVec>& cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVec IntMatrix::row(std::size_t r) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVec IntMatrix::column(std::size_t c) const {
  IntVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVec> IntMatrix::columns() const {
  std::vector<IntVec> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  IntMatrix m(rows_, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t r = 0; r < rows_; ++r) m(r, k) = (*this)(r, idx[k]);
  return m;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  IntMatrix m(idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t c = 0; c < cols_; ++c) m(k, c) = (*this)(idx[k], c);
  return m;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  if (other.rows_ != rows_) throw std::invalid_argument("hconcat: row mismatch");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

IntMatrix IntMatrix::inverse() const {
  if (rows_ != cols_) throw std::domain_error("inverse of non-square matrix");
  auto snf = smith_normal_form(*this);
  if (snf.rank() != rows_ ||
      std::any_of(snf.diagonal.begin(), snf.diagonal.end(), [](const Int& d) { return d != 1; }))
    throw std::domain_error("matrix is not unimodular");
  // U A V = I  =>  A^{-1} = V U
  return snf.right * snf.left;
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::domain_error("determinant of non-square matrix");
  // Bareiss fraction-free elimination.
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool IntMatrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix m(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) m(r, c) += a * o(k, c);
    }
  return m;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  IntVec out = zero_vec(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

RatVec IntMatrix::operator*(const RatVec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  RatVec out(rows_, Rat(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += Rat((*this)(r, c)) * v[c];
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  IntMatrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
  return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  IntMatrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
  return m;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t a, std::size_t b, const Int& k) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(a, c) += k * (*this)(b, c);
}

void IntMatrix::add_col(std::size_t a, std::size_t b, const Int& k) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, a) += k * (*this)(r, b);
}

IntMatrix power(const IntMatrix& m, unsigned e) {
  IntMatrix r = IntMatrix::identity(m.rows());
  for (unsigned i = 0; i < e; ++i) r = r * m;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int floor_mod(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r < 0) r += abs_int(b);
  return r;
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);
  std::size_t t = 0;

  // Moves the smallest nonzero entry of the lower-right block to (t, t).
  auto place_pivot = [&](bool whole_block) -> bool {
    std::size_t bi = m, bj = n;
    Int best = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (!whole_block && i != t && j != t) continue;
        if (a(i, j) == 0) continue;
        Int x = abs_int(a(i, j));
        if (bi == m || x < best) {
          best = x;
          bi = i;
          bj = j;
        }
      }
    if (bi == m) return false;
    a.swap_rows(t, bi);
    u.swap_rows(t, bi);
    a.swap_cols(t, bj);
    v.swap_cols(t, bj);
    return true;
  };

  while (t < m && t < n) {
    if (!place_pivot(true)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Int q = floor_div(a(i, t), a(t, t));
        a.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Int q = floor_div(a(t, j), a(t, t));
        a.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        place_pivot(false);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.add_row(t, i, Int(1));
            u.add_row(t, i, Int(1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (a(t, t) < 0) {
      negate_row(a, t);
      negate_row(u, t);
    }
    ++t;
  }

  SmithForm out{std::move(u), std::move(v), {}};
  for (std::size_t i = 0; i < t; ++i) out.diagonal.push_back(a(i, i));
  return out;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  auto snf = smith_normal_form(a);
  std::vector<std::size_t> idx;
  for (std::size_t j = snf.rank(); j < a.cols(); ++j) idx.push_back(j);
  return snf.right.select_columns(idx);
}

IntMatrix image_basis(const IntMatrix& a) {
  auto snf = smith_normal_form(a);
  IntMatrix uinv = snf.left.inverse();
  IntMatrix out(a.rows(), snf.rank());
  for (std::size_t i = 0; i < snf.rank(); ++i)
    for (std::size_t r = 0; r < a.rows(); ++r) out(r, i) = snf.diagonal[i] * uinv(r, i);
  return out;
}

std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b) {
  auto snf = smith_normal_form(a);
  IntVec y = snf.left * b;
  IntVec x = zero_vec(a.cols());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < snf.rank()) {
      if (y[i] % snf.diagonal[i] != 0) return std::nullopt;
      x[i] = y[i] / snf.diagonal[i];
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.right * x;
}

IntMatrix preimage_lattice(const IntMatrix& f, const IntMatrix& rel) {
  IntMatrix neg(rel.rows(), rel.cols());
  for (std::size_t r = 0; r < rel.rows(); ++r)
    for (std::size_t c = 0; c < rel.cols(); ++c) neg(r, c) = -rel(r, c);
  IntMatrix k = kernel_basis(f.hconcat(neg));
  std::vector<std::size_t> top(f.cols());
  for (std::size_t i = 0; i < top.size(); ++i) top[i] = i;
  return image_basis(k.select_rows(top));
}

IntMatrix row_hermite_form(const IntMatrix& rows) {
  IntMatrix h = rows;
  const std::size_t k = h.rows();
  const std::size_t n = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < k; ++c) {
    for (;;) {
      std::size_t best = k;
      for (std::size_t i = r; i < k; ++i)
        if (h(i, c) != 0 && (best == k || abs_int(h(i, c)) < abs_int(h(best, c)))) best = i;
      if (best == k) break;
      h.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < k; ++i) {
        if (h(i, c) == 0) continue;
        h.add_row(i, r, -floor_div(h(i, c), h(r, c)));
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) negate_row(h, r);
    for (std::size_t i = 0; i < r; ++i) h.add_row(i, r, -floor_div(h(i, c), h(r, c)));
    ++r;
  }
  std::vector<std::size_t> keep(r);
  for (std::size_t i = 0; i < r; ++i) keep[i] = i;
  return h.select_rows(keep);
}

IntVec reduce_mod_hermite(const IntMatrix& hermite, IntVec v) {
  for (std::size_t i = 0; i < hermite.rows(); ++i) {
    std::size_t c = 0;
    while (c < hermite.cols() && hermite(i, c) == 0) ++c;
    if (c == hermite.cols()) continue;
    Int q = floor_div(v[c], hermite(i, c));
    if (q != 0) v = v - q * hermite.row(i);
  }
  return v;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVec>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rat inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<RatVec> solve_rational(const std::vector<RatVec>& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_rational: shape mismatch");
  const std::size_t n = a.empty() ? 0 : a.front().size();
  std::vector<RatVec> aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto piv = rref(aug, n);
  if (piv.size() != n) return std::nullopt;
  for (std::size_t i = n; i < aug.size(); ++i)
    if (aug[i][n] != 0) return std::nullopt;
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[piv[i]] = aug[i][n];
  return x;
}

std::size_t rational_rank(const std::vector<RatVec>& rows) {
  if (rows.empty()) return 0;
  std::vector<RatVec> m = rows;
  return rref(m, m.front().size()).size();
}

// ---------------------------------------------------------------------------

LatticeQuotient::LatticeQuotient(std::size_t ambient_dim, const IntMatrix& relations)
    : ambient_dim_(ambient_dim), relations_(relations) {
  if (relations.rows() != ambient_dim)
    throw std::invalid_argument("LatticeQuotient: relation vectors have wrong length");
  auto snf = smith_normal_form(relations);
  IntMatrix uinv = snf.left.inverse();

  std::vector<IntVec> proj_rows;
  std::vector<IntVec> sect_cols;
  for (std::size_t i = 0; i < snf.rank(); ++i) {
    const Int& d = snf.diagonal[i];
    if (d == 1) continue;
    IntVec row = snf.left.row(i);
    for (auto& x : row) x = floor_mod(x, d);
    proj_rows.push_back(std::move(row));
    sect_cols.push_back(uinv.column(i));
    factors_.push_back(d);
  }

  const std::size_t nfree = ambient_dim - snf.rank();
  if (nfree > 0) {
    std::vector<std::size_t> idx;
    for (std::size_t i = snf.rank(); i < ambient_dim; ++i) idx.push_back(i);
    IntMatrix free_rows = snf.left.select_rows(idx);
    IntMatrix free_sect = uinv.select_columns(idx);
    // Canonicalize the free coordinates: the annihilator of the relations is
    // basis-independent, its Hermite form is unique.
    IntMatrix h = row_hermite_form(free_rows);
    IntMatrix change = h * free_sect;  // h = change * free_rows
    IntMatrix new_sect = free_sect * change.inverse();
    for (std::size_t i = 0; i < nfree; ++i) {
      proj_rows.push_back(h.row(i));
      sect_cols.push_back(new_sect.column(i));
      factors_.push_back(0);
    }
  }
  projection_ = IntMatrix::from_rows(proj_rows, ambient_dim);
  section_ = IntMatrix::from_columns(ambient_dim, sect_cols);
}

std::size_t LatticeQuotient::free_rank() const {
  return static_cast<std::size_t>(std::count(factors_.begin(), factors_.end(), Int(0)));
}

std::vector<Int> LatticeQuotient::torsion_factors() const {
  std::vector<Int> t;
  for (const auto& d : factors_)
    if (d != 0) t.push_back(d);
  return t;
}

std::optional<Int> LatticeQuotient::order() const {
  if (!is_finite()) return std::nullopt;
  Int n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

IntVec LatticeQuotient::reduce(IntVec coords) const {
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (factors_[i] != 0) coords[i] = floor_mod(coords[i], factors_[i]);
  return coords;
}

IntVec LatticeQuotient::project(const IntVec& x) const {
  if (x.size() != ambient_dim_) throw std::invalid_argument("project: wrong ambient length");
  return reduce(projection_ * x);
}

IntVec LatticeQuotient::lift(const IntVec& coords) const {
  if (coords.size() != num_coords()) throw std::invalid_argument("lift: wrong coordinate count");
  return section_ * coords;
}

bool LatticeQuotient::contains_relation(const IntVec& ambient) const {
  return is_zero(project(ambient));
}

IntMatrix LatticeQuotient::induced(const IntMatrix& ambient_map) const {
  IntMatrix m(num_coords(), num_coords());
  for (std::size_t j = 0; j < num_coords(); ++j) {
    IntVec img = project(ambient_map * section_.column(j));
    for (std::size_t i = 0; i < num_coords(); ++i) m(i, j) = img[i];
  }
  return m;
}

IntVec Subgroup::embed(const IntVec& coords) const { return generators * coords; }

Subgroup subgroup_from_lattice(const LatticeQuotient& parent, const IntMatrix& lattice_basis) {
  const auto& rel = parent.relations();
  std::vector<IntVec> ycols;
  for (std::size_t c = 0; c < rel.cols(); ++c) {
    auto y = solve_integer(lattice_basis, rel.column(c));
    if (!y) throw std::logic_error("subgroup lattice does not contain the relations");
    ycols.push_back(*y);
  }
  Subgroup s;
  s.structure = LatticeQuotient(lattice_basis.cols(), IntMatrix::from_columns(lattice_basis.cols(), ycols));
  IntMatrix gens(parent.num_coords(), s.structure.num_coords());
  for (std::size_t j = 0; j < s.structure.num_coords(); ++j) {
    IntVec img = parent.project(lattice_basis * s.structure.section().column(j));
    for (std::size_t i = 0; i < img.size(); ++i) gens(i, j) = img[i];
  }
  s.generators = std::move(gens);
  return s;
}

}  // namespace kottwitz
