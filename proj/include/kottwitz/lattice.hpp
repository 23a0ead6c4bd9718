#pragma once

// Exact integer/rational linear algebra over Z^n: Smith normal form with
// transforms, integer kernels and solves, and finitely generated abelian
// groups presented as lattice quotients.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace kottwitz {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

IntVec zero_vec(std::size_t n);
IntVec unit_vec(std::size_t n, std::size_t i);
IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);
IntVec operator*(const Int& k, const IntVec& a);
Int dot(const IntVec& a, const IntVec& b);
bool is_zero(const IntVec& a);

RatVec to_rat(const IntVec& a);
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rat& k, const RatVec& a);
Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);
bool is_zero(const RatVec& a);
/// Integer vector if every entry has denominator 1.
std::optional<IntVec> to_int(const RatVec& a);

std::string to_string(const Rat& q);  // always "num/den"
std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVec>& cols);
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVec row(std::size_t r) const;
  IntVec column(std::size_t c) const;
  std::vector<IntVec> columns() const;
  IntMatrix transpose() const;
  IntMatrix select_columns(const std::vector<std::size_t>& idx) const;
  IntMatrix select_rows(const std::vector<std::size_t>& idx) const;
  /// [this | other]
  IntMatrix hconcat(const IntMatrix& other) const;
  /// Inverse of a unimodular matrix; throws std::domain_error otherwise.
  IntMatrix inverse() const;
  Int determinant() const;
  bool is_identity() const;

  IntMatrix operator*(const IntMatrix& o) const;
  IntVec operator*(const IntVec& v) const;
  RatVec operator*(const RatVec& v) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const;
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row a += k * row b
  void add_row(std::size_t a, std::size_t b, const Int& k);
  // col a += k * col b
  void add_col(std::size_t a, std::size_t b, const Int& k);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix power(const IntMatrix& m, unsigned e);

/// left * a * right == diag(diagonal, 0...), d_0 | d_1 | ..., all positive.
struct SmithForm {
  IntMatrix left;
  IntMatrix right;
  std::vector<Int> diagonal;
  std::size_t rank() const { return diagonal.size(); }
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Columns form a Z-basis of {x : a x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);
/// Columns form a Z-basis of the lattice spanned by the columns of a.
IntMatrix image_basis(const IntMatrix& a);
/// Some integer x with a x = b, if one exists.
std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b);
/// {x : f x lies in the column span of rel}, as a basis matrix.
IntMatrix preimage_lattice(const IntMatrix& f, const IntMatrix& rel);
/// Row-style Hermite normal form of the lattice spanned by the rows.
/// Pivots are positive, entries above a pivot are reduced into [0, pivot).
IntMatrix row_hermite_form(const IntMatrix& rows);
/// Reduces v modulo the row lattice of a row Hermite form.
IntVec reduce_mod_hermite(const IntMatrix& hermite, IntVec v);

/// Unique solution of the square system a x = b over Q, or nullopt when a is
/// singular.
std::optional<RatVec> solve_rational(const std::vector<RatVec>& a, const RatVec& b);
std::size_t rational_rank(const std::vector<RatVec>& rows);

/// Z^n modulo the span of some relation vectors, in canonical coordinates:
/// torsion coordinates first (reduced into [0, d)), then free coordinates.
class LatticeQuotient {
 public:
  LatticeQuotient() = default;
  LatticeQuotient(std::size_t ambient_dim, const IntMatrix& relations);

  std::size_t ambient_dim() const { return ambient_dim_; }
  /// Torsion factors (each > 1, divisibility ordered) followed by one 0 per
  /// free generator.
  const std::vector<Int>& invariant_factors() const { return factors_; }
  std::size_t num_coords() const { return factors_.size(); }
  std::size_t free_rank() const;
  std::vector<Int> torsion_factors() const;
  bool is_trivial() const { return factors_.empty(); }
  bool is_finite() const { return free_rank() == 0; }
  /// Group order, or nullopt if infinite.
  std::optional<Int> order() const;

  const IntMatrix& relations() const { return relations_; }
  /// Canonical coordinates of the class of an ambient vector.
  IntVec project(const IntVec& x) const;
  /// Projection as a matrix (before reduction mod torsion factors).
  const IntMatrix& projection() const { return projection_; }
  /// An ambient vector in the class with the given coordinates.
  IntVec lift(const IntVec& coords) const;
  const IntMatrix& section() const { return section_; }
  IntVec reduce(IntVec coords) const;
  bool contains_relation(const IntVec& ambient) const;

  /// Matrix in canonical coordinates of the endomorphism induced by an
  /// ambient matrix that preserves the relation lattice.
  IntMatrix induced(const IntMatrix& ambient_map) const;

 private:
  std::size_t ambient_dim_ = 0;
  IntMatrix relations_;
  std::vector<Int> factors_;
  IntMatrix projection_;  // num_coords x ambient
  IntMatrix section_;     // ambient x num_coords
};

/// A subgroup of a LatticeQuotient: its own abstract structure plus the
/// images of its canonical generators in the parent's coordinates.
struct Subgroup {
  LatticeQuotient structure;
  IntMatrix generators;  // parent coords x structure.num_coords()

  IntVec embed(const IntVec& coords) const;
};

/// Subgroup of `parent` given as the image of an ambient sublattice
/// (basis columns) that contains the parent's relations.
Subgroup subgroup_from_lattice(const LatticeQuotient& parent, const IntMatrix& lattice_basis);

}  // namespace kottwitz
