#ifndef COXTOP_INTEGER_MATRIX_HPP
#define COXTOP_INTEGER_MATRIX_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace coxtop {

using Integer = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors, all of length `rows`.
  static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> column(std::size_t j) const;
  std::vector<std::vector<Integer>> columns() const;
  IntMatrix transpose() const;
  /// Columns [first, first + count).
  IntMatrix column_block(std::size_t first, std::size_t count) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row a += f * row b
  void add_row(std::size_t a, std::size_t b, const Integer& f);
  /// col a += f * col b
  void add_col(std::size_t a, std::size_t b, const Integer& f);
  void negate_row(std::size_t a);
  void negate_col(std::size_t a);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r,
/// all d_i positive.
struct SNFResult {
  IntMatrix U;
  IntMatrix U_inv;
  IntMatrix D;
  IntMatrix V;
  /// The nonzero diagonal entries d_1, ..., d_r.
  std::vector<Integer> invariants;
  std::size_t rank() const { return invariants.size(); }
};

SNFResult smith_normal_form(const IntMatrix& A);

/// Nonzero invariant factors only (no transforms).
std::vector<Integer> invariant_factors(const IntMatrix& A);

/// Exact determinant of a square matrix.
Integer determinant(const IntMatrix& A);

/// Row-style Hermite normal form of the row span: echelon rows with positive
/// pivots, entries above each pivot reduced into [0, pivot). Zero rows dropped.
IntMatrix hermite_normal_form(const IntMatrix& A);

/// Z^n / span(generators): free rank and torsion invariant factors (> 1).
struct QuotientStructure {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
};

QuotientStructure quotient_structure(std::size_t n, const std::vector<std::vector<Integer>>& generators);

/// A basis (as columns) of the span of the generators.
IntMatrix span_basis(std::size_t n, const std::vector<std::vector<Integer>>& generators);

/// Columns spanning a direct complement of span(generators) in Z^n, in
/// Hermite normal form. Throws TheoremViolation when the quotient has torsion
/// (no complement exists).
IntMatrix direct_complement(std::size_t n, const std::vector<std::vector<Integer>>& generators);

/// Solves basis * x = v over Z; empty when v is not in the lattice spanned by
/// the (linearly independent) basis columns.
std::optional<std::vector<Integer>> coordinates_in(const IntMatrix& basis, const std::vector<Integer>& v);

/// Sparse integer matrix used for coboundary maps.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  /// Adds v to entry (i, j).
  void add(std::size_t i, std::size_t j, const Integer& v);
  Integer get(std::size_t i, std::size_t j) const;
  const std::map<std::size_t, Integer>& row(std::size_t i) const { return entries_[i]; }
  std::size_t nonzeros() const;

  IntMatrix to_dense() const;
  friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);
  bool is_zero() const { return nonzeros() == 0; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::map<std::size_t, Integer>> entries_;
};

/// Nonzero invariant factors of a sparse matrix: unit pivots are eliminated
/// sparsely, the remaining core goes through dense Smith normal form.
std::vector<Integer> invariant_factors(const SparseIntMatrix& A);

}  // namespace coxtop

#endif
