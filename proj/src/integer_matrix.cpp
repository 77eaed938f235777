#include <sstream>

#include "coxtop/errors.hpp"
#include "coxtop/integer_matrix.hpp"

namespace coxtop {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = 1;
  return out;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& columns) {
  IntMatrix out(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw ValidationError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) out.at(i, j) = columns[j][i];
  }
  return out;
}

std::vector<Integer> IntMatrix::column(std::size_t j) const {
  std::vector<Integer> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

std::vector<std::vector<Integer>> IntMatrix::columns() const {
  std::vector<std::vector<Integer>> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

IntMatrix IntMatrix::column_block(std::size_t first, std::size_t count) const {
  IntMatrix out(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out.at(i, j) = at(i, first + j);
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row(std::size_t a, std::size_t b, const Integer& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < cols_; ++j)
    if (at(b, j) != 0) at(a, j) += f * at(b, j);
}

void IntMatrix::add_col(std::size_t a, std::size_t b, const Integer& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < rows_; ++i)
    if (at(i, b) != 0) at(i, a) += f * at(i, b);
}

void IntMatrix::negate_row(std::size_t a) {
  for (std::size_t j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
}

void IntMatrix::negate_col(std::size_t a) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, a) = -at(i, a);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw ValidationError("matrix product dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b.at(k, j) != 0) out.at(i, j) += x * b.at(k, j);
    }
  return out;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    os << "]\n";
  }
  return os.str();
}

void SparseIntMatrix::add(std::size_t i, std::size_t j, const Integer& v) {
  if (i >= rows_ || j >= cols_) throw ValidationError("sparse entry out of range");
  if (v == 0) return;
  auto& row = entries_[i];
  auto [it, inserted] = row.emplace(j, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  }
}

Integer SparseIntMatrix::get(std::size_t i, std::size_t j) const {
  auto it = entries_[i].find(j);
  return it == entries_[i].end() ? Integer(0) : it->second;
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : entries_) n += r.size();
  return n;
}

IntMatrix SparseIntMatrix::to_dense() const {
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [j, v] : entries_[i]) out.at(i, j) = v;
  return out;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols_ != b.rows_) throw ValidationError("matrix product dimension mismatch");
  SparseIntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (const auto& [k, x] : a.entries_[i])
      for (const auto& [j, y] : b.entries_[k]) out.add(i, j, x * y);
  return out;
}

}  // namespace coxtop
