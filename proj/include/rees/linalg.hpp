#ifndef REES_LINALG_HPP
#define REES_LINALG_HPP

// Dense linear algebra over an exact field: row reduction, rank, kernel.

#include <cstddef>
#include <vector>

namespace rees {

template <class Field>
class DenseMatrix {
 public:
  using Coeff = typename Field::value_type;

  DenseMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Coeff& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Coeff& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const std::vector<Coeff>& row) {
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
  }

  std::vector<Coeff> row(std::size_t r) const {
    return std::vector<Coeff>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  /// In-place reduced row echelon form; returns the pivot column of each nonzero row.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < cols_ && lead_row < rows_; ++c) {
      std::size_t pr = lead_row;
      while (pr < rows_ && (*this)(pr, c).is_zero()) ++pr;
      if (pr == rows_) continue;
      swap_rows(pr, lead_row);
      Coeff inv = (*this)(lead_row, c).inverse();
      for (std::size_t j = c; j < cols_; ++j) (*this)(lead_row, j) *= inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == lead_row || (*this)(r, c).is_zero()) continue;
        Coeff factor = (*this)(r, c);
        for (std::size_t j = c; j < cols_; ++j) {
          if (!(*this)(lead_row, j).is_zero()) (*this)(r, j) -= factor * (*this)(lead_row, j);
        }
      }
      pivots.push_back(c);
      ++lead_row;
    }
    rows_ = pivots.size();
    data_.resize(rows_ * cols_, field_.zero());
    return pivots;
  }

  std::size_t rank() const {
    DenseMatrix copy = *this;
    return copy.rref().size();
  }

  /// Basis of {x : A x = 0}, one vector per free column, in reduced form:
  /// each vector has a 1 at its free column and 0 at every other free column.
  std::vector<std::vector<Coeff>> kernel() const {
    DenseMatrix reduced = *this;
    std::vector<std::size_t> pivots = reduced.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Coeff>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Coeff> v(cols_, field_.zero());
      v[free] = field_.one();
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Coeff> data_;
};

/// Reduced row echelon basis of the span of `vectors` (all of length `cols`).
template <class Field>
std::vector<std::vector<typename Field::value_type>> row_space_basis(
    const Field& field, std::size_t cols, const std::vector<std::vector<typename Field::value_type>>& vectors) {
  DenseMatrix<Field> m(field, 0, cols);
  for (const auto& v : vectors) m.append_row(v);
  m.rref();
  std::vector<std::vector<typename Field::value_type>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

}  // namespace rees

#endif  // REES_LINALG_HPP
