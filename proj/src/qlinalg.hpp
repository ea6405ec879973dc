#ifndef LIEVEC_QLINALG_HPP
#define LIEVEC_QLINALG_HPP

#include "rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lievec {

using QVec = std::vector<Rat>;

/// Dense rational matrix with exact Gauss-Jordan elimination.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static QMatrix identity(std::size_t n);
  static QMatrix fromRows(const std::vector<QVec> &rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat &at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat &at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  QVec row(std::size_t r) const;
  void appendRow(const QVec &v);

  QMatrix multiply(const QMatrix &other) const;
  QVec apply(const QVec &v) const; // matrix * column vector
  QMatrix transposed() const;
  bool isZero() const;

  // In-place reduced row echelon form; returns pivot column per pivot row.
  std::vector<std::size_t> rref();

  std::size_t rank() const;
  Rat trace() const;

  // Solves A x = b exactly; nullopt when inconsistent. Free variables are 0.
  std::optional<QVec> solve(const QVec &b) const;

  // Solves A X = B for every column of B at once; nullopt when any column
  // is inconsistent.
  std::optional<QMatrix> solveMany(const QMatrix &B) const;

  // True when M^rows == 0 (square matrices only).
  bool isNilpotentMatrix() const;

  // Basis of the right kernel {x : A x = 0}, deterministic order.
  std::vector<QVec> kernelBasis() const;

  // Inverse of a square matrix; nullopt when singular.
  std::optional<QMatrix> inverse() const;

  bool operator==(const QMatrix &o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  QVec data_;
};

/// Incremental row-space builder: keeps an echelonized copy of the rows fed
/// in so far, so independence tests are a single reduction pass.
class SpanBuilder {
public:
  explicit SpanBuilder(std::size_t cols) : cols_(cols) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  // Reduces v against the current span; returns the residual.
  QVec reduce(QVec v) const;

  // Adds v if independent of the span; returns true when added.
  bool insert(const QVec &v);

  bool contains(const QVec &v) const;

  // Echelon rows (not the originally inserted vectors).
  const std::vector<QVec> &echelonRows() const { return rows_; }

private:
  std::size_t cols_;
  std::vector<QVec> rows_;        // echelon rows, pivot normalized to 1
  std::vector<std::size_t> pivots_; // pivot column per row
};

bool isZeroVec(const QVec &v);
QVec scaled(const QVec &v, const Rat &c);
void addScaled(QVec &dst, const QVec &src, const Rat &c);

} // namespace lievec

#endif
