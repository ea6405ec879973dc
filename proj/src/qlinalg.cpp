#include "qlinalg.hpp"

#include <cassert>
#include <stdexcept>

namespace lievec {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::fromRows(const std::vector<QVec> &rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    assert(rows[r].size() == cols);
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = rows[r][c];
  }
  return m;
}

QVec QMatrix::row(std::size_t r) const {
  QVec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    v[c] = at(r, c);
  return v;
}

void QMatrix::appendRow(const QVec &v) {
  assert(v.size() == cols_ || rows_ == 0);
  if (rows_ == 0 && cols_ == 0)
    cols_ = v.size();
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

QMatrix QMatrix::multiply(const QMatrix &other) const {
  assert(cols_ == other.rows_);
  QMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat &a = at(i, k);
      if (lievec::isZero(a))
        continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Rat &b = other.at(k, j);
        if (!lievec::isZero(b))
          out.at(i, j) += a * b;
      }
    }
  return out;
}

QVec QMatrix::apply(const QVec &v) const {
  assert(v.size() == cols_);
  QVec out(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rat &a = at(i, j);
      if (!lievec::isZero(a) && !lievec::isZero(v[j]))
        out[i] += a * v[j];
    }
  return out;
}

QMatrix QMatrix::transposed() const {
  QMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out.at(j, i) = at(i, j);
  return out;
}

bool QMatrix::isZero() const {
  for (const Rat &q : data_)
    if (!lievec::isZero(q))
      return false;
  return true;
}

std::vector<std::size_t> QMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t pivot = rows_;
    for (std::size_t i = r; i < rows_; ++i)
      if (!lievec::isZero(at(i, c))) {
        pivot = i;
        break;
      }
    if (pivot == rows_)
      continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap(at(pivot, j), at(r, j));
    Rat inv = Rat(1) / at(r, c);
    for (std::size_t j = c; j < cols_; ++j)
      at(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || lievec::isZero(at(i, c)))
        continue;
      Rat f = at(i, c);
      for (std::size_t j = c; j < cols_; ++j)
        at(i, j) -= f * at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t QMatrix::rank() const {
  QMatrix copy = *this;
  return copy.rref().size();
}

Rat QMatrix::trace() const {
  assert(rows_ == cols_);
  Rat t(0);
  for (std::size_t i = 0; i < rows_; ++i)
    t += at(i, i);
  return t;
}

std::optional<QVec> QMatrix::solve(const QVec &b) const {
  assert(b.size() == rows_);
  QMatrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j)
      aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_)
    return std::nullopt; // pivot in the RHS column: inconsistent
  QVec x(cols_, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = aug.at(r, cols_);
  return x;
}

std::optional<QMatrix> QMatrix::solveMany(const QMatrix &B) const {
  assert(B.rows() == rows_);
  QMatrix aug(rows_, cols_ + B.cols());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j)
      aug.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < B.cols(); ++j)
      aug.at(i, cols_ + j) = B.at(i, j);
  }
  auto pivots = aug.rref();
  std::size_t nPivots = 0;
  for (auto c : pivots) {
    if (c >= cols_)
      return std::nullopt;
    ++nPivots;
  }
  QMatrix X(cols_, B.cols());
  for (std::size_t r = 0; r < nPivots; ++r)
    for (std::size_t j = 0; j < B.cols(); ++j)
      X.at(pivots[r], j) = aug.at(r, cols_ + j);
  return X;
}

bool QMatrix::isNilpotentMatrix() const {
  assert(rows_ == cols_);
  QMatrix power = *this;
  for (std::size_t k = 1; k < rows_; ++k) {
    if (power.isZero())
      return true;
    power = power.multiply(*this);
  }
  return power.isZero();
}

std::vector<QVec> QMatrix::kernelBasis() const {
  QMatrix copy = *this;
  auto pivots = copy.rref();
  std::vector<bool> isPivot(cols_, false);
  for (auto c : pivots)
    isPivot[c] = true;
  std::vector<QVec> basis;
  for (std::size_t freeCol = 0; freeCol < cols_; ++freeCol) {
    if (isPivot[freeCol])
      continue;
    QVec v(cols_, Rat(0));
    v[freeCol] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -copy.at(r, freeCol);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QMatrix> QMatrix::inverse() const {
  assert(rows_ == cols_);
  std::size_t n = rows_;
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto pivots = aug.rref();
  if (pivots.size() != n || pivots[n - 1] != n - 1)
    return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

QVec SpanBuilder::reduce(QVec v) const {
  assert(v.size() == cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat &c = v[pivots_[r]];
    if (!lievec::isZero(c))
      addScaled(v, rows_[r], -c);
  }
  return v;
}

bool SpanBuilder::insert(const QVec &v) {
  QVec res = reduce(v);
  std::size_t p = cols_;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!lievec::isZero(res[c])) {
      p = c;
      break;
    }
  if (p == cols_)
    return false;
  Rat inv = Rat(1) / res[p];
  for (auto &q : res)
    q *= inv;
  // keep earlier rows reduced against the new pivot
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat &c = rows_[r][p];
    if (!lievec::isZero(c))
      addScaled(rows_[r], res, -c);
  }
  rows_.push_back(std::move(res));
  pivots_.push_back(p);
  // keep rows sorted by pivot column so echelonRows() is canonical
  for (std::size_t i = rows_.size(); i-- > 1;) {
    if (pivots_[i] < pivots_[i - 1]) {
      std::swap(pivots_[i], pivots_[i - 1]);
      std::swap(rows_[i], rows_[i - 1]);
    } else {
      break;
    }
  }
  return true;
}

bool SpanBuilder::contains(const QVec &v) const { return isZeroVec(reduce(v)); }

bool isZeroVec(const QVec &v) {
  for (const Rat &q : v)
    if (!lievec::isZero(q))
      return false;
  return true;
}

QVec scaled(const QVec &v, const Rat &c) {
  QVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = v[i] * c;
  return out;
}

void addScaled(QVec &dst, const QVec &src, const Rat &c) {
  assert(dst.size() == src.size());
  if (lievec::isZero(c))
    return;
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] += src[i] * c;
}

} // namespace lievec
