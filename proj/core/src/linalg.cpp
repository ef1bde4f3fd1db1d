#include "gcgeo/linalg.hpp"

#include "gcgeo/error.hpp"

namespace gcgeo {

ScalarMatrix ScalarMatrix::identity(size_t n) {
  ScalarMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols_ != b.rows_) fail(errc::input, "matrix product shape mismatch");
  ScalarMatrix r(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

namespace {

// Row-reduce in place; returns pivot column per pivot row.
std::vector<size_t> rref(ScalarMatrix& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t sel = row;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (size_t c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
    Scalar inv = m.at(row, col).inverse();
    for (size_t c = col; c < m.cols(); ++c) m.at(row, c) = m.at(row, c) * inv;
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      Scalar f = m.at(r, col);
      for (size_t c = col; c < m.cols(); ++c)
        m.at(r, c) = m.at(r, c) - f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

size_t ScalarMatrix::rank() const {
  ScalarMatrix m = *this;
  return rref(m).size();
}

std::vector<std::vector<Scalar>> ScalarMatrix::kernel() const {
  ScalarMatrix m = *this;
  std::vector<size_t> pivots = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (size_t p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Scalar>> basis;
  for (size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_);
    v[free] = Scalar(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> ScalarMatrix::solve(const std::vector<Scalar>& b) const {
  if (b.size() != rows_) fail(errc::input, "solve: rhs size mismatch");
  ScalarMatrix aug(rows_, cols_ + 1);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = b[r];
  }
  std::vector<size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
  std::vector<Scalar> x(cols_);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
  return x;
}

Scalar ScalarMatrix::det() const {
  if (rows_ != cols_) fail(errc::input, "determinant of non-square matrix");
  ScalarMatrix m = *this;
  Scalar d(1);
  for (size_t col = 0; col < cols_; ++col) {
    size_t sel = col;
    while (sel < rows_ && m.at(sel, col).is_zero()) ++sel;
    if (sel == rows_) return Scalar(0);
    if (sel != col) {
      for (size_t c = 0; c < cols_; ++c) std::swap(m.at(sel, c), m.at(col, c));
      d = -d;
    }
    d = d * m.at(col, col);
    Scalar inv = m.at(col, col).inverse();
    for (size_t r = col + 1; r < rows_; ++r) {
      if (m.at(r, col).is_zero()) continue;
      Scalar f = m.at(r, col) * inv;
      for (size_t c = col; c < cols_; ++c) m.at(r, c) = m.at(r, c) - f * m.at(col, c);
    }
  }
  return d;
}

std::optional<ScalarMatrix> ScalarMatrix::inverse() const {
  if (rows_ != cols_) fail(errc::input, "inverse of non-square matrix");
  ScalarMatrix aug(rows_, 2 * cols_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_ + r) = Scalar(1);
  }
  std::vector<size_t> pivots = rref(aug);
  if (pivots.size() != rows_ || pivots.back() >= cols_) return std::nullopt;
  ScalarMatrix inv(rows_, cols_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
  return inv;
}

bool same_span(const std::vector<std::vector<Scalar>>& a,
               const std::vector<std::vector<Scalar>>& b) {
  if (a.empty() && b.empty()) return true;
  size_t cols = a.empty() ? b[0].size() : a[0].size();
  auto stack = [&](const std::vector<std::vector<Scalar>>& rows) {
    ScalarMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) fail(errc::input, "same_span: ragged input");
      for (size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
  };
  size_t ra = stack(a).rank();
  size_t rb = stack(b).rank();
  if (ra != rb) return false;
  std::vector<std::vector<Scalar>> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return stack(both).rank() == ra;
}

PolyMatrix PolyMatrix::identity(size_t n, unsigned nvars) {
  PolyMatrix m(n, nvars);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Poly(nvars, Scalar(1));
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(n_, nvars_);
  for (size_t r = 0; r < n_; ++r)
    for (size_t c = 0; c < n_; ++c) t.at(c, r) = at(r, c);
  return t;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.n_ != b.n_) fail(errc::input, "matrix product shape mismatch");
  PolyMatrix r(a.n_, a.nvars_);
  for (size_t i = 0; i < a.n_; ++i)
    for (size_t k = 0; k < a.n_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (size_t j = 0; j < a.n_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.n_ != b.n_) fail(errc::input, "matrix sum shape mismatch");
  PolyMatrix r = a;
  for (size_t i = 0; i < a.n_ * a.n_; ++i) r.data_[i] += b.data_[i];
  return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.n_ != b.n_) fail(errc::input, "matrix difference shape mismatch");
  PolyMatrix r = a;
  for (size_t i = 0; i < a.n_ * a.n_; ++i) r.data_[i] -= b.data_[i];
  return r;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix r = *this;
  for (auto& p : r.data_) p = -p;
  return r;
}

PolyMatrix operator*(const PolyMatrix& a, const Scalar& c) {
  PolyMatrix r = a;
  for (auto& p : r.data_) p = p * c;
  return r;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

std::vector<Poly> PolyMatrix::apply(const std::vector<Poly>& v) const {
  if (v.size() != n_) fail(errc::input, "matrix apply shape mismatch");
  std::vector<Poly> out(n_, Poly(nvars_));
  for (size_t r = 0; r < n_; ++r)
    for (size_t c = 0; c < n_; ++c) {
      if (at(r, c).is_zero() || v[c].is_zero()) continue;
      out[r] += at(r, c) * v[c];
    }
  return out;
}

ScalarMatrix PolyMatrix::eval(const std::vector<Scalar>& point) const {
  ScalarMatrix m(n_, n_);
  for (size_t r = 0; r < n_; ++r)
    for (size_t c = 0; c < n_; ++c) m.at(r, c) = at(r, c).eval(point);
  return m;
}

ScalarMatrix PolyMatrix::constant_part() const {
  ScalarMatrix m(n_, n_);
  for (size_t r = 0; r < n_; ++r)
    for (size_t c = 0; c < n_; ++c) m.at(r, c) = at(r, c).constant_value();
  return m;
}

bool PolyMatrix::all_constant() const {
  for (const auto& p : data_)
    if (!p.is_constant()) return false;
  return true;
}

}  // namespace gcgeo
