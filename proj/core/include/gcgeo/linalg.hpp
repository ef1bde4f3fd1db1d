#pragma once

#include "gcgeo/poly.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace gcgeo {

// Dense exact matrix over the Gaussian rationals.
class ScalarMatrix {
public:
  ScalarMatrix() = default;
  ScalarMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ScalarMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  ScalarMatrix transpose() const;
  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  size_t rank() const;
  // Basis of the right kernel {x : Ax = 0}.
  std::vector<std::vector<Scalar>> kernel() const;
  // One solution of Ax = b, if consistent.
  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;
  Scalar det() const;
  std::optional<ScalarMatrix> inverse() const;

private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

// Do the given vectors span the same subspace (exact ranks)?
bool same_span(const std::vector<std::vector<Scalar>>& a,
               const std::vector<std::vector<Scalar>>& b);

// Square matrix of Poly entries acting on an explicit ordered frame.
class PolyMatrix {
public:
  PolyMatrix() = default;
  PolyMatrix(size_t n, unsigned nvars)
      : n_(n), data_(n * n, Poly(nvars)), nvars_(nvars) {}

  static PolyMatrix identity(size_t n, unsigned nvars);

  size_t size() const { return n_; }
  unsigned nvars() const { return nvars_; }
  Poly& at(size_t r, size_t c) { return data_[r * n_ + c]; }
  const Poly& at(size_t r, size_t c) const { return data_[r * n_ + c]; }

  PolyMatrix transpose() const;
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  PolyMatrix operator-() const;
  friend PolyMatrix operator*(const PolyMatrix& a, const Scalar& c);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

  bool is_zero() const;
  std::vector<Poly> apply(const std::vector<Poly>& v) const;
  ScalarMatrix eval(const std::vector<Scalar>& point) const;
  ScalarMatrix constant_part() const;  // requires all entries constant
  bool all_constant() const;

private:
  size_t n_ = 0;
  std::vector<Poly> data_;
  unsigned nvars_ = 0;
};

}  // namespace gcgeo
