// Copyright 2026 The qidt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qidt/error.hpp"

namespace qidt {

using cplx = std::complex<double>;

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
      throw DimensionMismatch("ComplexMatrix: expected " +
                              std::to_string(rows_ * cols_) + " entries, got " +
                              std::to_string(data_.size()));
    }
  }

  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ComplexMatrix: ragged rows");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const double> d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const cplx> entries() const noexcept { return data_; }
  std::span<cplx> entries() noexcept { return data_; }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  cplx trace() const {
    require_square("trace");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_shape(o, "+=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same_shape(o, "-=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }

  ComplexMatrix& operator*=(cplx s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionMismatch("ComplexMatrix: cannot multiply " + a.shape() + " by " +
                              b.shape());
    }
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{}) continue;
        const cplx* brow = &b.data_[k * b.cols_];
        cplx* orow = &out.data_[i * out.cols_];
        for (std::size_t j = 0; j < b.cols_; ++j) orow[j] += aik * brow[j];
      }
    }
    return out;
  }

  std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  void require_square(const char* op) const {
    if (!is_square()) throw DimensionMismatch(std::string("ComplexMatrix::") + op +
                                              ": matrix is " + shape());
  }
  void require_same_shape(const ComplexMatrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw DimensionMismatch(std::string("ComplexMatrix ") + op + ": " + shape() +
                              " vs " + o.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

/// Complex column vector (ket).
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::size_t dim) : amps_(dim) {}
  explicit StateVector(std::vector<cplx> amps) : amps_(std::move(amps)) {}
  StateVector(std::initializer_list<cplx> amps) : amps_(amps) {}

  /// Computational basis vector |k> in dimension `dim`.
  static StateVector basis(std::size_t dim, std::size_t k) {
    if (k >= dim) throw OutOfRange("StateVector::basis: index out of range");
    StateVector v(dim);
    v.amps_[k] = 1.0;
    return v;
  }

  std::size_t dim() const noexcept { return amps_.size(); }
  cplx& operator[](std::size_t k) { return amps_[k]; }
  const cplx& operator[](std::size_t k) const { return amps_[k]; }
  std::span<const cplx> amplitudes() const noexcept { return amps_; }

  double norm_squared() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return s;
  }

  bool is_normalized(double tol = 1e-9) const {
    return std::abs(norm_squared() - 1.0) <= tol;
  }

  StateVector& operator+=(const StateVector& o) {
    if (o.dim() != dim()) throw DimensionMismatch("StateVector +=: dimension mismatch");
    for (std::size_t k = 0; k < amps_.size(); ++k) amps_[k] += o.amps_[k];
    return *this;
  }

  StateVector& operator*=(cplx s) {
    for (auto& a : amps_) a *= s;
    return *this;
  }

  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator*(cplx s, StateVector a) { return a *= s; }

 private:
  std::vector<cplx> amps_;
};

/// <a|b>, antilinear in the first argument.
inline cplx inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("inner: dimension mismatch");
  cplx s = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) s += std::conj(a[k]) * b[k];
  return s;
}

/// |a><b|
inline ComplexMatrix outer(const StateVector& a, const StateVector& b) {
  ComplexMatrix m(a.dim(), b.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < b.dim(); ++c) m(r, c) = a[r] * std::conj(b[c]);
  return m;
}

/// Adds w * |v><v| to m in place.
inline void add_projector(ComplexMatrix& m, const StateVector& v, double w = 1.0) {
  if (m.rows() != v.dim() || m.cols() != v.dim())
    throw DimensionMismatch("add_projector: dimension mismatch");
  for (std::size_t r = 0; r < v.dim(); ++r) {
    const cplx vr = w * v[r];
    for (std::size_t c = 0; c < v.dim(); ++c) m(r, c) += vr * std::conj(v[c]);
  }
}

inline StateVector operator*(const ComplexMatrix& m, const StateVector& v) {
  if (m.cols() != v.dim()) throw DimensionMismatch("matrix-vector: dimension mismatch");
  StateVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    cplx s = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

/// Kronecker product. The left factor owns the most significant index bits:
/// (a (x) b)(ra*rb_rows + rb, ca*cb_cols + cb) = a(ra, ca) * b(rb, cb).
inline ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ra = 0; ra < a.rows(); ++ra)
    for (std::size_t ca = 0; ca < a.cols(); ++ca) {
      const cplx x = a(ra, ca);
      for (std::size_t rb = 0; rb < b.rows(); ++rb)
        for (std::size_t cb = 0; cb < b.cols(); ++cb)
          out(ra * b.rows() + rb, ca * b.cols() + cb) = x * b(rb, cb);
    }
  return out;
}

inline StateVector tensor_product(const StateVector& a, const StateVector& b) {
  StateVector out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  return out;
}

/// max_{r,c} |a(r,c) - b(r,c)|
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("max_abs_diff: shape mismatch " + a.shape() + " vs " + b.shape());
  double m = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) m = std::max(m, std::abs(ea[k] - eb[k]));
  return m;
}

inline double max_abs_diff(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

/// max |a(r,c) - conj(a(c,r))|
inline double hermiticity_defect(const ComplexMatrix& a) {
  if (!a.is_square()) return std::numeric_limits<double>::infinity();
  double m = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = r; c < a.cols(); ++c)
      m = std::max(m, std::abs(a(r, c) - std::conj(a(c, r))));
  return m;
}

/// max |(U^dagger U - I)(r,c)|
inline double unitarity_defect(const ComplexMatrix& u) {
  if (!u.is_square()) return std::numeric_limits<double>::infinity();
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows()));
}

inline double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& x : a.entries()) s += std::norm(x);
  return std::sqrt(s);
}

}  // namespace qidt
