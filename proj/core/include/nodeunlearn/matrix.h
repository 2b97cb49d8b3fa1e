// Copyright 2026 The nodeunlearn Authors.
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

#ifndef NODEUNLEARN_MATRIX_H_
#define NODEUNLEARN_MATRIX_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace nodeunlearn {

// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static Matrix Identity(std::size_t n);
  static Matrix FromRows(
      std::initializer_list<std::initializer_list<double>> rows);
  // Single-column matrix holding `values`.
  static Matrix Column(std::span<const double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<double> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }
  const std::vector<double>& values() const { return data_; }

  Matrix Transpose() const;
  bool AllFinite() const;
  void Fill(double value);

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(double scale);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Matrix a, double scale);
Matrix operator*(double scale, Matrix a);

// a * b
Matrix MatMul(const Matrix& a, const Matrix& b);
// a^T * b
Matrix MatMulTransA(const Matrix& a, const Matrix& b);
// a * b^T
Matrix MatMulTransB(const Matrix& a, const Matrix& b);
// a * x
std::vector<double> MatVec(const Matrix& a, std::span<const double> x);
// a^T * x
std::vector<double> MatTransVec(const Matrix& a, std::span<const double> x);

// Rows of `m` selected by `ids`, in order.
template <typename Id>
Matrix GatherRows(const Matrix& m, std::span<const Id> ids) {
  Matrix out(ids.size(), m.cols());
  for (std::size_t k = 0; k < ids.size(); ++k) {
    auto src = m.row(static_cast<std::size_t>(ids[k]));
    auto dst = out.row(k);
    for (std::size_t c = 0; c < src.size(); ++c) dst[c] = src[c];
  }
  return out;
}

double FrobeniusNorm(const Matrix& m);
double Norm2(std::span<const double> v);
double Dot(std::span<const double> a, std::span<const double> b);
// Largest |a_ij - b_ij|; shapes must agree.
double MaxAbsDiff(const Matrix& a, const Matrix& b);

// Index of the largest entry; the lowest index wins ties.
std::size_t ArgMax(std::span<const double> v);

// Square sparse matrix in compressed sparse row form.
class CsrMatrix {
 public:
  CsrMatrix() = default;
  CsrMatrix(std::size_t n, std::vector<std::size_t> row_ptr,
            std::vector<std::size_t> col_idx, std::vector<double> values);

  std::size_t rows() const { return n_; }
  std::size_t cols() const { return n_; }
  std::size_t nnz() const { return values_.size(); }
  const std::vector<std::size_t>& row_ptr() const { return row_ptr_; }
  const std::vector<std::size_t>& col_idx() const { return col_idx_; }
  const std::vector<double>& values() const { return values_; }

  // Entry lookup by binary search over the row; zero if absent.
  double At(std::size_t r, std::size_t c) const;
  // this * dense
  Matrix Multiply(const Matrix& dense) const;
  Matrix ToDense() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::size_t> col_idx_;
  std::vector<double> values_;
};

}  // namespace nodeunlearn

#endif  // NODEUNLEARN_MATRIX_H_
