#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace dq {

/// Accumulates scalar multiplications performed by the numerical routines.
/// Divisions count as multiplications, additions are free; this is the cost
/// unit all solver reports and model formulas share.
struct FlopCounter {
  std::uint64_t multiplications = 0;

  void add(std::uint64_t n) { multiplications += n; }
};

/// Dense real matrix with row-major storage.
///
/// Values are finite on construction (checked); shapes are immutable.
class DenseMatrix {
 public:
  DenseMatrix() = default;

  /// Zero matrix of the given shape.
  DenseMatrix(std::size_t rows, std::size_t cols);

  /// Takes ownership of row-major data; throws ShapeError if the length does
  /// not match and ParameterError if any entry is NaN or infinite.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  const double* row_data(std::size_t i) const { return data_.data() + i * cols_; }
  double* row_data(std::size_t i) { return data_.data() + i * cols_; }
  std::span<const double> row(std::size_t i) const { return {row_data(i), cols_}; }
  std::span<double> row(std::size_t i) { return {row_data(i), cols_}; }

  const std::vector<double>& data() const { return data_; }

  DenseMatrix transposed() const;

  double frobenius_norm() const;
  /// Max absolute row sum.
  double inf_norm() const;
  double max_abs() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Elementwise a + b / a - b; ShapeError on mismatch.
DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix sub(const DenseMatrix& a, const DenseMatrix& b);

/// s * a.
DenseMatrix scaled(const DenseMatrix& a, double s);

/// a + s * I; ShapeError if a is not square.
DenseMatrix shifted_diagonal(const DenseMatrix& a, double s);

/// max_ij |a_ij - b_ij|; ShapeError on mismatch.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace dq
