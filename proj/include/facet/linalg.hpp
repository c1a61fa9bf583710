#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace facet {

using Vector = std::vector<double>;

/// Row-major dense matrix of finite doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);
  /// Throws std::invalid_argument if `entries.size() != rows * cols` or an
  /// entry is not finite.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  static DenseMatrix FromRows(const std::vector<Vector>& rows);
  static DenseMatrix Identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  std::span<const double> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  std::span<const double> entries() const { return entries_; }

  DenseMatrix transposed() const;
  /// Sub-matrix formed by the listed rows, in the listed order.
  DenseMatrix select_rows(std::span<const std::size_t> indices) const;
  Vector multiply(std::span<const double> x) const;
  double max_abs() const;

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

double dot(std::span<const double> a, std::span<const double> b);
double max_abs(std::span<const double> v);

inline constexpr double kDefaultSingularTol = 1e-12;

/// LU factorization with partial (row) pivoting: P * M = L * U, with L unit
/// lower triangular. L and U share storage.
class Factorization {
 public:
  std::size_t size() const { return n_; }
  /// Row i of P*M is row `permutation()[i]` of M.
  std::span<const std::size_t> permutation() const { return perm_; }
  std::span<const double> pivots() const { return pivots_; }
  double min_pivot() const;
  DenseMatrix lower() const;
  DenseMatrix upper() const;

  /// Solves M x = rhs.
  Vector solve_columns(std::span<const double> rhs) const;
  /// Solves y^T M = row, i.e. M^T y = row.
  Vector solve_rows(std::span<const double> row) const;

 private:
  friend std::optional<Factorization> try_factorize(const DenseMatrix&, double,
                                                    std::size_t*);
  std::size_t n_ = 0;
  std::vector<double> lu_;
  std::vector<std::size_t> perm_;
  std::vector<double> pivots_;
};

/// Factorizes a square matrix. A pivot is rejected when its magnitude is at
/// most `tol` times the largest magnitude of that column of the input.
/// Throws SingularError carrying the elimination step.
Factorization factorize(const DenseMatrix& m, double tol = kDefaultSingularTol);

/// Non-throwing variant; on failure optionally stores the step index.
std::optional<Factorization> try_factorize(const DenseMatrix& m,
                                           double tol = kDefaultSingularTol,
                                           std::size_t* failed_step = nullptr);

}  // namespace facet
