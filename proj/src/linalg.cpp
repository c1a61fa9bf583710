#include "facet/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "facet/errors.hpp"

namespace facet {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols,
                         std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw std::invalid_argument("DenseMatrix: entry count does not match shape");
  }
  for (double v : entries_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("DenseMatrix: non-finite entry");
    }
  }
}

DenseMatrix DenseMatrix::FromRows(const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<double> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) {
      throw std::invalid_argument("DenseMatrix: ragged rows");
    }
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return DenseMatrix(rows.size(), cols, std::move(entries));
}

DenseMatrix DenseMatrix::Identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrix DenseMatrix::select_rows(
    std::span<const std::size_t> indices) const {
  DenseMatrix sub(indices.size(), cols_);
  for (std::size_t r = 0; r < indices.size(); ++r) {
    assert(indices[r] < rows_);
    std::copy_n(entries_.begin() + indices[r] * cols_, cols_,
                sub.entries_.begin() + r * cols_);
  }
  return sub;
}

Vector DenseMatrix::multiply(std::span<const double> x) const {
  assert(x.size() == cols_);
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = dot(row(i), x);
  return out;
}

double DenseMatrix::max_abs() const { return facet::max_abs(entries_); }

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double Factorization::min_pivot() const {
  double m = pivots_.empty() ? 0.0 : std::abs(pivots_.front());
  for (double p : pivots_) m = std::min(m, std::abs(p));
  return m;
}

DenseMatrix Factorization::lower() const {
  DenseMatrix l(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < i; ++j) l(i, j) = lu_[i * n_ + j];
    l(i, i) = 1.0;
  }
  return l;
}

DenseMatrix Factorization::upper() const {
  DenseMatrix u(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) u(i, j) = lu_[i * n_ + j];
  return u;
}

Vector Factorization::solve_columns(std::span<const double> rhs) const {
  assert(rhs.size() == n_);
  // L z = P rhs, then U x = z.
  Vector x(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    double s = rhs[perm_[i]];
    for (std::size_t j = 0; j < i; ++j) s -= lu_[i * n_ + j] * x[j];
    x[i] = s;
  }
  for (std::size_t i = n_; i-- > 0;) {
    double s = x[i];
    for (std::size_t j = i + 1; j < n_; ++j) s -= lu_[i * n_ + j] * x[j];
    x[i] = s / lu_[i * n_ + i];
  }
  return x;
}

Vector Factorization::solve_rows(std::span<const double> row) const {
  assert(row.size() == n_);
  // M^T = U^T L^T P: solve U^T w = row, L^T v = w, then y = P^T v.
  Vector w(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    double s = row[i];
    for (std::size_t j = 0; j < i; ++j) s -= lu_[j * n_ + i] * w[j];
    w[i] = s / lu_[i * n_ + i];
  }
  for (std::size_t i = n_; i-- > 0;) {
    double s = w[i];
    for (std::size_t j = i + 1; j < n_; ++j) s -= lu_[j * n_ + i] * w[j];
    w[i] = s;
  }
  Vector y(n_);
  for (std::size_t i = 0; i < n_; ++i) y[perm_[i]] = w[i];
  return y;
}

std::optional<Factorization> try_factorize(const DenseMatrix& m, double tol,
                                           std::size_t* failed_step) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument("factorize: matrix must be square and non-empty");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("factorize: tol must be > 0");

  const std::size_t n = m.rows();
  Factorization f;
  f.n_ = n;
  f.lu_.assign(m.entries().begin(), m.entries().end());
  f.perm_.resize(n);
  std::iota(f.perm_.begin(), f.perm_.end(), std::size_t{0});
  f.pivots_.resize(n);

  auto& a = f.lu_;
  for (std::size_t k = 0; k < n; ++k) {
    double column_scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      column_scale = std::max(column_scale, std::abs(m(i, k)));

    std::size_t best = k;
    double best_mag = std::abs(a[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double mag = std::abs(a[i * n + k]);
      if (mag > best_mag) {
        best = i;
        best_mag = mag;
      }
    }
    if (best_mag <= tol * column_scale || best_mag == 0.0) {
      if (failed_step != nullptr) *failed_step = k;
      return std::nullopt;
    }
    if (best != k) {
      std::swap_ranges(a.begin() + k * n, a.begin() + (k + 1) * n,
                       a.begin() + best * n);
      std::swap(f.perm_[k], f.perm_[best]);
    }
    const double pivot = a[k * n + k];
    f.pivots_[k] = pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = a[i * n + k] / pivot;
      a[i * n + k] = factor;
      if (factor == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= factor * a[k * n + j];
    }
  }
  return f;
}

Factorization factorize(const DenseMatrix& m, double tol) {
  std::size_t step = 0;
  auto f = try_factorize(m, tol, &step);
  if (!f) throw SingularError(step);
  return std::move(*f);
}

}  // namespace facet
