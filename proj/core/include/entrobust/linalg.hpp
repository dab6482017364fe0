// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace entrobust {

using cplx = std::complex<double>;

// Project-wide numeric contracts. All comparisons are absolute tolerances on
// unit-trace-normalized matrices (entries bounded by 1).
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kBoundaryTol = 1e-10;
inline constexpr std::size_t kMaxOrder = 64;

/// Dense complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols);
  /// Row-major construction from real entries (tests and fixed operators).
  static ComplexMatrix from_real(std::size_t rows, std::size_t cols,
                                 std::initializer_list<double> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<cplx>& data() const { return data_; }
  std::vector<cplx>& data() { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx a);
  ComplexMatrix& operator*=(double a);

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;

  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool is_hermitian(double tol = kHermitianTol) const;
  /// (A + A^H)/2, used to scrub roundoff off operands that are Hermitian by
  /// construction.
  ComplexMatrix hermitian_part() const;
  bool all_finite() const;

 private:
  std::size_t rows_, cols_;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx a, ComplexMatrix m);
ComplexMatrix operator*(double a, ComplexMatrix m);

/// |v><w|
ComplexMatrix outer(const std::vector<cplx>& v, const std::vector<cplx>& w);
cplx inner(const std::vector<cplx>& v, const std::vector<cplx>& w);
std::vector<cplx> mat_vec(const ComplexMatrix& m, const std::vector<cplx>& v);
/// Re tr(A^H B); real for Hermitian pairs.
double inner_frob(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Transpose of the second factor on a dA x dB product space; subsystem 0
/// transposes the first factor instead. Basis order is lexicographic
/// |i>|j> -> i*dB + j throughout the project.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dim_a,
                                std::size_t dim_b, std::size_t subsystem = 1);

struct EigResult {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // orthonormal columns, same order
};

/// Cyclic Jacobi for Hermitian matrices of order <= 64. Reconstruction
/// residual ||m - V L V^H||_F <= 1e-10 ||m||_F; throws std::invalid_argument
/// on non-Hermitian input or excessive order.
EigResult eig_hermitian(const ComplexMatrix& m);

double min_eigenvalue(const ComplexMatrix& m);
double max_eigenvalue(const ComplexMatrix& m);

/// Lower-triangular L with m = L L^H. Returns false if m is not positive
/// definite to working precision.
bool cholesky(const ComplexMatrix& m, ComplexMatrix& L);
/// Solve L y = b (forward) then L^H x = y (backward).
std::vector<cplx> cholesky_solve(const ComplexMatrix& L, const std::vector<cplx>& b);
ComplexMatrix cholesky_inverse(const ComplexMatrix& L);

ComplexMatrix herm_sqrt(const ComplexMatrix& m);
ComplexMatrix herm_inv_sqrt(const ComplexMatrix& m);

/// Complex Hermitian, PSD, unit-trace matrix with a subsystem-dimension
/// signature. Invariants are enforced at construction: Hermitian to 1e-12,
/// trace 1 to 1e-12, min eigenvalue >= -1e-10, product of dims = order.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix m, std::vector<std::size_t> dims);

  const ComplexMatrix& matrix() const { return mat_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t order() const { return mat_.rows(); }
  bool bipartite() const { return dims_.size() == 2; }

  /// Same matrix, re-declared subsystem signature (e.g. [d]*n viewed as
  /// [d, d^(n-1)] for a one-vs-rest cut). Product must match the order.
  DensityMatrix regrouped(std::vector<std::size_t> dims) const;

 private:
  ComplexMatrix mat_;
  std::vector<std::size_t> dims_;
};

/// PT over the given subsystem of a bipartite state. Hermiticity and trace
/// are preserved; the result need not be PSD.
ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem = 1);

}  // namespace entrobust
