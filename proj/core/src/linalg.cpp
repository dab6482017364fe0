// SPDX-License-Identifier: Apache-2.0
#include "entrobust/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace entrobust {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::from_real(std::size_t rows, std::size_t cols,
                                       std::initializer_list<double> entries) {
  if (entries.size() != rows * cols)
    throw std::invalid_argument("from_real: entry count mismatch");
  ComplexMatrix m(rows, cols);
  std::size_t k = 0;
  for (double e : entries) m.data()[k++] = e;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch in +=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch in -=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx a) {
  for (auto& e : data_) e *= a;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double a) {
  for (auto& e : data_) e *= a;
  return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = std::conj(data_[k]);
  return r;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& e : data_) s += std::norm(e);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double s = 0.0;
  for (const auto& e : data_) s = std::max(s, std::abs(e));
  return s;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (std::abs((*this)(i, i).imag()) > tol) return false;
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  }
  return true;
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
  if (!square()) throw std::invalid_argument("hermitian_part: not square");
  ComplexMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
  return r;
}

bool ComplexMatrix::all_finite() const {
  for (const auto& e : data_)
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  return true;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in *");
  ComplexMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

ComplexMatrix operator*(cplx a, ComplexMatrix m) { return m *= a; }
ComplexMatrix operator*(double a, ComplexMatrix m) { return m *= a; }

ComplexMatrix outer(const std::vector<cplx>& v, const std::vector<cplx>& w) {
  ComplexMatrix r(v.size(), w.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) r(i, j) = v[i] * std::conj(w[j]);
  return r;
}

cplx inner(const std::vector<cplx>& v, const std::vector<cplx>& w) {
  if (v.size() != w.size()) throw std::invalid_argument("vector size mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += std::conj(v[i]) * w[i];
  return s;
}

std::vector<cplx> mat_vec(const ComplexMatrix& m, const std::vector<cplx>& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("mat_vec shape mismatch");
  std::vector<cplx> r(m.rows(), cplx(0.0, 0.0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
  return r;
}

double inner_frob(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("inner_frob shape mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    s += (std::conj(a.data()[k]) * b.data()[k]).real();
  return s;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const cplx f = a(ia, ja);
      if (f == cplx(0.0, 0.0)) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          r(ia * b.rows() + ib, ja * b.cols() + jb) = f * b(ib, jb);
    }
  return r;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dim_a,
                                std::size_t dim_b, std::size_t subsystem) {
  if (m.rows() != dim_a * dim_b || !m.square())
    throw std::invalid_argument("partial_transpose: dims do not match order");
  if (subsystem > 1)
    throw std::invalid_argument("partial_transpose: invalid subsystem index");
  ComplexMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_b; ++j)
      for (std::size_t k = 0; k < dim_a; ++k)
        for (std::size_t l = 0; l < dim_b; ++l) {
          if (subsystem == 1)
            r(i * dim_b + j, k * dim_b + l) = m(i * dim_b + l, k * dim_b + j);
          else
            r(i * dim_b + j, k * dim_b + l) = m(k * dim_b + j, i * dim_b + l);
        }
  return r;
}

namespace {

// One cyclic Jacobi sweep pass; returns the off-diagonal Frobenius mass.
double offdiag_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) s += 2.0 * std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

EigResult eig_hermitian(const ComplexMatrix& m) {
  if (!m.square()) throw std::invalid_argument("eig_hermitian: not square");
  if (m.rows() > kMaxOrder) throw std::invalid_argument("eig_hermitian: order > 64");
  if (!m.is_hermitian(1e-10))
    throw std::invalid_argument("eig_hermitian: input not Hermitian to 1e-10");

  const std::size_t n = m.rows();
  ComplexMatrix a = m.hermitian_part();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(a.frobenius_norm(), 1e-300);
  const double stop = 1e-15 * scale;
  const int max_sweeps = 60;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (offdiag_norm(a) <= stop) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double abs_apq = std::abs(apq);
        if (abs_apq <= 1e-18 * scale) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Phase so the rotated off-diagonal element is real, then a real
        // Jacobi rotation.
        const cplx phase = apq / abs_apq;
        const double tau = (aqq - app) / (2.0 * abs_apq);
        double t;
        if (tau >= 0)
          t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
        else
          t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx sp = s * phase;  // J = [[c, sp],[-conj(sp), c]] acting on (p,q)

        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - std::conj(sp) * akq;
          a(k, q) = sp * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sp * aqk;
          a(q, k) = std::conj(sp) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = cplx(a(p, p).real(), 0.0);
        a(q, q) = cplx(a(q, q).real(), 0.0);
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - std::conj(sp) * vkq;
          v(k, q) = sp * vkp + c * vkq;
        }
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  EigResult r;
  r.values.resize(n);
  r.vectors = ComplexMatrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    r.values[c] = a(order[c], order[c]).real();
    for (std::size_t k = 0; k < n; ++k) r.vectors(k, c) = v(k, order[c]);
  }
  return r;
}

double min_eigenvalue(const ComplexMatrix& m) {
  return eig_hermitian(m).values.back();
}

double max_eigenvalue(const ComplexMatrix& m) {
  return eig_hermitian(m).values.front();
}

bool cholesky(const ComplexMatrix& m, ComplexMatrix& L) {
  if (!m.square()) throw std::invalid_argument("cholesky: not square");
  const std::size_t n = m.rows();
  L = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = m(j, j).real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(L(j, k));
    if (!(d > 0.0) || !std::isfinite(d)) return false;
    const double ljj = std::sqrt(d);
    L(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= L(i, k) * std::conj(L(j, k));
      L(i, j) = s / ljj;
    }
  }
  return true;
}

std::vector<cplx> cholesky_solve(const ComplexMatrix& L, const std::vector<cplx>& b) {
  const std::size_t n = L.rows();
  std::vector<cplx> y(b);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) y[i] -= L(i, k) * y[k];
    y[i] /= L(i, i);
  }
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t k = ii + 1; k < n; ++k) y[ii] -= std::conj(L(k, ii)) * y[k];
    y[ii] /= L(ii, ii);
  }
  return y;
}

ComplexMatrix cholesky_inverse(const ComplexMatrix& L) {
  const std::size_t n = L.rows();
  ComplexMatrix inv(n, n);
  std::vector<cplx> e(n, cplx(0.0, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(e.begin(), e.end(), cplx(0.0, 0.0));
    e[j] = 1.0;
    auto col = cholesky_solve(L, e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv.hermitian_part();
}

namespace {

ComplexMatrix eig_apply(const ComplexMatrix& m, double (*f)(double)) {
  EigResult e = eig_hermitian(m);
  const std::size_t n = m.rows();
  ComplexMatrix r(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const double fv = f(std::max(e.values[c], 0.0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        r(i, j) += fv * e.vectors(i, c) * std::conj(e.vectors(j, c));
  }
  return r.hermitian_part();
}

}  // namespace

ComplexMatrix herm_sqrt(const ComplexMatrix& m) {
  return eig_apply(m, [](double x) { return std::sqrt(x); });
}

ComplexMatrix herm_inv_sqrt(const ComplexMatrix& m) {
  return eig_apply(m, [](double x) { return x > 0.0 ? 1.0 / std::sqrt(x) : 0.0; });
}

DensityMatrix::DensityMatrix(ComplexMatrix m, std::vector<std::size_t> dims)
    : mat_(std::move(m)), dims_(std::move(dims)) {
  if (!mat_.square()) throw std::invalid_argument("DensityMatrix: not square");
  if (!mat_.all_finite()) throw std::invalid_argument("DensityMatrix: non-finite entries");
  std::size_t prod = 1;
  for (std::size_t d : dims_) prod *= d;
  if (dims_.empty() || prod != mat_.rows())
    throw std::invalid_argument("DensityMatrix: dims do not multiply to the order");
  if (!mat_.is_hermitian(kHermitianTol))
    throw std::invalid_argument("DensityMatrix: not Hermitian to 1e-12");
  if (std::abs(mat_.trace().real() - 1.0) > kTraceTol ||
      std::abs(mat_.trace().imag()) > kTraceTol)
    throw std::invalid_argument("DensityMatrix: trace != 1 to 1e-12");
  if (min_eigenvalue(mat_) < -kPsdTol)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue below -1e-10");
}

DensityMatrix DensityMatrix::regrouped(std::vector<std::size_t> dims) const {
  std::size_t prod = 1;
  for (std::size_t d : dims) prod *= d;
  if (prod != order())
    throw std::invalid_argument("regrouped: dims do not multiply to the order");
  return DensityMatrix(mat_, std::move(dims));
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem) {
  if (!rho.bipartite())
    throw std::invalid_argument("partial_transpose: exactly two subsystems required");
  return partial_transpose(rho.matrix(), rho.dims()[0], rho.dims()[1], subsystem);
}

}  // namespace entrobust
