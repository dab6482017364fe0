// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "entrobust/linalg.hpp"
#include "entrobust/sampling.hpp"
#include "entrobust/states.hpp"

using namespace entrobust;

namespace {

ComplexMatrix pauli_y() {
  ComplexMatrix y(2, 2);
  y(0, 1) = cplx(0.0, -1.0);
  y(1, 0) = cplx(0.0, 1.0);
  return y;
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = rng.normal();
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = cplx(rng.normal(), rng.normal());
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

ComplexMatrix random_matrix(std::size_t r, std::size_t c, Rng& rng) {
  ComplexMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = cplx(rng.normal(), rng.normal());
  return m;
}

}  // namespace

TEST_CASE("kron: identity, pauli pair, shapes") {
  ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK((kron(i2, i2) - ComplexMatrix::identity(4)).max_abs() == 0.0);

  ComplexMatrix yy = kron(pauli_y(), pauli_y());
  ComplexMatrix expect = ComplexMatrix::from_real(4, 4,
                                                  {0, 0, 0, -1,  //
                                                   0, 0, 1, 0,   //
                                                   0, 1, 0, 0,   //
                                                   -1, 0, 0, 0});
  CHECK((yy - expect).max_abs() < 1e-15);

  Rng rng(1);
  ComplexMatrix a = random_matrix(2, 3, rng);
  ComplexMatrix b = random_matrix(3, 2, rng);
  ComplexMatrix k = kron(a, b);
  CHECK(k.rows() == 6);
  CHECK(k.cols() == 6);
}

TEST_CASE("kron: mixed product and associativity") {
  Rng rng(2);
  ComplexMatrix a = random_matrix(2, 2, rng), b = random_matrix(3, 3, rng);
  ComplexMatrix c = random_matrix(2, 2, rng), d = random_matrix(3, 3, rng);
  ComplexMatrix lhs = kron(a, b) * kron(c, d);
  ComplexMatrix rhs = kron(a * c, b * d);
  CHECK((lhs - rhs).max_abs() < 1e-12);

  ComplexMatrix e = random_matrix(2, 2, rng);
  CHECK((kron(kron(a, b), e) - kron(a, kron(b, e))).max_abs() < 1e-12);
}

TEST_CASE("partial transpose: product states stay PSD") {
  Rng rng(3);
  ComplexMatrix ga = random_matrix(2, 2, rng), gb = random_matrix(3, 3, rng);
  ComplexMatrix ra = ga * ga.adjoint();
  ComplexMatrix rb = gb * gb.adjoint();
  ra *= 1.0 / ra.trace().real();
  rb *= 1.0 / rb.trace().real();
  DensityMatrix rho(kron(ra, rb).hermitian_part(), {2, 3});
  ComplexMatrix pt = partial_transpose(rho);
  CHECK((pt - kron(ra, rb.transpose())).max_abs() < 1e-14);
  CHECK(min_eigenvalue(pt) > -1e-12);
}

TEST_CASE("partial transpose: singlet and involution") {
  auto bell = bell_basis_2x2();
  DensityMatrix singlet(outer(bell[3], bell[3]).hermitian_part(), {2, 2});
  CHECK(min_eigenvalue(partial_transpose(singlet)) == doctest::Approx(-0.5).epsilon(1e-12));

  Rng rng(4);
  DensityMatrix rho = sample_density({2, 3}, rng);
  ComplexMatrix pt = partial_transpose(rho);
  CHECK(std::abs(pt.trace().real() - 1.0) < 1e-14);
  CHECK(pt.is_hermitian(1e-14));
  ComplexMatrix back = partial_transpose(pt, 2, 3, 1);
  CHECK((back - rho.matrix()).max_abs() < 1e-15);

  // transposing the first factor instead matches full transpose of PT
  ComplexMatrix pt0 = partial_transpose(rho.matrix(), 2, 3, 0);
  CHECK((pt0 - pt.transpose()).max_abs() < 1e-15);
  CHECK_THROWS_AS(partial_transpose(rho.matrix(), 2, 3, 2), std::invalid_argument);
}

TEST_CASE("eig_hermitian: identity and diagonal") {
  EigResult e = eig_hermitian(ComplexMatrix::identity(4));
  for (double v : e.values) CHECK(v == doctest::Approx(1.0));

  ComplexMatrix d(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  d(2, 2) = 2.0;
  EigResult ed = eig_hermitian(d);
  CHECK(ed.values[0] == doctest::Approx(3.0));
  CHECK(ed.values[1] == doctest::Approx(2.0));
  CHECK(ed.values[2] == doctest::Approx(1.0));
  CHECK(std::abs(ed.vectors(0, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(ed.vectors(2, 1)) == doctest::Approx(1.0));
}

TEST_CASE("eig_hermitian: reconstruction and orthonormality on random input") {
  Rng rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 7);
    ComplexMatrix m = random_hermitian(n, rng);
    EigResult e = eig_hermitian(m);
    ComplexMatrix recon(n, n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          recon(i, j) += e.values[c] * e.vectors(i, c) * std::conj(e.vectors(j, c));
    CHECK((recon - m).frobenius_norm() <= 1e-10 * m.frobenius_norm());
    ComplexMatrix vv = e.vectors.adjoint() * e.vectors;
    CHECK((vv - ComplexMatrix::identity(n)).max_abs() < 1e-12);
    for (std::size_t c = 1; c < n; ++c) CHECK(e.values[c - 1] >= e.values[c]);
  }
}

TEST_CASE("eig_hermitian: rejects bad input") {
  Rng rng(6);
  ComplexMatrix nonherm = random_matrix(3, 3, rng);
  CHECK_THROWS_AS(eig_hermitian(nonherm), std::invalid_argument);
  CHECK_THROWS_AS(eig_hermitian(ComplexMatrix::identity(65)), std::invalid_argument);
}

TEST_CASE("cholesky, solve, sqrt") {
  Rng rng(7);
  ComplexMatrix g = random_matrix(5, 5, rng);
  ComplexMatrix a = (g * g.adjoint()).hermitian_part();
  a += 0.1 * ComplexMatrix::identity(5);
  ComplexMatrix L;
  REQUIRE(cholesky(a, L));
  CHECK((L * L.adjoint() - a).max_abs() < 1e-12 * a.max_abs());

  std::vector<cplx> b(5);
  for (auto& v : b) v = cplx(rng.normal(), rng.normal());
  auto x = cholesky_solve(L, b);
  auto ax = mat_vec(a, x);
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(ax[i] - b[i]) < 1e-10);

  ComplexMatrix inv = cholesky_inverse(L);
  CHECK((a * inv - ComplexMatrix::identity(5)).max_abs() < 1e-10);

  ComplexMatrix r = herm_sqrt(a);
  CHECK((r * r - a).max_abs() < 1e-10);
  ComplexMatrix ri = herm_inv_sqrt(a);
  CHECK((r * ri - ComplexMatrix::identity(5)).max_abs() < 1e-9);

  ComplexMatrix notpd = ComplexMatrix::identity(3);
  notpd(2, 2) = -1.0;
  CHECK_FALSE(cholesky(notpd, L));
}

TEST_CASE("DensityMatrix enforces its invariants") {
  ComplexMatrix ok = 0.25 * ComplexMatrix::identity(4);
  CHECK_NOTHROW(DensityMatrix(ok, {2, 2}));
  CHECK_THROWS_AS(DensityMatrix(ok, {3, 2}), std::invalid_argument);

  ComplexMatrix bad_trace = 0.5 * ComplexMatrix::identity(4);
  CHECK_THROWS_AS(DensityMatrix(bad_trace, {2, 2}), std::invalid_argument);

  ComplexMatrix nonherm = ok;
  nonherm(0, 1) = cplx(0.1, 0.0);  // no conjugate partner
  CHECK_THROWS_AS(DensityMatrix(nonherm, {2, 2}), std::invalid_argument);

  ComplexMatrix negative = ok;
  negative(3, 3) = -0.05;
  negative(0, 0) = 0.55;
  CHECK_THROWS_AS(DensityMatrix(negative, {2, 2}), std::invalid_argument);

  DensityMatrix rho(ok, {2, 2});
  DensityMatrix re = rho.regrouped({4});
  CHECK(re.dims() == std::vector<std::size_t>{4});
  CHECK_THROWS_AS(rho.regrouped({3}), std::invalid_argument);
}
