#pragma once

// Self-contained complex 2x2 kernel. Everything downstream (states, media,
// transfer formulas) is built on these closed-form routines; no iterative
// linear algebra is used anywhere.

#include <array>
#include <cmath>
#include <complex>

#include "entrans/errors.hpp"

namespace entrans {

using C64 = std::complex<double>;

// Row-major 2x2 complex matrix, indexed by polarization (H=0, V=1).
struct Mat2 {
  std::array<C64, 4> e{};

  C64& operator()(int i, int j) { return e[2 * i + j]; }
  const C64& operator()(int i, int j) const { return e[2 * i + j]; }

  static Mat2 identity() { return Mat2{{C64(1, 0), C64(0, 0), C64(0, 0), C64(1, 0)}}; }
  static Mat2 zero() { return Mat2{}; }
  static Mat2 diag(C64 a, C64 b) { return Mat2{{a, C64(0, 0), C64(0, 0), b}}; }
};

Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator*(C64 s, const Mat2& a);
Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);

Mat2 adjoint(const Mat2& a);
Mat2 transpose(const Mat2& a);
Mat2 conjugate(const Mat2& a);
C64 det(const Mat2& a);
C64 trace(const Mat2& a);

double frob_norm(const Mat2& a);
// ||a a^dag - I||_F, zero for unitary a.
double unitary_defect(const Mat2& a);
bool is_finite(const Mat2& a);

// Eigen-decomposition of a Hermitian matrix, a = basis^dag * diag(eigenvalues) * basis.
// Eigenvalues are real and descending; basis rows span the eigenbasis.
// Degenerate spectra get basis = I.
struct HermEig2 {
  std::array<double, 2> eigenvalues;
  Mat2 basis;
};

inline constexpr double kTolHerm = 1e-10;
inline constexpr double kTolUnitary = 1e-10;

HermEig2 herm_eig(const Mat2& a, double tol_herm = kTolHerm);

// Singular value decomposition a = left * diag(singular_values) * right with
// unitary factors and s1 >= s2 >= 0. Gauge: the largest-magnitude entry of
// left's first column is real positive; the residual phase sits in right.
struct Svd2 {
  Mat2 left;
  std::array<double, 2> singular_values;
  Mat2 right;
};

Svd2 svd2(const Mat2& a);

// SU(2) element Rz(alpha) * Ry(theta) * Rz(beta).
Mat2 su2_from_angles(double alpha, double theta, double beta);

}  // namespace entrans
