#include "entrans/mat2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace entrans {

Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 c;
  c(0, 0) = a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0);
  c(0, 1) = a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1);
  c(1, 0) = a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0);
  c(1, 1) = a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1);
  return c;
}

Mat2 operator*(C64 s, const Mat2& a) {
  return Mat2{{s * a.e[0], s * a.e[1], s * a.e[2], s * a.e[3]}};
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  return Mat2{{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]}};
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  return Mat2{{a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2], a.e[3] - b.e[3]}};
}

Mat2 adjoint(const Mat2& a) {
  return Mat2{{std::conj(a(0, 0)), std::conj(a(1, 0)), std::conj(a(0, 1)), std::conj(a(1, 1))}};
}

Mat2 transpose(const Mat2& a) {
  return Mat2{{a(0, 0), a(1, 0), a(0, 1), a(1, 1)}};
}

Mat2 conjugate(const Mat2& a) {
  return Mat2{{std::conj(a.e[0]), std::conj(a.e[1]), std::conj(a.e[2]), std::conj(a.e[3])}};
}

C64 det(const Mat2& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

C64 trace(const Mat2& a) { return a(0, 0) + a(1, 1); }

double frob_norm(const Mat2& a) {
  double s = 0.0;
  for (const C64& x : a.e) s += std::norm(x);
  return std::sqrt(s);
}

double unitary_defect(const Mat2& a) { return frob_norm(a * adjoint(a) - Mat2::identity()); }

bool is_finite(const Mat2& a) {
  for (const C64& x : a.e) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  }
  return true;
}

namespace {

// Orthonormal complement of a unit vector (x, y): (-conj(y), conj(x)).
void complement(C64 x, C64 y, C64& cx, C64& cy) {
  cx = -std::conj(y);
  cy = std::conj(x);
}

// Deterministic phase: largest-magnitude component made real positive.
void fix_phase(C64& x, C64& y) {
  const C64 dominant = (std::norm(x) >= std::norm(y)) ? x : y;
  const double dn = std::abs(dominant);
  if (dn > 0.0) {
    const C64 phase = std::conj(dominant) / dn;
    x *= phase;
    y *= phase;
  }
}

}  // namespace

HermEig2 herm_eig(const Mat2& a, double tol_herm) {
  if (frob_norm(a - adjoint(a)) > tol_herm) {
    throw NotHermitian("herm_eig: matrix is not Hermitian within tolerance");
  }
  const double p = a(0, 0).real();
  const double q = a(1, 1).real();
  // Symmetrized off-diagonal kills the anti-Hermitian rounding dust.
  const C64 b = 0.5 * (a(0, 1) + std::conj(a(1, 0)));

  const double mean = 0.5 * (p + q);
  const double half_diff = 0.5 * (p - q);
  const double radius = std::hypot(half_diff, std::abs(b));

  HermEig2 out;
  out.eigenvalues = {mean + radius, mean - radius};

  const double scale = std::max(1.0, frob_norm(a));
  if (radius <= 1e-14 * scale) {
    out.basis = Mat2::identity();
    return out;
  }

  // Eigenvector of the larger eigenvalue; pick the better-conditioned of the
  // two analytic candidates.
  const double lp = out.eigenvalues[0];
  C64 vx, vy;
  const double n1 = std::norm(b) + (lp - p) * (lp - p);
  const double n2 = (lp - q) * (lp - q) + std::norm(b);
  if (n1 >= n2) {
    vx = b;
    vy = C64(lp - p, 0.0);
  } else {
    vx = C64(lp - q, 0.0);
    vy = std::conj(b);
  }
  const double vn = std::sqrt(std::norm(vx) + std::norm(vy));
  vx /= vn;
  vy /= vn;

  fix_phase(vx, vy);

  C64 wx, wy;
  complement(vx, vy, wx, wy);
  fix_phase(wx, wy);

  // a = basis^dag diag basis  =>  basis rows are the conjugated eigenvectors.
  out.basis = Mat2{{std::conj(vx), std::conj(vy), std::conj(wx), std::conj(wy)}};
  return out;
}

Svd2 svd2(const Mat2& a) {
  // Right factor from the eigenbasis of a^dag a; singular values and left
  // factor from the images of the right singular vectors. Closed form, so
  // degeneracies cost nothing. The product is Hermitian by construction, so
  // the hermiticity gate is disabled.
  const HermEig2 h = herm_eig(adjoint(a) * a, std::numeric_limits<double>::infinity());

  Svd2 out;
  out.right = h.basis;

  // Right singular vectors: columns of right^dag, i.e. conjugated basis rows.
  const C64 v1x = std::conj(h.basis(0, 0));
  const C64 v1y = std::conj(h.basis(0, 1));
  const C64 v2x = std::conj(h.basis(1, 0));
  const C64 v2y = std::conj(h.basis(1, 1));

  C64 u1x = a(0, 0) * v1x + a(0, 1) * v1y;
  C64 u1y = a(1, 0) * v1x + a(1, 1) * v1y;
  C64 u2x = a(0, 0) * v2x + a(0, 1) * v2y;
  C64 u2y = a(1, 0) * v2x + a(1, 1) * v2y;

  const double s1 = std::sqrt(std::norm(u1x) + std::norm(u1y));
  const double s2 = std::sqrt(std::norm(u2x) + std::norm(u2y));
  out.singular_values = {s1, s2};

  const double tiny = 1e-300;
  if (s1 > tiny) {
    u1x /= s1;
    u1y /= s1;
  } else {
    u1x = C64(1, 0);
    u1y = C64(0, 0);
  }
  if (s2 > s1 * 1e-15 && s2 > tiny) {
    u2x /= s2;
    u2y /= s2;
  } else {
    complement(u1x, u1y, u2x, u2y);
  }

  out.left = Mat2{{u1x, u2x, u1y, u2y}};

  // Gauge: largest-magnitude entry of left's first column real positive.
  const C64 dominant = (std::norm(u1x) >= std::norm(u1y)) ? u1x : u1y;
  const double dn = std::abs(dominant);
  if (dn > 0.0) {
    const C64 phase = std::conj(dominant) / dn;  // e^{-i arg}
    out.left(0, 0) *= phase;
    out.left(1, 0) *= phase;
    out.right(0, 0) *= std::conj(phase);
    out.right(0, 1) *= std::conj(phase);
  }
  return out;
}

Mat2 su2_from_angles(double alpha, double theta, double beta) {
  const double ct = std::cos(0.5 * theta);
  const double st = std::sin(0.5 * theta);
  const C64 ea = std::polar(1.0, -0.5 * alpha);
  const C64 eb = std::polar(1.0, -0.5 * beta);
  // Rz(alpha) Ry(theta) Rz(beta)
  return Mat2{{ea * eb * ct, -ea * std::conj(eb) * st, std::conj(ea) * eb * st,
               std::conj(ea) * std::conj(eb) * ct}};
}

}  // namespace entrans
