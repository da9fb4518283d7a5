#include "entrans/biphoton.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "entrans/errors.hpp"
#include "entrans/nelder_mead.hpp"
#include "entrans/rng.hpp"

namespace entrans {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void require_unitary(const Mat2& m, const char* which) {
  if (unitary_defect(m) > kTolUnitary) {
    throw NotUnitary(std::string(which) + " is not unitary within tolerance");
  }
}

double clamp(double x, double lo, double hi) {
  return std::min(std::max(x, lo), hi);
}

// Splits a unitary into a phase and an SU(2)-form factor, w = e^{i alpha} l.
struct Su2Split {
  Mat2 l;
  double alpha;
};

Su2Split su2_split(const Mat2& w) {
  const double alpha = std::arg(det(w)) / 2.0;
  const C64 scale = std::polar(1.0, -alpha);
  Su2Split out;
  out.alpha = alpha;
  out.l = scale * w;
  return out;
}

Mat2 pauli(int i) {
  const C64 one(1.0, 0.0);
  const C64 im(0.0, 1.0);
  Mat2 m = Mat2::zero();
  switch (i) {
    case 0:
      m(0, 1) = one;
      m(1, 0) = one;
      break;
    case 1:
      m(0, 1) = -im;
      m(1, 0) = im;
      break;
    default:
      m(0, 0) = one;
      m(1, 1) = -one;
      break;
  }
  return m;
}

std::array<double, 3> bloch(double theta, double chi) {
  return {std::sin(theta) * std::cos(chi), std::sin(theta) * std::sin(chi),
          std::cos(theta)};
}

using Kmat = std::array<std::array<double, 3>, 3>;

// K_ij = Re Tr[a^dag sigma_i a sigma_j^t]; then E(n_a, n_b) = n_a . K n_b.
Kmat correlation_matrix(const Mat2& a) {
  Kmat k{};
  const Mat2 ad = adjoint(a);
  for (int i = 0; i < 3; ++i) {
    const Mat2 lhs = ad * pauli(i) * a;
    for (int j = 0; j < 3; ++j) {
      k[i][j] = trace(lhs * transpose(pauli(j))).real();
    }
  }
  return k;
}

double bilinear(const Kmat& k, const std::array<double, 3>& na,
                const std::array<double, 3>& nb) {
  double e = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      e += na[i] * k[i][j] * nb[j];
    }
  }
  return e;
}

double chsh_value(const Kmat& k, const std::vector<double>& x) {
  const auto na = bloch(x[0], x[1]);
  const auto nap = bloch(x[2], x[3]);
  const auto nb = bloch(x[4], x[5]);
  const auto nbp = bloch(x[6], x[7]);
  return bilinear(k, na, nb) - bilinear(k, na, nbp) + bilinear(k, nap, nb) +
         bilinear(k, nap, nbp);
}

}  // namespace

TwoPhotonState make_state(const Mat2& a) {
  if (!is_finite(a)) {
    throw DomainError("coefficient matrix has non-finite entries");
  }
  const double norm = frob_norm(a);
  if (!(norm > 0.0)) {
    throw ZeroState("coefficient matrix is zero");
  }
  return TwoPhotonState{(1.0 / norm) * a};
}

double concurrence(const TwoPhotonState& s) {
  return clamp(2.0 * std::abs(det(s.a)), 0.0, 1.0);
}

double s_from_p(double p) {
  if (p < -1e-12 || p > 1.0 + 1e-12) {
    throw DomainError("entanglement degree outside [0, 1]");
  }
  p = clamp(p, 0.0, 1.0);
  return 2.0 * std::sqrt(1.0 + p * p);
}

TwoPhotonState apply_local(const TwoPhotonState& s, const Mat2& u, const Mat2& v) {
  require_unitary(u, "left rotation");
  require_unitary(v, "right rotation");
  return make_state(u * s.a * v);
}

TwoPhotonState canonical_state(double p_in) {
  if (p_in < -1e-12 || p_in > 1.0 + 1e-12) {
    throw DomainError("entanglement degree outside [0, 1]");
  }
  p_in = clamp(p_in, 0.0, 1.0);
  const double root = std::sqrt(std::max(0.0, 1.0 - p_in * p_in));
  const double lp = 0.5 * (1.0 + root);
  const double lm = 0.5 * (1.0 - root);
  return TwoPhotonState{Mat2::diag(std::sqrt(lp), std::sqrt(lm))};
}

PolarParams polar_params(const TwoPhotonState& s, const Mat2& u, const Mat2& v) {
  require_unitary(u, "left rotation");
  require_unitary(v, "right rotation");
  const Mat2 m = u * s.a * v;
  const Svd2 f = svd2(m);

  PolarParams out;
  out.lambda_plus = f.singular_values[0] * f.singular_values[0];
  out.lambda_minus = f.singular_values[1] * f.singular_values[1];

  const Su2Split left = su2_split(f.left);
  const Su2Split right = su2_split(f.right);
  out.phi = std::remainder(left.alpha + right.alpha, 2.0 * kPi);

  if (f.singular_values[0] - f.singular_values[1] < 1e-12) {
    // Degenerate polar factorization: only the combination
    // a = uv - sqrt((1/4-u^2)(1/4-v^2)) cos Phi survives, and it reduces to
    // |m00|^2 - 1/4. Report u = v = 0 and fold the invariant into Phi.
    out.u = 0.0;
    out.v = 0.0;
    const double a_inv = std::norm(m(0, 0)) - 0.25;
    out.big_phi = std::acos(clamp(-4.0 * a_inv, -1.0, 1.0));
    return out;
  }

  const C64 up = left.l(0, 0);
  const C64 um = left.l(0, 1);
  const C64 vp = right.l(0, 0);
  const C64 vm = right.l(0, 1);
  out.u = clamp(std::norm(up) - 0.5, -0.5, 0.5);
  out.v = clamp(std::norm(vp) - 0.5, -0.5, 0.5);
  const C64 prod = up * std::conj(um) * vp * vm;
  out.big_phi = std::abs(prod) > 0.0 ? std::arg(prod) : 0.0;
  if (out.big_phi <= -kPi) {
    out.big_phi = kPi;
  }
  return out;
}

double chsh_correlation(const TwoPhotonState& s, const MeasurementSetting& a,
                        const MeasurementSetting& b) {
  const Kmat k = correlation_matrix(s.a);
  return bilinear(k, bloch(a.theta, a.chi), bloch(b.theta, b.chi));
}

ChshResult chsh_max(const TwoPhotonState& s, const ChshOptions& opt) {
  const Kmat k = correlation_matrix(s.a);
  const auto objective = [&k](const std::vector<double>& x) {
    return -chsh_value(k, x);
  };

  NelderMeadOptions nm;
  nm.max_iter = opt.max_iter;
  nm.ftol = opt.ftol;
  nm.init_step = 0.5;

  // Known upper bound for a pure state; lets the restart loop stop once the
  // search has actually reached it.
  const double bound = s_from_p(concurrence(s));

  Rng rng(opt.seed);
  std::vector<double> best_x;
  double best = -1e300;

  const int restarts = std::max(1, opt.restarts);
  for (int r = 0; r < restarts; ++r) {
    std::vector<double> x0(8);
    if (r == 0) {
      x0 = {0.0, 0.0, kPi / 2.0, 0.0, kPi / 4.0, 0.0, 3.0 * kPi / 4.0, 0.0};
    } else {
      for (int i = 0; i < 4; ++i) {
        x0[2 * i] = uniform(rng, 0.0, kPi);
        x0[2 * i + 1] = uniform(rng, -kPi, kPi);
      }
    }
    const NelderMeadResult res = nelder_mead(objective, x0, nm);
    if (-res.f > best) {
      best = -res.f;
      best_x = res.x;
    }
    if (bound - best <= 1e-10) {
      break;
    }
  }

  NelderMeadOptions polish = nm;
  polish.init_step = 0.02;
  const NelderMeadResult res = nelder_mead(objective, best_x, polish);
  if (-res.f > best) {
    best = -res.f;
    best_x = res.x;
  }

  ChshResult out;
  out.s = best;
  for (int i = 0; i < 4; ++i) {
    out.settings[i] = MeasurementSetting{best_x[2 * i], best_x[2 * i + 1]};
  }
  return out;
}

}  // namespace entrans
