#pragma once

// Two-photon polarization states |Psi> = sum a_{ss'} |ss'>, their
// entanglement measures, local unitary action, the polar parametrization of
// the coefficient matrix, and an independent CHSH measurement oracle.

#include <array>
#include <cstdint>

#include "entrans/mat2.hpp"

namespace entrans {

// Pure two-photon state. The coefficient matrix is kept normalized,
// Tr(a a^dag) = 1; construct through make_state.
struct TwoPhotonState {
  Mat2 a;
};

// Parameters of the factorization u*a*v = e^{i phi} L diag(sqrt(lambda+-)) R
// with L, R in SU(2) form [[x, y], [-y*, x*]]. |x| = sqrt(1/2 + u) etc.;
// big_phi = arg(u+ u-* v+ v-). Only lambda+- and combinations invariant under
// the residual phase gauge are physical.
struct PolarParams {
  double phi = 0.0;
  double lambda_plus = 1.0;
  double lambda_minus = 0.0;
  double u = 0.0;
  double v = 0.0;
  double big_phi = 0.0;
};

// Bloch-sphere direction (theta, chi) of one arm's projective polarization
// measurement; the observable is n(theta, chi) . sigma with outcomes +-1.
struct MeasurementSetting {
  double theta = 0.0;
  double chi = 0.0;
};

struct ChshResult {
  double s = 0.0;
  // a, a' (first arm), b, b' (second arm)
  std::array<MeasurementSetting, 4> settings{};
};

struct ChshOptions {
  int restarts = 16;
  int max_iter = 3000;
  double ftol = 1e-12;
  std::uint64_t seed = 0x5DEECE66D;
};

// Normalizes the coefficient matrix; throws ZeroState on zero input.
TwoPhotonState make_state(const Mat2& a);

// Degree of entanglement P = 2 |Det a|; equals the concurrence.
double concurrence(const TwoPhotonState& s);

// S = 2 sqrt(1 + P^2), the maximal CHSH value of a pure state.
double s_from_p(double p);

// A  ->  u * A * v for unitary u, v; entanglement is invariant.
TwoPhotonState apply_local(const TwoPhotonState& s, const Mat2& u, const Mat2& v);

// diag(sqrt(lambda+), sqrt(lambda-)) with lambda+- = 1/2 +- sqrt(1-p^2)/2,
// the diagonal representative with concurrence p_in.
TwoPhotonState canonical_state(double p_in);

// Polar parameters of u * a * v. Degenerate lambda+ = lambda- reports
// u = v = 0 with big_phi carrying the remaining invariant.
PolarParams polar_params(const TwoPhotonState& s, const Mat2& u, const Mat2& v);

// Maximizes E(a,b) - E(a,b') + E(a',b) + E(a',b') over four projective
// measurement directions by multi-start derivative-free search.
ChshResult chsh_max(const TwoPhotonState& s, const ChshOptions& opt = {});

// Correlation E = <(n_a . sigma) x (n_b . sigma)> for the given pure state.
double chsh_correlation(const TwoPhotonState& s, const MeasurementSetting& a,
                        const MeasurementSetting& b);

}  // namespace entrans
