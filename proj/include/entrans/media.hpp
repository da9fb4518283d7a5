#pragma once

// Linear-medium transmission matrices, propagation of a two-photon state
// through a pair of media, transmission eigen-analysis, and the Lorentzian
// model of plasmon-assisted transmission through hole-array films.

#include <utility>

#include "entrans/biphoton.hpp"
#include "entrans/mat2.hpp"

namespace entrans {

inline constexpr double kSpeedOfLight = 2.99792458e8;
inline constexpr double kTolBlock = 1e-14;
inline constexpr double kTolPassive = 1e-10;

// Polarization transmission amplitudes of one medium.
struct TransmissionMatrix {
  Mat2 t;
};

// Eigen-decomposition of t*t^dag: t*t^dag = basis^dag diag(t_plus, t_minus)
// basis, with 0 <= t_minus <= t_plus <= 1.
struct TransmissionEigs {
  double t_plus = 1.0;
  double t_minus = 1.0;
  Mat2 basis;
};

// Hole-array film supporting plasmon resonances along its two lattice axes.
// Lengths in meters, frequencies in rad/s.
struct PlasmonFilmSpec {
  double lattice_a = 0.0;
  double lattice_b = 0.0;
  int order_n = 1;
  double gamma = 0.0;
  double t_peak = 1.0;
  double epsilon = 1.0;
};

struct TransferResult {
  TwoPhotonState state_out;
  double z = 1.0;
  double p_out = 0.0;
  double s_out = 2.0;
};

// Validates passivity (spectral norm <= 1 within tolerance) and rejects the
// zero matrix.
TransmissionMatrix make_transmission(const Mat2& t);

// state_out = T1 a T2^t normalized; z is the squared norm before
// normalization, the coincidence yield per incident pair.
TransferResult transmit(const TwoPhotonState& s_in, const TransmissionMatrix& t1,
                        const TransmissionMatrix& t2,
                        double tol_block = kTolBlock);

// Eigenvalues of t*t^dag clamped to [0, 1]; throws GainMedium beyond
// tolerance above 1.
TransmissionEigs transmission_eigs(const TransmissionMatrix& t);

// Symmetry ratio tau = T+/T- >= 1; throws SingularChannel at T- = 0.
double tau(const TransmissionEigs& e);

// Lorentzian transmission probability with peak t_peak at omega_res and
// half-width gamma.
double lorentzian_t(double omega0, double omega_res, double gamma,
                    double t_peak);

// Resonance frequency sqrt(1 + 1/epsilon) * 2 pi n c / lattice.
double plasmon_resonance(double lattice, int n, double epsilon);

// Plasmon propagation length (c/gamma) * sqrt((epsilon+1)/epsilon).
double propagation_length(double gamma, double epsilon);

// Diagonal transmission matrices for two films illuminated at omega0, each
// with amplitudes sqrt(T) from its two lattice resonances. Amplitude phases
// are zero; observables depend only on the transmission eigenvalues.
std::pair<TransmissionMatrix, TransmissionMatrix> film_pair(
    const PlasmonFilmSpec& spec1, const PlasmonFilmSpec& spec2, double omega0);

// Closed-form tau1/tau2 for a rectangular film (lattice constants l0, l1)
// against a square film (l0), illuminated at the l0 resonance:
// 1 + (2 pi)^2 (n l / l0 - n l / l1)^2 with l the propagation length.
double symmetry_ratio(double l0, double l1, int n, double gamma,
                      double epsilon);

}  // namespace entrans
