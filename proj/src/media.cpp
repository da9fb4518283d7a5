#include "entrans/media.hpp"

#include <algorithm>
#include <cmath>

#include "entrans/errors.hpp"

namespace entrans {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559005768;

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + " must be positive and finite");
  }
}

void validate_film(const PlasmonFilmSpec& spec) {
  require_positive(spec.lattice_a, "lattice constant");
  require_positive(spec.lattice_b, "lattice constant");
  if (spec.order_n < 1) {
    throw DomainError("resonance order must be a positive integer");
  }
  require_positive(spec.gamma, "linewidth");
  require_positive(spec.epsilon, "dielectric constant");
  if (!(spec.t_peak > 0.0) || spec.t_peak > 1.0) {
    throw DomainError("peak transmission must lie in (0, 1]");
  }
}

}  // namespace

TransmissionMatrix make_transmission(const Mat2& t) {
  if (!is_finite(t)) {
    throw DomainError("transmission matrix has non-finite entries");
  }
  if (!(frob_norm(t) > 0.0)) {
    throw FullyBlocked("transmission matrix is identically zero");
  }
  const HermEig2 h = herm_eig(t * adjoint(t));
  if (h.eigenvalues[0] > 1.0 + kTolPassive) {
    throw GainMedium("transmission matrix has gain");
  }
  return TransmissionMatrix{t};
}

TransferResult transmit(const TwoPhotonState& s_in, const TransmissionMatrix& t1,
                        const TransmissionMatrix& t2, double tol_block) {
  const Mat2 b = t1.t * s_in.a * transpose(t2.t);
  const double norm = frob_norm(b);
  const double z = norm * norm;
  if (z <= tol_block) {
    throw FullyBlocked("both output channels are blocked: Z below tolerance");
  }
  TransferResult out;
  out.state_out = TwoPhotonState{(1.0 / norm) * b};
  out.z = z;
  out.p_out = concurrence(out.state_out);
  out.s_out = s_from_p(out.p_out);
  return out;
}

TransmissionEigs transmission_eigs(const TransmissionMatrix& t) {
  const HermEig2 h = herm_eig(t.t * adjoint(t.t));
  TransmissionEigs e;
  e.basis = h.basis;
  double vals[2] = {h.eigenvalues[0], h.eigenvalues[1]};
  for (double& v : vals) {
    if (v > 1.0 + kTolPassive) {
      throw GainMedium("transmission eigenvalue exceeds 1");
    }
    if (v < -kTolPassive) {
      throw InternalError("transmission eigenvalue below 0");
    }
    v = std::min(std::max(v, 0.0), 1.0);
  }
  e.t_plus = vals[0];
  e.t_minus = vals[1];
  return e;
}

double tau(const TransmissionEigs& e) {
  if (e.t_minus <= 0.0) {
    throw SingularChannel("T- is zero: symmetry ratio diverges");
  }
  return std::max(e.t_plus / e.t_minus, 1.0);
}

double lorentzian_t(double omega0, double omega_res, double gamma,
                    double t_peak) {
  require_positive(gamma, "linewidth");
  if (!(t_peak > 0.0) || t_peak > 1.0) {
    throw DomainError("peak transmission must lie in (0, 1]");
  }
  if (!std::isfinite(omega0) || !std::isfinite(omega_res)) {
    throw DomainError("frequencies must be finite");
  }
  const double detuning = omega0 - omega_res;
  return t_peak * gamma * gamma / (detuning * detuning + gamma * gamma);
}

double plasmon_resonance(double lattice, int n, double epsilon) {
  require_positive(lattice, "lattice constant");
  if (n < 1) {
    throw DomainError("resonance order must be a positive integer");
  }
  require_positive(epsilon, "dielectric constant");
  return std::sqrt(1.0 + 1.0 / epsilon) * kTwoPi * n * kSpeedOfLight / lattice;
}

double propagation_length(double gamma, double epsilon) {
  require_positive(gamma, "linewidth");
  require_positive(epsilon, "dielectric constant");
  return (kSpeedOfLight / gamma) * std::sqrt((epsilon + 1.0) / epsilon);
}

std::pair<TransmissionMatrix, TransmissionMatrix> film_pair(
    const PlasmonFilmSpec& spec1, const PlasmonFilmSpec& spec2, double omega0) {
  validate_film(spec1);
  validate_film(spec2);
  if (!std::isfinite(omega0)) {
    throw DomainError("frequencies must be finite");
  }
  const auto film = [omega0](const PlasmonFilmSpec& spec) {
    const double res_a =
        plasmon_resonance(spec.lattice_a, spec.order_n, spec.epsilon);
    const double res_b =
        plasmon_resonance(spec.lattice_b, spec.order_n, spec.epsilon);
    const double ta = lorentzian_t(omega0, res_a, spec.gamma, spec.t_peak);
    const double tb = lorentzian_t(omega0, res_b, spec.gamma, spec.t_peak);
    return make_transmission(Mat2::diag(std::sqrt(ta), std::sqrt(tb)));
  };
  return {film(spec1), film(spec2)};
}

double symmetry_ratio(double l0, double l1, int n, double gamma,
                      double epsilon) {
  require_positive(l0, "lattice constant");
  require_positive(l1, "lattice constant");
  if (n < 1) {
    throw DomainError("resonance order must be a positive integer");
  }
  const double l = propagation_length(gamma, epsilon);
  const double diff = n * l / l0 - n * l / l1;
  return 1.0 + kTwoPi * kTwoPi * diff * diff;
}

}  // namespace entrans
