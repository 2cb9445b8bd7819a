#pragma once

// PT-symmetric two-level Hamiltonian, its eigensystem and the non-unitary
// (trace-renormalized) evolution it generates.
//
// H = s * [[i sin(a), 1], [1, -i sin(a)]] is non-Hermitian for a != 0 yet has
// the real spectrum E = +-s cos(a) throughout the unbroken regime
// 0 <= a < pi/2. Eigenvalues and eigenvectors coalesce at a = pi/2, so the
// domain is capped strictly below that point.

#include <numbers>
#include <stdexcept>
#include <string>

#include "lgipt/qmath.hpp"

namespace lgipt {

inline constexpr double kPi = std::numbers::pi;

// Guard distance from the eigenvalue-coalescence angle pi/2. sec(a) and
// tan(a) diverge there, so the domain is alpha < pi/2 - guard.
inline constexpr double kDefaultEpGuard = 1e-4 * kPi;
inline constexpr double kMinEpGuard = 1e-6 * kPi;

// Trace floor below which renormalized evolution is considered collapsed.
inline constexpr double kNormTol = 1e-12;

/// Requested alpha sits at or beyond the guarded coalescence point.
class exceptional_point_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Renormalization denominator Tr[U rho U^dag] underflowed.
class norm_collapse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimensionless time t' = (dE/2) * t, the natural argument of the
/// propagator and of every correlation function here.
struct DimensionlessTime {
  explicit DimensionlessTime(double v) : value(v) {
    if (!is_finite(v)) {
      throw std::invalid_argument("DimensionlessTime: value must be finite");
    }
  }
  double value;
};

inline void validate_ep_guard(double ep_guard) {
  if (!is_finite(ep_guard) || ep_guard < kMinEpGuard || ep_guard >= kPi / 2) {
    throw std::invalid_argument(
        "ep_guard must lie in [1e-6*pi, pi/2), got " + std::to_string(ep_guard));
  }
}

/// Throws unless 0 <= alpha < pi/2 - ep_guard.
inline void validate_alpha(double alpha, double ep_guard = kDefaultEpGuard) {
  validate_ep_guard(ep_guard);
  if (!is_finite(alpha) || alpha < 0.0) {
    throw std::invalid_argument("alpha must be finite and >= 0, got " +
                                std::to_string(alpha));
  }
  if (alpha >= kPi / 2 - ep_guard) {
    throw exceptional_point_error(
        "alpha = " + std::to_string(alpha) +
        " is at or beyond the exceptional-point guard; valid range is [0, " +
        std::to_string(kPi / 2 - ep_guard) + ")");
  }
}

/// Parameters (s, alpha) together with the realized matrix.
struct PtHamiltonian {
  double s;
  double alpha;
  Mat2 matrix;
};

inline PtHamiltonian build_hamiltonian(double s, double alpha,
                                       double ep_guard = kDefaultEpGuard) {
  if (!is_finite(s) || s == 0.0) {
    throw std::invalid_argument("energy scale s must be finite and nonzero");
  }
  validate_alpha(alpha, ep_guard);
  const cplx is_sin(0.0, s * std::sin(alpha));
  return {s, alpha, Mat2{is_sin, s, s, -is_sin}};
}

/// Real energies and the (non-orthogonal for alpha != 0) eigenvectors,
/// unit-normalized with phases e^{+-i alpha/2}.
struct EigenSystem {
  double e_plus;
  double e_minus;
  Vec2 v_plus;
  Vec2 v_minus;
  double delta_e;
};

inline EigenSystem eigensystem(const PtHamiltonian& h) {
  const double e = h.s * std::cos(h.alpha);
  const cplx half_phase = std::polar(1.0, h.alpha / 2);
  const cplx inv_sqrt2(1.0 / std::numbers::sqrt2, 0.0);
  // |E+> ~ (1, e^{-ia}),  |E-> ~ i (1, -e^{ia}); overlap <E+|E-> = sin(a).
  const Vec2 v_plus{inv_sqrt2 * half_phase,
                    inv_sqrt2 * half_phase * std::polar(1.0, -h.alpha)};
  const cplx i_conj_phase = cplx(0.0, 1.0) * std::conj(half_phase);
  const Vec2 v_minus{inv_sqrt2 * i_conj_phase,
                     -inv_sqrt2 * i_conj_phase * std::polar(1.0, h.alpha)};
  return {e, -e, v_plus, v_minus, 2.0 * e};
}

/// Frobenius distance between P conj(M) P and M, with parity P = sigma_x and
/// time reversal = entrywise conjugation. Zero (to rounding) exactly when M
/// commutes with the combined PT operation.
inline double pt_defect_matrix(const Mat2& m) {
  const Mat2 p = pauli_x();
  return frobenius_norm(p * conjugate(m) * p - m);
}

inline double pt_defect(const PtHamiltonian& h) {
  return pt_defect_matrix(h.matrix);
}

/// Non-unitary propagator exp(-i t H) in closed form,
///   U(t') = (1/cos a) [[cos(t'-a), -i sin t'], [-i sin t', cos(t'+a)]],
/// with t' = (dE/2) t. det U = 1 everywhere in the guarded domain.
inline Mat2 propagator(const PtHamiltonian& h, DimensionlessTime t_prime) {
  const double a = h.alpha;
  const double tp = t_prime.value;
  const double sec = 1.0 / std::cos(a);
  const cplx off(0.0, -std::sin(tp) * sec);
  return {cplx(std::cos(tp - a) * sec, 0.0), off, off,
          cplx(std::cos(tp + a) * sec, 0.0)};
}

/// Same propagator through the series/Cayley-Hamilton exponential; kept as an
/// independent code path for cross-checks.
inline Mat2 propagator_expm(const PtHamiltonian& h,
                            DimensionlessTime t_prime) {
  const double t_phys = t_prime.value / (h.s * std::cos(h.alpha));
  return expm_traceless(cplx(0.0, -t_phys) * h.matrix);
}

/// Unit-trace positive-semidefinite 2x2 density matrix.
struct QuantumState {
  Mat2 rho;

  explicit QuantumState(const Mat2& density, double tol = 1e-10) : rho(density) {
    if (!validate_density(density, tol)) {
      throw std::invalid_argument("QuantumState: matrix is not a valid density matrix");
    }
  }

  static QuantumState maximally_mixed() {
    return QuantumState(0.5 * Mat2::identity());
  }
};

/// Renormalized non-unitary update rho -> U rho U^dag / Tr[U rho U^dag].
inline QuantumState evolve(const QuantumState& state, const Mat2& u,
                           double tol_norm = kNormTol) {
  const Mat2 sandwich = u * state.rho * adjoint(u);
  const double tr = trace(sandwich).real();
  if (!(tr > tol_norm)) {
    throw norm_collapse_error(
        "evolve: trace denominator " + std::to_string(tr) +
        " underflows tol_norm = " + std::to_string(tol_norm));
  }
  return QuantumState((1.0 / tr) * sandwich);
}

/// Re Tr[U rho U^dag]; for rho = I/2 this equals 1 + 2 sin^2(t') tan^2(a).
inline double survival_trace(const QuantumState& state, const Mat2& u) {
  return trace(u * state.rho * adjoint(u)).real();
}

}  // namespace lgipt
