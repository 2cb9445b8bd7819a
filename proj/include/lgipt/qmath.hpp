#pragma once

// Complex 2x2 linear algebra kernels. Everything in this library is a small
// dense computation over these value types; all functions are pure.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace lgipt {

using cplx = std::complex<double>;

// Default tolerance for algebraic identities.
inline constexpr double kAlgebraTol = 1e-12;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const cplx& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Complex 2-vector; carries eigenvectors and measurement basis states.
struct Vec2 {
  cplx v1{};
  cplx v2{};
};

/// Dense complex 2x2 matrix; carries Hamiltonians, propagators, projectors
/// and density matrices.
struct Mat2 {
  cplx a11{};
  cplx a12{};
  cplx a21{};
  cplx a22{};

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 zero() { return {}; }
};

inline bool is_finite(const Mat2& m) {
  return is_finite(m.a11) && is_finite(m.a12) && is_finite(m.a21) &&
         is_finite(m.a22);
}

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
  return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
}

inline Mat2 operator-(const Mat2& a, const Mat2& b) {
  return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
}

inline Mat2 operator*(const cplx& s, const Mat2& m) {
  return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
}

inline Mat2 operator*(double s, const Mat2& m) { return cplx(s, 0.0) * m; }

inline Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

inline Mat2 operator*(const Mat2& a, const Mat2& b) { return mat_mul(a, b); }

inline Vec2 operator*(const Mat2& m, const Vec2& v) {
  return {m.a11 * v.v1 + m.a12 * v.v2, m.a21 * v.v1 + m.a22 * v.v2};
}

inline Vec2 operator-(const Vec2& a, const Vec2& b) {
  return {a.v1 - b.v1, a.v2 - b.v2};
}

inline Vec2 operator*(const cplx& s, const Vec2& v) {
  return {s * v.v1, s * v.v2};
}

/// Conjugate transpose.
inline Mat2 adjoint(const Mat2& m) {
  return {std::conj(m.a11), std::conj(m.a21), std::conj(m.a12),
          std::conj(m.a22)};
}

/// Entrywise complex conjugate (no transpose).
inline Mat2 conjugate(const Mat2& m) {
  return {std::conj(m.a11), std::conj(m.a12), std::conj(m.a21),
          std::conj(m.a22)};
}

inline cplx trace(const Mat2& m) { return m.a11 + m.a22; }

inline cplx det(const Mat2& m) { return m.a11 * m.a22 - m.a12 * m.a21; }

inline double frobenius_norm(const Mat2& m) {
  return std::sqrt(std::norm(m.a11) + std::norm(m.a12) + std::norm(m.a21) +
                   std::norm(m.a22));
}

inline double max_abs_entry(const Mat2& m) {
  return std::max(std::max(std::abs(m.a11), std::abs(m.a12)),
                  std::max(std::abs(m.a21), std::abs(m.a22)));
}

/// Inner product, conjugate-linear in the first argument.
inline cplx inner(const Vec2& a, const Vec2& b) {
  return std::conj(a.v1) * b.v1 + std::conj(a.v2) * b.v2;
}

inline double norm(const Vec2& v) {
  return std::sqrt(std::norm(v.v1) + std::norm(v.v2));
}

inline Mat2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
inline Mat2 pauli_y() {
  return {0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0};
}
inline Mat2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

// sin(w)/w, stable near w = 0. The series keeps the kernel smooth for tiny
// and for complex arguments alike.
inline cplx sinc(const cplx& w) {
  if (std::abs(w) < 1e-4) {
    const cplx w2 = w * w;
    return 1.0 - w2 / 6.0 + (w2 * w2) / 120.0;
  }
  return std::sin(w) / w;
}

/// Matrix exponential of a traceless 2x2 matrix.
///
/// For traceless m, Cayley-Hamilton gives m^2 = -det(m) I, so the series
/// splits into even/odd parts: exp(m) = cos(w) I + (sin(w)/w) m with
/// w = sqrt(det(m)). The sqrt branch is irrelevant since cos and sinc are
/// even.
inline Mat2 expm_traceless(const Mat2& m) {
  const double tr = std::abs(trace(m));
  if (tr >= 1e-12) {
    throw std::invalid_argument(
        "expm_traceless: matrix is not traceless, |trace| = " +
        std::to_string(tr));
  }
  const cplx w = std::sqrt(det(m));
  return std::cos(w) * Mat2::identity() + sinc(w) * m;
}

/// True iff rho is Hermitian within tol, has unit trace within tol and both
/// eigenvalues >= -tol.
inline bool validate_density(const Mat2& rho, double tol) {
  if (tol <= 0.0) {
    throw std::invalid_argument("validate_density: tol must be positive");
  }
  if (!is_finite(rho)) return false;
  const bool hermitian = std::abs(rho.a12 - std::conj(rho.a21)) <= tol &&
                         std::abs(rho.a11.imag()) <= tol &&
                         std::abs(rho.a22.imag()) <= tol;
  if (!hermitian) return false;
  if (std::abs(trace(rho) - 1.0) > tol) return false;
  // Eigenvalues of the Hermitian part: mean +- sqrt(gap^2/4 + |offdiag|^2).
  const double d11 = rho.a11.real();
  const double d22 = rho.a22.real();
  const cplx off = 0.5 * (rho.a12 + std::conj(rho.a21));
  const double mean = 0.5 * (d11 + d22);
  const double radius =
      std::sqrt(0.25 * (d11 - d22) * (d11 - d22) + std::norm(off));
  return mean - radius >= -tol;
}

}  // namespace lgipt
