#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace spinorlab {

using cplx = std::complex<double>;
using Mat4 = Eigen::Matrix4cd;
using Mat2 = Eigen::Matrix2cd;
using Vec4c = Eigen::Vector4cd;
using Vec2c = Eigen::Vector2cd;

/// Four components indexed by a Lorentz index. Whether the index is up or
/// down is stated at each use site; bilinears are stored contravariant.
using FourVector = std::array<cplx, 4>;

inline constexpr cplx kI{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

/// Default relative zero-threshold used by classification entry points.
inline constexpr double kDefaultTol = 1e-9;

enum class Sign { Plus, Minus };

inline constexpr double sign_value(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }

enum class ErrorKind {
  InvalidInput,
  DegenerateXi,
  NullCurrent,
  AmbiguousScale,
  NonDiracDual,
  InconsistentBilinears,
  ZeroDecomposition,
  InvalidBase,
  IntegrabilityViolation,
  DegenerateB,
  DegenerateRealPart,
  ZeroCoefficient,
  NonInvertible,
  NotInPlane,
  DegenerateBasis,
  DegenerateParameter,
  BasisMismatch,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DegenerateXi: return "DegenerateXi";
    case ErrorKind::NullCurrent: return "NullCurrent";
    case ErrorKind::AmbiguousScale: return "AmbiguousScale";
    case ErrorKind::NonDiracDual: return "NonDiracDual";
    case ErrorKind::InconsistentBilinears: return "InconsistentBilinears";
    case ErrorKind::ZeroDecomposition: return "ZeroDecomposition";
    case ErrorKind::InvalidBase: return "InvalidBase";
    case ErrorKind::IntegrabilityViolation: return "IntegrabilityViolation";
    case ErrorKind::DegenerateB: return "DegenerateB";
    case ErrorKind::DegenerateRealPart: return "DegenerateRealPart";
    case ErrorKind::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorKind::NonInvertible: return "NonInvertible";
    case ErrorKind::NotInPlane: return "NotInPlane";
    case ErrorKind::DegenerateBasis: return "DegenerateBasis";
    case ErrorKind::DegenerateParameter: return "DegenerateParameter";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

inline bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Scale used to make identity residuals of quartic order in the spinor
/// dimensionless: max(1, |psi|^4).
inline double quartic_scale(double norm2) { return std::max(1.0, norm2 * norm2); }

}  // namespace spinorlab
