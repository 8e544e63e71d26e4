#pragma once

#include <utility>

#include "clifford.hpp"

namespace spinorlab {

/// Four complex components (psi_11, psi_12, psi_21, psi_22): block 1 on
/// top, block 2 at the bottom.
class Spinor {
 public:
  Spinor() : c_(Vec4c::Zero()) {}
  explicit Spinor(const Vec4c& c) : c_(c) {}
  Spinor(cplx c0, cplx c1, cplx c2, cplx c3) : c_(c0, c1, c2, c3) {}

  static Spinor from_blocks(const Vec2c& top, const Vec2c& bottom) {
    return Spinor(top(0), top(1), bottom(0), bottom(1));
  }

  cplx operator[](int i) const { return c_(i); }
  cplx& operator[](int i) { return c_(i); }

  const Vec4c& vec() const { return c_; }
  Vec2c top() const { return c_.head<2>(); }
  Vec2c bottom() const { return c_.tail<2>(); }

  double norm2() const { return c_.squaredNorm(); }
  double norm() const { return c_.norm(); }

  bool is_finite() const {
    for (int i = 0; i < 4; ++i)
      if (!spinorlab::is_finite(c_(i))) return false;
    return true;
  }

  friend Spinor operator+(const Spinor& a, const Spinor& b) { return Spinor(Vec4c(a.c_ + b.c_)); }
  friend Spinor operator-(const Spinor& a, const Spinor& b) { return Spinor(Vec4c(a.c_ - b.c_)); }
  friend Spinor operator*(cplx s, const Spinor& a) { return Spinor(Vec4c(s * a.c_)); }
  friend Spinor operator*(const Mat4& m, const Spinor& a) { return Spinor(Vec4c(m * a.c_)); }
  friend bool operator==(const Spinor& a, const Spinor& b) { return a.c_ == b.c_; }

 private:
  Vec4c c_;
};

/// Row spinor; contracts with a Spinor (optionally through a 4x4 matrix).
class DualSpinor {
 public:
  DualSpinor() : r_(Eigen::RowVector4cd::Zero()) {}
  explicit DualSpinor(const Eigen::RowVector4cd& r) : r_(r) {}

  cplx operator[](int i) const { return r_(i); }
  const Eigen::RowVector4cd& row() const { return r_; }

  cplx operator()(const Spinor& psi) const { return r_ * psi.vec(); }
  cplx operator()(const Mat4& gamma, const Spinor& psi) const { return r_ * gamma * psi.vec(); }

 private:
  Eigen::RowVector4cd r_;
};

enum class DualKind { Dirac, MDO };

/// psi^dagger gamma^0
inline DualSpinor dirac_dual(const Spinor& psi) {
  return DualSpinor(psi.vec().adjoint() * gammas()[0]);
}

/// (Xi lambda)^dagger gamma^0. Xi must be an involution.
inline DualSpinor mdo_dual(const Spinor& lambda, const Mat4& xi, double tol = 1e-10) {
  const double err = max_abs(Mat4(xi * xi - Mat4::Identity()));
  if (!(err <= tol * std::max(1.0, max_abs(xi) * max_abs(xi))))
    throw Error(ErrorKind::DegenerateXi, "Xi^2 differs from identity by " + std::to_string(err));
  return dirac_dual(xi * lambda);
}

/// (P1 psi, P2 psi): block 1 and block 2 parts. Their sum is psi exactly.
inline std::pair<Spinor, Spinor> chiral_parts(const Spinor& psi) {
  return {Spinor(psi[0], psi[1], 0.0, 0.0), Spinor(0.0, 0.0, psi[2], psi[3])};
}

}  // namespace spinorlab
