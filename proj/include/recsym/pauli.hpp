#pragma once

#include <array>
#include <string>

#include "recsym/quat.hpp"

namespace recsym {

/// 2x2 complex matrix, row-major.
class Mat2 {
 public:
  Mat2() = default;
  Mat2(CScalar m00, CScalar m01, CScalar m10, CScalar m11);

  static Mat2 identity(Backend backend);
  static Mat2 zero(Backend backend);

  const CScalar& operator()(int row, int col) const { return m_[static_cast<std::size_t>(2 * row + col)]; }
  const std::array<CScalar, 4>& entries() const noexcept { return m_; }
  Backend backend() const noexcept { return m_[0].backend(); }

  friend bool operator==(const Mat2& a, const Mat2& b) { return a.m_ == b.m_; }

 private:
  std::array<CScalar, 4> m_{};
};

using Spinor2 = std::array<CScalar, 2>;

/// Standard Pauli basis: sigma(0) = I, then sigma_x, sigma_y, sigma_z.
Mat2 sigma(int k, Backend backend = Backend::Exact);

/// sigma_0 a0 + sigma_x a1 + sigma_y a2 + sigma_z a3.
Mat2 embed(const Quat4& a);

/// Inverse of embed via trace projections.
Quat4 extract(const Mat2& m);

Mat2 mat_mul(const Mat2& m, const Mat2& n);
Mat2 mat_add(const Mat2& m, const Mat2& n);
Mat2 mat_sub(const Mat2& m, const Mat2& n);
Mat2 mat_scale(const CScalar& k, const Mat2& m);
CScalar det(const Mat2& m);
CScalar trace(const Mat2& m);
Spinor2 apply(const Mat2& m, const Spinor2& psi);

struct CrossTerm {
  CScalar scalar;
  Vec3 vector;
};

/// (sigma.B)(sigma.C) split into its sigma_0 and sigma components; the result
/// is B.C and i (B x C).
CrossTerm cross_term(const Vec3& b, const Vec3& c);

/// sigma_0 E - sigma.p, i.e. embed((E; -p)).
Mat2 massless_dirac(const CScalar& energy, const Vec3& momentum);

/// Unit positive-helicity spinor of sigma.p/|p|, which solves the massless
/// equation at E = |p|. The first nonzero component is real and positive.
/// Throws Errc::ZeroMomentum for p = 0.
Spinor2 null_spinor(const std::array<double, 3>& momentum);

std::string to_string(const Mat2& m);

}  // namespace recsym
