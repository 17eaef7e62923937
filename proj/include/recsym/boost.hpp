#pragma once

#include "recsym/quat.hpp"

namespace recsym {

/// Real 3-velocity in units of c.
class Velocity3 {
 public:
  Velocity3(double x, double y, double z);
  /// Components must be real and share a backend.
  explicit Velocity3(Vec3 components);

  static Velocity3 exact(const Rational& x, const Rational& y, const Rational& z);

  const Vec3& components() const noexcept { return v_; }
  Backend backend() const noexcept { return v_[0].backend(); }
  /// V.V as a scalar in the velocity's backend.
  CScalar speed_sq() const { return dot(v_, v_); }

  friend bool operator==(const Velocity3& a, const Velocity3& b) { return a.v_ == b.v_; }

 private:
  Vec3 v_;
};

/// (gamma; gamma V) with gamma = 1/sqrt(1 - V.V). Throws
/// Errc::SuperluminalVelocity when |V| >= 1, Errc::SqrtNotExact when an exact
/// velocity has irrational gamma.
Quat4 boost_from_velocity(const Velocity3& v);

/// B / b0 for a real unit boost. Float boosts may miss qform = 1 by
/// kBoostUnitTolerance.
Velocity3 velocity_from_boost(const Quat4& b);

/// Relativistic velocity addition u (+) v: the velocity of an object moving
/// at v in a frame that itself moves at u,
///   [u + v/gamma_u + gamma_u/(1 + gamma_u) (u.v) u] / (1 + u.v).
/// Written independently of le_compose so the two can be cross-checked.
Velocity3 einstein_add(const Velocity3& u, const Velocity3& v);

inline constexpr double kBoostUnitTolerance = 1e-9;

}  // namespace recsym
