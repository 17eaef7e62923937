#include "recsym/boost.hpp"

#include <cmath>

namespace recsym {

namespace {

void require_subluminal(const Velocity3& v) {
  const CScalar one = CScalar::integer(v.backend(), 1);
  if (compare_real(v.speed_sq(), one) >= 0) {
    throw Error(Errc::SuperluminalVelocity, "|V|^2 = " + to_string(v.speed_sq()) + " is not below 1");
  }
}

CScalar lorentz_factor(const Velocity3& v) {
  const CScalar one = CScalar::integer(v.backend(), 1);
  return one / sqrt_scalar(one - v.speed_sq());
}

}  // namespace

Velocity3::Velocity3(double x, double y, double z)
    : v_{CScalar::floating(x), CScalar::floating(y), CScalar::floating(z)} {}

Velocity3::Velocity3(Vec3 components) : v_(std::move(components)) {
  backend_of(v_);
  for (const auto& c : v_) {
    if (!c.is_real()) throw Error(Errc::InvalidArgument, "velocity components must be real");
  }
}

Velocity3 Velocity3::exact(const Rational& x, const Rational& y, const Rational& z) {
  return Velocity3(Vec3{CScalar::exact(x), CScalar::exact(y), CScalar::exact(z)});
}

Quat4 boost_from_velocity(const Velocity3& v) {
  require_subluminal(v);
  const CScalar gamma = lorentz_factor(v);
  return {gamma, scale(gamma, v.components())};
}

Velocity3 velocity_from_boost(const Quat4& b) {
  if (!b.is_real()) throw Error(Errc::NotAUnitBoost, "boost components must be real: " + to_string(b));
  const CScalar zero = b.scalar().zero_like();
  if (compare_real(b.scalar(), zero) <= 0) {
    throw Error(Errc::NotAUnitBoost, "scalar part must be positive: " + to_string(b));
  }
  const CScalar q = qform(b);
  const CScalar one = b.scalar().one_like();
  const bool unit = b.backend() == Backend::Exact ? q == one : (q - one).abs() <= kBoostUnitTolerance;
  if (!unit) throw Error(Errc::NotAUnitBoost, "qform is " + to_string(q) + ", not 1: " + to_string(b));
  const CScalar inv = one / b.scalar();
  return Velocity3(scale(inv, b.vec()));
}

Velocity3 einstein_add(const Velocity3& u, const Velocity3& v) {
  require_same_backend(u.components()[0], v.components()[0]);
  require_subluminal(u);
  require_subluminal(v);
  const CScalar one = CScalar::integer(u.backend(), 1);
  const CScalar gamma_u = lorentz_factor(u);
  const CScalar uv = dot(u.components(), v.components());
  const Vec3 numerator = u.components() + scale(one / gamma_u, v.components()) +
                         scale(gamma_u / (one + gamma_u) * uv, u.components());
  return Velocity3(scale(one / (one + uv), numerator));
}

}  // namespace recsym
