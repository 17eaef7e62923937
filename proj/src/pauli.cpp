#include "recsym/pauli.hpp"

#include <cmath>
#include <complex>

namespace recsym {

Mat2::Mat2(CScalar m00, CScalar m01, CScalar m10, CScalar m11)
    : m_{std::move(m00), std::move(m01), std::move(m10), std::move(m11)} {
  for (const auto& c : m_) require_same_backend(m_[0], c);
}

Mat2 Mat2::identity(Backend backend) {
  const auto one = CScalar::integer(backend, 1);
  const auto zero = CScalar::integer(backend, 0);
  return {one, zero, zero, one};
}

Mat2 Mat2::zero(Backend backend) {
  const auto zero = CScalar::integer(backend, 0);
  return {zero, zero, zero, zero};
}

Mat2 sigma(int k, Backend backend) {
  const auto zero = CScalar::integer(backend, 0);
  const auto one = CScalar::integer(backend, 1);
  const auto i = CScalar::imag_unit(backend);
  switch (k) {
    case 0: return Mat2::identity(backend);
    case 1: return {zero, one, one, zero};
    case 2: return {zero, -i, i, zero};
    case 3: return {one, zero, zero, -one};
    default: throw Error(Errc::IndexOutOfRange, "Pauli index " + std::to_string(k) + " is outside 0..3");
  }
}

Mat2 embed(const Quat4& a) {
  const CScalar& a0 = a.scalar();
  const auto& [a1, a2, a3] = a.vec();
  const CScalar i = CScalar::imag_unit(a.backend());
  return {a0 + a3, a1 - i * a2, a1 + i * a2, a0 - a3};
}

Quat4 extract(const Mat2& m) {
  const Backend backend = m.backend();
  const CScalar half = CScalar::from_rational(backend, Rational(1, 2));
  const CScalar two_i = CScalar::from_rational(backend, 0, 2);
  return {half * (m(0, 0) + m(1, 1)),
          {half * (m(0, 1) + m(1, 0)), (m(1, 0) - m(0, 1)) / two_i, half * (m(0, 0) - m(1, 1))}};
}

Mat2 mat_mul(const Mat2& m, const Mat2& n) {
  return {m(0, 0) * n(0, 0) + m(0, 1) * n(1, 0), m(0, 0) * n(0, 1) + m(0, 1) * n(1, 1),
          m(1, 0) * n(0, 0) + m(1, 1) * n(1, 0), m(1, 0) * n(0, 1) + m(1, 1) * n(1, 1)};
}

Mat2 mat_add(const Mat2& m, const Mat2& n) {
  return {m(0, 0) + n(0, 0), m(0, 1) + n(0, 1), m(1, 0) + n(1, 0), m(1, 1) + n(1, 1)};
}

Mat2 mat_sub(const Mat2& m, const Mat2& n) {
  return {m(0, 0) - n(0, 0), m(0, 1) - n(0, 1), m(1, 0) - n(1, 0), m(1, 1) - n(1, 1)};
}

Mat2 mat_scale(const CScalar& k, const Mat2& m) { return {k * m(0, 0), k * m(0, 1), k * m(1, 0), k * m(1, 1)}; }

CScalar det(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

CScalar trace(const Mat2& m) { return m(0, 0) + m(1, 1); }

Spinor2 apply(const Mat2& m, const Spinor2& psi) {
  return {m(0, 0) * psi[0] + m(0, 1) * psi[1], m(1, 0) * psi[0] + m(1, 1) * psi[1]};
}

CrossTerm cross_term(const Vec3& b, const Vec3& c) {
  const Backend backend = backend_of(b);
  const CScalar zero = CScalar::integer(backend, 0);
  const Quat4 product = extract(mat_mul(embed(Quat4(zero, b)), embed(Quat4(zero, c))));
  return {product.scalar(), product.vec()};
}

Mat2 massless_dirac(const CScalar& energy, const Vec3& momentum) {
  return embed(Quat4(energy, {-momentum[0], -momentum[1], -momentum[2]}));
}

Spinor2 null_spinor(const std::array<double, 3>& momentum) {
  const double norm = std::hypot(momentum[0], momentum[1], momentum[2]);
  if (!(norm > 0.0) || !std::isfinite(norm)) throw Error(Errc::ZeroMomentum, "null spinor needs a nonzero momentum");
  const double nx = momentum[0] / norm;
  const double ny = momentum[1] / norm;
  const double nz = momentum[2] / norm;

  // Both columns of (I + sigma.n) span the +1 eigenspace; take the one
  // whose leading term keeps away from cancellation.
  std::complex<double> up;
  std::complex<double> down;
  if (nz >= 0.0) {
    up = {1.0 + nz, 0.0};
    down = {nx, ny};
  } else {
    up = {nx, -ny};
    down = {1.0 - nz, 0.0};
  }
  const double length = std::sqrt(std::norm(up) + std::norm(down));
  up /= length;
  down /= length;

  const std::complex<double> lead = std::abs(up) > 0.0 ? up : down;
  const std::complex<double> phase = std::conj(lead) / std::abs(lead);
  up *= phase;
  down *= phase;
  if (std::abs(up) > 0.0) up = {std::abs(up), 0.0};
  else down = {std::abs(down), 0.0};
  return {CScalar::floating(up), CScalar::floating(down)};
}

std::string to_string(const Mat2& m) {
  return "[[" + to_string(m(0, 0)) + ", " + to_string(m(0, 1)) + "], [" + to_string(m(1, 0)) + ", " +
         to_string(m(1, 1)) + "]]";
}

}  // namespace recsym
