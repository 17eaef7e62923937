#pragma once

#include <array>
#include <string>

#include "recsym/scalar.hpp"

namespace recsym {

using Vec3 = std::array<CScalar, 3>;

Vec3 make_vec3(Backend backend, long x, long y, long z);

/// Complex-bilinear dot product (no conjugation).
CScalar dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
Vec3 scale(const CScalar& k, const Vec3& a);
Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& a);
Backend backend_of(const Vec3& a);

/// A 4-vector a0 + A: one scalar part and a 3-vector part, all four
/// components in the same backend.
class Quat4 {
 public:
  /// Exact zero.
  Quat4() = default;
  Quat4(CScalar scalar, Vec3 vec);

  static Quat4 zero(Backend backend);
  static Quat4 identity(Backend backend);
  /// Real integer components, handy for literals.
  static Quat4 integers(Backend backend, long s, long x, long y, long z);

  const CScalar& scalar() const noexcept { return scalar_; }
  const Vec3& vec() const noexcept { return vec_; }
  Backend backend() const noexcept { return scalar_.backend(); }
  bool is_real() const;

  friend bool operator==(const Quat4& a, const Quat4& b);

 private:
  CScalar scalar_;
  Vec3 vec_{};
};

/// a0 - A.
Quat4 conj(const Quat4& a);

/// a0^2 + A.A, the Euclidean radicand. Not the invariant used by the
/// composition rules; see qform.
CScalar euclid_norm_sq(const Quat4& a);

/// a0^2 - A.A, the Minkowski-signature quadratic form.
CScalar qform(const Quat4& a);

/// Lorentz-Einstein composition:
///   a0 b0 + A.B + A r + {(b0 - r)(A.B)/(B.B) + a0} B,  r = sqrt(b0^2 - B.B)
/// with r on the principal branch. Evaluated in the equivalent form
/// (b0 - r)/(B.B) = 1/(b0 + r), which stays finite when B.B = 0 and B != 0.
/// If b0 + r vanishes (only possible when B.B = 0) the braced first term is
/// taken as 0. Exact operands need b0^2 - B.B to be a rational square.
Quat4 le_compose(const Quat4& a, const Quat4& b);

/// Reciprocal-symmetric composition:
///   a0 b0 + A.B + b0 A + a0 B + i (A x B)
Quat4 rs_compose(const Quat4& a, const Quat4& b);

enum class Rule { LE, RS };

std::string_view rule_name(Rule rule) noexcept;
Rule parse_rule(std::string_view text);

Quat4 compose(Rule rule, const Quat4& a, const Quat4& b);

/// Scalar part of a composed with conj(a); throws
/// Errc::VectorResidueNonzero if the vector part does not vanish.
CScalar qform_via_conj(const Quat4& a, Rule rule);

Quat4 add(const Quat4& a, const Quat4& b);
Quat4 sub(const Quat4& a, const Quat4& b);
Quat4 scale(const CScalar& k, const Quat4& a);

/// "(s; v1, v2, v3)" using to_string for each component.
std::string to_string(const Quat4& q);

/// Float comparisons below this magnitude count as zero in le_compose.
inline constexpr double kFloatSingularity = 1e-30;

}  // namespace recsym
