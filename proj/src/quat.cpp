#include "recsym/quat.hpp"

#include <algorithm>

namespace recsym {

Vec3 make_vec3(Backend backend, long x, long y, long z) {
  return {CScalar::integer(backend, x), CScalar::integer(backend, y), CScalar::integer(backend, z)};
}

CScalar dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 scale(const CScalar& k, const Vec3& a) { return {k * a[0], k * a[1], k * a[2]}; }

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

bool is_zero(const Vec3& a) { return a[0].is_zero() && a[1].is_zero() && a[2].is_zero(); }

Backend backend_of(const Vec3& a) {
  require_same_backend(a[0], a[1]);
  require_same_backend(a[0], a[2]);
  return a[0].backend();
}

Quat4::Quat4(CScalar scalar, Vec3 vec) : scalar_(std::move(scalar)), vec_(std::move(vec)) {
  for (const auto& c : vec_) require_same_backend(scalar_, c);
}

Quat4 Quat4::zero(Backend backend) { return integers(backend, 0, 0, 0, 0); }

Quat4 Quat4::identity(Backend backend) { return integers(backend, 1, 0, 0, 0); }

Quat4 Quat4::integers(Backend backend, long s, long x, long y, long z) {
  return {CScalar::integer(backend, s), make_vec3(backend, x, y, z)};
}

bool Quat4::is_real() const {
  return scalar_.is_real() && std::all_of(vec_.begin(), vec_.end(), [](const CScalar& c) { return c.is_real(); });
}

bool operator==(const Quat4& a, const Quat4& b) { return a.scalar_ == b.scalar_ && a.vec_ == b.vec_; }

Quat4 conj(const Quat4& a) { return {a.scalar(), {-a.vec()[0], -a.vec()[1], -a.vec()[2]}}; }

CScalar euclid_norm_sq(const Quat4& a) { return a.scalar() * a.scalar() + dot(a.vec(), a.vec()); }

CScalar qform(const Quat4& a) { return a.scalar() * a.scalar() - dot(a.vec(), a.vec()); }

namespace {

bool negligible(const CScalar& x) {
  if (x.is_exact()) return x.is_zero();
  return x.abs() < kFloatSingularity;
}

}  // namespace

Quat4 le_compose(const Quat4& a, const Quat4& b) {
  require_same_backend(a.scalar(), b.scalar());
  const CScalar& a0 = a.scalar();
  const CScalar& b0 = b.scalar();
  const CScalar ab = dot(a.vec(), b.vec());
  const CScalar bb = dot(b.vec(), b.vec());
  const CScalar root = sqrt_scalar(b0 * b0 - bb);

  // (b0 - r)/(B.B) and 1/(b0 + r) agree; in floats use whichever side of
  // b0 -/+ r does not cancel.
  CScalar coeff = a0;
  const CScalar plus = b0 + root;
  const CScalar minus = b0 - root;
  if (!plus.is_exact() && plus.abs() < minus.abs() && !negligible(bb)) {
    coeff += minus * ab / bb;
  } else if (!negligible(plus)) {
    coeff += ab / plus;
  }

  return {a0 * b0 + ab, scale(root, a.vec()) + scale(coeff, b.vec())};
}

Quat4 rs_compose(const Quat4& a, const Quat4& b) {
  require_same_backend(a.scalar(), b.scalar());
  const CScalar& a0 = a.scalar();
  const CScalar& b0 = b.scalar();
  const CScalar i = CScalar::imag_unit(a.backend());
  return {a0 * b0 + dot(a.vec(), b.vec()),
          scale(b0, a.vec()) + scale(a0, b.vec()) + scale(i, cross(a.vec(), b.vec()))};
}

std::string_view rule_name(Rule rule) noexcept { return rule == Rule::LE ? "le" : "rs"; }

Rule parse_rule(std::string_view text) {
  if (text == "le") return Rule::LE;
  if (text == "rs") return Rule::RS;
  throw Error(Errc::InvalidArgument, "unknown rule '" + std::string(text) + "'");
}

Quat4 compose(Rule rule, const Quat4& a, const Quat4& b) {
  return rule == Rule::LE ? le_compose(a, b) : rs_compose(a, b);
}

CScalar qform_via_conj(const Quat4& a, Rule rule) {
  const Quat4 product = compose(rule, a, conj(a));
  bool residue = false;
  if (a.backend() == Backend::Exact) {
    residue = !is_zero(product.vec());
  } else {
    double magnitude = a.scalar().abs() * a.scalar().abs();
    for (const auto& c : a.vec()) magnitude += c.abs() * c.abs();
    const double tol = 1e-12 * std::max(1.0, magnitude);
    for (const auto& c : product.vec()) residue = residue || c.abs() > tol;
  }
  if (residue) {
    throw Error(Errc::VectorResidueNonzero, "composition with the conjugate left vector part in " + to_string(product));
  }
  return product.scalar();
}

Quat4 add(const Quat4& a, const Quat4& b) { return {a.scalar() + b.scalar(), a.vec() + b.vec()}; }

Quat4 sub(const Quat4& a, const Quat4& b) { return {a.scalar() - b.scalar(), a.vec() - b.vec()}; }

Quat4 scale(const CScalar& k, const Quat4& a) { return {k * a.scalar(), scale(k, a.vec())}; }

std::string to_string(const Quat4& q) {
  return "(" + to_string(q.scalar()) + "; " + to_string(q.vec()[0]) + ", " + to_string(q.vec()[1]) + ", " +
         to_string(q.vec()[2]) + ")";
}

}  // namespace recsym
