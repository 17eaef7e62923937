#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "recsym/error.hpp"

namespace recsym {

using Rational = mpq_class;

enum class Backend { Exact, Float };

std::string_view backend_name(Backend backend) noexcept;

/// Accepts "exact" or "float" (case-sensitive).
Backend parse_backend(std::string_view text);

/// Exact parse of "p/q", integers and decimals with optional exponent
/// ("0.6" -> 3/5, "-1.5e-2" -> -3/200). Throws Errc::InvalidArgument.
Rational parse_rational(std::string_view text);

struct GaussianRational {
  Rational re;
  Rational im;
};

/// Complex coefficient in one of two backends. Exact values are Gaussian
/// rationals and never round; float values are std::complex<double>.
/// Arithmetic across backends throws Errc::BackendMismatch.
class CScalar {
 public:
  /// Exact zero.
  CScalar() = default;

  static CScalar exact(Rational re, Rational im = 0);
  static CScalar floating(double re, double im = 0.0);
  static CScalar floating(std::complex<double> z);
  /// Rational input in the given backend (rounded to double for Float).
  static CScalar from_rational(Backend backend, const Rational& re, const Rational& im = 0);
  static CScalar integer(Backend backend, long value);
  static CScalar imag_unit(Backend backend);

  Backend backend() const noexcept {
    return std::holds_alternative<GaussianRational>(value_) ? Backend::Exact : Backend::Float;
  }
  bool is_exact() const noexcept { return backend() == Backend::Exact; }

  const GaussianRational& exact_value() const;
  std::complex<double> to_complex() const;

  bool is_zero() const;
  bool is_real() const;
  /// |z| as a double (approximate for exact values).
  double abs() const;

  CScalar zero_like() const { return integer(backend(), 0); }
  CScalar one_like() const { return integer(backend(), 1); }

  CScalar operator-() const;
  CScalar& operator+=(const CScalar& rhs);
  CScalar& operator-=(const CScalar& rhs);
  CScalar& operator*=(const CScalar& rhs);
  CScalar& operator/=(const CScalar& rhs);

  friend CScalar operator+(CScalar lhs, const CScalar& rhs) { return lhs += rhs; }
  friend CScalar operator-(CScalar lhs, const CScalar& rhs) { return lhs -= rhs; }
  friend CScalar operator*(CScalar lhs, const CScalar& rhs) { return lhs *= rhs; }
  friend CScalar operator/(CScalar lhs, const CScalar& rhs) { return lhs /= rhs; }

  /// Exact values compare exactly, floats bitwise-by-value. Values from
  /// different backends are never equal.
  friend bool operator==(const CScalar& lhs, const CScalar& rhs);

 private:
  using Storage = std::variant<GaussianRational, std::complex<double>>;
  explicit CScalar(Storage value) : value_(std::move(value)) {}

  Storage value_{GaussianRational{}};
};

/// Principal square root: non-negative real part, and non-negative imaginary
/// part when the real part is zero. Exact values succeed only when the input
/// is the square of a Gaussian rational; otherwise Errc::SqrtNotExact.
CScalar sqrt_scalar(const CScalar& s);

/// Orders two real scalars; throws Errc::InvalidArgument for non-real input.
int compare_real(const CScalar& a, const CScalar& b);

/// "12", "15/17", "1+1i", "-1/2i" for exact; %.17g parts for float.
std::string to_string(const CScalar& s);

void require_same_backend(const CScalar& a, const CScalar& b);

}  // namespace recsym
