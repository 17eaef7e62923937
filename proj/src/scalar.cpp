#include "recsym/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <optional>

namespace recsym {

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class rn;
  mpz_class rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational root(rn, rd);
  root.canonicalize();
  return root;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
  }
  return true;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string_view backend_name(Backend backend) noexcept {
  return backend == Backend::Exact ? "exact" : "float";
}

Backend parse_backend(std::string_view text) {
  if (text == "exact") return Backend::Exact;
  if (text == "float") return Backend::Float;
  throw Error(Errc::InvalidArgument, "unknown backend '" + std::string(text) + "'");
}

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  auto fail = [&]() -> Rational { throw Error(Errc::InvalidArgument, "not a number: '" + original + "'"); };

  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return fail();

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto p = text.substr(0, slash);
    auto q = text.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) return fail();
    mpz_class den(std::string(q), 10);
    if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + original + "'");
    value = Rational(mpz_class(std::string(p), 10), den);
    value.canonicalize();
  } else {
    std::string_view mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = text.substr(0, e);
      auto exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) return fail();
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    auto dot = mantissa.find('.');
    if (dot == std::string_view::npos) {
      if (!all_digits(mantissa)) return fail();
      digits = std::string(mantissa);
    } else {
      auto int_part = mantissa.substr(0, dot);
      auto frac_part = mantissa.substr(dot + 1);
      if (int_part.empty() && frac_part.empty()) return fail();
      if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
        return fail();
      }
      digits = std::string(int_part) + std::string(frac_part);
      exponent -= static_cast<long>(frac_part.size());
    }
    mpz_class num(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    if (exponent >= 0) {
      value = Rational(num * scale);
    } else {
      value = Rational(num, scale);
      value.canonicalize();
    }
  }
  return negative ? Rational(-value) : value;
}

CScalar CScalar::exact(Rational re, Rational im) {
  re.canonicalize();
  im.canonicalize();
  return CScalar(Storage{GaussianRational{std::move(re), std::move(im)}});
}

CScalar CScalar::floating(double re, double im) { return CScalar(Storage{std::complex<double>(re, im)}); }

CScalar CScalar::floating(std::complex<double> z) { return CScalar(Storage{z}); }

CScalar CScalar::from_rational(Backend backend, const Rational& re, const Rational& im) {
  if (backend == Backend::Exact) return exact(re, im);
  return floating(re.get_d(), im.get_d());
}

CScalar CScalar::integer(Backend backend, long value) {
  if (backend == Backend::Exact) return exact(Rational(value));
  return floating(static_cast<double>(value));
}

CScalar CScalar::imag_unit(Backend backend) {
  if (backend == Backend::Exact) return exact(0, 1);
  return floating(0.0, 1.0);
}

const GaussianRational& CScalar::exact_value() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_)) return *g;
  throw Error(Errc::BackendMismatch, "exact value requested from a float scalar");
}

std::complex<double> CScalar::to_complex() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_)) return {g->re.get_d(), g->im.get_d()};
  return std::get<std::complex<double>>(value_);
}

bool CScalar::is_zero() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_)) return sgn(g->re) == 0 && sgn(g->im) == 0;
  const auto& z = std::get<std::complex<double>>(value_);
  return z.real() == 0.0 && z.imag() == 0.0;
}

bool CScalar::is_real() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_)) return sgn(g->im) == 0;
  return std::get<std::complex<double>>(value_).imag() == 0.0;
}

double CScalar::abs() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_)) {
    if (sgn(g->im) == 0) return std::fabs(g->re.get_d());
    return std::hypot(g->re.get_d(), g->im.get_d());
  }
  return std::abs(std::get<std::complex<double>>(value_));
}

void require_same_backend(const CScalar& a, const CScalar& b) {
  if (a.backend() != b.backend()) {
    throw Error(Errc::BackendMismatch, std::string("cannot combine ") + std::string(backend_name(a.backend())) +
                                           " and " + std::string(backend_name(b.backend())) + " scalars");
  }
}

CScalar CScalar::operator-() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_)) {
    return CScalar(Storage{GaussianRational{-g->re, -g->im}});
  }
  return CScalar(Storage{-std::get<std::complex<double>>(value_)});
}

CScalar& CScalar::operator+=(const CScalar& rhs) {
  require_same_backend(*this, rhs);
  if (auto* g = std::get_if<GaussianRational>(&value_)) {
    const auto& r = std::get<GaussianRational>(rhs.value_);
    g->re += r.re;
    g->im += r.im;
  } else {
    std::get<std::complex<double>>(value_) += std::get<std::complex<double>>(rhs.value_);
  }
  return *this;
}

CScalar& CScalar::operator-=(const CScalar& rhs) {
  require_same_backend(*this, rhs);
  if (auto* g = std::get_if<GaussianRational>(&value_)) {
    const auto& r = std::get<GaussianRational>(rhs.value_);
    g->re -= r.re;
    g->im -= r.im;
  } else {
    std::get<std::complex<double>>(value_) -= std::get<std::complex<double>>(rhs.value_);
  }
  return *this;
}

CScalar& CScalar::operator*=(const CScalar& rhs) {
  require_same_backend(*this, rhs);
  if (auto* g = std::get_if<GaussianRational>(&value_)) {
    const auto& r = std::get<GaussianRational>(rhs.value_);
    if (sgn(g->im) == 0 && sgn(r.im) == 0) {
      g->re *= r.re;
    } else {
      Rational re = g->re * r.re - g->im * r.im;
      Rational im = g->re * r.im + g->im * r.re;
      g->re = std::move(re);
      g->im = std::move(im);
    }
  } else {
    std::get<std::complex<double>>(value_) *= std::get<std::complex<double>>(rhs.value_);
  }
  return *this;
}

CScalar& CScalar::operator/=(const CScalar& rhs) {
  require_same_backend(*this, rhs);
  if (rhs.is_zero()) throw Error(Errc::DivisionByZero, "division by a zero scalar");
  if (auto* g = std::get_if<GaussianRational>(&value_)) {
    const auto& r = std::get<GaussianRational>(rhs.value_);
    if (sgn(r.im) == 0) {
      g->re /= r.re;
      g->im /= r.re;
    } else {
      Rational norm = r.re * r.re + r.im * r.im;
      Rational re = (g->re * r.re + g->im * r.im) / norm;
      Rational im = (g->im * r.re - g->re * r.im) / norm;
      g->re = std::move(re);
      g->im = std::move(im);
    }
  } else {
    std::get<std::complex<double>>(value_) /= std::get<std::complex<double>>(rhs.value_);
  }
  return *this;
}

bool operator==(const CScalar& lhs, const CScalar& rhs) {
  if (lhs.backend() != rhs.backend()) return false;
  if (lhs.is_exact()) {
    const auto& a = std::get<GaussianRational>(lhs.value_);
    const auto& b = std::get<GaussianRational>(rhs.value_);
    return a.re == b.re && a.im == b.im;
  }
  return std::get<std::complex<double>>(lhs.value_) == std::get<std::complex<double>>(rhs.value_);
}

CScalar sqrt_scalar(const CScalar& s) {
  if (!s.is_exact()) {
    auto root = std::sqrt(s.to_complex());
    // std::sqrt follows the sign of a zero imaginary part on the branch cut.
    if (root.real() == 0.0 && std::signbit(root.imag())) root = -root;
    if (root.real() == 0.0) root.real(0.0);
    return CScalar::floating(root);
  }
  const auto& g = s.exact_value();
  auto not_exact = [&]() -> CScalar {
    throw Error(Errc::SqrtNotExact, "no exact square root of " + to_string(s));
  };
  if (sgn(g.im) == 0) {
    if (sgn(g.re) >= 0) {
      auto r = rational_sqrt(g.re);
      return r ? CScalar::exact(*r) : not_exact();
    }
    auto r = rational_sqrt(Rational(-g.re));
    return r ? CScalar::exact(0, *r) : not_exact();
  }
  auto modulus = rational_sqrt(Rational(g.re * g.re + g.im * g.im));
  if (!modulus) return not_exact();
  auto x = rational_sqrt(Rational((*modulus + g.re) / 2));
  auto y = rational_sqrt(Rational((*modulus - g.re) / 2));
  if (!x || !y) return not_exact();
  return CScalar::exact(*x, sgn(g.im) < 0 ? Rational(-*y) : *y);
}

int compare_real(const CScalar& a, const CScalar& b) {
  require_same_backend(a, b);
  if (!a.is_real() || !b.is_real()) throw Error(Errc::InvalidArgument, "ordering requires real scalars");
  if (a.is_exact()) return cmp(a.exact_value().re, b.exact_value().re);
  const double x = a.to_complex().real();
  const double y = b.to_complex().real();
  return (x > y) - (x < y);
}

std::string to_string(const CScalar& s) {
  std::string re;
  std::string im;
  bool re_zero = false;
  bool im_zero = false;
  bool im_negative = false;
  if (s.is_exact()) {
    const auto& g = s.exact_value();
    re = g.re.get_str();
    im_negative = sgn(g.im) < 0;
    im = Rational(abs(g.im)).get_str();
    re_zero = sgn(g.re) == 0;
    im_zero = sgn(g.im) == 0;
  } else {
    const auto z = s.to_complex();
    re = format_double(z.real());
    im_negative = std::signbit(z.imag());
    im = format_double(std::fabs(z.imag()));
    re_zero = z.real() == 0.0;
    im_zero = z.imag() == 0.0;
  }
  if (im_zero) return re;
  std::string out;
  if (!re_zero) out = re + (im_negative ? "-" : "+");
  else if (im_negative) out = "-";
  return out + im + "i";
}

}  // namespace recsym
