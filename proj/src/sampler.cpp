#include "recsym/sampler.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace recsym {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t x) noexcept {
  std::uint64_t z = x + kGolden;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

long isqrt_exact(long n) {
  if (n < 0) return -1;
  auto r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : -1;
}

constexpr std::array<std::array<int, 3>, 6> kPermutations{
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

struct Oriented {
  long b0;
  std::array<long, 3> b;
  long root;
};

Oriented draw_oriented(SampleStream& stream, bool timelike) {
  const auto& table = pythagorean_table();
  const PythagoreanQuadruple* q = nullptr;
  do {
    q = &table[stream.below(table.size())];
  } while (timelike && q->root == 0);
  const std::array<long, 3> raw{q->b1, q->b2, q->b3};
  const auto& perm = kPermutations[stream.below(kPermutations.size())];
  Oriented out{q->b0, {}, q->root};
  for (std::size_t k = 0; k < 3; ++k) {
    const long sign = (stream.next() & 1U) != 0 ? -1 : 1;
    out.b[k] = sign * raw[static_cast<std::size_t>(perm[k])];
  }
  return out;
}

}  // namespace

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t position) : state_(mix(seed ^ mix(position))) {}

std::uint64_t SampleStream::next() noexcept {
  state_ += kGolden;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SampleStream::uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t SampleStream::below(std::uint64_t n) noexcept { return n == 0 ? 0 : next() % n; }

const std::vector<PythagoreanQuadruple>& pythagorean_table() {
  static const std::vector<PythagoreanQuadruple> table = [] {
    std::vector<PythagoreanQuadruple> out;
    constexpr long kMax = 24;
    for (long b1 = 0; b1 <= kMax; ++b1) {
      for (long b2 = b1; b2 <= kMax; ++b2) {
        for (long b3 = b2; b3 <= kMax; ++b3) {
          for (long root = 0; root <= kMax; ++root) {
            const long b0 = isqrt_exact(root * root + b1 * b1 + b2 * b2 + b3 * b3);
            if (b0 > 0) out.push_back({b0, b1, b2, b3, root});
          }
        }
      }
    }
    return out;
  }();
  return table;
}

CScalar draw_scalar(SampleStream& stream, const SampleConfig& cfg, bool allow_complex) {
  const bool complex = allow_complex && cfg.complex_components;
  if (cfg.backend == Backend::Float) {
    const double bound = cfg.magnitude_bound.get_d();
    const double re = (2.0 * stream.uniform() - 1.0) * bound;
    const double im = complex ? (2.0 * stream.uniform() - 1.0) * bound : 0.0;
    return CScalar::floating(re, im);
  }
  auto part = [&]() {
    const long den = 1 + static_cast<long>(stream.below(16));
    Rational limit = cfg.magnitude_bound * den;
    const mpz_class max_num = limit.get_num() / limit.get_den();
    const auto span = static_cast<std::uint64_t>(2 * max_num.get_si() + 1);
    const long num = static_cast<long>(stream.below(span)) - max_num.get_si();
    return Rational(num, den);
  };
  Rational re = part();
  Rational im = complex ? part() : Rational(0);
  return CScalar::exact(re, im);
}

Quat4 draw_quat(SampleStream& stream, const SampleConfig& cfg) {
  CScalar s = draw_scalar(stream, cfg, true);
  return {std::move(s), draw_vec3(stream, cfg)};
}

Quat4 draw_real_quat(SampleStream& stream, const SampleConfig& cfg) {
  CScalar s = draw_scalar(stream, cfg, false);
  Vec3 v{draw_scalar(stream, cfg, false), draw_scalar(stream, cfg, false), draw_scalar(stream, cfg, false)};
  return {std::move(s), std::move(v)};
}

Vec3 draw_vec3(SampleStream& stream, const SampleConfig& cfg) {
  Vec3 v{draw_scalar(stream, cfg, true), draw_scalar(stream, cfg, true), draw_scalar(stream, cfg, true)};
  return v;
}

Quat4 draw_pythagorean(SampleStream& stream, Backend backend) {
  const Oriented q = draw_oriented(stream, false);
  Rational k(static_cast<long>(1 + stream.below(3)), static_cast<long>(1 + stream.below(2)));
  k.canonicalize();
  auto c = [&](long x) { return CScalar::from_rational(backend, Rational(k * x)); };
  return {c(q.b0), {c(q.b[0]), c(q.b[1]), c(q.b[2])}};
}

Quat4 draw_timelike(SampleStream& stream, const SampleConfig& cfg) {
  if (cfg.backend == Backend::Exact) return draw_pythagorean(stream, Backend::Exact);
  Vec3 v{draw_scalar(stream, cfg, false), draw_scalar(stream, cfg, false), draw_scalar(stream, cfg, false)};
  const double mass = cfg.magnitude_bound.get_d() * stream.uniform();
  const double b0 = std::sqrt(dot(v, v).to_complex().real() + mass * mass);
  return {CScalar::floating(b0), std::move(v)};
}

Quat4 draw_unit_boost(SampleStream& stream, const SampleConfig& cfg) {
  if (cfg.backend == Backend::Float) return boost_from_velocity(draw_velocity(stream, cfg));
  const Oriented q = draw_oriented(stream, true);
  auto c = [&](long x) { return CScalar::exact(Rational(x, q.root)); };
  return {c(q.b0), {c(q.b[0]), c(q.b[1]), c(q.b[2])}};
}

Velocity3 draw_velocity(SampleStream& stream, const SampleConfig& cfg) {
  if (cfg.backend == Backend::Exact) {
    const Oriented q = draw_oriented(stream, true);
    return Velocity3::exact(Rational(q.b[0], q.b0), Rational(q.b[1], q.b0), Rational(q.b[2], q.b0));
  }
  constexpr double kMaxSpeed = 0.99;
  for (;;) {
    const double x = 2.0 * stream.uniform() - 1.0;
    const double y = 2.0 * stream.uniform() - 1.0;
    const double z = 2.0 * stream.uniform() - 1.0;
    if (x * x + y * y + z * z < 1.0) return {kMaxSpeed * x, kMaxSpeed * y, kMaxSpeed * z};
  }
}

Quat4 sample_quat(const SampleConfig& cfg, std::uint64_t position) {
  SampleStream stream(cfg.seed, position);
  return draw_quat(stream, cfg);
}

Quat4 sample_le_right(const SampleConfig& cfg, std::uint64_t position) {
  SampleStream stream(cfg.seed, position);
  return draw_pythagorean(stream, cfg.backend);
}

}  // namespace recsym
