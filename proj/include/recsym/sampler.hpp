#pragma once

#include <cstdint>
#include <vector>

#include "recsym/boost.hpp"

namespace recsym {

struct SampleConfig {
  std::uint64_t seed = 0x5EC5EED;
  std::size_t count = 1000;
  Backend backend = Backend::Exact;
  /// Components are drawn from [-magnitude_bound, magnitude_bound].
  Rational magnitude_bound = 2;
  bool complex_components = true;
};

/// Pseudorandom stream for one sample position. The generator is SplitMix64
/// with initial state mix(seed ^ mix(position)), where mix(x) is one
/// SplitMix64 output step applied to state x. Every sample position owns an
/// independent stream, so samples can be produced in any order.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t position);

  std::uint64_t next() noexcept;
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept;
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) noexcept;

 private:
  std::uint64_t state_;
};

/// Integer (b0; b1, b2, b3) with b0^2 - (b1^2 + b2^2 + b3^2) = root^2.
struct PythagoreanQuadruple {
  long b0;
  long b1;
  long b2;
  long b3;
  long root;
};

/// All quadruples with 0 <= b1 <= b2 <= b3 <= 24 and 0 <= root <= 24, b0 > 0,
/// found by filtering for perfect squares. Sorted, computed once.
const std::vector<PythagoreanQuadruple>& pythagorean_table();

/// Small-denominator (<= 16) rationals for Exact, uniform doubles for Float.
CScalar draw_scalar(SampleStream& stream, const SampleConfig& cfg, bool allow_complex);
Quat4 draw_quat(SampleStream& stream, const SampleConfig& cfg);
Quat4 draw_real_quat(SampleStream& stream, const SampleConfig& cfg);
Vec3 draw_vec3(SampleStream& stream, const SampleConfig& cfg);

/// A permuted, sign-flipped, rationally rescaled Pythagorean quadruple.
/// Real, b0 > 0; exact b0^2 - B.B is always a rational square.
Quat4 draw_pythagorean(SampleStream& stream, Backend backend);

/// Real (b0; B) with b0 > 0 and b0^2 >= B.B. Exact draws come from
/// draw_pythagorean; float draws have |B| components within the magnitude
/// bound and rest mass uniform in [0, bound].
Quat4 draw_timelike(SampleStream& stream, const SampleConfig& cfg);

/// Real boost with qform exactly 1 (Exact: a timelike quadruple divided by
/// its root; Float: boost_from_velocity of draw_velocity).
Quat4 draw_unit_boost(SampleStream& stream, const SampleConfig& cfg);

/// Subluminal velocity. Exact velocities have rational Lorentz factor; float
/// velocities are uniform in the ball of radius 0.99.
Velocity3 draw_velocity(SampleStream& stream, const SampleConfig& cfg);

/// Deterministic Quat4 for (cfg, position).
Quat4 sample_quat(const SampleConfig& cfg, std::uint64_t position);

/// Deterministic member of the Pythagorean family for (cfg, position); the
/// exact radicand of le_compose with this right operand is a perfect square.
Quat4 sample_le_right(const SampleConfig& cfg, std::uint64_t position);

}  // namespace recsym
