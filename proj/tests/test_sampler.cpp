#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "recsym/sampler.hpp"

using namespace recsym;

namespace {

/// Reference SplitMix64, written from the published algorithm.
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t operator()() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

std::uint64_t first_output(std::uint64_t state) { return SplitMix64{state}(); }

bool small_denominators(const CScalar& s) {
  const auto& v = s.exact_value();
  return v.re.get_den() <= 16 && v.im.get_den() <= 16;
}

bool all_parts(const Quat4& q, auto pred) {
  return pred(q.scalar()) && pred(q.vec()[0]) && pred(q.vec()[1]) && pred(q.vec()[2]);
}

}  // namespace

TEST_CASE("reference SplitMix64 matches the published test vector") {
  SplitMix64 g{1234567};
  CHECK(g() == 6457827717110365317ULL);
  CHECK(g() == 3203168211198807973ULL);
  CHECK(g() == 9817491932198370423ULL);
}

TEST_CASE("SampleStream is SplitMix64 seeded from (seed, position)") {
  for (std::uint64_t seed : {0ULL, 1ULL, 0x5EC5EEDULL, ~0ULL}) {
    for (std::uint64_t pos : {0ULL, 1ULL, 2ULL, 999ULL, 1ULL << 40}) {
      SplitMix64 ref{first_output(seed ^ first_output(pos))};
      SampleStream s(seed, pos);
      for (int k = 0; k < 8; ++k) CHECK(s.next() == ref());
    }
  }
}

TEST_CASE("frozen values for the default seed") {
  SampleStream s(0x5EC5EED, 0);
  CHECK(s.next() == 1883284563763801285ULL);
  CHECK(s.next() == 6741496035331518698ULL);
  const SampleConfig cfg;
  CHECK(to_string(sample_quat(cfg, 0)) == "(11/6+1i; 19/12-11/6i, 4/11+4/3i, 1+13/10i)");
  CHECK(to_string(sample_le_right(cfg, 0)) == "(25/2; 6, 3, -21/2)");
}

TEST_CASE("uniform and below stay in range") {
  SampleStream s(7, 3);
  for (int k = 0; k < 10000; ++k) {
    const double u = s.uniform();
    CHECK((u >= 0.0 && u < 1.0));
    CHECK(s.below(17) < 17);
  }
}

TEST_CASE("sample_quat is deterministic and respects the config") {
  SampleConfig cfg;
  for (std::uint64_t pos = 0; pos < 200; ++pos) {
    const Quat4 q = sample_quat(cfg, pos);
    CHECK(q == sample_quat(cfg, pos));
    CHECK(all_parts(q, small_denominators));
    CHECK(all_parts(q, [&](const CScalar& c) {
      const auto& v = c.exact_value();
      return abs(v.re) <= cfg.magnitude_bound && abs(v.im) <= cfg.magnitude_bound;
    }));
  }
  SampleConfig real = cfg;
  real.complex_components = false;
  for (std::uint64_t pos = 0; pos < 200; ++pos) CHECK(sample_quat(real, pos).is_real());

  SampleConfig f = cfg;
  f.backend = Backend::Float;
  f.magnitude_bound = Rational(1, 2);
  for (std::uint64_t pos = 0; pos < 200; ++pos) {
    const Quat4 q = sample_quat(f, pos);
    CHECK(q.backend() == Backend::Float);
    CHECK(all_parts(q, [](const CScalar& c) {
      return std::abs(c.to_complex().real()) <= 0.5 && std::abs(c.to_complex().imag()) <= 0.5;
    }));
  }
  SampleConfig other = cfg;
  other.seed = 1;
  CHECK_FALSE(sample_quat(other, 0) == sample_quat(cfg, 0));
}

TEST_CASE("Pythagorean table") {
  const auto& table = pythagorean_table();
  CHECK(table.size() > 100);
  auto has = [&](long b0, long b1, long b2, long b3) {
    return std::any_of(table.begin(), table.end(), [&](const PythagoreanQuadruple& q) {
      return q.b0 == b0 && q.b1 == b1 && q.b2 == b2 && q.b3 == b3;
    });
  };
  CHECK(has(13, 0, 0, 5));
  CHECK(has(13, 3, 4, 12));
  CHECK(has(25, 0, 7, 24));
  CHECK_FALSE(has(26, 0, 7, 24));
  for (const auto& q : table) {
    CHECK(q.b0 * q.b0 - (q.b1 * q.b1 + q.b2 * q.b2 + q.b3 * q.b3) == q.root * q.root);
    CHECK((0 <= q.b1 && q.b1 <= q.b2 && q.b2 <= q.b3 && q.b3 <= 24));
    CHECK((0 <= q.root && q.root <= 24 && q.b0 > 0));
  }
}

TEST_CASE("Pythagorean draws keep the LE radicand a perfect square") {
  SampleConfig cfg;
  for (std::uint64_t pos = 0; pos < 500; ++pos) {
    const Quat4 b = sample_le_right(cfg, pos);
    CHECK(b.is_real());
    CHECK(compare_real(b.scalar(), CScalar::integer(Backend::Exact, 0)) > 0);
    const CScalar rad = b.scalar() * b.scalar() - dot(b.vec(), b.vec());
    const CScalar root = sqrt_scalar(rad);
    CHECK(root * root == rad);
    CHECK(b == sample_le_right(cfg, pos));
  }
}

TEST_CASE("unit boosts, velocities and timelike draws") {
  for (Backend backend : {Backend::Exact, Backend::Float}) {
    SampleConfig cfg;
    cfg.backend = backend;
    for (std::uint64_t pos = 0; pos < 300; ++pos) {
      SampleStream s(cfg.seed, pos);
      const Quat4 b = draw_unit_boost(s, cfg);
      const Velocity3 v = draw_velocity(s, cfg);
      const Quat4 t = draw_timelike(s, cfg);
      if (backend == Backend::Exact) {
        CHECK(qform(b) == CScalar::integer(Backend::Exact, 1));
        CHECK(qform(boost_from_velocity(v)) == CScalar::integer(Backend::Exact, 1));
      } else {
        CHECK(std::abs(qform(b).to_complex() - 1.0) <= 1e-12);
        CHECK(v.speed_sq().to_complex().real() < 0.99 * 0.99);
      }
      CHECK(t.is_real());
      CHECK(t.scalar().to_complex().real() > 0.0);
      CHECK(qform(t).to_complex().real() >= -1e-12);
    }
  }
}
