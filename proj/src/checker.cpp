#include "recsym/checker.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>

namespace recsym {

namespace {

struct Sides {
  std::vector<CScalar> lhs;
  std::vector<CScalar> rhs;
  Json lhs_json;
  Json rhs_json;
};

using Inputs = std::vector<Quat4>;
using Sampler = std::function<Inputs(SampleStream&, const SampleConfig&, std::uint64_t position)>;
using Evaluator = std::function<Sides(const Inputs&)>;

struct Entry {
  std::string id;
  Expectation expectation;
  double tolerance;
  /// Identities over a fixed finite set run exactly this many instances.
  std::size_t fixed_instances;
  Sampler sample;
  Evaluator evaluate;
};

constexpr double kSingleTolerance = 1e-12;
constexpr double kVelocityTolerance = 1e-10;
constexpr int kMaxRedraws = 256;

std::vector<CScalar> components(const Quat4& q) { return {q.scalar(), q.vec()[0], q.vec()[1], q.vec()[2]}; }

std::vector<CScalar> components(const Mat2& m) { return {m.entries().begin(), m.entries().end()}; }

Sides scalar_sides(const CScalar& l, const CScalar& r) { return {{l}, {r}, to_json(l), to_json(r)}; }

Sides quat_sides(const Quat4& l, const Quat4& r) { return {components(l), components(r), to_json(l), to_json(r)}; }

Sides mat_sides(const Mat2& l, const Mat2& r) { return {components(l), components(r), to_json(l), to_json(r)}; }

Quat4 pack(const Vec3& v) { return {v[0].zero_like(), v}; }

Velocity3 unpack_velocity(const Quat4& q) { return Velocity3(q.vec()); }

Comparison compare(const Sides& sides, Backend backend, double tolerance) {
  Comparison out{sides.lhs_json, sides.rhs_json, 0.0, 0.0, true};
  double scale = 0.0;
  for (std::size_t k = 0; k < sides.lhs.size(); ++k) {
    out.abs_residual = std::max(out.abs_residual, (sides.lhs[k] - sides.rhs[k]).abs());
    scale = std::max({scale, sides.lhs[k].abs(), sides.rhs[k].abs()});
    if (backend == Backend::Exact && !(sides.lhs[k] == sides.rhs[k])) out.equal = false;
  }
  out.rel_residual = out.abs_residual / std::max(scale, 1e-15);
  if (backend == Backend::Float) out.equal = out.abs_residual <= tolerance * std::max(1.0, scale);
  return out;
}

bool real_pair_spread(const Vec3& u, const Vec3& v) {
  // Pairwise angle of at least 30 degrees: (u.v)^2 <= 3/4 |u|^2 |v|^2.
  const CScalar uu = dot(u, u);
  const CScalar vv = dot(v, v);
  if (uu.is_zero() || vv.is_zero()) return false;
  const CScalar uv = dot(u, v);
  const CScalar bound = CScalar::from_rational(uu.backend(), Rational(3, 4)) * uu * vv;
  return compare_real(uv * uv, bound) <= 0;
}

bool well_conditioned(const Vec3& u, const Vec3& v) {
  // Float frames need an angle of at least ~6 degrees so the decomposition
  // does not amplify rounding: |u x v|^2 >= 1/100 |u|^2 |v|^2.
  const double uu = dot(u, u).to_complex().real();
  const double vv = dot(v, v).to_complex().real();
  const Vec3 w = cross(u, v);
  return dot(w, w).to_complex().real() >= 1e-2 * uu * vv && uu > 0.0 && vv > 0.0;
}

bool frame_ok(const Quat4& a, const Quat4& b) {
  try {
    decompose_vector_part(a, b, a);
    return true;
  } catch (const Error& e) {
    if (e.code() == Errc::DegenerateFrame) return false;
    throw;
  }
}

template <typename Draw, typename Accept>
Inputs redraw_until(Draw draw, Accept accept) {
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    Inputs in = draw();
    if (accept(in)) return in;
  }
  throw Error(Errc::InvalidArgument, "sampler could not satisfy its acceptance condition");
}

Quat4 draw_le_right(SampleStream& stream, const SampleConfig& cfg) { return draw_timelike(stream, cfg); }

Inputs draw_real_frame(SampleStream& stream, const SampleConfig& cfg) {
  return redraw_until(
      [&] {
        Quat4 a = draw_real_quat(stream, cfg);
        Quat4 b = cfg.backend == Backend::Exact ? draw_pythagorean(stream, Backend::Exact) : draw_real_quat(stream, cfg);
        return Inputs{a, b};
      },
      [&](const Inputs& in) {
        if (cfg.backend == Backend::Exact) return frame_ok(in[0], in[1]);
        return well_conditioned(in[0].vec(), in[1].vec());
      });
}

Inputs draw_spread_boosts(SampleStream& stream, const SampleConfig& cfg, std::size_t n) {
  return redraw_until(
      [&] {
        Inputs out;
        for (std::size_t k = 0; k < n; ++k) out.push_back(draw_unit_boost(stream, cfg));
        return out;
      },
      [](const Inputs& in) {
        for (std::size_t i = 0; i < in.size(); ++i) {
          for (std::size_t j = i + 1; j < in.size(); ++j) {
            if (!real_pair_spread(in[i].vec(), in[j].vec())) return false;
          }
        }
        return true;
      });
}

/// Linear combination sum_k q_k sigma(k), built from the sigma matrices
/// themselves rather than through embed.
Mat2 basis_combination(const Quat4& q) {
  const Backend backend = q.backend();
  Mat2 out = mat_scale(q.scalar(), sigma(0, backend));
  for (int k = 1; k <= 3; ++k) {
    out = mat_add(out, mat_scale(q.vec()[static_cast<std::size_t>(k - 1)], sigma(k, backend)));
  }
  return out;
}

/// Pauli relation instances as (P, Q, s, R): P Q + s Q P = R, with P, Q
/// basis elements and s, R given as quaternions in the sigma basis.
Inputs pauli_instance(std::size_t index, Backend backend) {
  auto e = [&](int k) {
    Quat4 q = Quat4::zero(backend);
    const CScalar one = CScalar::integer(backend, 1);
    if (k == 0) return Quat4(one, q.vec());
    Vec3 v = q.vec();
    v[static_cast<std::size_t>(k - 1)] = one;
    return Quat4(q.scalar(), v);
  };
  auto s = [&](long value) { return Quat4::integers(backend, value, 0, 0, 0); };
  auto i_times = [&](int k, long sign) { return scale(CScalar::from_rational(backend, 0, sign), e(k)); };
  const Quat4 zero = Quat4::zero(backend);
  const Quat4 identity = Quat4::identity(backend);
  if (index < 4) {
    const int k = static_cast<int>(index);
    return {e(k), e(k), s(0), identity};
  }
  if (index < 7) {
    const int k = static_cast<int>(index - 3);
    return {e(k), e(0), s(-1), zero};
  }
  static constexpr std::array<std::array<int, 3>, 3> kCyclic{{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}};
  if (index < 10) {
    const auto& c = kCyclic[index - 7];
    return {e(c[0]), e(c[1]), s(1), zero};
  }
  if (index < 13) {
    const auto& c = kCyclic[index - 10];
    return {e(c[0]), e(c[1]), s(0), i_times(c[2], 1)};
  }
  const auto& c = kCyclic[index - 13];
  return {e(c[1]), e(c[0]), s(0), i_times(c[2], -1)};
}

constexpr std::size_t kPauliInstances = 16;

Sides triple_sides(const FrameCoefficients& l, const std::array<CScalar, 3>& r) {
  return {{l.alpha, l.beta, l.gamma},
          {r[0], r[1], r[2]},
          Json::array({to_json(l.alpha), to_json(l.beta), to_json(l.gamma)}),
          Json::array({to_json(r[0]), to_json(r[1]), to_json(r[2])})};
}

Sides gamma_sides(const Inputs& in) {
  const FrameCoefficients f = decompose_vector_part(in[0], in[1], le_compose(in[0], in[1]));
  return scalar_sides(f.gamma, f.gamma.zero_like());
}

const std::vector<Entry>& identity_registry() {
  static const std::vector<Entry> registry = [] {
    std::vector<Entry> r;
    auto add = [&](std::string id, Sampler sample, Evaluator evaluate, double tol = kSingleTolerance,
                   std::size_t fixed = 0) {
      r.push_back({std::move(id), Expectation::Holds, tol, fixed, std::move(sample), std::move(evaluate)});
    };

    add(
        "eq05_qform_conj_le",
        [](SampleStream& s, const SampleConfig& cfg, std::uint64_t) { return Inputs{draw_le_right(s, cfg)}; },
        [](const Inputs& in) { return scalar_sides(qform_via_conj(in[0], Rule::LE), qform(in[0])); });
    add(
        "eq06_multiplicativity_le",
        [](SampleStream& s, const SampleConfig& cfg, std::uint64_t) {
          Quat4 a = draw_quat(s, cfg);
          return Inputs{a, draw_le_right(s, cfg)};
        },
        [](const Inputs& in) {
          return scalar_sides(qform(le_compose(in[0], in[1])), qform(in[0]) * qform(in[1]));
        });
    add(
        "eq08_qform_conj_rs",
        [](SampleStream& s, const SampleConfig& cfg, std::uint64_t) { return Inputs{draw_quat(s, cfg)}; },
        [](const Inputs& in) { return scalar_sides(qform_via_conj(in[0], Rule::RS), qform(in[0])); });
    add(
        "eq09_multiplicativity_rs",
        [](SampleStream& s, const SampleConfig& cfg, std::uint64_t) {
          Quat4 a = draw_quat(s, cfg);
          return Inputs{a, draw_quat(s, cfg)};
        },
        [](const Inputs& in) {
          return scalar_sides(qform(rs_compose(in[0], in[1])), qform(in[0]) * qform(in[1]));
        });
    add(
        "eq11_boost_unit",
        [](SampleStream& s, const SampleConfig& cfg, std::uint64_t) {
          return Inputs{pack(draw_velocity(s, cfg).components())};
        },
        [](const Inputs& in) {
          const Quat4 b = boost_from_velocity(unpack_velocity(in[0]));
          return scalar_sides(qform(b), b.scalar().one_like());
        });
    for (Rule rule : {Rule::LE, Rule::RS}) {
      add(
          std::string("eq12_invariance_") + std::string(rule_name(rule)),
          [](SampleStream& s, const SampleConfig& cfg, std::uint64_t) {
            Quat4 a = draw_quat(s, cfg);
            return Inputs{a, draw_unit_boost(s, cfg)};
          },
          [rule](const Inputs& in) { return scalar_sides(qform(compose(rule, in[0], in[1])), qform(in[0])); });
    }
    add(
        "eq14_17_pauli_relations",
        [](SampleStream&, const SampleConfig& cfg, std::uint64_t position) {
          return pauli_instance(position, cfg.backend);
        },
        [](const Inputs& in) {
          const Mat2 p = basis_combination(in[0]);
          const Mat2 q = basis_combination(in[1]);
          const Mat2 lhs = mat_add(mat_mul(p, q), mat_scale(in[2].scalar(), mat_mul(q, p)));
          return mat_sides(lhs, basis_combination(in[3]));
        },
        kSingleTolerance, kPauliInstances);
    add(
        "eq18_homomorphism",
        [](SampleStream& s, const SampleConfig& cfg, std::uint64_t) {
          Quat4 a = draw_quat(s, cfg);
          return Inputs{a, draw_quat(s, cfg)};
        },
        [](const Inputs& in) {
          return mat_sides(mat_mul(embed(in[0]), embed(in[1])), embed(rs_compose(in[0], in[1])));
        });
    add(
        "eq22_cross_term",
        [](SampleStream& s, const SampleConfig& cfg, std::uint64_t) {
          Vec3 b = draw_vec3(s, cfg);
          return Inputs{pack(b), pack(draw_vec3(s, cfg))};
        },
        [](const Inputs& in) {
          const CrossTerm ct = cross_term(in[0].vec(), in[1].vec());
          const CScalar i = CScalar::imag_unit(in[0].backend());
          return quat_sides(Quat4(ct.scalar, ct.vector),
                            Quat4(dot(in[0].vec(), in[1].vec()), scale(i, cross(in[0].vec(), in[1].vec()))));
        });
    add(
        "le_coplanarity",
        [](SampleStream& s, const SampleConfig& cfg, std::uint64_t) { return draw_real_frame(s, cfg); },
        gamma_sides);
    add(
        "rs_cross_term_exact",
        [](SampleStream& s, const SampleConfig& cfg, std::uint64_t) { return draw_real_frame(s, cfg); },
        [](const Inputs& in) {
          const FrameCoefficients f = decompose_vector_part(in[0], in[1], rs_compose(in[0], in[1]));
          return triple_sides(f, {in[1].scalar(), in[0].scalar(), CScalar::imag_unit(in[0].backend())});
        });
    add(
        "collinear_agreement",
        [](SampleStream& s, const SampleConfig& cfg, std::uint64_t) {
          Quat4 b = draw_unit_boost(s, cfg);
          CScalar a0 = draw_scalar(s, cfg, false);
          CScalar lambda = draw_scalar(s, cfg, false);
          return Inputs{Quat4(a0, scale(lambda, b.vec())), b};
        },
        [](const Inputs& in) { return quat_sides(le_compose(in[0], in[1]), rs_compose(in[0], in[1])); });
    add(
        "det_equals_qform",
        [](SampleStream& s, const SampleConfig& cfg, std::uint64_t) { return Inputs{draw_quat(s, cfg)}; },
        [](const Inputs& in) { return scalar_sides(det(embed(in[0])), qform(in[0])); });
    add(
        "extract_embed_roundtrip",
        [](SampleStream& s, const SampleConfig& cfg, std::uint64_t) { return Inputs{draw_quat(s, cfg)}; },
        [](const Inputs& in) { return quat_sides(extract(embed(in[0])), in[0]); });
    add(
        "velocity_addition_oracle",
        [](SampleStream& s, const SampleConfig& cfg, std::uint64_t) {
          Velocity3 u = draw_velocity(s, cfg);
          return Inputs{pack(u.components()), pack(draw_velocity(s, cfg).components())};
        },
        [](const Inputs& in) {
          const Velocity3 u = unpack_velocity(in[0]);
          const Velocity3 v = unpack_velocity(in[1]);
          // le(boost(u), boost(v)) is the boost of v (+) u: the right operand
          // acts as the frame velocity.
          const Velocity3 lhs = velocity_from_boost(le_compose(boost_from_velocity(u), boost_from_velocity(v)));
          const Velocity3 rhs = einstein_add(v, u);
          return quat_sides(pack(lhs.components()), pack(rhs.components()));
        },
        kVelocityTolerance);
    return r;
  }();
  return registry;
}

const std::vector<Entry>& property_registry() {
  static const std::vector<Entry> registry = [] {
    std::vector<Entry> r;
    auto add = [&](std::string id, Expectation expectation, Sampler sample, Evaluator evaluate) {
      r.push_back({std::move(id), expectation, kWitnessThreshold, 0, std::move(sample), std::move(evaluate)});
    };
    add(
        "le_associativity", Expectation::Witness,
        [](SampleStream& s, const SampleConfig& cfg, std::uint64_t) { return draw_spread_boosts(s, cfg, 3); },
        [](const Inputs& in) {
          return quat_sides(le_compose(le_compose(in[0], in[1]), in[2]), le_compose(in[0], le_compose(in[1], in[2])));
        });
    add(
        "le_commutativity", Expectation::Witness,
        [](SampleStream& s, const SampleConfig& cfg, std::uint64_t) { return draw_spread_boosts(s, cfg, 2); },
        [](const Inputs& in) { return quat_sides(le_compose(in[0], in[1]), le_compose(in[1], in[0])); });
    add(
        "rs_associativity", Expectation::NoWitness,
        [](SampleStream& s, const SampleConfig& cfg, std::uint64_t) {
          Quat4 a = draw_quat(s, cfg);
          Quat4 b = draw_quat(s, cfg);
          return Inputs{a, b, draw_quat(s, cfg)};
        },
        [](const Inputs& in) {
          return quat_sides(rs_compose(rs_compose(in[0], in[1]), in[2]), rs_compose(in[0], rs_compose(in[1], in[2])));
        });
    add(
        "rs_commutativity", Expectation::Witness,
        [](SampleStream& s, const SampleConfig& cfg, std::uint64_t) {
          Quat4 a = draw_quat(s, cfg);
          return Inputs{a, draw_quat(s, cfg)};
        },
        [](const Inputs& in) { return quat_sides(rs_compose(in[0], in[1]), rs_compose(in[1], in[0])); });
    add(
        "le_cross_term_presence", Expectation::NoWitness,
        [](SampleStream& s, const SampleConfig& cfg, std::uint64_t) { return draw_real_frame(s, cfg); }, gamma_sides);
    return r;
  }();
  return registry;
}

const Entry* find(const std::vector<Entry>& registry, std::string_view id) {
  auto it = std::find_if(registry.begin(), registry.end(), [&](const Entry& e) { return e.id == id; });
  return it == registry.end() ? nullptr : &*it;
}

const Entry& find_any(std::string_view id) {
  if (const Entry* e = find(identity_registry(), id)) return *e;
  if (const Entry* e = find(property_registry(), id)) return *e;
  throw Error(Errc::UnknownIdentity, "no identity or property named '" + std::string(id) + "'");
}

struct Evaluated {
  Comparison comparison;
  std::optional<std::string> error;
};

Evaluated evaluate(const Entry& entry, const Inputs& in, Backend backend) {
  try {
    return {compare(entry.evaluate(in), backend, entry.tolerance), std::nullopt};
  } catch (const Error& e) {
    Comparison failed;
    failed.lhs = Json{{"error", e.what()}};
    failed.rhs = nullptr;
    failed.abs_residual = std::numeric_limits<double>::infinity();
    failed.rel_residual = std::numeric_limits<double>::infinity();
    failed.equal = false;
    return {failed, std::string(e.what())};
  }
}

Counterexample make_counterexample(std::uint64_t position, Inputs inputs, const Evaluated& ev) {
  Counterexample c;
  c.position = position;
  c.inputs = std::move(inputs);
  c.lhs = ev.comparison.lhs;
  c.rhs = ev.comparison.rhs;
  if (!ev.error) c.residual = ev.comparison.abs_residual;
  return c;
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

IdentityReport base_report(const Entry& entry, ReportKind kind, const SampleConfig& cfg) {
  IdentityReport r;
  r.identity_id = entry.id;
  r.kind = kind;
  r.expectation = entry.expectation;
  r.backend = cfg.backend;
  r.seed = cfg.seed;
  return r;
}

void track_worst(IdentityReport& report, const Comparison& c) {
  if (std::isfinite(c.abs_residual)) report.worst_abs_residual = std::max(report.worst_abs_residual, c.abs_residual);
  if (std::isfinite(c.rel_residual)) report.worst_rel_residual = std::max(report.worst_rel_residual, c.rel_residual);
}

/// Whether a sample is a witness against the property (the two sides differ).
bool is_witness(const Evaluated& ev) {
  if (ev.error) return false;
  return !ev.comparison.equal;
}

std::string_view expectation_name(Expectation e) {
  switch (e) {
    case Expectation::Holds: return "holds";
    case Expectation::Witness: return "witness";
    case Expectation::NoWitness: return "no_witness";
  }
  return "holds";
}

}  // namespace

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : identity_registry()) out.push_back(e.id);
    return out;
  }();
  return ids;
}

const std::vector<std::string>& property_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : property_registry()) out.push_back(e.id);
    return out;
  }();
  return ids;
}

bool is_identity(std::string_view id) { return find(identity_registry(), id) != nullptr; }

bool is_property(std::string_view id) { return find(property_registry(), id) != nullptr; }

Expectation property_expectation(std::string_view property_id) {
  const Entry* e = find(property_registry(), property_id);
  if (e == nullptr) throw Error(Errc::UnknownProperty, "no property named '" + std::string(property_id) + "'");
  return e->expectation;
}

double identity_tolerance(std::string_view identity_id) {
  const Entry* e = find(identity_registry(), identity_id);
  if (e == nullptr) throw Error(Errc::UnknownIdentity, "no identity named '" + std::string(identity_id) + "'");
  return e->tolerance;
}

Comparison replay(std::string_view id, const std::vector<Quat4>& inputs) {
  const Entry& entry = find_any(id);
  if (inputs.empty()) throw Error(Errc::InvalidArgument, "replay needs inputs");
  const Evaluated ev = evaluate(entry, inputs, inputs.front().backend());
  if (ev.error) throw Error(Errc::InvalidArgument, "replay raised " + *ev.error);
  return ev.comparison;
}

IdentityReport check_identity(std::string_view identity_id, const SampleConfig& cfg) {
  const Entry* entry = find(identity_registry(), identity_id);
  if (entry == nullptr) throw Error(Errc::UnknownIdentity, "no identity named '" + std::string(identity_id) + "'");
  const auto start = std::chrono::steady_clock::now();
  IdentityReport report = base_report(*entry, ReportKind::Identity, cfg);
  const std::size_t n = cfg.count == 0 ? 0 : (entry->fixed_instances > 0 ? entry->fixed_instances : cfg.count);
  for (std::size_t k = 0; k < n; ++k) {
    SampleStream stream(cfg.seed, k);
    Inputs in = entry->sample(stream, cfg, k);
    const Evaluated ev = evaluate(*entry, in, cfg.backend);
    track_worst(report, ev.comparison);
    if (!ev.comparison.equal && !report.counterexample) {
      report.passed = false;
      report.counterexample = make_counterexample(k, std::move(in), ev);
    }
  }
  report.samples_run = n;
  report.vacuous = n == 0;
  report.elapsed_ms = elapsed_since(start);
  return report;
}

std::optional<Counterexample> search_counterexample(std::string_view property_id, const SampleConfig& cfg) {
  const Entry* entry = find(property_registry(), property_id);
  if (entry == nullptr) throw Error(Errc::UnknownProperty, "no property named '" + std::string(property_id) + "'");
  for (std::size_t k = 0; k < cfg.count; ++k) {
    SampleStream stream(cfg.seed, k);
    Inputs in = entry->sample(stream, cfg, k);
    const Evaluated ev = evaluate(*entry, in, cfg.backend);
    if (ev.error) throw Error(Errc::InvalidArgument, "property '" + entry->id + "' raised " + *ev.error);
    if (is_witness(ev)) return make_counterexample(k, std::move(in), ev);
  }
  return std::nullopt;
}

IdentityReport run_search(std::string_view property_id, const SampleConfig& cfg) {
  const Entry* entry = find(property_registry(), property_id);
  if (entry == nullptr) throw Error(Errc::UnknownProperty, "no property named '" + std::string(property_id) + "'");
  const auto start = std::chrono::steady_clock::now();
  IdentityReport report = base_report(*entry, ReportKind::Search, cfg);
  std::size_t k = 0;
  for (; k < cfg.count && !report.witness && !report.counterexample; ++k) {
    SampleStream stream(cfg.seed, k);
    Inputs in = entry->sample(stream, cfg, k);
    const Evaluated ev = evaluate(*entry, in, cfg.backend);
    track_worst(report, ev.comparison);
    if (ev.error) {
      report.counterexample = make_counterexample(k, std::move(in), ev);
    } else if (is_witness(ev)) {
      report.witness = make_counterexample(k, std::move(in), ev);
      if (entry->expectation == Expectation::NoWitness) report.counterexample = report.witness;
    }
  }
  report.samples_run = k;
  report.vacuous = cfg.count == 0;
  if (report.vacuous) {
    report.passed = true;
  } else if (report.counterexample) {
    report.passed = false;
  } else {
    report.passed = (entry->expectation == Expectation::Witness) == report.witness.has_value();
  }
  report.elapsed_ms = elapsed_since(start);
  return report;
}

std::vector<IdentityReport> run_suite(const SampleConfig& cfg) {
  std::vector<IdentityReport> out;
  for (const auto& id : identity_ids()) out.push_back(check_identity(id, cfg));
  for (const auto& id : property_ids()) out.push_back(run_search(id, cfg));
  return out;
}

SuiteSummary summarize(const std::vector<IdentityReport>& reports) {
  SuiteSummary s;
  s.total = reports.size();
  for (const auto& r : reports) (r.passed ? s.passed : s.failed) += 1;
  s.all_passed = s.failed == 0;
  return s;
}

Json to_json(const Counterexample& c) {
  Json j;
  j["position"] = c.position;
  j["inputs"] = Json::array();
  for (const auto& q : c.inputs) j["inputs"].push_back(to_json(q));
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["residual"] = c.residual ? Json(*c.residual) : Json(nullptr);
  return j;
}

Json to_json(const IdentityReport& r) {
  Json j;
  j["identity_id"] = r.identity_id;
  j["kind"] = r.kind == ReportKind::Identity ? "identity" : "search";
  j["expectation"] = expectation_name(r.expectation);
  j["backend"] = backend_name(r.backend);
  j["seed"] = r.seed;
  j["samples_run"] = r.samples_run;
  j["passed"] = r.passed;
  j["vacuous"] = r.vacuous;
  j["worst_abs_residual"] = r.worst_abs_residual;
  j["worst_rel_residual"] = r.worst_rel_residual;
  j["counterexample"] = r.counterexample ? to_json(*r.counterexample) : Json(nullptr);
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Json suite_to_json(const std::vector<IdentityReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  const SuiteSummary s = summarize(reports);
  Json summary;
  summary["identity_id"] = "summary";
  summary["kind"] = "summary";
  summary["total"] = s.total;
  summary["passed"] = s.passed;
  summary["failed"] = s.failed;
  summary["all_passed"] = s.all_passed;
  out.push_back(summary);
  return out;
}

FrameCoefficients decompose_vector_part(const Quat4& a, const Quat4& b, const Quat4& r) {
  const Vec3& av = a.vec();
  const Vec3& bv = b.vec();
  const Vec3 normal = cross(av, bv);
  const CScalar volume = dot(normal, normal);
  bool degenerate = volume.is_zero();
  if (!degenerate && !volume.is_exact()) {
    double aa = 0.0;
    double bb = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
      aa += av[k].abs() * av[k].abs();
      bb += bv[k].abs() * bv[k].abs();
    }
    degenerate = volume.abs() <= 1e-20 * aa * bb;
  }
  if (degenerate) {
    throw Error(Errc::DegenerateFrame, "A, B and A x B do not span: A = " + to_string(a) + ", B = " + to_string(b));
  }
  const Vec3& rv = r.vec();
  return {dot(rv, cross(bv, normal)) / volume, dot(av, cross(rv, normal)) / volume, dot(av, cross(bv, rv)) / volume};
}

}  // namespace recsym
