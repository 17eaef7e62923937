#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "recsym/json_io.hpp"
#include "recsym/sampler.hpp"

namespace recsym {

/// A sampled input on which the two sides of a property disagree.
/// Non-quaternion inputs are packed into Quat4 (3-vectors and velocities as
/// (0; v)); replay() recomputes lhs, rhs and the residual from `inputs`.
struct Counterexample {
  std::uint64_t position = 0;
  std::vector<Quat4> inputs;
  Json lhs;
  Json rhs;
  /// Empty when evaluation raised an error instead of producing a value.
  std::optional<double> residual;
};

enum class ReportKind { Identity, Search };

enum class Expectation { Holds, Witness, NoWitness };

struct IdentityReport {
  std::string identity_id;
  ReportKind kind = ReportKind::Identity;
  Expectation expectation = Expectation::Holds;
  Backend backend = Backend::Exact;
  std::uint64_t seed = 0;
  std::size_t samples_run = 0;
  bool passed = true;
  bool vacuous = false;
  double worst_abs_residual = 0.0;
  double worst_rel_residual = 0.0;
  /// Present exactly when passed is false, except for a search that expected
  /// a witness and found none (nothing to show).
  std::optional<Counterexample> counterexample;
  /// Searches only: the first witness found, whether or not it was expected.
  std::optional<Counterexample> witness;
  double elapsed_ms = 0.0;
};

struct Comparison {
  Json lhs;
  Json rhs;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  bool equal = true;
};

const std::vector<std::string>& identity_ids();
const std::vector<std::string>& property_ids();
bool is_identity(std::string_view id);
bool is_property(std::string_view id);
Expectation property_expectation(std::string_view property_id);

/// Float tolerance for an identity: passes when
///   |lhs - rhs| <= tol * max(1, |lhs|, |rhs|)   (componentwise maximum).
double identity_tolerance(std::string_view identity_id);

/// Float residual above which a search counts a sample as a witness.
inline constexpr double kWitnessThreshold = 1e-6;

/// Re-evaluates an identity or property on explicit inputs.
Comparison replay(std::string_view id, const std::vector<Quat4>& inputs);

/// Runs one registered identity on cfg.count samples. Exact runs demand
/// zero residual. Throws Errc::UnknownIdentity.
IdentityReport check_identity(std::string_view identity_id, const SampleConfig& cfg);

/// First sampled witness (lowest position) violating the property, if any.
/// Throws Errc::UnknownProperty.
std::optional<Counterexample> search_counterexample(std::string_view property_id, const SampleConfig& cfg);

/// search_counterexample wrapped as a report; passed means the outcome
/// matches the registered expectation.
IdentityReport run_search(std::string_view property_id, const SampleConfig& cfg);

/// Every identity, then every search.
std::vector<IdentityReport> run_suite(const SampleConfig& cfg);

struct SuiteSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool all_passed = true;
};

SuiteSummary summarize(const std::vector<IdentityReport>& reports);

Json to_json(const Counterexample& c);
Json to_json(const IdentityReport& r);
/// JSON array of reports followed by one {"kind": "summary"} element.
Json suite_to_json(const std::vector<IdentityReport>& reports);

struct FrameCoefficients {
  CScalar alpha;
  CScalar beta;
  CScalar gamma;
};

/// Solves vec(R) = alpha A + beta B + gamma (A x B). Throws
/// Errc::DegenerateFrame when A, B and A x B do not form a basis.
FrameCoefficients decompose_vector_part(const Quat4& a, const Quat4& b, const Quat4& r);

}  // namespace recsym
