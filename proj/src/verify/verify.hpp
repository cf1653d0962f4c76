#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catalog/catalog.hpp"

namespace ppsym {

enum class ClaimKind {
  ConformalClass,
  ConformalFactor,
  Commutator,
  KgPotential,
  NoetherCondition,
  NoetherDivergence,
  WavePsi,
  Table5Count,
  Vacuum,
};

enum class ClaimStatus { Pass, Fail, AmendedPass };

std::string_view claim_kind_name(ClaimKind k);
std::string_view claim_status_name(ClaimStatus s);

struct Witness {
  Point point;
  std::optional<double> value;  // absent when evaluation itself failed
  std::string message;
};

struct Discrepancy {
  std::string class_id;
  ClaimKind kind = ClaimKind::ConformalClass;
  std::string subject;
  std::string printed;
  std::string corrected;
  std::string note;
  double printed_residual = 0.0;
  std::optional<Witness> evidence;
};

struct ClaimReport {
  std::string class_id;
  ClaimKind kind = ClaimKind::ConformalClass;
  std::string subject;
  ClaimStatus status = ClaimStatus::Pass;
  double residual = 0.0;
  std::optional<Witness> witness;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::string detail;
  std::optional<std::size_t> discrepancy;  // index into the report's discrepancy list
};

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t amended = 0;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t samples = 32;
  std::size_t jet_samples = 64;
  Tolerance tol;
  bool noether = true;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
  ParameterMap params;
};

struct ClassReport {
  std::string class_id;
  std::vector<ClaimReport> claims;
  std::vector<Discrepancy> discrepancies;
  /// Generators that lift to symmetries of the wave equation.
  std::vector<std::string> wave_generators;
  bool vacuum = false;
  Summary summary() const;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  Tolerance tol;
  std::vector<ClaimReport> claims;
  std::vector<Discrepancy> discrepancies;
  Summary summary;
};

struct ResidualCheck {
  ClaimStatus status = ClaimStatus::Pass;
  double residual = 0.0;
  std::optional<Witness> witness;
  std::size_t samples = 0;
};

/// Scaled-residual check of e over the sampler; a NumericFailure propagates.
ResidualCheck residual_check(const Expr& e, const Sampler& sampler, const Tolerance& tol,
                             const Environment& base = {});

ClassReport verify_class(const std::string& id, const VerifyOptions& options = {});

SuiteReport run_suite(const std::vector<std::string>& ids, const VerifyOptions& options = {});

/// User-supplied H and ξ, with optional ψ and V, checked outside the catalog.
struct AdHocInput {
  std::string H = "0";
  std::string xi;
  std::string psi;  // empty: the classifier's ψ
  std::string V;    // empty: no Klein-Gordon claims
  ParameterMap params;
};

/// All expressions are parsed before any check runs; ParseError propagates.
SuiteReport check_adhoc(const AdHocInput& input, const VerifyOptions& options = {});

inline constexpr int kReportSchemaVersion = 1;

std::string report_json(const SuiteReport& report);
std::string report_text(const SuiteReport& report);

}  // namespace ppsym
