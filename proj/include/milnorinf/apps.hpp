#pragma once

// Tameness verdicts, monodromy-at-infinity equivalence certificates and
// Thom-Sebastiani sums built on top of MilnorReport.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "milnorinf/euler.hpp"
#include "milnorinf/parser.hpp"

namespace milnorinf {

enum class TameStatus { Tame, CriterionNotMet, NotTame };

const char* to_string(TameStatus status);

/// One sample of a witness sequence x(n).
struct WitnessCheck {
  long n = 0;
  Rational point_norm_sq;
  Rational gradient_norm_sq;
};

struct TamenessVerdict {
  TameStatus status = TameStatus::CriterionNotMet;
  std::string reason;
  std::vector<WitnessCheck> witness;
};

/// Components of x(n) as rational expressions in n, comma separated.
struct WitnessSequence {
  std::vector<RationalExpression> components;
};

WitnessSequence parse_witness(std::string_view text);

/// Samples at n = 10, 100, 1000; accepted when |x|^2 grows past 1e6 and |grad f|^2 falls below 1e-6,
/// both strictly monotone.
std::optional<std::vector<WitnessCheck>> validate_witness(const Polynomial& f, const WitnessSequence& sequence);

/// Tame when the Milnor formula applies without conjecture and N - k >= max w_i.
/// A witness (checked against the report's polynomial) can only turn the verdict into NotTame.
TamenessVerdict tameness(const MilnorReport& report, const WitnessSequence* witness = nullptr);

struct BroughtonSample {
  std::vector<Rational> v;
  MilnorValue mu;
};

/// Oracle Milnor numbers of f + sum v_i x_i at a few small random v. Agreement is evidence only.
struct BroughtonDiagnostic {
  MilnorValue mu;
  std::vector<BroughtonSample> samples;
  bool consistent = false;
};

BroughtonDiagnostic broughton_samples(const Polynomial& f, int count, std::uint64_t seed = 1);

enum class EquivalenceStrength { FiberHomotopy, Diffeomorphic };

const char* to_string(EquivalenceStrength strength);

struct EquivalenceCertificate {
  bool equivalent = false;
  EquivalenceStrength strength = EquivalenceStrength::FiberHomotopy;
  std::vector<std::string> checks;
  /// Name of the first failed condition.
  std::string failed;
};

EquivalenceCertificate monodromy_equivalence(const Polynomial& f, const Polynomial& h, const WeightSystem& w,
                                             const MilnorOptions& options = {});

struct ThomSebastianiInput {
  MilnorValue mu;
  std::size_t nvars = 0;
  bool tame = false;
  std::string label;
};

struct ThomSebastianiReport {
  MilnorValue mu;
  /// Generic fibre of the sum is a bouquet of mu spheres of this dimension.
  int sphere_dim = 0;
  bool tame = false;
  std::vector<std::string> certificates;
  std::vector<std::string> notes;
};

ThomSebastianiReport thom_sebastiani(const ThomSebastianiInput& f, const ThomSebastianiInput& h);

ThomSebastianiReport thom_sebastiani(const MilnorReport& f, const TamenessVerdict& tame_f, const MilnorReport& h,
                                     const TamenessVerdict& tame_h);

}  // namespace milnorinf
