#pragma once
// Latent surrender behaviour: piecewise-constant feature effects on the
// log-odds scale, an intercept, and intercept calibration against a
// reference portfolio.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lapselab/portfolio.hpp"

namespace lapselab {

struct StepFunction {
  std::string feature_key;
  std::vector<double> breakpoints;  // strictly ascending
  std::vector<double> values;       // one per interval: breakpoints.size() + 1

  // Piecewise-constant lookup: value i applies on [breakpoints[i-1], breakpoints[i]).
  double operator()(double x) const;
};

struct SurrenderProfile {
  std::string name;
  double intercept = 0.0;
  std::vector<StepFunction> effects;
  // Shipped profiles carry a target mean rate instead of a fixed intercept;
  // the pipeline calibrates the intercept before simulating.
  std::optional<double> calibration_target;
};

// Log-odds shift equivalent to a given odds ratio against the baseline level.
double effect_from_odds_ratio(double odds_ratio);

// Surrender-relevant contract feature by name (the premium-frequency feature
// exposes its category index). Throws std::invalid_argument on unknown keys.
double contract_feature(const Contract& contract, std::string_view key);

// sigmoid(intercept + sum of effects); strictly inside (0, 1).
double profile_probability(const SurrenderProfile& profile, const Contract& contract);

// Intercept such that the mean profile probability over the reference
// portfolio equals target_rate to 1e-6, found by monotone bisection.
double calibrate_intercept(const SurrenderProfile& profile,
                           std::span<const Contract> reference_portfolio,
                           double target_rate);

// JSON profile file: name, effects (feature/breakpoints/values), and either
// a fixed intercept or a calibration target. Validates shape invariants.
SurrenderProfile load_profile(const std::string& path);

}  // namespace lapselab
