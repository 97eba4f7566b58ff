// Copyright 2026 The sc2adapt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <string>
#include <vector>

namespace sc2adapt {

struct SeriesPoint {
  double x = 0.0;      // volume for thermodynamic fits, a*g for continuum fits
  double y = 0.0;
  double y_err = 0.0;  // 0 means unweighted
};

/// Result of one extrapolation fit. `coefficients` are the parameters of the
/// model named by `model_tag`; `covariance` is their row-major covariance.
struct FitResult {
  double limit = 0.0;        // extrapolated value
  double uncertainty = 0.0;
  std::string model_tag;
  std::vector<double> coefficients;
  std::vector<double> covariance;
  std::vector<double> residuals;
};

enum class ThermoFitFamily {
  InversePolynomial,    // c0 + c1/x and c0 + c1/x + c2/x^2
  ExponentialDecay,     // c0 + c1 exp(-x/xi), xi fitted
  InverseVolumePlusGap  // c0 + c1/x + c2 exp(-x/xi), xi supplied by the
                        // caller (open boundary term plus the gap-driven
                        // transient; the right form when x is only a few
                        // correlation lengths)
};

/// Infinite-volume fit. The inverse-polynomial family fits both
/// y = c0 + c1/x and y = c0 + c1/x + c2/x^2 and reports the quadratic form,
/// with the uncertainty as the larger of the linear/quadratic intercept
/// spread and the intercept's standard error. Requires at least 3 points.
/// The InverseVolumePlusGap family needs `decay_length` > 0 and uses the
/// spread against the plain boundary-term fit for its uncertainty.
FitResult fit_thermodynamic(
    std::span<const SeriesPoint> points,
    ThermoFitFamily family = ThermoFitFamily::InversePolynomial,
    double decay_length = 0.0);

/// Two-point degenerate case: the linear form alone, with the spread between
/// the fitted limit and the largest-volume datum as the uncertainty.
FitResult fit_thermodynamic_linear(std::span<const SeriesPoint> points);

/// Weighted polynomial fit in a*g; the limit is the intercept at a*g = 0 and
/// the uncertainty its standard error from the weighted covariance. Requires
/// at least degree + 2 points.
FitResult fit_continuum(std::span<const SeriesPoint> points, int degree = 2);

/// Model prediction and its standard error at x.
double fit_predict(const FitResult& fit, double x);
double fit_prediction_se(const FitResult& fit, double x);

}  // namespace sc2adapt
