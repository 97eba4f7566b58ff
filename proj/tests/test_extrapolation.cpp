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

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sc2adapt/extrapolation.hpp"

using namespace sc2adapt;

TEST_SUITE("extrapolation") {

TEST_CASE("constant data recovers the constant with zero uncertainty") {
  std::vector<SeriesPoint> points;
  for (double x : {8.0, 10.0, 12.0, 14.0}) points.push_back({x, 0.42, 0.0});
  const FitResult fit = fit_thermodynamic(points);
  CHECK(fit.limit == doctest::Approx(0.42).epsilon(1e-12));
  CHECK(fit.uncertainty < 1e-10);
}

TEST_CASE("exact inverse-volume data is recovered to 1e-10") {
  std::vector<SeriesPoint> points;
  for (double x : {6.0, 8.0, 10.0, 12.0, 14.0}) {
    points.push_back({x, 0.3 + 1.7 / x, 0.0});
  }
  const FitResult fit = fit_thermodynamic(points);
  CHECK(std::abs(fit.limit - 0.3) < 1e-10);
  CHECK(fit.uncertainty < 1e-9);
  CHECK(std::abs(fit_predict(fit, 10.0) - (0.3 + 0.17)) < 1e-10);
}

TEST_CASE("too few points for the quadratic family is an error") {
  std::vector<SeriesPoint> two{{10.0, 1.0, 0.0}, {12.0, 1.1, 0.0}};
  CHECK_THROWS_AS(fit_thermodynamic(two), std::invalid_argument);
  // The dedicated two-point fallback handles it with the linear form.
  const FitResult fit = fit_thermodynamic_linear(two);
  CHECK(std::isfinite(fit.limit));
  CHECK(fit.model_tag == "inv_linear_2pt");
}

TEST_CASE("duplicate x values are rejected") {
  std::vector<SeriesPoint> points{{10.0, 1.0, 0.0}, {10.0, 1.1, 0.0},
                                  {12.0, 1.2, 0.0}};
  CHECK_THROWS_AS(fit_thermodynamic(points), std::invalid_argument);
}

TEST_CASE("exact quadratic continuum data recovers the intercept") {
  std::vector<SeriesPoint> points;
  for (double x : {0.5, 0.6, 0.7, 0.8, 0.9, 1.0}) {
    points.push_back({x, -0.16 + 0.05 * x - 0.02 * x * x, 0.0});
  }
  const FitResult fit = fit_continuum(points, 2);
  CHECK(std::abs(fit.limit - (-0.16)) < 1e-10);
  CHECK(fit.uncertainty < 1e-9);
}

TEST_CASE("underdetermined continuum fit is an error") {
  std::vector<SeriesPoint> one{{0.5, -0.2, 0.0}};
  CHECK_THROWS_AS(fit_continuum(one, 2), std::invalid_argument);
  std::vector<SeriesPoint> three{{0.5, -0.2, 0.0}, {0.7, -0.19, 0.0},
                                 {0.9, -0.18, 0.0}};
  CHECK_THROWS_AS(fit_continuum(three, 2), std::invalid_argument);
}

TEST_CASE("affine equivariance of the thermodynamic fit") {
  std::vector<SeriesPoint> points;
  for (double x : {8.0, 10.0, 12.0, 14.0, 16.0}) {
    points.push_back({x, -0.2 + 0.9 / x + 0.3 / (x * x) + 1e-4 * std::sin(x),
                      0.0});
  }
  const FitResult base = fit_thermodynamic(points);

  std::vector<SeriesPoint> shifted = points;
  for (SeriesPoint& p : shifted) p.y += 5.0;
  const FitResult shift_fit = fit_thermodynamic(shifted);
  CHECK(shift_fit.limit == doctest::Approx(base.limit + 5.0).epsilon(1e-10));
  CHECK(shift_fit.uncertainty == doctest::Approx(base.uncertainty).epsilon(1e-8));

  std::vector<SeriesPoint> scaled = points;
  for (SeriesPoint& p : scaled) p.y *= -3.0;
  const FitResult scale_fit = fit_thermodynamic(scaled);
  CHECK(scale_fit.limit == doctest::Approx(-3.0 * base.limit).epsilon(1e-10));
  CHECK(scale_fit.uncertainty ==
        doctest::Approx(3.0 * base.uncertainty).epsilon(1e-8));
}

TEST_CASE("uniform errors reduce to the unweighted fit") {
  std::vector<SeriesPoint> noisy;
  for (double x : {0.5, 0.6, 0.7, 0.8, 0.9, 1.0}) {
    noisy.push_back({x, -0.15 + 0.04 * x + 0.01 * std::cos(7 * x), 0.0});
  }
  const FitResult unweighted = fit_continuum(noisy, 2);
  std::vector<SeriesPoint> uniform = noisy;
  for (SeriesPoint& p : uniform) p.y_err = 0.02;
  const FitResult weighted = fit_continuum(uniform, 2);
  CHECK(weighted.limit == doctest::Approx(unweighted.limit).epsilon(1e-10));
}

TEST_CASE("inflating one point's error reduces its pull on the intercept") {
  // An outlier at the smallest x drags the intercept; growing its error bar
  // must move the intercept monotonically back toward the clean fit.
  std::vector<SeriesPoint> points;
  for (double x : {0.5, 0.6, 0.7, 0.8, 0.9, 1.0}) {
    points.push_back({x, -0.16 + 0.05 * x, 0.01});
  }
  points[0].y += 0.05;  // outlier
  const double clean_intercept = -0.16;

  double previous_distance = 1e9;
  for (double err : {0.01, 0.03, 0.1, 0.5}) {
    points[0].y_err = err;
    const FitResult fit = fit_continuum(points, 1);
    const double distance = std::abs(fit.limit - clean_intercept);
    CHECK(distance < previous_distance);
    previous_distance = distance;
  }
}

TEST_CASE("boundary-plus-gap family recovers its exact model") {
  const double xi = 2.9;
  std::vector<SeriesPoint> points;
  for (double x : {6.0, 8.0, 10.0, 12.0, 14.0, 16.0}) {
    points.push_back({x, -0.21 + 0.6 / x - 0.3 * std::exp(-x / xi), 0.0});
  }
  const FitResult fit =
      fit_thermodynamic(points, ThermoFitFamily::InverseVolumePlusGap, xi);
  CHECK(fit.model_tag == "inv_gap");
  CHECK(std::abs(fit.limit - (-0.21)) < 1e-10);
  CHECK(std::abs(fit_predict(fit, 10.0) -
                 (-0.21 + 0.06 - 0.3 * std::exp(-10.0 / xi))) < 1e-10);
  // The decay length is required.
  CHECK_THROWS_AS(
      fit_thermodynamic(points, ThermoFitFamily::InverseVolumePlusGap),
      std::invalid_argument);
}

TEST_CASE("exponential family recovers exact decay data") {
  std::vector<SeriesPoint> points;
  for (double x : {6.0, 8.0, 10.0, 12.0, 14.0, 16.0}) {
    points.push_back({x, 0.25 - 0.8 * std::exp(-x / 3.0), 0.0});
  }
  const FitResult fit =
      fit_thermodynamic(points, ThermoFitFamily::ExponentialDecay);
  CHECK(fit.model_tag == "exp_decay");
  CHECK(std::abs(fit.limit - 0.25) < 1e-6);
}

TEST_CASE("prediction standard errors are finite and scale with input errors") {
  std::vector<SeriesPoint> points;
  for (double x : {0.5, 0.7, 0.9, 1.1}) {
    points.push_back({x, 1.0 + x, 0.1});
  }
  const FitResult fit = fit_continuum(points, 1);
  const double se = fit_prediction_se(fit, 0.0);
  CHECK(se > 0.0);
  CHECK(std::isfinite(se));

  std::vector<SeriesPoint> tighter = points;
  for (SeriesPoint& p : tighter) p.y_err = 0.01;
  const FitResult tight_fit = fit_continuum(tighter, 1);
  CHECK(fit_prediction_se(tight_fit, 0.0) < se);
}

}  // TEST_SUITE
