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

#include "sc2adapt/extrapolation.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace sc2adapt {

namespace {

void check_points(std::span<const SeriesPoint> points, std::size_t minimum,
                  const char* what) {
  if (points.size() < minimum) {
    throw std::invalid_argument(std::string(what) + ": needs at least " +
                                std::to_string(minimum) + " points, got " +
                                std::to_string(points.size()));
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].x == points[j].x) {
        throw std::invalid_argument(std::string(what) +
                                    ": duplicate x value " +
                                    std::to_string(points[i].x));
      }
    }
    if (points[i].y_err < 0.0) {
      throw std::invalid_argument(std::string(what) +
                                  ": negative uncertainty");
    }
  }
}

// Inverse-variance weights; all-zero uncertainties reduce to ordinary least
// squares. Zero uncertainties mixed with finite ones get a floor well below
// the smallest finite one so they still dominate.
std::vector<double> weights_of(std::span<const SeriesPoint> points) {
  double min_positive = 0.0;
  for (const SeriesPoint& p : points) {
    if (p.y_err > 0.0 &&
        (min_positive == 0.0 || p.y_err < min_positive)) {
      min_positive = p.y_err;
    }
  }
  std::vector<double> w(points.size(), 1.0);
  if (min_positive == 0.0) return w;  // unweighted
  const double floor = 1e-3 * min_positive;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double err = std::max(points[i].y_err, floor);
    w[i] = 1.0 / (err * err);
  }
  return w;
}

// Gauss-Jordan inverse with partial pivoting; p <= 4 here.
std::vector<double> invert(std::vector<double> a, std::size_t p) {
  std::vector<double> inv(p * p, 0.0);
  for (std::size_t i = 0; i < p; ++i) inv[i * p + i] = 1.0;
  for (std::size_t col = 0; col < p; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < p; ++r) {
      if (std::abs(a[r * p + col]) > std::abs(a[pivot * p + col])) pivot = r;
    }
    if (a[pivot * p + col] == 0.0) {
      throw std::runtime_error("singular normal equations in fit");
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < p; ++c) {
        std::swap(a[pivot * p + c], a[col * p + c]);
        std::swap(inv[pivot * p + c], inv[col * p + c]);
      }
    }
    const double d = a[col * p + col];
    for (std::size_t c = 0; c < p; ++c) {
      a[col * p + c] /= d;
      inv[col * p + c] /= d;
    }
    for (std::size_t r = 0; r < p; ++r) {
      if (r == col) continue;
      const double f = a[r * p + col];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < p; ++c) {
        a[r * p + c] -= f * a[col * p + c];
        inv[r * p + c] -= f * inv[col * p + c];
      }
    }
  }
  return inv;
}

struct LeastSquares {
  std::vector<double> coefficients;
  std::vector<double> covariance;  // row-major p x p
  std::vector<double> residuals;
  double rss = 0.0;
};

// Weighted linear least squares over the given basis functions. When the
// weights came from data uncertainties the covariance is (X^T W X)^-1; for
// unit weights it is scaled by the residual variance rss / (n - p).
LeastSquares solve_least_squares(
    std::span<const SeriesPoint> points, const std::vector<double>& weights,
    bool weighted, const std::vector<std::function<double(double)>>& basis) {
  const std::size_t n = points.size();
  const std::size_t p = basis.size();
  std::vector<double> xtx(p * p, 0.0), xty(p, 0.0), row(p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < p; ++a) row[a] = basis[a](points[i].x);
    for (std::size_t a = 0; a < p; ++a) {
      xty[a] += weights[i] * row[a] * points[i].y;
      for (std::size_t b = 0; b < p; ++b) {
        xtx[a * p + b] += weights[i] * row[a] * row[b];
      }
    }
  }
  std::vector<double> inv = invert(xtx, p);
  LeastSquares out;
  out.coefficients.assign(p, 0.0);
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = 0; b < p; ++b) {
      out.coefficients[a] += inv[a * p + b] * xty[b];
    }
  }
  out.residuals.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double model = 0.0;
    for (std::size_t a = 0; a < p; ++a) {
      model += out.coefficients[a] * basis[a](points[i].x);
    }
    const double r = points[i].y - model;
    out.residuals.push_back(r);
    out.rss += weights[i] * r * r;
  }
  out.covariance = inv;
  if (!weighted) {
    const double dof = static_cast<double>(n) - static_cast<double>(p);
    const double sigma2 = dof > 0.0 ? out.rss / dof : 0.0;
    for (double& c : out.covariance) c *= sigma2;
  }
  return out;
}

bool has_positive_errors(std::span<const SeriesPoint> points) {
  for (const SeriesPoint& p : points) {
    if (p.y_err > 0.0) return true;
  }
  return false;
}

const std::function<double(double)> kOne = [](double) { return 1.0; };
const std::function<double(double)> kInvX = [](double x) { return 1.0 / x; };
const std::function<double(double)> kInvX2 = [](double x) {
  return 1.0 / (x * x);
};

FitResult fit_exponential_decay(std::span<const SeriesPoint> points) {
  check_points(points, 3, "fit_thermodynamic (exponential family)");
  const std::vector<double> weights = weights_of(points);
  const bool weighted = has_positive_errors(points);
  double x_min = points[0].x, x_max = points[0].x;
  for (const SeriesPoint& p : points) {
    x_min = std::min(x_min, p.x);
    x_max = std::max(x_max, p.x);
  }
  const auto rss_at = [&](double xi) {
    const std::function<double(double)> decay = [xi](double x) {
      return std::exp(-x / xi);
    };
    return solve_least_squares(points, weights, weighted, {kOne, decay}).rss;
  };
  // Golden-section search on the decay length.
  double lo = 0.05 * x_min, hi = 10.0 * (x_max - x_min + 1.0);
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = hi - golden * (hi - lo), b = lo + golden * (hi - lo);
  double fa = rss_at(a), fb = rss_at(b);
  for (int iter = 0; iter < 200; ++iter) {
    if (fa < fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - golden * (hi - lo);
      fa = rss_at(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + golden * (hi - lo);
      fb = rss_at(b);
    }
  }
  const double xi = 0.5 * (lo + hi);
  const std::function<double(double)> decay = [xi](double x) {
    return std::exp(-x / xi);
  };
  LeastSquares ls = solve_least_squares(points, weights, weighted, {kOne, decay});
  FitResult fit;
  fit.model_tag = "exp_decay";
  fit.coefficients = {ls.coefficients[0], ls.coefficients[1], xi};
  fit.covariance = ls.covariance;
  fit.residuals = ls.residuals;
  fit.limit = ls.coefficients[0];
  fit.uncertainty = std::sqrt(std::max(0.0, ls.covariance[0]));
  return fit;
}

}  // namespace

FitResult fit_thermodynamic(std::span<const SeriesPoint> points,
                            ThermoFitFamily family, double decay_length) {
  if (family == ThermoFitFamily::ExponentialDecay) {
    return fit_exponential_decay(points);
  }
  check_points(points, 3, "fit_thermodynamic");
  const std::vector<double> weights = weights_of(points);
  const bool weighted = has_positive_errors(points);
  LeastSquares linear =
      solve_least_squares(points, weights, weighted, {kOne, kInvX});

  if (family == ThermoFitFamily::InverseVolumePlusGap) {
    if (!(decay_length > 0.0)) {
      throw std::invalid_argument(
          "fit_thermodynamic: the boundary-plus-gap family needs a positive "
          "decay length");
    }
    const double xi = decay_length;
    const std::function<double(double)> gap = [xi](double x) {
      return std::exp(-x / xi);
    };
    LeastSquares full =
        solve_least_squares(points, weights, weighted, {kOne, kInvX, gap});
    FitResult fit;
    fit.model_tag = "inv_gap";
    fit.coefficients = full.coefficients;
    fit.coefficients.push_back(xi);
    fit.covariance = full.covariance;
    fit.residuals = full.residuals;
    fit.limit = full.coefficients[0];
    const double spread =
        std::abs(linear.coefficients[0] - full.coefficients[0]);
    const double se = std::sqrt(std::max(0.0, full.covariance[0]));
    fit.uncertainty = std::max(spread, se);
    return fit;
  }

  LeastSquares quadratic =
      solve_least_squares(points, weights, weighted, {kOne, kInvX, kInvX2});
  FitResult fit;
  fit.model_tag = "inv_poly2";
  fit.coefficients = quadratic.coefficients;
  fit.covariance = quadratic.covariance;
  fit.residuals = quadratic.residuals;
  fit.limit = quadratic.coefficients[0];
  const double spread =
      std::abs(linear.coefficients[0] - quadratic.coefficients[0]);
  const double se = std::sqrt(std::max(0.0, quadratic.covariance[0]));
  fit.uncertainty = std::max(spread, se);
  return fit;
}

FitResult fit_thermodynamic_linear(std::span<const SeriesPoint> points) {
  check_points(points, 2, "fit_thermodynamic_linear");
  const std::vector<double> weights = weights_of(points);
  const bool weighted = has_positive_errors(points);
  LeastSquares linear =
      solve_least_squares(points, weights, weighted, {kOne, kInvX});
  double x_max = points[0].x, y_at_max = points[0].y;
  for (const SeriesPoint& p : points) {
    if (p.x > x_max) {
      x_max = p.x;
      y_at_max = p.y;
    }
  }
  FitResult fit;
  fit.model_tag = "inv_linear_2pt";
  fit.coefficients = linear.coefficients;
  fit.covariance = linear.covariance;
  fit.residuals = linear.residuals;
  fit.limit = linear.coefficients[0];
  fit.uncertainty = std::max(std::abs(linear.coefficients[0] - y_at_max),
                             std::sqrt(std::max(0.0, linear.covariance[0])));
  return fit;
}

FitResult fit_continuum(std::span<const SeriesPoint> points, int degree) {
  if (degree < 1) throw std::invalid_argument("fit_continuum: degree must be >= 1");
  check_points(points, static_cast<std::size_t>(degree) + 2, "fit_continuum");
  const std::vector<double> weights = weights_of(points);
  const bool weighted = has_positive_errors(points);
  std::vector<std::function<double(double)>> basis;
  for (int k = 0; k <= degree; ++k) {
    basis.push_back([k](double x) { return std::pow(x, k); });
  }
  LeastSquares ls = solve_least_squares(points, weights, weighted, basis);
  FitResult fit;
  fit.model_tag = "poly" + std::to_string(degree);
  fit.coefficients = ls.coefficients;
  fit.covariance = ls.covariance;
  fit.residuals = ls.residuals;
  fit.limit = ls.coefficients[0];
  fit.uncertainty = std::sqrt(std::max(0.0, ls.covariance[0]));
  return fit;
}

namespace {

std::vector<double> basis_values(const FitResult& fit, double x) {
  if (fit.model_tag == "inv_poly2") return {1.0, 1.0 / x, 1.0 / (x * x)};
  if (fit.model_tag == "inv_linear_2pt") return {1.0, 1.0 / x};
  if (fit.model_tag == "exp_decay") {
    return {1.0, std::exp(-x / fit.coefficients[2])};
  }
  if (fit.model_tag == "inv_gap") {
    return {1.0, 1.0 / x, std::exp(-x / fit.coefficients[3])};
  }
  if (fit.model_tag.rfind("poly", 0) == 0) {
    const int degree = std::stoi(fit.model_tag.substr(4));
    std::vector<double> v;
    for (int k = 0; k <= degree; ++k) v.push_back(std::pow(x, k));
    return v;
  }
  throw std::invalid_argument("unknown fit model '" + fit.model_tag + "'");
}

}  // namespace

double fit_predict(const FitResult& fit, double x) {
  const std::vector<double> v = basis_values(fit, x);
  double y = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) y += fit.coefficients[i] * v[i];
  return y;
}

double fit_prediction_se(const FitResult& fit, double x) {
  const std::vector<double> v = basis_values(fit, x);
  const std::size_t p = v.size();
  double acc = 0.0;
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = 0; b < p; ++b) {
      acc += v[a] * fit.covariance[a * p + b] * v[b];
    }
  }
  return std::sqrt(std::max(0.0, acc));
}

}  // namespace sc2adapt
