// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#include "poisperm/glm.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace poisperm {

DesignMatrix DesignMatrix::intercept_only(std::size_t n_rows) {
  if (n_rows < 1) {
    throw std::invalid_argument("DesignMatrix: need at least one row");
  }
  return DesignMatrix(n_rows, {}, false);
}

DesignMatrix DesignMatrix::with_predictor(std::vector<double> x1) {
  if (x1.size() < 2) {
    throw std::invalid_argument("DesignMatrix: need at least two rows");
  }
  for (double v : x1) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("DesignMatrix: predictor values must be finite");
    }
  }
  const std::size_t n = x1.size();
  return DesignMatrix(n, std::move(x1), true);
}

std::string to_string(FitStatus status) {
  switch (status) {
    case FitStatus::ok: return "ok";
    case FitStatus::max_iter: return "max_iter";
    case FitStatus::degenerate_all_zero: return "degenerate_all_zero";
    case FitStatus::singular: return "singular";
  }
  return "unknown";
}

namespace {

// One pass over the data at (b0, b1): weighted-normal-equation sums,
// score, and the pieces of the deviance that depend on beta.
struct PassSums {
  double mu = 0.0;    // sum of mu_i            (info, intercept pivot)
  double mux = 0.0;   // sum of mu_i * x_i
  double muxx = 0.0;  // sum of mu_i * x_i^2
  double r = 0.0;     // sum of (y_i - mu_i)    (score, intercept)
  double rx = 0.0;    // sum of (y_i - mu_i) * x_i
  double yeta = 0.0;  // sum of y_i * eta_i     (for the deviance)

  [[nodiscard]] bool finite() const {
    return std::isfinite(mu) && std::isfinite(mux) && std::isfinite(muxx) &&
           std::isfinite(r) && std::isfinite(rx) && std::isfinite(yeta);
  }
};

PassSums sweep(const std::vector<double>& y, const double* x, double b0,
               double b1) {
  PassSums s;
  const std::size_t n = y.size();
  if (x == nullptr) {
    const double mu = std::exp(b0);
    for (std::size_t i = 0; i < n; ++i) {
      s.mu += mu;
      s.r += y[i] - mu;
      s.yeta += y[i] * b0;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const double eta = b0 + b1 * x[i];
      const double mu = std::exp(eta);
      s.mu += mu;
      s.mux += mu * x[i];
      s.muxx += mu * x[i] * x[i];
      s.r += y[i] - mu;
      s.rx += (y[i] - mu) * x[i];
      s.yeta += y[i] * eta;
    }
  }
  return s;
}

// deviance = 2 * sum_i [ y log(y/mu) - (y - mu) ], with 0 log 0 = 0.
double deviance_from(const PassSums& s, double sum_ylogy, double sum_y) {
  return 2.0 * (sum_ylogy - s.yeta - sum_y + s.mu);
}

// Standard errors from the inverse of [mu, mux; mux, muxx]. Returns false
// when a pivot falls below the rank-deficiency threshold.
bool standard_errors(const PassSums& s, bool has_x, double pivot_tol,
                     std::vector<double>& out) {
  if (s.mu < pivot_tol) return false;
  if (!has_x) {
    out = {std::sqrt(1.0 / s.mu)};
    return true;
  }
  const double schur = s.muxx - s.mux * s.mux / s.mu;
  if (!(schur > pivot_tol)) return false;
  const double det = s.mu * schur;
  out = {std::sqrt(s.muxx / det), std::sqrt(s.mu / det)};
  return true;
}

FitResult constant_outcome_fit(const DesignMatrix& X, double value,
                               std::size_t n, const FitOptions& options) {
  // With a constant outcome the score equations are solved exactly by a
  // zero slope and b0 = log(value), so skip the iteration entirely. This
  // keeps the slope at an exact 0.0 under any permutation of the
  // predictor.
  FitResult fit;
  const bool has_x = X.cols() == 2;
  const double b0 = std::log(value);
  PassSums s = sweep(std::vector<double>(n, value),
                     has_x ? X.predictor().data() : nullptr, b0, 0.0);
  if (!standard_errors(s, has_x, options.pivot_tol, fit.standard_errors)) {
    fit.status = FitStatus::singular;
    return fit;
  }
  fit.coefficients = has_x ? std::vector<double>{b0, 0.0}
                           : std::vector<double>{b0};
  fit.deviance = 0.0;
  fit.iterations = 0;
  fit.converged = true;
  fit.status = FitStatus::ok;
  return fit;
}

}  // namespace

FitResult fit_poisson(const DesignMatrix& X, const std::vector<double>& y,
                      const FitOptions& options) {
  const std::size_t n = X.rows();
  if (y.size() != n) {
    throw std::invalid_argument("fit_poisson: y length must match design rows");
  }
  if (n < X.cols()) {
    throw std::invalid_argument("fit_poisson: fewer rows than coefficients");
  }
  double sum_y = 0.0;
  double sum_ylogy = 0.0;
  bool constant = true;
  for (double v : y) {
    if (!std::isfinite(v) || v < 0.0 || std::floor(v) != v) {
      throw std::invalid_argument("fit_poisson: y must be nonnegative integers");
    }
    sum_y += v;
    if (v > 0.0) sum_ylogy += v * std::log(v);
    constant = constant && v == y.front();
  }

  FitResult fit;
  if (sum_y == 0.0) {
    fit.status = FitStatus::degenerate_all_zero;
    return fit;
  }
  if (constant) return constant_outcome_fit(X, y.front(), n, options);

  const bool has_x = X.cols() == 2;
  const double* x = has_x ? X.predictor().data() : nullptr;

  double b0 = std::log(sum_y / static_cast<double>(n) + 0.1);
  double b1 = 0.0;
  PassSums s = sweep(y, x, b0, b1);
  double dev = deviance_from(s, sum_ylogy, sum_y);

  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    fit.iterations = iter;

    // Fisher scoring step: solve [mu, mux; mux, muxx] d = [r; rx].
    // For the canonical link this is exactly the IRLS update with
    // working response eta + (y - mu)/mu.
    double d0, d1;
    if (has_x) {
      if (s.mu < options.pivot_tol) {
        fit.status = FitStatus::singular;
        return fit;
      }
      const double l21 = s.mux / s.mu;
      const double schur = s.muxx - l21 * s.mux;
      if (!(schur > options.pivot_tol)) {
        fit.status = FitStatus::singular;
        return fit;
      }
      d1 = (s.rx - l21 * s.r) / schur;
      d0 = (s.r - s.mux * d1) / s.mu;
    } else {
      if (s.mu < options.pivot_tol) {
        fit.status = FitStatus::singular;
        return fit;
      }
      d0 = s.r / s.mu;
      d1 = 0.0;
    }

    // Step halving keeps the deviance finite and non-increasing; the
    // log-likelihood is concave so the scoring direction is an ascent
    // direction.
    double scale = 1.0;
    PassSums trial;
    double trial_dev = std::numeric_limits<double>::infinity();
    bool accepted = false;
    for (int half = 0; half < 30; ++half) {
      trial = sweep(y, x, b0 + scale * d0, b1 + scale * d1);
      if (trial.finite()) {
        trial_dev = deviance_from(trial, sum_ylogy, sum_y);
        if (std::isfinite(trial_dev) && trial_dev <= dev + 1e-12 * (dev + 1.0)) {
          accepted = true;
          break;
        }
      }
      scale *= 0.5;
    }
    if (!accepted) break;

    b0 += scale * d0;
    b1 += scale * d1;
    s = trial;
    const double prev = dev;
    dev = trial_dev;
    if (std::abs(prev - dev) / (std::abs(dev) + 0.1) < options.deviance_tol) {
      fit.converged = true;
      break;
    }
  }

  fit.coefficients = has_x ? std::vector<double>{b0, b1}
                           : std::vector<double>{b0};
  fit.deviance = dev;
  if (!standard_errors(s, has_x, options.pivot_tol, fit.standard_errors)) {
    fit.status = FitStatus::singular;
    fit.converged = false;
    return fit;
  }
  fit.status = fit.converged ? FitStatus::ok : FitStatus::max_iter;
  return fit;
}

WaldTest wald_pvalue(const FitResult& fit, std::size_t index) {
  if (!fit.converged || fit.status != FitStatus::ok) {
    throw std::invalid_argument("wald_pvalue: fit did not converge (" +
                                to_string(fit.status) + ")");
  }
  if (index >= fit.coefficients.size()) {
    throw std::invalid_argument("wald_pvalue: coefficient index out of range");
  }
  WaldTest t;
  t.z = fit.coefficients[index] / fit.standard_errors[index];
  t.p_value = std::erfc(std::abs(t.z) / std::sqrt(2.0));
  return t;
}

}  // namespace poisperm
