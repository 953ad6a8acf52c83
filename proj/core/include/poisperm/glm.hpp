// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace poisperm {

/// Design matrix for the Poisson regression: an intercept column of ones
/// plus at most one predictor column. The intercept column is implicit,
/// so the all-ones invariant holds by construction.
class DesignMatrix {
 public:
  static DesignMatrix intercept_only(std::size_t n_rows);
  static DesignMatrix with_predictor(std::vector<double> x1);

  [[nodiscard]] std::size_t rows() const { return n_; }
  [[nodiscard]] std::size_t cols() const { return has_predictor_ ? 2 : 1; }

  /// Entry (row, col); col 0 is the intercept.
  [[nodiscard]] double operator()(std::size_t row, std::size_t col) const {
    return col == 0 ? 1.0 : x1_[row];
  }

  /// Predictor column; only valid when cols() == 2.
  [[nodiscard]] const std::vector<double>& predictor() const { return x1_; }

 private:
  DesignMatrix(std::size_t n, std::vector<double> x1, bool has_predictor)
      : x1_(std::move(x1)), n_(n), has_predictor_(has_predictor) {}

  std::vector<double> x1_;
  std::size_t n_;
  bool has_predictor_;
};

enum class FitStatus { ok, max_iter, degenerate_all_zero, singular };

std::string to_string(FitStatus status);

struct FitOptions {
  int max_iterations = 25;
  /// Stop when |dev - dev_prev| / (|dev| + 0.1) drops below this.
  double deviance_tol = 1e-8;
  /// Pivot magnitude below which the weighted normal equations are
  /// treated as rank deficient.
  double pivot_tol = 1e-10;
};

struct FitResult {
  std::vector<double> coefficients;
  std::vector<double> standard_errors;
  double deviance = 0.0;
  int iterations = 0;
  bool converged = false;
  FitStatus status = FitStatus::max_iter;

  [[nodiscard]] bool ok() const { return status == FitStatus::ok; }
};

/// Maximum-likelihood Poisson regression with log link, fitted by
/// iteratively reweighted least squares (Fisher scoring with step
/// halving). Standard errors come from the inverse Fisher information at
/// the optimum; for the canonical log link the expected and observed
/// information coincide.
///
/// y must hold nonnegative integral counts, one per design row. Failure
/// modes are reported through FitResult::status rather than thrown:
/// all-zero outcomes (the intercept diverges), rank-deficient weighted
/// normal equations, and hitting the iteration cap.
FitResult fit_poisson(const DesignMatrix& X, const std::vector<double>& y,
                      const FitOptions& options = {});

struct WaldTest {
  double z = 0.0;
  double p_value = 1.0;
};

/// Two-sided z-test of coefficient `index` against zero:
/// p = 2 * (1 - Phi(|z|)). Requires a converged fit.
WaldTest wald_pvalue(const FitResult& fit, std::size_t index);

}  // namespace poisperm
