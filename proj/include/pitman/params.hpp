#pragma once

#include <stdexcept>

namespace pitman {

/// Admissible parameter pair of the two-parameter Poisson-Dirichlet model:
/// 0 < alpha < 1 and theta > -alpha.
class ModelParams {
 public:
  ModelParams(double alpha, double theta) : alpha_(alpha), theta_(theta) {
    if (!(alpha > 0.0 && alpha < 1.0))
      throw std::domain_error("ModelParams: alpha must lie in (0,1)");
    if (!(theta > -alpha))
      throw std::domain_error("ModelParams: theta must exceed -alpha");
  }

  double alpha() const { return alpha_; }
  double theta() const { return theta_; }

 private:
  double alpha_;
  double theta_;
};

/// Conditioning data for posterior block-count quantities: an observed sample
/// of size n containing j distinct blocks.
class PosteriorContext {
 public:
  PosteriorContext(ModelParams params, int n, int j)
      : params_(params), n_(n), j_(j) {
    if (n < 1) throw std::domain_error("PosteriorContext: n must be positive");
    if (j < 1 || j > n)
      throw std::domain_error("PosteriorContext: j must lie in [1, n]");
  }

  const ModelParams& params() const { return params_; }
  int n() const { return n_; }
  int j() const { return j_; }

  /// Hypotheses under which the m^{-alpha} posterior convergence rate is
  /// guaranteed: theta > 0, n >= 5 and n/alpha - j >= 1. Contexts outside
  /// this region are still admissible but rate runs on them are exploratory.
  bool satisfies_rate_hypotheses() const {
    return params_.theta() > 0.0 && n_ >= 5 &&
           static_cast<double>(n_) / params_.alpha() - j_ >= 1.0;
  }

 private:
  ModelParams params_;
  int n_;
  int j_;
};

}  // namespace pitman
