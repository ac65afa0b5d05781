#pragma once

#include <cmath>

#include "pitman/quadrature.hpp"

namespace pitman {

/// Density of the positive alpha-stable law normalized by its Laplace
/// transform E[exp(-t X)] = exp(-t^alpha), alpha in (0,1).
///
/// Evaluation integrates the bounded angular representation
///   f(x) = a/((1-a) pi) x^{-1/(1-a)} int_0^pi A(phi) exp(-A(phi) x^{-a/(1-a)}) dphi
/// with A(phi) = sin(a phi)^{a/(1-a)} sin((1-a) phi) / sin(phi)^{1/(1-a)},
/// splitting at the integrand peak and factoring out its maximum so the
/// panel values never underflow. At alpha = 1/2 the Levy closed form
/// x^{-3/2} exp(-1/(4x)) / (2 sqrt(pi)) is used unless the quadrature path
/// is forced (the unit tests certify the generic path against it).
class StableDensity {
 public:
  explicit StableDensity(double alpha, QuadratureSpec quad = {},
                         bool use_levy_closed_form = true);

  double alpha() const { return alpha_; }
  const QuadratureSpec& quad() const { return quad_; }

  double operator()(double x) const { return std::exp(log_density(x)); }
  double log_density(double x) const;

 private:
  double log_angular_integral(double log_c) const;

  double alpha_;
  QuadratureSpec quad_;
  bool levy_;
  double log_a0_;  // log A(0+)
};

/// log of the tilted moment  int_0^inf x^n exp(-x t) f_alpha(x) dx,  t > 0.
/// For n >= 1 the integrand peak at x = n/t is factored out so the value is
/// finite in log space for any n representable as an int.
double log_tilted_moment(const StableDensity& f, int n, double t,
                         const QuadratureSpec& spec = {});

/// Laplace-type integral I_n(z) = int_0^inf exp(-n (z y - log y)) f_alpha(y) dy
/// together with its first-order approximation
/// (1/z)^{n+1} f_alpha(1/z) e^{-n} sqrt(2 pi / n), both as logarithms.
struct LaplaceResult {
  double log_integral;
  double log_first_order;
  double ratio() const { return std::exp(log_integral - log_first_order); }
};

LaplaceResult laplace_integral(const StableDensity& f, int n, double z,
                               const QuadratureSpec& spec = {});

/// Convenience wrapper: f_alpha(x) with default quadrature settings.
double stable_density(double alpha, double x);

}  // namespace pitman
