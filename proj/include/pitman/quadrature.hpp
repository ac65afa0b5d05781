#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace pitman {

/// Thrown when an adaptive integration cannot reach the requested tolerance
/// within its subdivision budget.
class quadrature_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tolerances and subdivision budget for the adaptive integrators.
struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
      throw std::domain_error("quadrature tolerances must be positive");
    if (max_subdivisions < 1)
      throw std::domain_error("max_subdivisions must be at least 1");
  }
};

namespace detail {

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment eval_segment(F& f, double a, double b) {
  using rule = boost::math::quadrature::gauss_kronrod<double, 15>;
  double err = 0.0;
  double v = rule::integrate(f, a, b, 0, 0.0, &err);
  if (!std::isfinite(v)) {
    // non-finite panel: force it to be split first
    v = 0.0;
    err = std::numeric_limits<double>::max();
  }
  return {a, b, v, err};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over [a, b].
/// Worst panel is bisected until the summed error estimate meets
/// max(abs_tol, rel_tol * |result|) or the subdivision budget is spent.
template <class F>
double integrate(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  spec.validate();
  if (a == b) return 0.0;
  std::vector<detail::Segment> heap;
  heap.push_back(detail::eval_segment(f, a, b));
  double total_v = heap.front().value;
  double total_e = heap.front().error;
  int splits = 0;
  while (total_e > std::max(spec.abs_tol, spec.rel_tol * std::abs(total_v))) {
    if (splits >= spec.max_subdivisions)
      throw quadrature_error("adaptive quadrature did not converge within the subdivision budget");
    std::pop_heap(heap.begin(), heap.end());
    detail::Segment worst = heap.back();
    heap.pop_back();
    double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b))
      throw quadrature_error("adaptive quadrature stalled on a zero-width panel");
    detail::Segment left = detail::eval_segment(f, worst.a, mid);
    detail::Segment right = detail::eval_segment(f, mid, worst.b);
    total_v += left.value + right.value - worst.value;
    total_e += left.error + right.error - worst.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end());
    ++splits;
    if (splits % 64 == 0) {
      // resum to shed accumulated cancellation in the running totals
      total_v = total_e = 0.0;
      for (const auto& s : heap) {
        total_v += s.value;
        total_e += s.error;
      }
    }
  }
  total_v = 0.0;
  for (const auto& s : heap) total_v += s.value;
  return total_v;
}

/// Integral of f over [a, +inf) via the substitution x = a + t/(1-t).
template <class F>
double integrate_to_inf(F&& f, double a, const QuadratureSpec& spec = {}) {
  auto g = [&f, a](double t) {
    const double w = 1.0 - t;
    return f(a + t / w) / (w * w);
  };
  return integrate(g, 0.0, 1.0, spec);
}

}  // namespace pitman
