#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pitman {

/// log of the rising factorial prod_{i=0}^{n-1} (x + i*a); n = 0 gives 0.
/// Throws std::domain_error if any factor is <= 0.
double log_rising_factorial(double x, int n, double a = 1.0);

/// log( [theta]_{(j,alpha)} / [theta]_{(n,1)} ) with the shared leading factor
/// theta cancelled between numerator and denominator, so the ratio stays
/// well defined on the whole admissible region including theta in (-alpha, 0].
/// Requires 1 <= j and 1 <= n.
double log_block_weight_ratio(double alpha, double theta, int j, int n);

/// Configured cap on generalized-factorial table sizes. Defaults to 20000;
/// the PITMAN_TABLE_LIMIT environment variable overrides it.
int gfc_table_limit();

/// Triangular table of log C(n,k;alpha,shift) for 0 <= k <= n <= n_max,
/// where C(n,k;alpha,shift) = (1/k!) sum_{i=0}^{k} (-1)^i binom(k,i)
/// [-i*alpha - shift]_{(n,1)} (shift = 0 gives the central coefficients).
///
/// Entries are built by the triangular recurrence
///   C(n+1,k) = (n - shift - alpha*k) C(n,k) + alpha C(n,k-1)
/// in log space. Only shift <= 0 is accepted: there every multiplier is
/// strictly positive, so all stored coefficients are certified positive and
/// the structural zeros (k > n, and k = 0 for shift = 0, n >= 1) are the
/// only absent entries (stored as -infinity).
///
/// Construction self-validates every entry with n <= min(n_max, 12) against
/// the exact-rational alternating-sum definition and throws if the relative
/// error exceeds 1e-10.
class GfcTable {
 public:
  GfcTable(double alpha, int n_max, double shift = 0.0);

  double alpha() const { return alpha_; }
  double shift() const { return shift_; }
  int n_max() const { return n_max_; }

  /// log C(n,k;alpha,shift); -infinity for absent (zero) entries.
  /// Throws std::out_of_range if n exceeds n_max.
  double log_value(int n, int k) const;

  /// Row n of the table, entries k = 0..n.
  std::span<const double> log_row(int n) const;

 private:
  double alpha_;
  double shift_;
  int n_max_;
  std::vector<double> log_;  // row n at offset n(n+1)/2

  void self_validate() const;
};

/// Single row n of log C(n,k;alpha,shift), k = 0..n, computed with the same
/// recurrence but O(n) memory. Subject to the same shift <= 0 restriction and
/// the configured table limit.
std::vector<double> gfc_log_row(double alpha, double shift, int n);

/// Stirling number of the second kind via the classical triangular
/// recurrence, exact for n <= 30 (values pass 2^64, hence the wide type).
/// Throws std::overflow_error for n > 30.
unsigned __int128 stirling2(int n, int k);

std::string to_string(unsigned __int128 v);

}  // namespace pitman
