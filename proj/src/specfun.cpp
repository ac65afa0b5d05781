#include "pitman/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace pitman {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::abs(a - b)));
}

// one step of the triangular recurrence in log space; cur has entries k=0..n
std::vector<double> recurrence_step(const std::vector<double>& cur, int n,
                                    double alpha, double shift, double log_alpha) {
  std::vector<double> next(n + 2, kNegInf);
  for (int k = 0; k <= n; ++k) {
    if (cur[k] == kNegInf) continue;
    const double mult = static_cast<double>(n) - shift - alpha * k;
    if (mult > 0.0) next[k] = std::log(mult) + cur[k];
    else if (mult < 0.0)
      throw std::domain_error("gfc recurrence: negative multiplier, positivity lost");
    next[k + 1] = log_add(next[k + 1], log_alpha + cur[k]);
  }
  return next;
}

void check_gfc_args(double alpha, double shift, int n) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("gfc: alpha must lie in (0,1)");
  if (shift > 0.0)
    throw std::domain_error("gfc: only shift <= 0 is supported (positivity certified)");
  if (n < 0) throw std::domain_error("gfc: table size must be nonnegative");
  if (n > gfc_table_limit())
    throw std::overflow_error("gfc: requested size exceeds the configured table limit");
}

}  // namespace

double log_rising_factorial(double x, int n, double a) {
  if (n < 0) throw std::domain_error("log_rising_factorial: order must be nonnegative");
  if (n == 0) return 0.0;
  if (!(x > 0.0)) throw std::domain_error("log_rising_factorial: first factor not positive");
  if (a < 0.0 && x + a * (n - 1) <= 0.0)
    throw std::domain_error("log_rising_factorial: factor <= 0 in the product");
  if (a == 0.0) return n * std::log(x);
  if (a > 0.0) {
    // product = a^n * Gamma(x/a + n) / Gamma(x/a)
    const double r = x / a;
    return n * std::log(a) + std::lgamma(r + n) - std::lgamma(r);
  }
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += std::log(x + i * a);
  return s;
}

double log_block_weight_ratio(double alpha, double theta, int j, int n) {
  if (j < 1 || n < 1)
    throw std::domain_error("log_block_weight_ratio: j and n must be >= 1");
  double s = 0.0;
  for (int i = 1; i < j; ++i) s += std::log(theta + i * alpha);
  if (theta > 0.0)
    s -= std::lgamma(theta + n) - std::lgamma(theta + 1);
  else
    for (int i = 1; i < n; ++i) s -= std::log(theta + i);
  return s;
}

int gfc_table_limit() {
  static const int limit = [] {
    if (const char* env = std::getenv("PITMAN_TABLE_LIMIT")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v >= 1) return static_cast<int>(std::min<long>(v, 1000000));
    }
    return 20000;
  }();
  return limit;
}

std::vector<double> gfc_log_row(double alpha, double shift, int n) {
  check_gfc_args(alpha, shift, n);
  const double log_alpha = std::log(alpha);
  std::vector<double> row{0.0};  // C(0,0) = 1
  for (int m = 0; m < n; ++m) row = recurrence_step(row, m, alpha, shift, log_alpha);
  return row;
}

GfcTable::GfcTable(double alpha, int n_max, double shift)
    : alpha_(alpha), shift_(shift), n_max_(n_max) {
  check_gfc_args(alpha, shift, n_max);
  if (n_max < 1) throw std::domain_error("GfcTable: n_max must be >= 1");
  const std::size_t total = static_cast<std::size_t>(n_max + 1) * (n_max + 2) / 2;
  log_.resize(total, kNegInf);
  const double log_alpha = std::log(alpha);
  std::vector<double> row{0.0};
  log_[0] = 0.0;
  for (int n = 0; n < n_max; ++n) {
    row = recurrence_step(row, n, alpha, shift, log_alpha);
    std::copy(row.begin(), row.end(),
              log_.begin() + static_cast<std::size_t>(n + 1) * (n + 2) / 2);
  }
  self_validate();
}

double GfcTable::log_value(int n, int k) const {
  if (n < 0 || n > n_max_) throw std::out_of_range("GfcTable: row outside table");
  if (k < 0 || k > n) return kNegInf;
  return log_[static_cast<std::size_t>(n) * (n + 1) / 2 + k];
}

std::span<const double> GfcTable::log_row(int n) const {
  if (n < 0 || n > n_max_) throw std::out_of_range("GfcTable: row outside table");
  return {log_.data() + static_cast<std::size_t>(n) * (n + 1) / 2,
          static_cast<std::size_t>(n + 1)};
}

void GfcTable::self_validate() const {
  using rational = boost::multiprecision::cpp_rational;
  const rational a(alpha_);  // exact binary rational of the double
  const rational r(shift_);
  const int n_check = std::min(n_max_, 12);
  for (int n = 1; n <= n_check; ++n) {
    for (int k = 0; k <= n; ++k) {
      rational sum = 0;
      rational binom = 1;  // binom(k, i)
      for (int i = 0; i <= k; ++i) {
        rational prod = 1;
        const rational x = -i * a - r;
        for (int t = 0; t < n; ++t) prod *= (x + t);
        sum += (i % 2 == 0 ? prod : -prod) * binom;
        binom = binom * (k - i) / (i + 1);
      }
      rational fact = 1;
      for (int t = 2; t <= k; ++t) fact *= t;
      sum /= fact;
      const double got = log_value(n, k);
      if (sum == 0) {
        if (got != kNegInf)
          throw std::runtime_error("GfcTable validation failed: expected zero entry");
        continue;
      }
      if (sum < 0)
        throw std::runtime_error("GfcTable validation failed: negative coefficient");
      const double exact = sum.convert_to<double>();
      const double rel = std::abs(std::exp(got - std::log(exact)) - 1.0);
      if (!(rel < 1e-10))
        throw std::runtime_error("GfcTable validation failed: recurrence disagrees with "
                                 "the alternating-sum definition");
    }
  }
}

unsigned __int128 stirling2(int n, int k) {
  constexpr int kMaxN = 30;
  if (n < 0 || k < 0) throw std::domain_error("stirling2: negative argument");
  if (n > kMaxN) throw std::overflow_error("stirling2: supported only for n <= 30");
  if (k > n) return 0;
  static const auto table = [] {
    std::vector<std::vector<unsigned __int128>> t(kMaxN + 1);
    t[0] = {1};
    for (int m = 1; m <= kMaxN; ++m) {
      t[m].assign(m + 1, 0);
      for (int l = 1; l <= m; ++l) {
        const unsigned __int128 same = (l <= m - 1) ? t[m - 1][l] : 0;
        t[m][l] = static_cast<unsigned __int128>(l) * same + t[m - 1][l - 1];
      }
    }
    return t;
  }();
  return table[n][k];
}

std::string to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace pitman
