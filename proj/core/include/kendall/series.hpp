#pragma once

#include <cmath>
#include <cstddef>
#include <limits>

namespace kendall {

// Numeric value of a truncated series with an absolute error estimate and the
// largest summed term magnitude. max_term / |value| is the cancellation
// diagnostic: when it exceeds kCancellationCap the value has lost too many
// digits to roundoff and must not be consumed as if accurate.
struct SeriesValue {
  double value = 0.0;
  double abs_err = 0.0;
  double max_term = 0.0;

  static constexpr double kCancellationCap = 1e12;

  double cancellation() const {
    if (max_term == 0.0) return 0.0;
    if (value == 0.0) return std::numeric_limits<double>::infinity();
    return max_term / std::fabs(value);
  }
  bool reliable(double cap = kCancellationCap) const { return cancellation() <= cap; }
};

// Shared truncation policy: stop after three consecutive terms below
// 1e-17 * |partial sum|, hard cap at 1e5 terms. The roundoff component of
// abs_err grows with max_term, which makes cancellation visible to callers.
class SeriesAccumulator {
 public:
  static constexpr std::size_t kMaxTerms = 100000;
  static constexpr double kStopRel = 1e-17;

  // Returns true while further terms are wanted.
  bool add(double term) {
    sum_ += term;
    const double a = std::fabs(term);
    last_ = a;
    if (a > max_term_) max_term_ = a;
    ++n_;
    if (a < kStopRel * std::fabs(sum_)) {
      if (++small_streak_ >= 3) converged_ = true;
    } else {
      small_streak_ = 0;
    }
    if (n_ >= kMaxTerms) hit_cap_ = true;
    return !(converged_ || hit_cap_);
  }

  bool converged() const { return converged_; }
  bool hit_cap() const { return hit_cap_; }
  std::size_t n_terms() const { return n_; }

  SeriesValue result() const {
    SeriesValue r;
    r.value = sum_;
    r.max_term = max_term_;
    const double eps = std::numeric_limits<double>::epsilon();
    const double roundoff = max_term_ * static_cast<double>(n_) * eps;
    // Truncation bounded by the scale of the last term; when the cap was hit
    // the tail is unknown and the caller should treat the result as suspect.
    const double truncation = hit_cap_ ? last_ * static_cast<double>(n_) : last_;
    r.abs_err = roundoff + truncation;
    return r;
  }

 private:
  double sum_ = 0.0;
  double max_term_ = 0.0;
  double last_ = 0.0;
  std::size_t n_ = 0;
  int small_streak_ = 0;
  bool converged_ = false;
  bool hit_cap_ = false;
};

}  // namespace kendall
