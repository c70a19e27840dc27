#ifndef NEMINEQ_EXPONENT_HPP
#define NEMINEQ_EXPONENT_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace nemineq {

/// Norm exponent r in [1, inf]. Infinity is a distinguished tag, not a large
/// float, so callers can branch on it exactly.
class RExponent {
public:
  explicit RExponent(double value) : value_(value), inf_(std::isinf(value)) {
    if (std::isnan(value) || value < 1.0) {
      throw std::domain_error("RExponent: r must satisfy r >= 1, got " +
                              std::to_string(value));
    }
  }

  static RExponent infinity() { return RExponent(inf_tag{}); }

  bool is_infinite() const { return inf_; }

  /// Finite value; throws if r = inf.
  double value() const {
    if (inf_) throw std::domain_error("RExponent: value() called on r = inf");
    return value_;
  }

  /// 1/r, with 1/inf = 0.
  double reciprocal() const { return inf_ ? 0.0 : 1.0 / value_; }

  bool operator==(const RExponent& o) const {
    return inf_ == o.inf_ && (inf_ || value_ == o.value_);
  }

private:
  struct inf_tag {};
  explicit RExponent(inf_tag)
      : value_(std::numeric_limits<double>::infinity()), inf_(true) {}

  double value_;
  bool inf_;
};

/// Throws unless 2 <= r < inf (the smoothness-lemma hypotheses).
inline void require_smooth_exponent(const RExponent& r, const char* what) {
  if (r.is_infinite() || r.value() < 2.0) {
    throw std::domain_error(std::string(what) + ": requires 2 <= r < inf");
  }
}

}  // namespace nemineq

#endif  // NEMINEQ_EXPONENT_HPP
