/**
 * @file interval.hpp
 * @brief Closed finite intervals and the strict interval order.
 *
 * An Interval [lower, upper] brackets an unknown point estimate. Interval A
 * dominates interval B when A lies entirely above B: in Strict mode A.lower
 * must exceed B.upper, in Weak mode touching endpoints also count.
 */

#ifndef IVPARETO_INTERVAL_HPP
#define IVPARETO_INTERVAL_HPP

#include <string_view>

namespace ivpareto {

enum class DominanceMode { Strict, Weak };

std::string_view to_string(DominanceMode mode) noexcept;
/// Accepts "strict" or "weak"; throws SchemaError otherwise.
DominanceMode parse_dominance_mode(std::string_view text);

class Interval {
 public:
  /// Degenerate interval [0, 0].
  constexpr Interval() noexcept = default;

  /// Throws InvalidBounds when upper < lower or either bound is NaN/infinite.
  Interval(double lower, double upper);

  [[nodiscard]] constexpr double lower() const noexcept { return lower_; }
  [[nodiscard]] constexpr double upper() const noexcept { return upper_; }
  [[nodiscard]] constexpr double width() const noexcept { return upper_ - lower_; }
  [[nodiscard]] constexpr bool is_degenerate() const noexcept { return upper_ == lower_; }
  [[nodiscard]] constexpr bool contains(double p) const noexcept {
    return lower_ <= p && p <= upper_;
  }
  /// True when this interval lies inside `outer` (endpoints may coincide).
  [[nodiscard]] constexpr bool within(const Interval& outer) const noexcept {
    return lower_ >= outer.lower_ && upper_ <= outer.upper_;
  }

  friend constexpr bool operator==(const Interval&, const Interval&) = default;

 private:
  double lower_ = 0.0;
  double upper_ = 0.0;
};

Interval make_interval(double lower, double upper);

/// Strict: d1.lower > d2.upper. Weak: d1.lower >= d2.upper.
[[nodiscard]] constexpr bool interval_dominates(const Interval& d1, const Interval& d2,
                                                DominanceMode mode = DominanceMode::Strict) noexcept {
  return mode == DominanceMode::Strict ? d1.lower() > d2.upper() : d1.lower() >= d2.upper();
}

/// Replaces `current` by `refined` when refined ⊆ current; a refinement that
/// escapes the current interval is not true information and throws NotAContraction.
Interval contract(const Interval& current, const Interval& refined);

}  // namespace ivpareto

#endif  // IVPARETO_INTERVAL_HPP
