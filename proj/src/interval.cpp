#include "ivpareto/interval.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "ivpareto/error.hpp"

namespace ivpareto {

namespace {

std::string describe(double lower, double upper) {
  std::ostringstream out;
  out << '[' << lower << ", " << upper << ']';
  return out.str();
}

}  // namespace

std::string_view to_string(DominanceMode mode) noexcept {
  return mode == DominanceMode::Strict ? "strict" : "weak";
}

DominanceMode parse_dominance_mode(std::string_view text) {
  if (text == "strict") return DominanceMode::Strict;
  if (text == "weak") return DominanceMode::Weak;
  throw Error(ErrorCode::SchemaError, "dominance mode must be \"strict\" or \"weak\"", "mode");
}

Interval::Interval(double lower, double upper) : lower_(lower), upper_(upper) {
  if (!std::isfinite(lower) || !std::isfinite(upper)) {
    throw Error(ErrorCode::InvalidBounds, "interval bounds must be finite");
  }
  if (upper < lower) {
    throw Error(ErrorCode::InvalidBounds, "upper bound below lower bound in " + describe(lower, upper));
  }
}

Interval make_interval(double lower, double upper) { return Interval(lower, upper); }

Interval contract(const Interval& current, const Interval& refined) {
  if (!refined.within(current)) {
    throw Error(ErrorCode::NotAContraction,
                describe(refined.lower(), refined.upper()) + " is not inside " +
                    describe(current.lower(), current.upper()));
  }
  return refined;
}

}  // namespace ivpareto
