#pragma once

#include "cps/rational.hpp"

namespace cps {

/// Rational point (c, s) on the unit circle, c^2 + s^2 = 1 exactly.
struct CirclePoint {
  Rational c;
  Rational s;
  bool operator==(const CirclePoint&) const = default;
};

/// Tangent half-angle parameterization: c = (1-t^2)/(1+t^2), s = 2t/(1+t^2).
/// Covers every rational circle point except (-1, 0), available as circle_pi().
CirclePoint circle_point(const Rational& t);

CirclePoint circle_zero();  // (1, 0), "theta = 0"
CirclePoint circle_pi();    // (-1, 0), "theta = pi"

/// Doubling identity: from the point for theta, the point for 2*theta.
CirclePoint double_angle(const CirclePoint& u);

}  // namespace cps
