#include "cps/circle.hpp"

namespace cps {

CirclePoint circle_point(const Rational& t) {
  Rational t2 = t * t;
  Rational den = 1 + t2;
  CirclePoint p{(1 - t2) / den, 2 * t / den};
  p.c.canonicalize();
  p.s.canonicalize();
  return p;
}

CirclePoint circle_zero() { return {Rational(1), Rational(0)}; }

CirclePoint circle_pi() { return {Rational(-1), Rational(0)}; }

CirclePoint double_angle(const CirclePoint& u) {
  return {u.c * u.c - u.s * u.s, 2 * u.c * u.s};
}

}  // namespace cps
