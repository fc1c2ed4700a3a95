#include "polyreal/rational.hpp"

#include <cmath>
#include <limits>

namespace polyreal {

Rational round_to_denominator(double x, const Integer& max_denominator) {
  if (!std::isfinite(x)) throw error("round_to_denominator: non-finite input");
  if (max_denominator < 1) throw error("round_to_denominator: max_denominator < 1");

  const bool negative = x < 0;
  double y = std::abs(x);

  // Continued-fraction expansion: p/q are the current convergents, pp/qq the
  // previous ones. Stop when the next convergent would exceed the cap, then
  // take the best semiconvergent.
  Integer pp(1), qq(0), p(0), q(1);
  double frac = y;
  for (int iter = 0; iter < 64; ++iter) {
    const double fl = std::floor(frac);
    if (fl > 9e18) break;
    Integer a(static_cast<long long>(fl));
    Integer np = a * p + pp;
    Integer nq = a * q + qq;
    if (nq > max_denominator) {
      // Semiconvergent with the largest admissible coefficient.
      Integer k = floor_div(max_denominator - qq, q);
      if (k > 0) {
        Integer sp = k * p + pp;
        Integer sq = k * q + qq;
        const double err_conv = std::abs(y - to_double(make_rational(p, q)));
        const double err_semi = std::abs(y - to_double(make_rational(sp, sq)));
        if (err_semi < err_conv) {
          p = sp;
          q = sq;
        }
      }
      break;
    }
    pp = p;
    qq = q;
    p = np;
    q = nq;
    const double rem = frac - fl;
    if (rem < 1e-18) break;
    frac = 1.0 / rem;
  }
  if (q == 0) return Rational(0);
  Rational r = make_rational(p, q);
  return negative ? Rational(-r) : r;
}

Integer common_denominator(const std::vector<Rational>& values) {
  Integer l(1);
  for (const Rational& v : values) l = lcm(l, rat_den(v));
  return l;
}

}  // namespace polyreal
