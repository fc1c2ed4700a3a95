#ifndef POLYREAL_RATIONAL_HPP
#define POLYREAL_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyreal {

// Exact arbitrary-precision scalars. GMP keeps rationals in canonical form
// (gcd(|num|, den) = 1, den > 0) after every operation, so equality is
// structural and determinant signs are exact.
namespace mp = boost::multiprecision;
using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Builds num/den in canonical form. The two-integer mpq constructor does not
// normalize negative denominators, so route through exact division.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw error("make_rational: zero denominator");
  return Rational(num) / Rational(den);
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline int sign(const Rational& x) { return x.sign(); }
inline int sign(const Integer& x) { return x.sign(); }

inline Integer rat_num(const Rational& x) { return numerator(x); }
inline Integer rat_den(const Rational& x) { return denominator(x); }

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// Serializes as "p/q" with q >= 1 and gcd(|p|, q) = 1, e.g. "-2/3", "5/1".
inline std::string format_rational(const Rational& x) {
  return rat_num(x).str() + "/" + rat_den(x).str();
}

/// Parses "p/q" or a bare integer "p". Throws polyreal::error on bad input.
inline Rational parse_rational(const std::string& text) {
  auto bad = [&] { return error("parse_rational: invalid rational '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty()) throw bad();
    return make_rational(Integer(num), Integer(den));
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

inline Rational rational_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
inline Integer integer_abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer rational_floor(const Rational& x) {
  return floor_div(rat_num(x), rat_den(x));
}

/// Best rational approximation of x with denominator <= max_denominator,
/// via the continued-fraction convergent/semiconvergent construction.
Rational round_to_denominator(double x, const Integer& max_denominator);

/// Common positive denominator of a list of rationals (lcm of denominators).
Integer common_denominator(const std::vector<Rational>& values);

}  // namespace polyreal

#endif  // POLYREAL_RATIONAL_HPP
