#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace sprigid {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders p/1 as "p", anything else as "p/q" (q > 0).
inline std::string rat_to_string(const Rational &q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Accepts "p" and "p/q" with optional sign on p.
inline Rational parse_rational(const std::string &s) {
  const auto slash = s.find('/');
  const std::string num_text = slash == std::string::npos ? s : s.substr(0, slash);
  const std::string den_text = slash == std::string::npos ? "1" : s.substr(slash + 1);
  // the big-integer constructor treats "" as zero instead of rejecting it
  if (num_text.empty() || den_text.empty())
    throw std::invalid_argument("not a rational: '" + s + "'");
  try {
    if (slash == std::string::npos) return Rational(Integer(num_text));
    const Integer num(num_text);
    const Integer den(den_text);
    if (den <= 0) throw std::invalid_argument("denominator must be positive");
    return Rational(num, den);
  } catch (const std::runtime_error &) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

inline double rat_to_double(const Rational &q) {
  return q.convert_to<double>();
}

inline Integer binomial(const Integer &n, const Integer &k) {
  if (k < 0 || k > n) return 0;
  Integer num = 1, den = 1;
  const Integer kk = (k > n - k) ? n - k : k;
  for (Integer i = 0; i < kk; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

}  // namespace sprigid
