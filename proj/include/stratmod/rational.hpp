#pragma once

#include <complex>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "stratmod/error.hpp"

namespace stratmod {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

inline BigInt numerator_of(const Rational &q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational &q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational &q) { return q.convert_to<double>(); }

// Accepts "p", "-p", "p/q".
inline Rational parse_rational(const std::string &text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos)
      return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0)
      throw DomainError("zero denominator in rational '" + text + "'");
    return Rational(num, den);
  } catch (const DomainError &) {
    throw;
  } catch (const std::exception &) {
    throw DomainError("malformed rational '" + text + "'");
  }
}

inline std::string to_string(const Rational &q) {
  if (denominator_of(q) == 1)
    return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

// Scalar hooks shared by the exact and floating polynomial modes.
inline Rational conj_scalar(const Rational &x) { return x; }
inline Complex conj_scalar(const Complex &x) { return std::conj(x); }

inline bool is_zero_scalar(const Rational &x) { return x == 0; }
inline bool is_zero_scalar(const Complex &x) { return x == Complex(0.0, 0.0); }

inline Complex to_complex(const Rational &x) { return Complex(to_double(x), 0.0); }
inline Complex to_complex(const Complex &x) { return x; }

} // namespace stratmod
