#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdio>
#include <stdexcept>
#include <string>

namespace polyhedge {

// Exact rational scalar. All kernel arithmetic is over Rat; no rounding
// happens anywhere except explicit input rationalization and output
// rendering. GMP keeps values canonical (reduced, positive denominator).
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline int sign(const Rat& r) { return r.sign(); }

// Parses "p/q", integers ("-12") and plain decimals ("0.125", "-45.90").
// The string constructor of mpq_rational does not canonicalize, so we go
// through integer parts and divide.
inline Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(p) / Rat(q);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rat(Int(s));
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  if (digits == "-" || digits == "+" || digits.empty())
    throw std::invalid_argument("bad rational literal: " + s);
  Int p(digits);
  Int q = 1;
  for (size_t i = dot + 1; i < s.size(); ++i) q *= 10;
  return Rat(p) / Rat(q);
}

// Always "p/q", including "/1"; lossless and byte-stable.
inline std::string to_fraction_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

// Nearest integer to r with ties to even.
inline Int round_half_even(const Rat& r) {
  Int n = numerator(r), d = denominator(r);
  Int q, rem;
  divide_qr(n, d, q, rem);            // truncated division
  if (rem < 0) { q -= 1; rem += d; }  // make floor
  Int twice = 2 * rem;
  if (twice > d) return q + 1;
  if (twice < d) return q;
  return (q % 2 == 0) ? q : q + 1;  // tie: to even
}

// Fixed-point decimal rendering with round-half-to-even. `tie` (optional)
// reports whether the value sat exactly on a rounding boundary, i.e. the
// printed digits are sensitive to the rounding mode.
inline std::string to_decimal_string(const Rat& r, int digits, bool* tie = nullptr) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rat scaled = r * Rat(scale);
  Int n = round_half_even(scaled);
  if (tie) *tie = (2 * abs(numerator(scaled) - n * denominator(scaled)) == denominator(scaled));
  bool neg = n < 0;
  Int a = abs(n);
  std::string body = a.str();
  std::string out;
  if (digits == 0) {
    out = body;
  } else {
    if ((int)body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    out = body.substr(0, body.size() - digits) + "." + body.substr(body.size() - digits);
  }
  if (neg && a != 0) out.insert(0, 1, '-');
  return out;
}

// Exact conversion of a double through its shortest fixed-precision decimal
// form: round to `sig_digits` significant digits, then read that decimal
// exactly. This is the single place where real-valued model inputs are
// rounded; everything downstream is exact.
inline Rat rationalize_significant(double x, int sig_digits) {
  if (sig_digits < 1 || sig_digits > 17) throw std::invalid_argument("significant digits out of range");
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*e", sig_digits - 1, x);
  std::string s(buf);
  auto epos = s.find('e');
  std::string mant = s.substr(0, epos);
  int expo = std::stoi(s.substr(epos + 1));
  auto dot = mant.find('.');
  int frac = 0;
  if (dot != std::string::npos) {
    frac = (int)(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  Int p(mant);
  int net = expo - frac;
  Int pow10 = 1;
  for (int i = 0; i < (net < 0 ? -net : net); ++i) pow10 *= 10;
  return net >= 0 ? Rat(p * pow10) : Rat(p) / Rat(pow10);
}

inline Rat pow_rational(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (base == 0) throw std::domain_error("zero to negative power");
    return Rat(1) / pow_rational(base, -e);
  }
  Rat acc(1), b = base;
  long k = e;
  while (k > 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace polyhedge
