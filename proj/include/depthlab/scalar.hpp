#pragma once

// Exact rational scalars. Every coordinate, coefficient and predicate value in
// the exact modules is a Scalar; floats only appear in sphere_heuristic.hpp.

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace depthlab {

/// Arbitrary-precision rational in canonical form (den > 0, gcd(num, den) = 1).
using Scalar = mpq_class;

inline int sign(const Scalar& s) { return sgn(s); }

/// Parses "p/q", integers, and decimals ("0.1" is exactly 1/10, "1.5e-3" allowed).
/// Throws std::invalid_argument on anything else.
inline Scalar parse_scalar(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty numeric field");

  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '+' || t.front() == '-')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto to_mpz = [](std::string_view t) {
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    return mpz_class(std::string(t), 10);
  };

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = trim(s.substr(0, slash));
    auto den = trim(s.substr(slash + 1));
    if (!is_int(num) || !is_int(den)) throw std::invalid_argument("bad rational: " + std::string(s));
    mpz_class d = to_mpz(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
    Scalar q(to_mpz(num), d);
    q.canonicalize();
    return q;
  }

  std::string_view mant = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    auto exp_text = s.substr(e + 1);
    if (!is_int(exp_text)) throw std::invalid_argument("bad exponent: " + std::string(s));
    exponent = std::stol(std::string(exp_text));
    mant = s.substr(0, e);
  }
  bool negative = false;
  if (!mant.empty() && (mant.front() == '+' || mant.front() == '-')) {
    negative = mant.front() == '-';
    mant.remove_prefix(1);
  }
  std::string digits;
  long frac_len = 0;
  bool seen_dot = false;
  for (char c : mant) {
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("bad decimal: " + std::string(s));
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_dot) ++frac_len;
    } else {
      throw std::invalid_argument("non-numeric field: " + std::string(s));
    }
  }
  if (digits.empty()) throw std::invalid_argument("non-numeric field: " + std::string(s));
  mpz_class num(digits, 10);
  if (negative) num = -num;
  long shift = exponent - frac_len;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Scalar q = shift < 0 ? Scalar(num, pow10) : Scalar(num * pow10);
  q.canonicalize();
  return q;
}

/// Lossless "p/q" (or "p" for integers).
inline std::string to_string(const Scalar& s) { return s.get_str(); }

/// Exact value of a finite double (every double is a dyadic rational).
inline Scalar from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite double");
  return Scalar(v);
}

/// Rounds to the dyadic grid 2^-bits; keeps rational sizes small.
inline Scalar round_to_grid(double v, int bits = 24) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite double");
  double scaled = std::ldexp(v, bits);
  mpz_class num(std::nearbyint(scaled));
  mpz_class den(1);
  den <<= bits;
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

inline double to_double(const Scalar& s) { return s.get_d(); }

}  // namespace depthlab
