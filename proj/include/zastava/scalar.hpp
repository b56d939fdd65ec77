#pragma once

// Exact rationals. Every numeric constant in the library is a Scalar;
// GMP keeps them canonical (lowest terms, positive denominator).

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <random>
#include <string>
#include <string_view>

#include "zastava/error.hpp"

namespace zastava {

using Scalar = mpq_class;
using Integer = mpz_class;

inline Scalar make_scalar(long num, long den = 1) {
  if (den == 0) throw error(errc::division_by_zero, "scalar with zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

inline const Scalar& scalar_zero() {
  static const Scalar zero(0);
  return zero;
}

inline int sign(const Scalar& q) { return sgn(q); }

/// Parses "p/q" or "p" (optional sign, no whitespace inside the number).
inline Scalar parse_scalar(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw error(errc::parse, "empty scalar");
  const auto slash = s.find('/');
  auto digits_ok = [](std::string_view d, bool allow_sign) {
    if (allow_sign && !d.empty() && d.front() == '-') d.remove_prefix(1);
    if (d.empty()) return false;
    for (char c : d)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits_ok(s, true)) throw error(errc::parse, "malformed scalar '" + s + "'");
  } else {
    std::string_view sv(s);
    if (!digits_ok(sv.substr(0, slash), true) || !digits_ok(sv.substr(slash + 1), false))
      throw error(errc::parse, "malformed scalar '" + s + "'");
  }
  Scalar q;
  if (q.set_str(s, 10) != 0) throw error(errc::parse, "malformed scalar '" + s + "'");
  if (q.get_den() == 0) throw error(errc::division_by_zero, "scalar with zero denominator");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Scalar& q) { return q.get_str(); }

/// Bit length of max(|numerator|, denominator).
inline std::size_t bit_length(const Scalar& q) {
  const std::size_t n = q.get_num() == 0 ? 0 : mpz_sizeinbase(q.get_num_mpz_t(), 2);
  const std::size_t d = mpz_sizeinbase(q.get_den_mpz_t(), 2);
  return n > d ? n : d;
}

template <class Rng>
Scalar random_integer(Rng& rng, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return Scalar(dist(rng));
}

/// Random rational num/den with num in [lo,hi] and den in [1,max_den].
template <class Rng>
Scalar random_rational(Rng& rng, long lo, long hi, long max_den) {
  std::uniform_int_distribution<long> num(lo, hi);
  std::uniform_int_distribution<long> den(1, max_den);
  return make_scalar(num(rng), den(rng));
}

}  // namespace zastava
