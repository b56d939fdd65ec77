#pragma once

// Random admissible points for property tests and verification suites.

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "zastava/point.hpp"
#include "zastava/root_data.hpp"
#include "zastava/scalar.hpp"

namespace zastava {

struct SampleOptions {
  long lo = -9;
  long hi = 9;
  long max_den = 3;
  bool nonzero_roots = true;   // trigonometric chart
  bool positive = false;       // w, y > 0
  std::size_t max_attempts = 10000;
};

template <class Rng>
std::vector<Scalar> distinct_rationals(Rng& rng, std::size_t n, const SampleOptions& o) {
  std::vector<Scalar> out;
  std::size_t attempts = 0;
  while (out.size() < n) {
    if (++attempts > o.max_attempts) throw error(errc::sampling_exhausted, "could not draw distinct roots");
    Scalar x = o.positive ? random_rational(rng, 1, o.hi, o.max_den) : random_rational(rng, o.lo, o.hi, o.max_den);
    if (o.nonzero_roots && x == 0) continue;
    if (std::find(out.begin(), out.end(), x) != out.end()) continue;
    out.push_back(x);
  }
  return out;
}

template <class Rng>
Scalar nonzero_rational(Rng& rng, const SampleOptions& o) {
  for (std::size_t k = 0; k < o.max_attempts; ++k) {
    Scalar x = o.positive ? random_rational(rng, 1, o.hi, o.max_den) : random_rational(rng, o.lo, o.hi, o.max_den);
    if (x != 0) return x;
  }
  throw error(errc::sampling_exhausted, "could not draw a nonzero value");
}

/// Point with distinct rational roots and nonzero y (so gcd(Q_i, R_i) = 1).
template <class Rng>
ZastavaPoint random_point(Rng& rng, const RootDatum& datum, const std::vector<std::size_t>& degrees,
                          const SampleOptions& o = {}) {
  std::vector<std::vector<Scalar>> w, y;
  for (std::size_t d : degrees) {
    w.push_back(distinct_rationals(rng, d, o));
    std::vector<Scalar> ys;
    for (std::size_t r = 0; r < d; ++r) ys.push_back(nonzero_rational(rng, o));
    y.push_back(std::move(ys));
  }
  return ZastavaPoint::from_coords(datum, w, y, o.nonzero_roots);
}

template <class Rng>
ZastavaPoint random_sl2_point(Rng& rng, std::size_t a, const SampleOptions& o = {}) {
  return random_point(rng, finite_datum('A', 1), {a}, o);
}

}  // namespace zastava
