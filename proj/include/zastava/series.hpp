#pragma once

// Truncated expansions at infinity: sum_j c_j z^{-j-1}.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "zastava/error.hpp"
#include "zastava/scalar.hpp"
#include "zastava/unipoly.hpp"

namespace zastava {

class InfSeries {
 public:
  InfSeries() = default;
  explicit InfSeries(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {}

  std::size_t order() const { return c_.size(); }

  const Scalar& operator[](std::size_t j) const {
    if (j >= c_.size())
      throw error(errc::out_of_range, "series coefficient c_" + std::to_string(j) + " past truncation order " +
                                          std::to_string(c_.size()));
    return c_[j];
  }

  const std::vector<Scalar>& coefficients() const { return c_; }

  friend bool operator==(const InfSeries&, const InfSeries&) = default;

 private:
  std::vector<Scalar> c_;
};

/// Expansion of R/Q in powers of 1/z by the recurrence
///   lead(Q) c_n = r_{a-1-n} - sum_{t=1}^{min(n,a)} q_{a-t} c_{n-t}.
inline InfSeries series_expand(const UniPoly& R, const UniPoly& Q, std::size_t n) {
  if (Q.is_zero()) throw error(errc::precondition, "series_expand: Q is zero");
  const std::size_t a = *Q.degree();
  if (!R.is_zero() && *R.degree() >= a)
    throw error(errc::precondition, "series_expand: deg R must be < deg Q");
  const Scalar inv_lead = 1 / Q.leading();
  std::vector<Scalar> c(n);
  for (std::size_t k = 0; k < n; ++k) {
    Scalar acc = R.coeff(static_cast<long>(a) - 1 - static_cast<long>(k));
    for (std::size_t t = 1; t <= std::min(k, a); ++t) acc -= Q.coeff(a - t) * c[k - t];
    c[k] = acc * inv_lead;
  }
  return InfSeries(std::move(c));
}

}  // namespace zastava
