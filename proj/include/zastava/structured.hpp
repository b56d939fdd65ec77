#pragma once

// Hankel matrices of a series at infinity, the (2a-1)x(2a-1) Sylvester
// arrangement of (Q, R), and its odd/even central minors.
//
// Sylvester layout for deg Q = a: rows 0..a-2 hold (1, q_{a-1}, ..., q_0)
// shifted right by the row index; row a-1+t (t = 0..a-1) holds
// (r_{a-1}, ..., r_0) starting at column a-1-t.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "zastava/error.hpp"
#include "zastava/matrix.hpp"
#include "zastava/series.hpp"
#include "zastava/unipoly.hpp"

namespace zastava {

inline ScalarMatrix hankel_matrix(const InfSeries& c, std::size_t size, std::size_t shift = 0) {
  if (size > 0 && c.order() < 2 * size - 1 + shift)
    throw error(errc::out_of_range, "series has " + std::to_string(c.order()) + " coefficients, Hankel block of size " +
                                        std::to_string(size) + " needs " + std::to_string(2 * size - 1 + shift));
  ScalarMatrix m(size, size);
  for (std::size_t j = 0; j < size; ++j)
    for (std::size_t k = 0; k < size; ++k) m(j, k) = c[j + k + shift];
  return m;
}

/// C_r = det [c_{j+k}], j,k < r. C_0 = 1.
inline Scalar hankel_minor_C(const InfSeries& c, std::size_t r, DetStrategy s = DetStrategy::bareiss) {
  return det(hankel_matrix(c, r), s);
}

/// D_r = det [c_{j+k+1}], j,k < r. D_0 = 1.
inline Scalar hankel_minor_D(const InfSeries& c, std::size_t r, DetStrategy s = DetStrategy::bareiss) {
  return det(hankel_matrix(c, r, 1), s);
}

namespace detail {

inline std::size_t check_sylvester_input(const UniPoly& Q, const UniPoly& R) {
  if (Q.is_zero() || *Q.degree() < 1) throw error(errc::precondition, "Sylvester matrix needs deg Q >= 1");
  if (!Q.is_monic()) throw error(errc::precondition, "Sylvester matrix needs monic Q");
  const std::size_t a = *Q.degree();
  if (!R.is_zero() && *R.degree() >= a) throw error(errc::precondition, "Sylvester matrix needs deg R < deg Q");
  return a;
}

}  // namespace detail

inline ScalarMatrix sylvester_matrix(const UniPoly& Q, const UniPoly& R) {
  const std::size_t a = detail::check_sylvester_input(Q, R);
  const std::size_t n = 2 * a - 1;
  ScalarMatrix m(n, n);
  for (std::size_t k = 0; k + 1 < a; ++k)
    for (std::size_t t = 0; t <= a; ++t) m(k, k + t) = Q.coeff(a - t);
  for (std::size_t t = 0; t < a; ++t)
    for (std::size_t s = 0; s < a; ++s) m(a - 1 + t, a - 1 - t + s) = R.coeff(a - 1 - s);
  return m;
}

/// Central minor with i rows/columns removed on every side.
inline Scalar subresultant_odd(const UniPoly& Q, const UniPoly& R, std::size_t i) {
  const std::size_t a = detail::check_sylvester_input(Q, R);
  if (i >= a) throw error(errc::out_of_range, "odd sub-resultant index " + std::to_string(i) + " outside 0.." +
                                                  std::to_string(a - 1));
  const ScalarMatrix m = sylvester_matrix(Q, R);
  std::vector<std::size_t> idx;
  for (std::size_t k = i; k + i < 2 * a - 1; ++k) idx.push_back(k);
  return det(m.submatrix(idx, idx));
}

/// Minor without the middle row, i rows at top and bottom, i columns at the
/// left and i+1 at the right.
inline Scalar subresultant_even(const UniPoly& Q, const UniPoly& R, std::size_t i) {
  const std::size_t a = detail::check_sylvester_input(Q, R);
  if (a < 2 || i > a - 2)
    throw error(errc::out_of_range, "even sub-resultant index " + std::to_string(i) + " unsupported for degree " +
                                        std::to_string(a));
  const ScalarMatrix m = sylvester_matrix(Q, R);
  std::vector<std::size_t> rows, cols;
  for (std::size_t k = i; k + i < 2 * a - 1; ++k)
    if (k != a - 1) rows.push_back(k);
  for (std::size_t k = i; k + i + 1 < 2 * a - 1; ++k) cols.push_back(k);
  return det(m.submatrix(rows, cols));
}

/// Records the sign relation between two routes per (family, degree, index)
/// and reports whether it stays constant. Pairs with a zero side carry no sign.
class SignLedger {
 public:
  struct Entry {
    int sign = 0;
    std::size_t observations = 0;
    bool stable = true;
  };

  /// Returns false on the first observation contradicting an earlier one.
  bool observe(const std::string& family, std::size_t a, std::size_t index, const Scalar& lhs, const Scalar& rhs) {
    if (lhs == 0 || rhs == 0) return true;
    const int s = sgn(lhs) * sgn(rhs);
    Entry& e = entries_[{family, a, index}];
    ++e.observations;
    if (e.sign == 0) {
      e.sign = s;
      return true;
    }
    if (e.sign != s) e.stable = false;
    return e.sign == s;
  }

  std::optional<int> sign(const std::string& family, std::size_t a, std::size_t index) const {
    auto it = entries_.find({family, a, index});
    if (it == entries_.end() || it->second.sign == 0) return std::nullopt;
    return it->second.sign;
  }

  bool all_stable() const {
    for (const auto& [k, e] : entries_)
      if (!e.stable) return false;
    return true;
  }

  const std::map<std::tuple<std::string, std::size_t, std::size_t>, Entry>& entries() const { return entries_; }

 private:
  std::map<std::tuple<std::string, std::size_t, std::size_t>, Entry> entries_;
};

}  // namespace zastava
