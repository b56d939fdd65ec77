#pragma once

// Dense exact matrices and determinants.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zastava/error.hpp"
#include "zastava/multirat.hpp"
#include "zastava/scalar.hpp"

namespace zastava {

template <class T>
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(Scalar(0))) {}

  ExactMatrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw error(errc::precondition, "ragged matrix literal");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(Scalar(1));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  const T& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
      throw error(errc::out_of_range, "matrix index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    return (*this)(i, j);
  }
  T& at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_)
      throw error(errc::out_of_range, "matrix index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    return (*this)(i, j);
  }

  ExactMatrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    ExactMatrix m(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = at(rs[i], cs[j]);
    return m;
  }

  ExactMatrix transpose() const {
    ExactMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.cols_ != y.rows_) throw error(errc::precondition, "matrix product shape mismatch");
    ExactMatrix m(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k)
        for (std::size_t j = 0; j < y.cols_; ++j) m(i, j) += x(i, k) * y(k, j);
    return m;
  }

  friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
    for (std::size_t k = 0; k < x.a_.size(); ++k)
      if (!(x.a_[k] == y.a_[k])) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using ScalarMatrix = ExactMatrix<Scalar>;
using SymbolicMatrix = ExactMatrix<MultiRat>;

enum class DetStrategy { bareiss, cofactor, division_free };

inline const char* to_string(DetStrategy s) {
  switch (s) {
    case DetStrategy::bareiss: return "bareiss";
    case DetStrategy::cofactor: return "cofactor";
    case DetStrategy::division_free: return "division_free";
  }
  return "unknown";
}

inline DetStrategy parse_strategy(std::string_view s) {
  if (s == "bareiss") return DetStrategy::bareiss;
  if (s == "cofactor") return DetStrategy::cofactor;
  if (s == "division_free" || s == "division-free" || s == "berkowitz") return DetStrategy::division_free;
  throw error(errc::parse, "unknown determinant strategy '" + std::string(s) + "'");
}

namespace detail {

template <class T>
void require_square(const ExactMatrix<T>& m) {
  if (!m.is_square())
    throw error(errc::precondition,
                "determinant of non-square " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
}

}  // namespace detail

/// Fraction-free Bareiss elimination on the integer lift (each row scaled by
/// the LCM of its denominators).
inline Scalar det_bareiss(const ScalarMatrix& m) {
  detail::require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  std::vector<Integer> a(n * n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  int sgn_ = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return Scalar(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sgn_ = -sgn_;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k * n + k];
  }
  Scalar d(Integer(a[n * n - 1] * sgn_), scale);
  d.canonicalize();
  return d;
}

/// Laplace expansion with memoization over column subsets, O(n 2^n).
template <class T>
T det_cofactor(const ExactMatrix<T>& m, std::size_t cap = 20) {
  detail::require_square(m);
  const std::size_t n = m.rows();
  if (n > cap) throw error(errc::out_of_range, "cofactor determinant capped at " + std::to_string(cap));
  if (n == 0) return T(Scalar(1));
  // dp[S]: determinant of the last |S| rows restricted to the columns in S
  std::vector<T> dp(std::size_t{1} << n, T(Scalar(0)));
  dp[0] = T(Scalar(1));
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const std::size_t size = static_cast<std::size_t>(__builtin_popcount(s));
    const std::size_t row = n - size;
    T acc(Scalar(0));
    std::size_t pos = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(s & (1u << j))) continue;
      const T& x = m(row, j);
      const T& sub = dp[s & ~(1u << j)];
      if (!(x == T(Scalar(0)))) {
        if (pos % 2 == 0)
          acc += x * sub;
        else
          acc -= x * sub;
      }
      ++pos;
    }
    dp[s] = std::move(acc);
  }
  return dp.back();
}

/// Berkowitz characteristic-polynomial recurrence; ring operations only.
template <class T>
T det_division_free(const ExactMatrix<T>& m) {
  detail::require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return T(Scalar(1));
  std::vector<T> p{T(Scalar(1)), T(-m(0, 0))};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<T> t(r + 2, T(Scalar(0)));
    t[0] = T(Scalar(1));
    t[1] = -m(r, r);
    std::vector<T> v(r, T(Scalar(0)));
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      T dot(Scalar(0));
      for (std::size_t j = 0; j < r; ++j) dot += m(r, j) * v[j];
      t[k + 2] = -dot;
      if (k + 1 < r) {
        std::vector<T> w(r, T(Scalar(0)));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) w[i] += m(i, j) * v[j];
        v = std::move(w);
      }
    }
    std::vector<T> q(r + 2, T(Scalar(0)));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) q[i] += t[i - j] * p[j];
    p = std::move(q);
  }
  if (n % 2) return T(-p[n]);
  return p[n];
}

inline Scalar det(const ScalarMatrix& m, DetStrategy s = DetStrategy::bareiss) {
  switch (s) {
    case DetStrategy::bareiss: return det_bareiss(m);
    case DetStrategy::cofactor: return det_cofactor(m);
    case DetStrategy::division_free: return det_division_free(m);
  }
  throw error(errc::invariant, "unhandled determinant strategy");
}

/// Symbolic determinant; cofactor expansion capped at 6x6.
inline MultiRat det(const SymbolicMatrix& m) { return det_cofactor(m, 6); }

/// Solves A x = b; nullopt when A is singular.
inline std::optional<std::vector<Scalar>> solve(const ScalarMatrix& A, const std::vector<Scalar>& b) {
  detail::require_square(A);
  const std::size_t n = A.rows();
  if (b.size() != n) throw error(errc::precondition, "solve: right-hand side size mismatch");
  ScalarMatrix m = A;
  std::vector<Scalar> x = b;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      std::swap(x[k], x[p]);
    }
    const Scalar inv = 1 / m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Scalar f = m(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
      x[i] -= f * x[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    Scalar acc = x[k];
    for (std::size_t j = k + 1; j < n; ++j) acc -= m(k, j) * x[j];
    x[k] = acc / m(k, k);
  }
  return x;
}

}  // namespace zastava
