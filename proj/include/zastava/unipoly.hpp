#pragma once

// Dense univariate polynomials in z over Scalar.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zastava/error.hpp"
#include "zastava/scalar.hpp"

namespace zastava {

class UniPoly {
 public:
  UniPoly() = default;

  /// Coefficients lowest degree first; trailing zeros are trimmed.
  explicit UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const Scalar& c) { return UniPoly(std::vector<Scalar>{c}); }

  static UniPoly monomial(const Scalar& c, std::size_t k) {
    std::vector<Scalar> v(k + 1);
    v[k] = c;
    return UniPoly(std::move(v));
  }

  /// The polynomial z.
  static UniPoly z() { return monomial(Scalar(1), 1); }

  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  const Scalar& coeff(std::size_t k) const { return k < c_.size() ? c_[k] : scalar_zero(); }
  const Scalar& coeff(long k) const {
    return k < 0 ? scalar_zero() : coeff(static_cast<std::size_t>(k));
  }

  const Scalar& leading() const {
    if (c_.empty()) throw error(errc::precondition, "leading coefficient of zero polynomial");
    return c_.back();
  }

  const std::vector<Scalar>& coefficients() const { return c_; }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Scalar> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
    return UniPoly(std::move(d));
  }

  UniPoly monic() const {
    if (c_.empty()) throw error(errc::division_by_zero, "monic of zero polynomial");
    return *this * Scalar(1 / c_.back());
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  UniPoly& operator*=(const Scalar& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Scalar& s) { return a *= s; }
  friend UniPoly operator*(const Scalar& s, UniPoly a) { return a *= s; }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Multiplication by z^k.
  UniPoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Scalar> r(k);
    r.insert(r.end(), c_.begin(), c_.end());
    return UniPoly(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

inline DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw error(errc::division_by_zero, "polynomial division by zero");
  const std::size_t db = *b.degree();
  if (a.is_zero() || *a.degree() < db) return {UniPoly{}, a};
  std::vector<Scalar> rem = a.coefficients();
  std::vector<Scalar> quo(rem.size() - db);
  const Scalar inv_lead = 1 / b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    const Scalar t = rem[k] * inv_lead;
    quo[k - db] = t;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= t * b.coeff(j);
  }
  rem.resize(db);
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

/// Monic gcd; gcd(0,0) = 0.
inline UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = r.is_zero() ? std::move(r) : r.monic();
  }
  return a.is_zero() ? a : a.monic();
}

/// Product of (z - root).
inline UniPoly from_roots(std::span<const Scalar> roots) {
  UniPoly p = UniPoly::constant(Scalar(1));
  for (const auto& r : roots) p = p * UniPoly(std::vector<Scalar>{-r, Scalar(1)});
  return p;
}

struct Node {
  Scalar w;
  Scalar v;
};

/// Unique polynomial of degree < nodes.size() through the nodes (Newton form).
inline UniPoly lagrange_interpolate(std::span<const Node> nodes) {
  const std::size_t n = nodes.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (nodes[i].w == nodes[j].w)
        throw error(errc::repeated_node, "repeated abscissa " + to_string(nodes[i].w));
  // divided differences
  std::vector<Scalar> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = nodes[i].v;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i].w - nodes[i - k].w);
      if (i == k) break;
    }
  UniPoly result;
  for (std::size_t k = n; k-- > 0;) {
    result = result * UniPoly(std::vector<Scalar>{-nodes[k].w, Scalar(1)});
    result += UniPoly::constant(dd[k]);
  }
  return result;
}

namespace detail {

inline std::vector<Integer> positive_divisors(Integer n, const Integer& limit) {
  std::vector<Integer> small, large;
  if (n < 0) n = -n;
  if (n > limit) throw error(errc::out_of_range, "coefficient too large for rational-root search");
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

/// All roots with multiplicity when p splits into linear factors over the
/// rationals; nullopt otherwise. Used to recover the coordinate chart.
inline std::optional<std::vector<Scalar>> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw error(errc::precondition, "roots of the zero polynomial");
  std::vector<Scalar> roots;
  UniPoly rest = p;
  // strip zero roots
  while (*rest.degree() > 0 && rest.coeff(std::size_t{0}) == 0) {
    roots.emplace_back(0);
    rest = divmod(rest, UniPoly::z()).quotient;
  }
  const Integer limit("1000000000000");
  while (*rest.degree() > 0) {
    Integer lcm_den = 1;
    for (const auto& c : rest.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ic;
    for (const auto& c : rest.coefficients()) ic.push_back(Integer(c * lcm_den));
    bool found = false;
    for (const auto& q : detail::positive_divisors(ic.back(), limit)) {
      for (const auto& pnum : detail::positive_divisors(ic.front(), limit)) {
        for (int s : {1, -1}) {
          Scalar cand(Integer(pnum * s), q);
          cand.canonicalize();
          if (rest(cand) == 0) {
            roots.push_back(cand);
            rest = divmod(rest, UniPoly(std::vector<Scalar>{-cand, Scalar(1)})).quotient;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return std::nullopt;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

inline std::string to_string(const UniPoly& p, std::string_view var = "z") {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    Scalar mag = abs(c[k]);
    const bool neg = c[k] < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool show = k == 0 || mag != 1;
    if (show) out += mag.get_str();
    if (k > 0) {
      if (show) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

/// Parses sums of terms like "3/2*z^2", "-z", "4", "z^3".
inline UniPoly parse_unipoly(std::string_view text, char var = 'z') {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw error(errc::parse, "empty polynomial");
  UniPoly result;
  std::size_t i = 0;
  while (i < s.size()) {
    int sgn_ = 1;
    if (s[i] == '+' || s[i] == '-') {
      sgn_ = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw error(errc::parse, "expected sign in '" + s + "'");
    }
    std::size_t j = i;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
    Scalar coef(1);
    bool have_coef = j > i;
    if (have_coef) coef = parse_scalar(std::string_view(s).substr(i, j - i));
    i = j;
    std::size_t power = 0;
    if (i < s.size() && s[i] == '*') {
      if (!have_coef) throw error(errc::parse, "dangling '*' in '" + s + "'");
      ++i;
      if (i >= s.size() || s[i] != var) throw error(errc::parse, "expected variable in '" + s + "'");
    }
    if (i < s.size() && s[i] == var) {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) throw error(errc::parse, "missing exponent in '" + s + "'");
        power = std::stoul(s.substr(i, k - i));
        i = k;
      }
    } else if (!have_coef) {
      throw error(errc::parse, "malformed term in '" + s + "'");
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-') throw error(errc::parse, "unexpected character in '" + s + "'");
    result += UniPoly::monomial(coef * sgn_, power);
  }
  return result;
}

}  // namespace zastava
