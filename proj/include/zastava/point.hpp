#pragma once

// Points of the zastava space in polynomial form (Q_i, R_i) and, when
// available, in root coordinates (w_{i,r}, y_{i,r}) with y = R(w).

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zastava/error.hpp"
#include "zastava/matrix.hpp"
#include "zastava/multirat.hpp"
#include "zastava/root_data.hpp"
#include "zastava/series.hpp"
#include "zastava/structured.hpp"
#include "zastava/unipoly.hpp"

namespace zastava {

enum class Tier { zastava, monopole, trigonometric };

inline const char* to_string(Tier t) {
  switch (t) {
    case Tier::zastava: return "zastava";
    case Tier::monopole: return "monopole";
    case Tier::trigonometric: return "trigonometric";
  }
  return "unknown";
}

struct Color {
  UniPoly Q;
  UniPoly R;
  std::optional<std::vector<Scalar>> w;
  std::optional<std::vector<Scalar>> y;

  std::size_t degree() const { return *Q.degree(); }
  bool has_coords() const { return w.has_value() && y.has_value(); }
};

class ZastavaPoint {
 public:
  /// Builds Q_i = prod (z - w_{i,r}) and R_i by interpolation through (w, y).
  static ZastavaPoint from_coords(RootDatum datum, const std::vector<std::vector<Scalar>>& w,
                                  const std::vector<std::vector<Scalar>>& y, bool require_trigonometric = false) {
    check_rank(datum, w.size());
    if (y.size() != w.size()) throw error(errc::precondition, "w and y have different numbers of colors");
    std::vector<Color> colors;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].size() != y[i].size())
        throw error(errc::precondition, "color " + std::to_string(i + 1) + ": w and y lengths differ");
      std::vector<Node> nodes;
      for (std::size_t r = 0; r < w[i].size(); ++r) {
        if (require_trigonometric && w[i][r] == 0)
          throw error(errc::precondition, "color " + std::to_string(i + 1) + ": zero root in trigonometric chart");
        nodes.push_back({w[i][r], y[i][r]});
      }
      Color c;
      c.R = lagrange_interpolate(nodes);  // throws repeated_node
      c.Q = from_roots(w[i]);
      c.w = w[i];
      c.y = y[i];
      colors.push_back(std::move(c));
    }
    return ZastavaPoint(std::move(datum), std::move(colors));
  }

  /// Polynomial form; coordinates are recovered when every Q_i splits over the
  /// rationals with distinct roots.
  static ZastavaPoint from_polys(RootDatum datum, const std::vector<UniPoly>& Q, const std::vector<UniPoly>& R) {
    check_rank(datum, Q.size());
    if (R.size() != Q.size()) throw error(errc::precondition, "Q and R have different numbers of colors");
    std::vector<Color> colors;
    for (std::size_t i = 0; i < Q.size(); ++i) {
      Color c{Q[i], R[i], std::nullopt, std::nullopt};
      check_color(c, i);
      if (auto roots = rational_roots(Q[i])) {
        bool distinct = true;
        for (std::size_t r = 1; r < roots->size(); ++r) distinct = distinct && (*roots)[r] != (*roots)[r - 1];
        if (distinct) {
          std::vector<Scalar> ys;
          for (const auto& x : *roots) ys.push_back(R[i](x));
          c.w = std::move(*roots);
          c.y = std::move(ys);
        }
      }
      colors.push_back(std::move(c));
    }
    return ZastavaPoint(std::move(datum), std::move(colors));
  }

  /// Assembles a point from both forms without checking that they agree.
  /// Used to load deliberately inconsistent inputs (negative controls).
  static ZastavaPoint unchecked(RootDatum datum, std::vector<Color> colors) {
    for (std::size_t i = 0; i < colors.size(); ++i) check_color(colors[i], i);
    return ZastavaPoint(std::move(datum), std::move(colors));
  }

  const RootDatum& datum() const { return datum_; }
  std::size_t rank() const { return colors_.size(); }
  const std::vector<Color>& colors() const { return colors_; }
  const Color& color(std::size_t i) const {
    if (i >= colors_.size()) throw error(errc::out_of_range, "color index out of range");
    return colors_[i];
  }
  Tier tier() const { return tier_; }
  bool is_sl2() const { return datum_.name() == "A1"; }

  bool has_coords() const {
    for (const auto& c : colors_)
      if (!c.has_coords()) return false;
    return true;
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d;
    for (const auto& c : colors_) d.push_back(c.degree());
    return d;
  }

  /// Problems found when comparing the two forms; empty when consistent.
  std::vector<std::string> consistency_problems() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < colors_.size(); ++i) {
      const Color& c = colors_[i];
      if (!c.w && !c.y) continue;
      const std::string tag = "color " + std::to_string(i + 1) + ": ";
      if (!c.w || !c.y || c.w->size() != c.y->size()) {
        out.push_back(tag + "w and y must both be present with equal lengths");
        continue;
      }
      if (c.w->size() != c.degree()) out.push_back(tag + "number of roots differs from deg Q");
      for (std::size_t r = 0; r < c.w->size(); ++r) {
        if (c.Q((*c.w)[r]) != 0) out.push_back(tag + "Q(w_" + std::to_string(r + 1) + ") != 0");
        if (c.R((*c.w)[r]) != (*c.y)[r])
          out.push_back(tag + "R(w_" + std::to_string(r + 1) + ") = " + to_string(c.R((*c.w)[r])) + " but y_" +
                        std::to_string(r + 1) + " = " + to_string((*c.y)[r]));
        for (std::size_t s = 0; s < r; ++s)
          if ((*c.w)[r] == (*c.w)[s]) out.push_back(tag + "repeated root " + to_string((*c.w)[r]));
      }
    }
    return out;
  }

  void require_coords() const {
    if (!has_coords()) throw error(errc::precondition, "coordinate form absent");
  }

  void require_sl2() const {
    if (!is_sl2()) throw error(errc::unsupported, "operation needs an SL2 (A1) point, got " + datum_.name());
  }

 private:
  ZastavaPoint(RootDatum datum, std::vector<Color> colors) : datum_(std::move(datum)), colors_(std::move(colors)) {
    for (std::size_t i = 0; i < colors_.size(); ++i) check_color(colors_[i], i);
    tier_ = classify();
  }

  static void check_rank(const RootDatum& d, std::size_t n) {
    if (d.affine()) throw error(errc::precondition, "points live over a finite root datum");
    if (d.size() != n)
      throw error(errc::precondition, d.name() + " has " + std::to_string(d.size()) + " colors, got " + std::to_string(n));
  }

  static void check_color(const Color& c, std::size_t i) {
    const std::string tag = "color " + std::to_string(i + 1) + ": ";
    if (!c.Q.is_monic()) throw error(errc::precondition, tag + "Q must be monic");
    if (!c.R.is_zero() && *c.R.degree() >= *c.Q.degree()) throw error(errc::precondition, tag + "deg R must be < deg Q");
  }

  Tier classify() const {
    bool coprime = true, nonzero_at_origin = true;
    for (const auto& c : colors_) {
      if (*gcd(c.Q, c.R).degree() != 0) coprime = false;
      if (c.Q(Scalar(0)) == 0) nonzero_at_origin = false;
    }
    if (!coprime) return Tier::zastava;
    return nonzero_at_origin ? Tier::trigonometric : Tier::monopole;
  }

  RootDatum datum_;
  std::vector<Color> colors_;
  Tier tier_ = Tier::zastava;
};

struct Bezout {
  UniPoly F;
  UniPoly D;
};

/// The unique (F, D) with F monic of degree a, deg D < a and QF - RD = z^{2a}.
inline Bezout bezout_complete(const UniPoly& Q, const UniPoly& R) {
  if (Q.is_zero() || !Q.is_monic() || *Q.degree() < 1) throw error(errc::precondition, "Q must be monic of degree >= 1");
  const std::size_t a = *Q.degree();
  if (!R.is_zero() && *R.degree() >= a) throw error(errc::precondition, "deg R must be < deg Q");
  if (Q(Scalar(0)) == 0) throw error(errc::no_solution, "no Bezout completion: Q(0) = 0");
  if (*gcd(Q, R).degree() != 0) throw error(errc::no_solution, "no Bezout completion: gcd(Q, R) != 1");
  // unknowns f_0..f_{a-1}, d_0..d_{a-1}; equations: coefficients of z^0..z^{2a-1}
  const std::size_t n = 2 * a;
  ScalarMatrix A(n, n);
  std::vector<Scalar> b(n);
  for (std::size_t j = 0; j < a; ++j) {
    for (std::size_t k = 0; k <= a; ++k) A(j + k, j) += Q.coeff(k);
    for (std::size_t k = 0; k < a; ++k) A(j + k, a + j) -= R.coeff(k);
  }
  for (std::size_t k = 0; k < a; ++k) b[a + k] = -Q.coeff(k);
  auto x = solve(A, b);
  if (!x) throw error(errc::no_solution, "no Bezout completion: singular system");
  std::vector<Scalar> f(x->begin(), x->begin() + static_cast<long>(a));
  f.emplace_back(1);
  Bezout out{UniPoly(std::move(f)), UniPoly(std::vector<Scalar>(x->begin() + static_cast<long>(a), x->end()))};
  if (Q * out.F - R * out.D != UniPoly::monomial(Scalar(1), n))
    throw error(errc::invariant, "Bezout residual is nonzero");
  return out;
}

/// Laurent polynomial sum_k c_k z^{low+k}.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long low, std::vector<Scalar> c) : low_(low), c_(std::move(c)) { trim(); }
  /// z^shift * p
  static LaurentPoly from(const UniPoly& p, long shift) { return LaurentPoly(shift, p.coefficients()); }

  bool is_zero() const { return c_.empty(); }
  long low() const { return low_; }
  long high() const { return low_ + static_cast<long>(c_.size()) - 1; }

  Scalar coeff(long e) const {
    if (e < low_ || e > high()) return Scalar(0);
    return c_[static_cast<std::size_t>(e - low_)];
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return LaurentPoly(a.low_ + b.low_, std::move(r));
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, -1); }
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, 1); }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return (a.is_zero() && b.is_zero()) || (a.low_ == b.low_ && a.c_ == b.c_);
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      const long e = low_ + static_cast<long>(k);
      const Scalar mag = abs(c_[k]);
      out += out.empty() ? (c_[k] < 0 ? "-" : "") : (c_[k] < 0 ? " - " : " + ");
      if (e == 0 || mag != 1) out += mag.get_str();
      if (e != 0) {
        if (mag != 1) out += "*";
        out += "z";
        if (e != 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

 private:
  static LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, int s) {
    if (a.is_zero()) return s > 0 ? b : LaurentPoly(b.low_, negated(b.c_));
    if (b.is_zero()) return a;
    const long lo = std::min(a.low_, b.low_), hi = std::max(a.high(), b.high());
    std::vector<Scalar> r(static_cast<std::size_t>(hi - lo + 1));
    for (long e = lo; e <= hi; ++e) r[static_cast<std::size_t>(e - lo)] = a.coeff(e) + s * b.coeff(e);
    return LaurentPoly(lo, std::move(r));
  }

  static std::vector<Scalar> negated(std::vector<Scalar> v) {
    for (auto& x : v) x = -x;
    return v;
  }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    if (k) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
      low_ += static_cast<long>(k);
    }
    if (c_.empty()) low_ = 0;
  }

  long low_ = 0;
  std::vector<Scalar> c_;
};

/// g(Q,R) = z^{-a} [[F, D], [R, Q]].
struct GMatrix {
  UniPoly Q, R, F, D;
  std::size_t a = 0;
  LaurentPoly entry[2][2];

  LaurentPoly det() const { return entry[0][0] * entry[1][1] - entry[0][1] * entry[1][0]; }
};

inline GMatrix g_matrix(const UniPoly& Q, const UniPoly& R) {
  Bezout b = bezout_complete(Q, R);
  GMatrix g;
  g.Q = Q;
  g.R = R;
  g.F = b.F;
  g.D = b.D;
  g.a = *Q.degree();
  const long s = -static_cast<long>(g.a);
  g.entry[0][0] = LaurentPoly::from(b.F, s);
  g.entry[0][1] = LaurentPoly::from(b.D, s);
  g.entry[1][0] = LaurentPoly::from(R, s);
  g.entry[1][1] = LaurentPoly::from(Q, s);
  return g;
}

/// Expansion of R/Q at infinity for an SL2 point, to the requested order.
inline InfSeries point_series(const ZastavaPoint& p, std::size_t n, std::size_t color = 0) {
  const Color& c = p.color(color);
  return series_expand(c.R, c.Q, n);
}

/// The boundary equation for SL2: the full Hankel minor C_a of R/Q.
inline Scalar boundary_equation_sl2(const ZastavaPoint& p) {
  p.require_sl2();
  const std::size_t a = p.color(0).degree();
  return hankel_minor_C(point_series(p, 2 * a + 1), a);
}

inline std::vector<std::vector<Scalar>> factorization_divisor(const ZastavaPoint& p) {
  p.require_coords();
  std::vector<std::vector<Scalar>> out;
  for (const auto& c : p.colors()) out.push_back(*c.w);
  return out;
}

/// eta_i: R_i -> z R_i - r_{i,a_i-1} Q_i, other colors unchanged.
inline ZastavaPoint eta_shift(const ZastavaPoint& p, std::size_t i) {
  if (p.tier() != Tier::trigonometric) throw error(errc::precondition, "eta shift needs a trigonometric point");
  std::vector<Color> colors = p.colors();
  Color& c = colors.at(i);
  const std::size_t a = c.degree();
  const Scalar top = a == 0 ? Scalar(0) : Scalar(c.R.coeff(a - 1));
  c.R = c.R.shifted(1) - c.Q * top;
  if (c.w) {
    std::vector<Scalar> ys;
    for (const auto& w : *c.w) ys.push_back(c.R(w));
    c.y = std::move(ys);
  }
  ZastavaPoint out = ZastavaPoint::unchecked(p.datum(), std::move(colors));
  if (out.tier() != Tier::trigonometric) throw error(errc::invariant, "eta shift left the trigonometric locus");
  return out;
}

/// Variable layout over the coordinates of a point: all w_{i,r}, then all
/// y_{i,r}, then B_i (extended tables), then formal parameters.
class CoordinateSystem {
 public:
  CoordinateSystem(std::vector<std::size_t> degrees, bool extended, std::vector<std::string> params = {})
      : degrees_(std::move(degrees)), extended_(extended) {
    std::vector<std::string> names;
    std::vector<VarSet::Role> roles;
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
      w_offset_.push_back(names.size());
      for (std::size_t r = 0; r < degrees_[i]; ++r) names.push_back("w" + std::to_string(i + 1) + "_" + std::to_string(r + 1));
    }
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
      y_offset_.push_back(names.size());
      for (std::size_t r = 0; r < degrees_[i]; ++r) names.push_back("y" + std::to_string(i + 1) + "_" + std::to_string(r + 1));
    }
    if (extended_) {
      b_offset_ = names.size();
      for (std::size_t i = 0; i < degrees_.size(); ++i) names.push_back("B" + std::to_string(i + 1));
    }
    ncoords_ = names.size();
    roles.assign(ncoords_, VarSet::Role::coordinate);
    for (auto& p : params) {
      names.push_back(p);
      roles.push_back(VarSet::Role::parameter);
    }
    vars_ = std::make_shared<const VarSet>(std::move(names), std::move(roles));
  }

  const VarSetPtr& vars() const { return vars_; }
  const std::vector<std::size_t>& degrees() const { return degrees_; }
  bool extended() const { return extended_; }
  std::size_t coordinate_count() const { return ncoords_; }

  std::size_t w(std::size_t i, std::size_t r) const { return w_offset_.at(i) + check_r(i, r); }
  std::size_t y(std::size_t i, std::size_t r) const { return y_offset_.at(i) + check_r(i, r); }
  std::size_t B(std::size_t i) const {
    if (!extended_ || i >= degrees_.size()) throw error(errc::out_of_range, "no B coordinate for this color");
    return b_offset_ + i;
  }
  std::size_t param(std::string_view name) const { return vars_->index(name); }

  MultiRat var(std::size_t idx) const { return MultiRat::variable(vars_, idx); }
  MultiPoly poly(std::size_t idx) const { return MultiPoly::variable(vars_, idx); }

  /// Evaluation vector for a point (B_i = 1, parameters must be supplied).
  std::vector<Scalar> values_at(const ZastavaPoint& p, const std::vector<Scalar>& param_values = {}) const {
    p.require_coords();
    if (p.degrees() != degrees_) throw error(errc::precondition, "point degrees differ from the coordinate system");
    std::vector<Scalar> v(vars_->size(), Scalar(0));
    for (std::size_t i = 0; i < degrees_.size(); ++i)
      for (std::size_t r = 0; r < degrees_[i]; ++r) {
        v[w(i, r)] = (*p.color(i).w)[r];
        v[y(i, r)] = (*p.color(i).y)[r];
      }
    if (extended_)
      for (std::size_t i = 0; i < degrees_.size(); ++i) v[B(i)] = 1;
    if (param_values.size() != vars_->size() - ncoords_)
      throw error(errc::precondition, "wrong number of parameter values");
    for (std::size_t k = 0; k < param_values.size(); ++k) v[ncoords_ + k] = param_values[k];
    return v;
  }

 private:
  std::size_t check_r(std::size_t i, std::size_t r) const {
    if (r >= degrees_.at(i)) throw error(errc::out_of_range, "root index out of range");
    return r;
  }

  std::vector<std::size_t> degrees_;
  bool extended_;
  std::vector<std::size_t> w_offset_, y_offset_;
  std::size_t b_offset_ = 0, ncoords_ = 0;
  VarSetPtr vars_;
};

/// Q_i'(w_{i,r}) = prod_{s != r} (w_{i,r} - w_{i,s}) as a polynomial in the coordinates.
inline MultiPoly qprime_at_root(const CoordinateSystem& cs, std::size_t i, std::size_t r) {
  MultiPoly p(cs.vars(), Scalar(1));
  for (std::size_t s = 0; s < cs.degrees().at(i); ++s)
    if (s != r) p *= cs.poly(cs.w(i, r)) - cs.poly(cs.w(i, s));
  return p;
}

/// c_j = sum_r y_{i,r} w_{i,r}^j / Q_i'(w_{i,r}) as a rational function of the coordinates.
inline MultiRat series_closed_form(const CoordinateSystem& cs, std::size_t i, std::size_t j) {
  MultiRat sum(MultiPoly(cs.vars(), Scalar(0)));
  for (std::size_t r = 0; r < cs.degrees().at(i); ++r) {
    MultiPoly num = cs.poly(cs.y(i, r)) * cs.poly(cs.w(i, r)).pow(static_cast<unsigned>(j));
    sum += MultiRat(num, qprime_at_root(cs, i, r));
  }
  return sum;
}

inline MultiRat series_closed_form(const ZastavaPoint& p, std::size_t i, std::size_t j) {
  p.require_coords();
  for (std::size_t r = 0; r < p.color(i).w->size(); ++r)
    for (std::size_t s = 0; s < r; ++s)
      if ((*p.color(i).w)[r] == (*p.color(i).w)[s]) throw error(errc::repeated_node, "repeated roots");
  return series_closed_form(CoordinateSystem(p.degrees(), false), i, j);
}

/// Closed-form series coefficients evaluated at the point's coordinates.
inline InfSeries closed_form_series(const ZastavaPoint& p, std::size_t n, std::size_t i = 0) {
  p.require_coords();
  const Color& c = p.color(i);
  std::vector<Scalar> qp(c.w->size(), Scalar(1));
  for (std::size_t r = 0; r < c.w->size(); ++r)
    for (std::size_t s = 0; s < c.w->size(); ++s)
      if (s != r) qp[r] *= (*c.w)[r] - (*c.w)[s];
  std::vector<Scalar> out(n, Scalar(0));
  for (std::size_t r = 0; r < c.w->size(); ++r) {
    if (qp[r] == 0) throw error(errc::repeated_node, "repeated roots");
    Scalar t = (*c.y)[r] / qp[r];
    for (std::size_t j = 0; j < n; ++j) {
      out[j] += t;
      t *= (*c.w)[r];
    }
  }
  return InfSeries(std::move(out));
}

}  // namespace zastava
