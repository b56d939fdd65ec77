#pragma once

// Coordinate Poisson brackets on the (w, y) chart, with optional B_i
// (leading coefficients of Q_i) carried as extra coordinates.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zastava/error.hpp"
#include "zastava/matrix.hpp"
#include "zastava/multirat.hpp"
#include "zastava/point.hpp"
#include "zastava/report.hpp"
#include "zastava/root_data.hpp"

namespace zastava {

enum class BracketKind { rational, trigonometric };

inline const char* to_string(BracketKind k) { return k == BracketKind::rational ? "rational" : "trig"; }

inline BracketKind parse_kind(std::string_view s) {
  if (s == "rational" || s == "rat") return BracketKind::rational;
  if (s == "trig" || s == "trigonometric") return BracketKind::trigonometric;
  throw error(errc::parse, "unknown bracket kind: " + std::string(s));
}

namespace detail {
inline bool rat_depends_on(const MultiRat& f, std::size_t v) {
  if (f.numerator().depends_on(v)) return true;
  for (const auto& fac : f.denominator_factors())
    if (fac.poly.depends_on(v)) return true;
  return false;
}
}  // namespace detail

class BracketTable {
 public:
  BracketTable(BracketKind kind, RootDatum datum, std::vector<std::size_t> degrees, bool extended,
               std::vector<std::string> params = {})
      : kind_(kind), datum_(std::move(datum)), cs_(degrees, extended, std::move(params)) {
    if (degrees.size() != datum_.size()) throw error(errc::precondition, "one degree per color required");
    build();
  }

  BracketKind kind() const { return kind_; }
  const RootDatum& datum() const { return datum_; }
  const CoordinateSystem& coords() const { return cs_; }
  std::size_t coordinate_count() const { return cs_.coordinate_count(); }

  /// {x_a, x_b} for coordinates a, b.
  MultiRat rule(std::size_t a, std::size_t b) const {
    if (a == b) return zero();
    auto it = rules_.find({std::min(a, b), std::max(a, b)});
    if (it == rules_.end()) return zero();
    return a < b ? it->second : -it->second;
  }
  const std::map<std::pair<std::size_t, std::size_t>, MultiRat>& nonzero_rules() const { return rules_; }

  MultiRat zero() const { return MultiRat(MultiPoly(cs_.vars(), Scalar(0))); }

  /// Copy with {x_a, x_b} replaced; for experiments and negative controls.
  BracketTable with_rule(std::size_t a, std::size_t b, MultiRat v) const {
    if (a == b || a >= coordinate_count() || b >= coordinate_count()) throw error(errc::precondition, "bad coordinate pair");
    BracketTable t = *this;
    t.rules_.erase({std::min(a, b), std::max(a, b)});
    t.set(a, b, std::move(v));
    return t;
  }

 private:
  void set(std::size_t a, std::size_t b, MultiRat v) {
    if (a > b) {
      std::swap(a, b);
      v = -v;
    }
    if (!v.is_zero()) rules_[{a, b}] = std::move(v);
  }

  void build() {
    const auto& deg = cs_.degrees();
    const bool trig = kind_ == BracketKind::trigonometric;
    for (std::size_t i = 0; i < deg.size(); ++i) {
      const Scalar d = datum_.dcheck(i);
      for (std::size_t r = 0; r < deg[i]; ++r) {
        MultiRat wy = cs_.var(cs_.y(i, r)) * d;
        if (trig) wy *= cs_.var(cs_.w(i, r));
        set(cs_.w(i, r), cs_.y(i, r), wy);
        if (cs_.extended() && trig) set(cs_.B(i), cs_.y(i, r), cs_.var(cs_.B(i)) * cs_.var(cs_.y(i, r)) * Scalar(-d / 2));
      }
    }
    for (std::size_t i = 0; i < deg.size(); ++i)
      for (std::size_t j = i + 1; j < deg.size(); ++j) {
        const Scalar p = datum_.pairing(i, j);
        if (p == 0) continue;
        for (std::size_t r = 0; r < deg[i]; ++r)
          for (std::size_t s = 0; s < deg[j]; ++s) {
            const MultiPoly wi = cs_.poly(cs_.w(i, r)), wj = cs_.poly(cs_.w(j, s));
            MultiPoly num = cs_.poly(cs_.y(i, r)) * cs_.poly(cs_.y(j, s)) * p;
            if (trig) {
              num *= wi + wj;
              set(cs_.y(i, r), cs_.y(j, s), MultiRat(num, (wi - wj) * Scalar(2)));
            } else {
              set(cs_.y(i, r), cs_.y(j, s), MultiRat(num, wi - wj));
            }
          }
      }
  }

  BracketKind kind_;
  RootDatum datum_;
  CoordinateSystem cs_;
  std::map<std::pair<std::size_t, std::size_t>, MultiRat> rules_;
};

/// {f, g} = sum over coordinate pairs of {x_a, x_b} df/dx_a dg/dx_b.
/// Parameter-role variables are constants for the bracket.
inline MultiRat bracket(const BracketTable& t, const MultiRat& f, const MultiRat& g) {
  for (const MultiRat* h : {&f, &g})
    if (h->vars() && !same_varset(h->vars(), t.coords().vars()))
      throw error(errc::precondition, "expression is not over the table's variables");
  const std::size_t n = t.coordinate_count();
  std::vector<std::optional<MultiRat>> df(n), dg(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (detail::rat_depends_on(f, a)) df[a] = f.derivative(a);
    if (detail::rat_depends_on(g, a)) dg[a] = g.derivative(a);
  }
  MultiRat out = t.zero();
  for (const auto& [ab, v] : t.nonzero_rules()) {
    const auto [a, b] = ab;
    if (df[a] && dg[b]) out += v * *df[a] * *dg[b];
    if (df[b] && dg[a]) out -= v * *df[b] * *dg[a];
  }
  return out;
}

inline MultiRat jacobi_check(const BracketTable& t, const MultiRat& f, const MultiRat& g, const MultiRat& h) {
  return bracket(t, f, bracket(t, g, h)) + bracket(t, g, bracket(t, h, f)) + bracket(t, h, bracket(t, f, g));
}

/// Jacobi identity over every triple of coordinates.
inline VerificationReport jacobi_all(const BracketTable& t) {
  VerificationReport rep{"jacobi", {}};
  const std::size_t n = t.coordinate_count();
  std::vector<MultiRat> x;
  for (std::size_t a = 0; a < n; ++a) x.push_back(t.coords().var(a));
  const auto& names = *t.coords().vars();
  std::size_t triples = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        ++triples;
        MultiRat j = jacobi_check(t, x[a], x[b], x[c]);
        if (!j.is_zero()) {
          rep.add("triple " + names.name(a) + "," + names.name(b) + "," + names.name(c), false, j.str());
          return rep;
        }
      }
  rep.add(std::to_string(triples) + " coordinate triples", true);
  return rep;
}

struct SymplecticReport {
  ScalarMatrix bivector;
  ScalarMatrix omega;
  ScalarMatrix product;
  bool pass = false;
};

/// Bivector and symplectic form of the trigonometric structure at a point,
/// each from its own closed form; checks that they are mutually inverse.
inline SymplecticReport symplectic_check_trig(const ZastavaPoint& p) {
  p.require_coords();
  const RootDatum& D = p.datum();
  const BracketTable t(BracketKind::trigonometric, D, p.degrees(), false);
  const CoordinateSystem& cs = t.coords();
  const auto vals = cs.values_at(p);
  const std::size_t n = cs.coordinate_count();
  for (std::size_t a = 0; a < n; ++a)
    if (vals[a] == 0) throw error(errc::precondition, "degenerate point: zero coordinate");
  for (std::size_t i = 0; i < p.rank(); ++i)
    for (std::size_t j = i + 1; j < p.rank(); ++j)
      for (const auto& wi : *p.color(i).w)
        for (const auto& wj : *p.color(j).w)
          if (wi == wj) throw error(errc::precondition, "degenerate point: roots of different colors coincide");

  SymplecticReport rep{ScalarMatrix(n, n), ScalarMatrix(n, n), ScalarMatrix(n, n), false};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rep.bivector(a, b) = t.rule(a, b).evaluate(vals);

  const auto& deg = p.degrees();
  for (std::size_t i = 0; i < deg.size(); ++i)
    for (std::size_t r = 0; r < deg[i]; ++r) {
      const std::size_t w = cs.w(i, r), y = cs.y(i, r);
      const Scalar v = 1 / (D.dcheck(i) * vals[w] * vals[y]);
      rep.omega(y, w) = v;
      rep.omega(w, y) = -v;
    }
  for (std::size_t i = 0; i < deg.size(); ++i)
    for (std::size_t j = 0; j < deg.size(); ++j) {
      if (i == j) continue;
      const Scalar k = D.pairing(i, j) / (2 * D.dcheck(i) * D.dcheck(j));
      for (std::size_t r = 0; r < deg[i]; ++r)
        for (std::size_t s = 0; s < deg[j]; ++s) {
          const Scalar& a = vals[cs.w(i, r)];
          const Scalar& b = vals[cs.w(j, s)];
          rep.omega(cs.w(i, r), cs.w(j, s)) = k * (a + b) / ((a - b) * a * b);
        }
    }
  rep.product = rep.bivector * rep.omega;
  rep.pass = rep.product == ScalarMatrix::identity(n);
  return rep;
}

/// Q_i(z) = B_i prod_r (z - w_{i,r}) over an extended coordinate system.
inline MultiPoly q_generating(const CoordinateSystem& cs, std::size_t i, std::size_t var) {
  MultiPoly q = cs.poly(cs.B(i));
  for (std::size_t r = 0; r < cs.degrees().at(i); ++r) q *= cs.poly(var) - cs.poly(cs.w(i, r));
  return q;
}

/// R_i(z) = B_i sum_r y_{i,r} prod_{s != r} (z - w_{i,s}) / (w_{i,r} - w_{i,s}).
inline MultiRat r_generating(const CoordinateSystem& cs, std::size_t i, std::size_t var) {
  MultiRat sum(MultiPoly(cs.vars(), Scalar(0)));
  for (std::size_t r = 0; r < cs.degrees().at(i); ++r) {
    MultiPoly num = cs.poly(cs.y(i, r));
    for (std::size_t s = 0; s < cs.degrees()[i]; ++s)
      if (s != r) num *= cs.poly(var) - cs.poly(cs.w(i, s));
    sum += MultiRat(num, qprime_at_root(cs, i, r));
  }
  return sum * cs.var(cs.B(i));
}

namespace detail {
inline std::string s_name(std::size_t i, std::size_t j, char at) {
  return "S" + std::to_string(i + 1) + std::to_string(j + 1) + "_" + at;
}
}  // namespace detail

/// Recovers the coordinate brackets from the generating-function brackets:
///  (1) {Q_i(z), Q_j(u)} = 0;
///  (2) {Q_i(z), R_j(u)} matches its closed form at u = w_{j,s};
///  (3) {R_i(z), R_j(u)}, i != j, matches at z = w_{i,r}, u = w_{j,s}, where the
///      S_ij terms (opaque symbols) are killed by Q_i(w_{i,r}) = 0;
///  (4) {R_i(z), R_i(u)} = 0.
inline VerificationReport verify_descent(const RootDatum& datum, const std::vector<std::size_t>& degrees,
                                         BracketKind kind) {
  std::vector<std::string> params{"z", "u"};
  const std::size_t n = degrees.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        params.push_back(detail::s_name(i, j, 'z'));
        params.push_back(detail::s_name(i, j, 'u'));
      }
  const BracketTable t(kind, datum, degrees, true, params);
  const CoordinateSystem& cs = t.coords();
  const std::size_t z = cs.param("z"), u = cs.param("u");
  const bool trig = kind == BracketKind::trigonometric;
  const MultiRat Z = cs.var(z), U = cs.var(u);

  std::vector<MultiRat> Qz, Qu, Rz, Ru;
  for (std::size_t i = 0; i < n; ++i) {
    Qz.emplace_back(q_generating(cs, i, z));
    Qu.emplace_back(q_generating(cs, i, u));
    Rz.push_back(r_generating(cs, i, z));
    Ru.push_back(r_generating(cs, i, u));
  }
  const MultiRat half_sum = (Z + U) / ((Z - U) * Scalar(2));
  const MultiRat inv = MultiRat(Scalar(1)) / (Z - U);

  VerificationReport rep{std::string("descent-") + to_string(kind), {}};
  auto tag = [](const char* what, std::size_t i, std::size_t j) {
    return std::string(what) + " i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1);
  };

  std::string fail;
  for (std::size_t i = 0; i < n && fail.empty(); ++i)
    for (std::size_t j = 0; j < n && fail.empty(); ++j) {
      MultiRat v = bracket(t, Qz[i], Qu[j]);
      if (!v.is_zero()) fail = tag("QQ", i, j) + ": " + v.str();
    }
  rep.add("QQ", fail.empty(), fail);

  fail.clear();
  for (std::size_t i = 0; i < n && fail.empty(); ++i)
    for (std::size_t j = 0; j < n && fail.empty(); ++j) {
      MultiRat rhs = t.zero();
      if (i == j) {
        const Scalar d = datum.dcheck(i);
        rhs = trig ? (half_sum * Qz[i] * Ru[j] - U * inv * Rz[i] * Qu[j]) * Scalar(-d)
                   : (inv * Qz[i] * Ru[j] - inv * Rz[i] * Qu[j]) * Scalar(-d);
      }
      const MultiRat diff = bracket(t, Qz[i], Ru[j]) - rhs;
      for (std::size_t s = 0; s < degrees[j] && fail.empty(); ++s) {
        MultiRat v = diff.substitute(u, cs.poly(cs.w(j, s)));
        if (!v.is_zero()) fail = tag("QR", i, j) + " s=" + std::to_string(s + 1) + ": " + v.str();
      }
    }
  rep.add("QR at u=w_js", fail.empty(), fail);

  fail.clear();
  for (std::size_t i = 0; i < n && fail.empty(); ++i)
    for (std::size_t j = 0; j < n && fail.empty(); ++j) {
      if (i == j) continue;
      const Scalar p = datum.pairing(i, j);
      const Scalar dd = datum.dcheck(i) * datum.dcheck(j);
      const MultiRat Sji_u = cs.var(cs.param(detail::s_name(j, i, 'u')));
      const MultiRat Sij_z = cs.var(cs.param(detail::s_name(i, j, 'z')));
      MultiRat rhs = trig ? half_sum * Rz[i] * Ru[j] * p + Z * inv * Qz[i] * Sji_u * dd + U * inv * Sij_z * Qu[j] * dd
                          : inv * Rz[i] * Ru[j] * p + inv * Qz[i] * Sji_u * dd + inv * Sij_z * Qu[j] * dd;
      const MultiRat diff = bracket(t, Rz[i], Ru[j]) - rhs;
      for (std::size_t r = 0; r < degrees[i] && fail.empty(); ++r) {
        const MultiRat dz = diff.substitute(z, cs.poly(cs.w(i, r)));
        for (std::size_t s = 0; s < degrees[j] && fail.empty(); ++s) {
          MultiRat v = dz.substitute(u, cs.poly(cs.w(j, s)));
          if (!v.is_zero())
            fail = tag("RR", i, j) + " r=" + std::to_string(r + 1) + " s=" + std::to_string(s + 1) + ": " + v.str();
        }
      }
    }
  if (n < 2)
    rep.skip("RR at roots (i!=j)", "single color");
  else
    rep.add("RR at roots (i!=j)", fail.empty(), fail);

  fail.clear();
  for (std::size_t i = 0; i < n && fail.empty(); ++i) {
    MultiRat v = bracket(t, Rz[i], Ru[i]);
    if (!v.is_zero()) fail = tag("RiRi", i, i) + ": " + v.str();
  }
  rep.add("RiRi", fail.empty(), fail);
  return rep;
}

}  // namespace zastava
