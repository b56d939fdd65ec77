#pragma once

// The doubly infinite matrix by which g(Q,R) acts on the semi-infinite wedge
// for SL2, its finite generalized minors, and the comparison of three routes
// to the same numbers: wedge minors, Sylvester sub-resultants, Hankel minors.
//
// Indexing: row 2n-1 carries (F, D) coefficients and row 2n carries (R, Q);
// column 2m-1 pairs with F/R, column 2m with D/Q. With d = n - m the entry is
// the coefficient of index a-d (zero unless 0 <= d <= a), f_a = q_a = 1 and
// d_a = r_a = 0, so the matrix is lower unitriangular and banded.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zastava/error.hpp"
#include "zastava/matrix.hpp"
#include "zastava/point.hpp"
#include "zastava/series.hpp"
#include "zastava/structured.hpp"

namespace zastava {

class WedgeMatrix {
 public:
  /// F and D are only needed on odd rows; without them those rows throw.
  WedgeMatrix(UniPoly Q, UniPoly R, std::optional<Bezout> fd = std::nullopt)
      : Q_(std::move(Q)), R_(std::move(R)), fd_(std::move(fd)) {
    if (Q_.is_zero() || !Q_.is_monic() || *Q_.degree() < 1) throw error(errc::precondition, "wedge matrix needs monic Q");
    a_ = *Q_.degree();
  }

  explicit WedgeMatrix(const GMatrix& g) : WedgeMatrix(g.Q, g.R, Bezout{g.F, g.D}) {}

  std::size_t degree() const { return a_; }
  bool has_fd() const { return fd_.has_value(); }

  Scalar entry(long row, long col) const {
    const long n = floor_half(row + 1), m = floor_half(col + 1);
    const bool odd_row = row != 2 * n, odd_col = col != 2 * m;
    const long d = n - m;
    if (d < 0 || d > static_cast<long>(a_)) return Scalar(0);
    const std::size_t k = a_ - static_cast<std::size_t>(d);
    if (odd_row) {
      if (!fd_) throw error(errc::precondition, "row " + std::to_string(row) + " needs the Bezout completion");
      return odd_col ? Scalar(fd_->F.coeff(k)) : Scalar(fd_->D.coeff(k));
    }
    return odd_col ? Scalar(R_.coeff(k)) : Scalar(Q_.coeff(k));
  }

 private:
  static long floor_half(long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

  UniPoly Q_, R_;
  std::optional<Bezout> fd_;
  std::size_t a_ = 0;
};

struct WedgeWindow {
  long lo = 0, hi = -1;  // rows and columns lo..hi
  ScalarMatrix entries;

  bool contains(long idx) const { return idx >= lo && idx <= hi; }

  const Scalar& at(long row, long col) const {
    if (!contains(row) || !contains(col))
      throw error(errc::out_of_range, "window too small: (" + std::to_string(row) + "," + std::to_string(col) +
                                          ") outside " + std::to_string(lo) + ".." + std::to_string(hi));
    return entries(static_cast<std::size_t>(row - lo), static_cast<std::size_t>(col - lo));
  }
};

inline WedgeWindow wedge_window(const WedgeMatrix& g, long lo, long hi) {
  if (hi < lo) throw error(errc::precondition, "empty wedge window");
  WedgeWindow w;
  w.lo = lo;
  w.hi = hi;
  const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
  w.entries = ScalarMatrix(n, n);
  for (long i = lo; i <= hi; ++i)
    for (long j = lo; j <= hi; ++j) {
      // odd rows need F, D; left zero when absent
      if ((i % 2 != 0) && !g.has_fd()) continue;
      w.entries(static_cast<std::size_t>(i - lo), static_cast<std::size_t>(j - lo)) = g.entry(i, j);
    }
  return w;
}

struct MinorPattern {
  std::vector<long> rows;
  std::vector<long> cols;

  bool square() const { return rows.size() == cols.size(); }
  long lo() const {
    long v = 0;
    bool first = true;
    for (auto x : rows) v = first ? (first = false, x) : std::min(v, x);
    for (auto x : cols) v = std::min(v, x);
    return v;
  }
  long hi() const {
    long v = rows.empty() ? 0 : rows.front();
    for (auto x : rows) v = std::max(v, x);
    for (auto x : cols) v = std::max(v, x);
    return v;
  }
};

/// V_{varpi_1} minor: rows 2r+2, 2r, ..., -2r+2; columns 2, 0, -1, ..., -(2r-1).
inline MinorPattern pattern_v1(std::size_t r) {
  MinorPattern p;
  const long R = static_cast<long>(r);
  for (long x = 2 * R + 2; x >= -2 * R + 2; x -= 2) p.rows.push_back(x);
  p.cols.push_back(2);
  for (long x = 0; x >= -(2 * R - 1); --x) p.cols.push_back(x);
  return p;
}

/// Shorter column list (2, 0, -1, ..., -2r+2); kept as the
/// rejected alternative for pattern resolution.
inline MinorPattern pattern_v1_shifted(std::size_t r) {
  MinorPattern p = pattern_v1(r);
  p.cols.clear();
  const long R = static_cast<long>(r);
  p.cols.push_back(2);
  for (long x = 0; x >= -2 * R + 2; --x) p.cols.push_back(x);
  return p;
}

/// V_{varpi_0} minor: rows 2r, ..., -2r+2; columns 0, -1, ..., -2r+1.
inline MinorPattern pattern_v0(std::size_t r) {
  MinorPattern p;
  const long R = static_cast<long>(r);
  for (long x = 2 * R; x >= -2 * R + 2; x -= 2) p.rows.push_back(x);
  for (long x = 0; x >= -2 * R + 1; --x) p.cols.push_back(x);
  return p;
}

inline Scalar wedge_minor(const WedgeMatrix& g, const MinorPattern& p) {
  if (!p.square())
    throw error(errc::precondition, "minor pattern is not square (" + std::to_string(p.rows.size()) + " rows, " +
                                        std::to_string(p.cols.size()) + " columns)");
  if (p.rows.empty()) return Scalar(1);
  ScalarMatrix m(p.rows.size(), p.cols.size());
  for (std::size_t i = 0; i < p.rows.size(); ++i)
    for (std::size_t j = 0; j < p.cols.size(); ++j) m(i, j) = g.entry(p.rows[i], p.cols[j]);
  return det(m);
}

namespace detail {

inline WedgeMatrix wedge_of(const ZastavaPoint& p) {
  p.require_sl2();
  const Color& c = p.color(0);
  std::optional<Bezout> fd;
  if (p.tier() == Tier::trigonometric) fd = bezout_complete(c.Q, c.R);
  return WedgeMatrix(c.Q, c.R, fd);
}

inline void check_minor_index(const ZastavaPoint& p, std::size_t r) {
  if (r > p.color(0).degree())
    throw error(errc::out_of_range, "minor index " + std::to_string(r) + " exceeds degree " +
                                        std::to_string(p.color(0).degree()));
}

}  // namespace detail

inline Scalar generalized_minor_v1(const ZastavaPoint& p, std::size_t r) {
  detail::check_minor_index(p, r);
  return wedge_minor(detail::wedge_of(p), pattern_v1(r));
}

inline Scalar generalized_minor_v0(const ZastavaPoint& p, std::size_t r) {
  detail::check_minor_index(p, r);
  return wedge_minor(detail::wedge_of(p), pattern_v0(r));
}

/// Which Hankel family and sign each wedge family reproduces.
struct Correspondence {
  char v1_family = 'D';
  char v0_family = 'C';
  bool v0_alternating = true;  // v0 minor r = (-1)^r C_r
  bool v1_alternating = false;  // v1 minor r = D_r
};

/// Frozen table, established by resolve_correspondence on reference points.
inline Correspondence frozen_correspondence() { return {}; }

struct PatternResolution {
  bool square_pattern_selected = false;
  bool shifted_pattern_selected = false;
  std::string note;
  Correspondence found;
};

namespace detail {

// Matches a wedge family against Hankel family h (C or D) for r = 1..a;
// returns the sign rule if consistent (true = alternating, (-1)^r).
inline std::optional<bool> match_family(const std::vector<Scalar>& wedge, const InfSeries& c, char h) {
  bool plain = true, alternating = true;
  for (std::size_t r = 1; r < wedge.size(); ++r) {
    const Scalar H = h == 'C' ? hankel_minor_C(c, r) : hankel_minor_D(c, r);
    plain = plain && wedge[r] == H;
    alternating = alternating && wedge[r] == (r % 2 ? Scalar(-H) : H);
  }
  if (plain) return false;
  if (alternating) return true;
  return std::nullopt;
}

}  // namespace detail

/// Evaluates the candidate column patterns on the reference points
/// (z-2, 3) and (z^2-4z+3, z+1); throws unless exactly one is consistent with
/// the Hankel oracle.
inline PatternResolution resolve_correspondence() {
  const RootDatum A1 = finite_datum('A', 1);
  const std::vector<ZastavaPoint> refs = {
      ZastavaPoint::from_polys(A1, {parse_unipoly("z-2")}, {parse_unipoly("3")}),
      ZastavaPoint::from_polys(A1, {parse_unipoly("z^2-4z+3")}, {parse_unipoly("z+1")}),
  };
  PatternResolution res;
  auto consistent = [&](auto make_pattern, char& family, bool& alternating) {
    std::optional<char> fam;
    std::optional<bool> alt;
    for (const auto& p : refs) {
      const std::size_t a = p.color(0).degree();
      const WedgeMatrix g = detail::wedge_of(p);
      std::vector<Scalar> wedge{Scalar(1)};
      for (std::size_t r = 1; r <= a; ++r) {
        MinorPattern pat = make_pattern(r);
        if (!pat.square()) return false;
        wedge.push_back(wedge_minor(g, pat));
      }
      const InfSeries c = point_series(p, 2 * a + 1);
      std::optional<char> here;
      std::optional<bool> here_alt;
      for (char h : {'C', 'D'}) {
        if (auto m = detail::match_family(wedge, c, h)) {
          if (here) return false;  // ambiguous on this point
          here = h;
          here_alt = m;
        }
      }
      if (!here) return false;
      if (fam && (*fam != *here || *alt != *here_alt)) return false;
      fam = here;
      alt = here_alt;
    }
    family = *fam;
    alternating = *alt;
    return true;
  };
  char fam = 0;
  bool alt = false;
  res.square_pattern_selected = consistent(pattern_v1, fam, alt);
  if (res.square_pattern_selected) {
    res.found.v1_family = fam;
    res.found.v1_alternating = alt;
  }
  char fam2 = 0;
  bool alt2 = false;
  res.shifted_pattern_selected = consistent(pattern_v1_shifted, fam2, alt2);
  if (res.square_pattern_selected == res.shifted_pattern_selected)
    throw error(errc::invariant, "column pattern resolution is not unique");
  if (!res.square_pattern_selected) {
    res.found.v1_family = fam2;
    res.found.v1_alternating = alt2;
  }
  if (!consistent(pattern_v0, fam, alt)) throw error(errc::invariant, "varpi_0 pattern matches no Hankel family");
  res.found.v0_family = fam;
  res.found.v0_alternating = alt;
  res.note = res.square_pattern_selected ? "square column pattern selected; shifted pattern is not square"
                                          : "shifted column pattern selected";
  return res;
}

struct RouteTriple {
  char family = 'C';    // Hankel family
  std::size_t index = 0;  // Hankel index r
  Scalar wedge;
  std::optional<Scalar> subresultant;  // absent for D_a
  std::optional<std::size_t> subresultant_index;
  Scalar hankel;
  bool magnitudes_equal = false;
  int sign_wedge = 0;  // sign of wedge / hankel, 0 if zero
  int sign_sub = 0;    // sign of subresultant / hankel
};

struct CrosscheckReport {
  std::size_t a = 0;
  bool hankel_from_closed_form = false;
  std::vector<RouteTriple> triples;
  bool pass = true;
  std::optional<std::size_t> first_failure;
};

/// Compares, for every feasible index, the wedge minor, the sub-resultant and
/// the Hankel minor. C family: v0 minor r, R_{a-r}, C_r (r = 1..a).
/// D family: v1 minor r, S_{a-r-1}, D_r (r = 1..a; no sub-resultant for r = a).
inline CrosscheckReport crosscheck_three_routes(const ZastavaPoint& p) {
  p.require_sl2();
  const Color& col = p.color(0);
  const std::size_t a = col.degree();
  CrosscheckReport rep;
  rep.a = a;
  InfSeries c;
  if (col.has_coords()) {
    c = closed_form_series(p, 2 * a + 1);
    rep.hankel_from_closed_form = true;
  } else {
    c = point_series(p, 2 * a + 1);
  }
  const WedgeMatrix g = detail::wedge_of(p);
  const Correspondence corr = frozen_correspondence();
  auto sgn_of = [](const Scalar& x, const Scalar& h) { return (x == 0 || h == 0) ? 0 : sgn(x) * sgn(h); };
  for (char fam : {'C', 'D'}) {
    for (std::size_t r = 1; r <= a; ++r) {
      RouteTriple t;
      t.family = fam;
      t.index = r;
      const bool use_v1 = corr.v1_family == fam;
      t.wedge = wedge_minor(g, use_v1 ? pattern_v1(r) : pattern_v0(r));
      if (fam == 'C') {
        t.hankel = hankel_minor_C(c, r);
        t.subresultant_index = a - r;
        t.subresultant = subresultant_odd(col.Q, col.R, a - r);
      } else {
        t.hankel = hankel_minor_D(c, r);
        if (r < a) {
          t.subresultant_index = a - r - 1;
          t.subresultant = subresultant_even(col.Q, col.R, a - r - 1);
        }
      }
      t.magnitudes_equal = abs(t.wedge) == abs(t.hankel) && (!t.subresultant || abs(*t.subresultant) == abs(t.hankel));
      t.sign_wedge = sgn_of(t.wedge, t.hankel);
      if (t.subresultant) t.sign_sub = sgn_of(*t.subresultant, t.hankel);
      if (!t.magnitudes_equal && rep.pass) {
        rep.pass = false;
        rep.first_failure = rep.triples.size();
      }
      rep.triples.push_back(std::move(t));
    }
  }
  return rep;
}

}  // namespace zastava
