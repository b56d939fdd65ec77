#pragma once

// Restricted superpotential: sum_{i,r} y K_i(w) / Q_i'(w) - log F + pairwise
// log terms, kept symbolic in the logarithms.

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zastava/cluster.hpp"
#include "zastava/error.hpp"
#include "zastava/point.hpp"
#include "zastava/report.hpp"
#include "zastava/root_data.hpp"
#include "zastava/sampling.hpp"
#include "zastava/series.hpp"
#include "zastava/unipoly.hpp"

namespace zastava {

struct SuperData {
  std::vector<UniPoly> K;                 // monic, one per color
  std::vector<Scalar> z;                  // configuration points (may be empty)
  std::vector<std::vector<Scalar>> lambda;  // coweights in the simple-coroot basis

  /// K_i = prod_n (z - z_n)^{<lambda_n, alpha_i>}, <lambda, alpha_i> = sum_j lambda_j C_ji.
  static SuperData from_configuration(const RootDatum& datum, std::vector<Scalar> z, std::vector<std::vector<Scalar>> lambda) {
    if (z.size() != lambda.size()) throw error(errc::precondition, "one coweight per point");
    SuperData d{{}, std::move(z), std::move(lambda)};
    for (std::size_t i = 0; i < datum.size(); ++i) {
      UniPoly k = UniPoly::monomial(Scalar(1), 0);
      for (std::size_t n = 0; n < d.z.size(); ++n) {
        if (d.lambda[n].size() != datum.size()) throw error(errc::precondition, "coweight has wrong rank");
        Scalar e = 0;
        for (std::size_t j = 0; j < datum.size(); ++j) e += d.lambda[n][j] * datum.cartan(j, i);
        if (e < 0 || e.get_den() != 1) throw error(errc::precondition, "coweight is not dominant integral");
        const std::vector<Scalar> root{d.z[n]};
        const UniPoly f = from_roots(root);
        for (long t = 0; t < e.get_num().get_si(); ++t) k = k * f;
      }
      d.K.push_back(k);
    }
    return d;
  }
};

struct LogTerm {
  Scalar coefficient;
  Scalar argument;
};

struct SuperValue {
  Scalar exact_part;
  std::optional<Scalar> boundary;  // F, enters as -log F
  std::vector<LogTerm> log_terms;
};

/// lambda . mu via the invariant form on coroots: sum lambda_i mu_j P_ij / (d_i d_j).
inline Scalar coweight_pairing(const RootDatum& datum, const std::vector<Scalar>& l, const std::vector<Scalar>& m) {
  Scalar s = 0;
  for (std::size_t i = 0; i < datum.size(); ++i)
    for (std::size_t j = 0; j < datum.size(); ++j) s += l.at(i) * m.at(j) * datum.pairing(i, j) / (datum.dcheck(i) * datum.dcheck(j));
  return s;
}

namespace detail {
inline void check_super_data(const ZastavaPoint& p, const SuperData& d) {
  if (d.K.size() != p.rank()) throw error(errc::precondition, "one K per color required");
  for (const auto& k : d.K)
    if (!k.is_monic()) throw error(errc::precondition, "K must be monic");
}
}  // namespace detail

inline Scalar gw_exact_part(const ZastavaPoint& p, const SuperData& d) {
  p.require_coords();
  detail::check_super_data(p, d);
  Scalar s = 0;
  for (std::size_t i = 0; i < p.rank(); ++i) {
    const Color& c = p.color(i);
    const UniPoly dq = c.Q.derivative();
    for (std::size_t r = 0; r < c.w->size(); ++r) {
      const Scalar& w = (*c.w)[r];
      const Scalar qp = dq(w);
      if (qp == 0) throw error(errc::repeated_node, "repeated roots");
      s += (*c.y)[r] * d.K[i](w) / qp;
    }
  }
  return s;
}

inline SuperValue eval_gw(const ZastavaPoint& p, const SuperData& d) {
  SuperValue v{gw_exact_part(p, d), std::nullopt, {}};
  if (p.is_sl2()) v.boundary = boundary_equation_sl2(p);
  for (std::size_t m = 0; m < d.z.size(); ++m)
    for (std::size_t n = m + 1; n < d.z.size(); ++n) {
      if (d.z[m] == d.z[n]) throw error(errc::repeated_node, "configuration points coincide");
      v.log_terms.push_back({coweight_pairing(p.datum(), d.lambda.at(m), d.lambda.at(n)), d.z[m] - d.z[n]});
    }
  return v;
}

/// sum_{i,p} kappa_{i,p} h_{i,p} from the long-division expansion of R_i / Q_i.
inline Scalar w_exact_part(const ZastavaPoint& p, const SuperData& d, std::optional<std::size_t> truncation = std::nullopt) {
  detail::check_super_data(p, d);
  std::size_t need = 0;
  for (const auto& k : d.K) need = std::max(need, *k.degree() + 1);
  const std::size_t n = truncation.value_or(need);
  if (n < need) throw error(errc::precondition, "series truncation too short for deg K");
  Scalar s = 0;
  for (std::size_t i = 0; i < p.rank(); ++i) {
    const InfSeries h = point_series(p, n, i);
    for (std::size_t q = 0; q <= *d.K[i].degree(); ++q) s += d.K[i].coeff(q) * h[q];
  }
  return s;
}

inline VerificationReport verify_gw_w(const ZastavaPoint& p, const SuperData& d, std::optional<std::size_t> truncation = std::nullopt) {
  VerificationReport rep{"gw", {}};
  const Scalar lhs = gw_exact_part(p, d);
  const Scalar rhs = w_exact_part(p, d, truncation);
  rep.add("sum y K(w)/Q'(w) = sum kappa h", lhs == rhs, "lhs=" + to_string(lhs) + " rhs=" + to_string(rhs));
  return rep;
}

/// Principal-branch decimal rendering; the imaginary part is printed as a
/// multiple of pi when a logarithm has a negative argument.
inline std::string render_decimal(const SuperValue& v, int digits = 12) {
  double re = v.exact_part.get_d();
  Scalar pi_multiple = 0;
  auto add_log = [&](const Scalar& coeff, const Scalar& arg) {
    if (arg == 0) throw error(errc::division_by_zero, "logarithm of zero");
    re += coeff.get_d() * std::log(std::fabs(arg.get_d()));
    if (arg < 0) pi_multiple += coeff;
  };
  if (v.boundary) add_log(Scalar(-1), *v.boundary);
  for (const auto& t : v.log_terms) add_log(t.coefficient, t.argument);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", std::clamp(digits, 1, 17), re);
  std::string s = buf;
  if (pi_multiple != 0) s += " + (" + to_string(pi_multiple) + ")*i*pi";
  return s;
}

struct PositivityReport {
  std::size_t samples = 0;
  std::size_t rejected = 0;
  std::size_t exact_positive = 0;
  std::size_t boundary_positive = 0;
  std::size_t boundary_positive_given_c_positive = 0;
  std::size_t c_positive = 0;
};

/// Evidence gathering: positive roots w, values y of either sign, kept only
/// when all initial cluster variables are positive (C_2 = -y_1 y_2 for a = 2,
/// so positive y alone never qualifies). K has nonnegative coefficients.
template <class Rng>
PositivityReport positivity_sample(std::size_t a, const UniPoly& K, std::size_t trials, Rng& rng,
                                   SampleOptions opts = {}) {
  if (!K.is_monic()) throw error(errc::precondition, "K must be monic");
  for (std::size_t q = 0; q <= *K.degree(); ++q)
    if (K.coeff(q) < 0) throw error(errc::precondition, "K must have nonnegative coefficients");
  const Seed seed = initial_seed_sl2(a);
  const CoordinateSystem cs({a}, false);
  const SuperData d{{K}, {}, {}};
  PositivityReport rep;
  std::size_t attempts = 0;
  while (rep.samples < trials) {
    if (++attempts > opts.max_attempts) throw error(errc::sampling_exhausted, "no positive cluster points found");
    SampleOptions wopt = opts;
    wopt.positive = true;
    SampleOptions yopt = opts;
    yopt.positive = false;
    std::vector<Scalar> ys;
    for (std::size_t r = 0; r < a; ++r) ys.push_back(nonzero_rational(rng, yopt));
    ZastavaPoint p = ZastavaPoint::from_coords(finite_datum('A', 1), {distinct_rationals(rng, a, wopt)}, {ys});
    const auto vals = cs.values_at(p);
    bool all_positive = true;
    for (const auto& x : seed.variables) all_positive = all_positive && x.evaluate(vals) > 0;
    if (!all_positive) {
      ++rep.rejected;
      continue;
    }
    ++rep.samples;
    if (gw_exact_part(p, d) > 0) ++rep.exact_positive;
    const bool bpos = boundary_equation_sl2(p) > 0;
    if (bpos) ++rep.boundary_positive;
    bool cpos = true;
    for (std::size_t k = 0; k < a; ++k) cpos = cpos && seed.variables[2 * k].evaluate(vals) > 0;
    if (cpos) {
      ++rep.c_positive;
      if (bpos) ++rep.boundary_positive_given_c_positive;
    }
  }
  return rep;
}

}  // namespace zastava
