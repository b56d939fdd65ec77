#pragma once

// Verification suites behind `zastava verify`. Every suite is deterministic
// given its RNG; the runner derives one RNG per suite from the config seed,
// so sequential and parallel runs give the same report.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <future>
#include <random>
#include <string>
#include <vector>

#include "zastava/cluster.hpp"
#include "zastava/json_io.hpp"
#include "zastava/point.hpp"
#include "zastava/poisson.hpp"
#include "zastava/report.hpp"
#include "zastava/root_data.hpp"
#include "zastava/sampling.hpp"
#include "zastava/sl2_minors.hpp"
#include "zastava/structured.hpp"
#include "zastava/superpotential.hpp"

namespace zastava {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

using Rng = std::mt19937_64;

/// Seed precedence: ZASTAVA_RNG environment variable, then the flag/config value.
inline std::uint64_t resolve_seed(std::uint64_t configured) {
  if (const char* env = std::getenv("ZASTAVA_RNG"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw error(errc::parse, "ZASTAVA_RNG is not an unsigned integer");
    }
  }
  return configured;
}

inline std::string triple_str(const RouteTriple& t) {
  std::string s = std::string(1, t.family) + std::to_string(t.index) + ": wedge=" + to_string(t.wedge);
  if (t.subresultant) s += " sub=" + to_string(*t.subresultant);
  return s + " hankel=" + to_string(t.hankel);
}

template <class F>
CheckResult timed(std::string id, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string witness;
  bool ok = false;
  try {
    ok = body(witness);
  } catch (const error& e) {
    witness = std::string("error: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {std::move(id), ok ? Status::pass : Status::fail, ok ? std::string{} : witness, s};
}

// ---- individual suites ----

inline VerificationReport suite_sl2hank_point(const ZastavaPoint& p, const std::string& name) {
  VerificationReport rep{"sl2hank", {}};
  rep.checks.push_back(timed(name, [&](std::string& w) {
    auto probs = p.consistency_problems();
    auto cr = crosscheck_three_routes(p);
    if (!cr.pass) {
      w = "first disagreeing triple " + triple_str(cr.triples.at(*cr.first_failure));
      if (!probs.empty()) w += " (" + probs.front() + ")";
      return false;
    }
    if (!probs.empty()) {
      w = probs.front();
      return false;
    }
    return true;
  }));
  return rep;
}

inline VerificationReport suite_sl2hank(Rng& rng, std::size_t a_max, std::size_t trials) {
  VerificationReport rep{"sl2hank", {}};
  SignLedger ledger;
  for (std::size_t a = 1; a <= a_max; ++a)
    rep.checks.push_back(timed("a=" + std::to_string(a) + " x" + std::to_string(trials), [&](std::string& w) {
      for (std::size_t t = 0; t < trials; ++t) {
        const ZastavaPoint p = random_sl2_point(rng, a);
        const auto cr = crosscheck_three_routes(p);
        if (!cr.pass) {
          w = triple_str(cr.triples.at(*cr.first_failure));
          return false;
        }
        for (const auto& tr : cr.triples) {
          ledger.observe(std::string("wedge-") + tr.family, a, tr.index, tr.wedge, tr.hankel);
          if (tr.subresultant) ledger.observe(std::string("sub-") + tr.family, a, tr.index, *tr.subresultant, tr.hankel);
        }
      }
      return true;
    }));
  rep.add("per-family sign stability", ledger.all_stable(), "sign flip recorded");
  return rep;
}

template <class R>
UniPoly random_monic(R& rng, std::size_t deg) {
  UniPoly q = UniPoly::monomial(Scalar(1), deg);
  for (std::size_t k = 0; k < deg; ++k) q = q + UniPoly::monomial(random_rational(rng, -9, 9, 3), k);
  return q;
}

template <class R>
UniPoly random_below(R& rng, std::size_t deg) {
  UniPoly r;
  for (std::size_t k = 0; k < deg; ++k) r = r + UniPoly::monomial(random_rational(rng, -9, 9, 3), k);
  return r;
}

/// R_i = +-C_{a-i}, S_i = +-D_{a-i-1} with a stable sign per (a, i).
inline VerificationReport suite_kronecker(Rng& rng, std::size_t a_max, std::size_t trials) {
  VerificationReport rep{"kronecker", {}};
  SignLedger ledger;
  for (std::size_t a = 1; a <= a_max; ++a)
    rep.checks.push_back(timed("a=" + std::to_string(a) + " x" + std::to_string(trials), [&](std::string& w) {
      for (std::size_t t = 0; t < trials; ++t) {
        const UniPoly Q = random_monic(rng, a), R = random_below(rng, a);
        const InfSeries c = series_expand(R, Q, 2 * a + 1);
        for (std::size_t i = 0; i < a; ++i) {
          const Scalar lhs = subresultant_odd(Q, R, i), rhs = hankel_minor_C(c, a - i);
          if (abs(lhs) != abs(rhs) || !ledger.observe("R", a, i, lhs, rhs)) {
            w = "R_" + std::to_string(i) + "=" + to_string(lhs) + " C=" + to_string(rhs) + " Q=" + to_string(Q) + " R=" + to_string(R);
            return false;
          }
        }
        for (std::size_t i = 0; a >= 2 && i + 2 <= a; ++i) {
          const Scalar lhs = subresultant_even(Q, R, i), rhs = hankel_minor_D(c, a - i - 1);
          if (abs(lhs) != abs(rhs) || !ledger.observe("S", a, i, lhs, rhs)) {
            w = "S_" + std::to_string(i) + "=" + to_string(lhs) + " D=" + to_string(rhs) + " Q=" + to_string(Q) + " R=" + to_string(R);
            return false;
          }
        }
      }
      return true;
    }));
  return rep;
}

inline VerificationReport suite_bezout(Rng& rng, std::size_t a_max, std::size_t trials) {
  VerificationReport rep{"bezout", {}};
  rep.checks.push_back(timed("QF - RD = z^2a, det g = 1, x" + std::to_string(trials), [&](std::string& w) {
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t a = 1 + t % a_max;
      const ZastavaPoint p = random_sl2_point(rng, a);
      const Color& c = p.color(0);
      const Bezout b = bezout_complete(c.Q, c.R);
      const UniPoly res = c.Q * b.F - c.R * b.D - UniPoly::monomial(Scalar(1), 2 * a);
      if (!res.is_zero()) {
        w = "residual " + to_string(res) + " for Q=" + to_string(c.Q);
        return false;
      }
      if (g_matrix(c.Q, c.R).det() != LaurentPoly(0, {Scalar(1)})) {
        w = "det g != 1 for Q=" + to_string(c.Q);
        return false;
      }
    }
    return true;
  }));
  return rep;
}

struct Config {
  RootDatum datum;
  std::vector<std::size_t> degrees;
  std::string name() const {
    std::string s = datum.name() + " a=(";
    for (std::size_t k = 0; k < degrees.size(); ++k) s += (k ? "," : "") + std::to_string(degrees[k]);
    return s + ")";
  }
};

inline std::vector<Config> poisson_configs() {
  const RootDatum A1 = finite_datum('A', 1), A2 = finite_datum('A', 2);
  return {{A1, {1}}, {A1, {2}}, {A2, {1, 1}}, {A2, {2, 1}}};
}

inline VerificationReport suite_jacobi(bool extended_too = true) {
  VerificationReport rep{"jacobi", {}};
  for (auto kind : {BracketKind::rational, BracketKind::trigonometric})
    for (const auto& cfg : poisson_configs())
      for (bool ext : {false, true}) {
        if (ext && !extended_too) continue;
        rep.checks.push_back(timed(std::string(to_string(kind)) + " " + cfg.name() + (ext ? " +B" : ""), [&](std::string& w) {
          auto r = jacobi_all(BracketTable(kind, cfg.datum, cfg.degrees, ext));
          if (!r.passed()) w = r.first_failure()->id + ": " + r.first_failure()->witness;
          return r.passed();
        }));
      }
  return rep;
}

inline VerificationReport suite_descent() {
  VerificationReport rep{"descent", {}};
  const RootDatum A1 = finite_datum('A', 1), A2 = finite_datum('A', 2);
  std::vector<Config> cfgs{{A1, {1}}, {A1, {2}}, {A1, {3}}, {A2, {1, 1}}};
  for (auto kind : {BracketKind::rational, BracketKind::trigonometric})
    for (const auto& cfg : cfgs) {
      rep.checks.push_back(timed(std::string(to_string(kind)) + " " + cfg.name(), [&](std::string& w) {
        const VerificationReport r = verify_descent(cfg.datum, cfg.degrees, kind);
        if (!r.passed()) w = r.first_failure()->id + ": " + r.first_failure()->witness;
        return r.passed();
      }));
    }
  return rep;
}

template <class R>
ZastavaPoint random_nondegenerate_point(R& rng, const RootDatum& d, const std::vector<std::size_t>& deg) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ZastavaPoint p = random_point(rng, d, deg);
    bool clash = false;
    for (std::size_t i = 0; i < p.rank(); ++i)
      for (std::size_t j = i + 1; j < p.rank(); ++j)
        for (const auto& a : *p.color(i).w)
          for (const auto& b : *p.color(j).w) clash = clash || a == b;
    if (!clash) return p;
  }
  throw error(errc::sampling_exhausted, "no point with distinct roots across colors");
}

inline VerificationReport suite_symplectic(Rng& rng, std::size_t trials) {
  VerificationReport rep{"symplectic", {}};
  for (const auto& cfg : poisson_configs())
    rep.checks.push_back(timed(cfg.name() + " x" + std::to_string(trials), [&](std::string& w) {
      for (std::size_t t = 0; t < trials; ++t) {
        const ZastavaPoint p = random_nondegenerate_point(rng, cfg.datum, cfg.degrees);
        if (!symplectic_check_trig(p).pass) {
          w = "B*Omega != I at " + point_to_json(p).dump();
          return false;
        }
      }
      return true;
    }));
  return rep;
}

template <class R>
SuperData random_super_data(R& rng, const ZastavaPoint& p, std::size_t max_deg) {
  SuperData d;
  for (std::size_t i = 0; i < p.rank(); ++i) {
    const std::size_t l = std::uniform_int_distribution<std::size_t>(0, max_deg)(rng);
    d.K.push_back(random_monic(rng, l));
  }
  return d;
}

inline VerificationReport suite_gw(Rng& rng, std::size_t a_max, std::size_t trials) {
  VerificationReport rep{"gw", {}};
  rep.checks.push_back(timed("gw = w, x" + std::to_string(trials), [&](std::string& w) {
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t a = 1 + t % a_max;
      const ZastavaPoint p = random_sl2_point(rng, a);
      const SuperData d = random_super_data(rng, p, 2 * a);
      auto r = verify_gw_w(p, d);
      if (!r.passed()) {
        w = r.checks.front().witness + " K=" + to_string(d.K[0]);
        return false;
      }
    }
    return true;
  }));
  return rep;
}

inline VerificationReport suite_gw_point(const ZastavaPoint& p, const std::string& name) {
  VerificationReport rep{"gw", {}};
  if (!p.has_coords()) {
    rep.skip(name, "no coordinates");
    return rep;
  }
  rep.checks.push_back(timed(name, [&](std::string& w) {
    std::size_t top = 0;
    for (auto d : p.degrees()) top = std::max(top, 2 * d);
    for (std::size_t l = 0; l <= top; ++l) {
      SuperData d;
      const UniPoly k = l == 0 ? UniPoly::monomial(Scalar(1), 0) : UniPoly::monomial(Scalar(1), l) + UniPoly::monomial(Scalar(1), 0);
      d.K.assign(p.rank(), k);
      auto r = verify_gw_w(p, d);
      if (!r.passed()) {
        w = r.checks.front().witness;
        return false;
      }
    }
    return true;
  }));
  return rep;
}

inline VerificationReport suite_series(Rng& rng, std::size_t a_max, std::size_t trials) {
  VerificationReport rep{"series", {}};
  rep.checks.push_back(timed("closed form = long division, j <= 2a, x" + std::to_string(trials), [&](std::string& w) {
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t a = 1 + t % a_max;
      const ZastavaPoint p = random_sl2_point(rng, a);
      const CoordinateSystem cs({a}, false);
      const auto vals = cs.values_at(p);
      const InfSeries ref = point_series(p, 2 * a + 1);
      for (std::size_t j = 0; j <= 2 * a; ++j) {
        const Scalar v = series_closed_form(cs, 0, j).evaluate(vals);
        if (v != ref[j]) {
          w = "c_" + std::to_string(j) + ": " + to_string(v) + " vs " + to_string(ref[j]);
          return false;
        }
      }
    }
    return true;
  }));
  return rep;
}

inline VerificationReport suite_eta(Rng& rng, std::size_t a_max, std::size_t trials) {
  VerificationReport rep{"eta", {}};
  rep.checks.push_back(timed("deg R < a, divisor, |F(eta)| = |Q(0)| |F|, x" + std::to_string(trials), [&](std::string& w) {
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t a = 1 + t % a_max;
      const ZastavaPoint p = random_sl2_point(rng, a);
      const ZastavaPoint e = eta_shift(p, 0);
      const UniPoly& R = e.color(0).R;
      if (!R.is_zero() && *R.degree() >= a) {
        w = "deg R = " + std::to_string(*R.degree());
        return false;
      }
      if (factorization_divisor(e) != factorization_divisor(p)) {
        w = "divisor moved for Q=" + to_string(p.color(0).Q);
        return false;
      }
      const Scalar lhs = abs(boundary_equation_sl2(e));
      const Scalar rhs = abs(p.color(0).Q.coeff(std::size_t{0})) * abs(boundary_equation_sl2(p));
      if (lhs != rhs) {
        w = to_string(lhs) + " vs " + to_string(rhs);
        return false;
      }
    }
    return true;
  }));
  return rep;
}

inline WeylWord sl2_translation_word(std::size_t a) {
  WeylWord w;
  for (std::size_t k = 0; k < a; ++k) w.letters.insert(w.letters.end(), {0, 1});
  return w;
}

inline VerificationReport suite_exchange(std::size_t a_max) {
  VerificationReport rep{"exchange", {}};
  const RootDatum aff = affine_datum('A', 1);
  rep.checks.push_back(timed("a=2 block [[0,2],[-2,0]], 4x2", [&](std::string& w) {
    const ExchangeMatrix B = exchange_matrix(sl2_translation_word(2), aff);
    const bool ok = B.rows() == 4 && B.columns().size() == 2 &&
                    B.exchangeable_block() == std::vector<std::vector<int>>{{0, 2}, {-2, 0}};
    if (!ok) w = B.str();
    return ok;
  }));
  rep.checks.push_back(timed("skew-symmetric block, a <= " + std::to_string(a_max), [&](std::string& w) {
    for (std::size_t a = 1; a <= a_max; ++a) {
      const auto blk = exchange_matrix(sl2_translation_word(a), aff).exchangeable_block();
      for (std::size_t i = 0; i < blk.size(); ++i)
        for (std::size_t j = 0; j < blk.size(); ++j)
          if (blk[i][j] != -blk[j][i]) {
            w = "a=" + std::to_string(a) + " entry " + std::to_string(i) + "," + std::to_string(j);
            return false;
          }
    }
    return true;
  }));
  rep.checks.push_back(timed("mutation involutive, a <= " + std::to_string(a_max), [&](std::string& w) {
    for (std::size_t a = 1; a <= a_max; ++a) {
      const ExchangeMatrix B = exchange_matrix(sl2_translation_word(a), aff);
      for (std::size_t k : B.columns())
        if (!(B.mutate(k).mutate(k) == B)) {
          w = "a=" + std::to_string(a) + " k=" + std::to_string(k + 1);
          return false;
        }
      if (a <= 3) {
        const Seed s = initial_seed_sl2(a);
        for (std::size_t k : B.columns()) {
          const Seed t = mutate(mutate(s, k), k);
          for (std::size_t j = 0; j < s.variables.size(); ++j)
            if (!(t.variables[j] == s.variables[j])) {
              w = "seed a=" + std::to_string(a) + " k=" + std::to_string(k + 1);
              return false;
            }
        }
      }
    }
    return true;
  }));
  return rep;
}

inline VerificationReport suite_cluster(Rng& rng, std::size_t trials) {
  VerificationReport rep{"cluster", {}};
  for (std::size_t a : {2, 3})
    rep.checks.push_back(timed("log-canonical a=" + std::to_string(a) + " x" + std::to_string(trials), [&](std::string& w) {
      const Seed s = initial_seed_sl2(a);
      const BracketTable t(BracketKind::trigonometric, finite_datum('A', 1), {a}, false);
      auto r = log_canonicity_check(s, t, trials, rng);
      if (!r.pass) {
        const auto& pr = r.pairs[*r.first_failure];
        w = "pair " + s.labels[pr.a] + "," + s.labels[pr.b] + " values " + to_string(pr.values[0]) + ", " + to_string(pr.values[1]);
      }
      return r.pass;
    }));
  rep.checks.push_back(timed("negative control (C1 + 1) is not log-canonical", [&](std::string& w) {
    Seed s = initial_seed_sl2(2);
    s.variables[0] += MultiRat(Scalar(1));
    const BracketTable t(BracketKind::trigonometric, finite_datum('A', 1), {2}, false);
    const bool failed = !log_canonicity_check(s, t, trials, rng).pass;
    if (!failed) w = "corrupted seed passed";
    return failed;
  }));
  rep.checks.push_back(timed("Laurent after two mutations, a <= 4", [&](std::string& w) {
    for (std::size_t a = 2; a <= 4; ++a) {
      auto r = laurent_check(exchange_matrix(sl2_translation_word(a), affine_datum('A', 1)));
      if (!r.passed()) {
        w = r.first_failure()->id + ": " + r.first_failure()->witness;
        return false;
      }
    }
    return true;
  }));
  return rep;
}

// ---- runner ----

struct VerifyConfig {
  std::string profile = "all";
  std::size_t a = 4;
  std::size_t trials = 10;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> point_names;
  std::vector<ZastavaPoint> points;
  bool parallel = false;
};

inline const std::vector<std::string>& verify_profiles() {
  static const std::vector<std::string> p{"sl2hank", "kronecker", "bezout", "jacobi", "descent", "symplectic",
                                          "gw", "series", "eta", "exchange", "cluster", "all"};
  return p;
}

inline VerificationReport run_verify(const VerifyConfig& cfg) {
  const auto& known = verify_profiles();
  if (std::find(known.begin(), known.end(), cfg.profile) == known.end())
    throw error(errc::precondition, "unknown profile: " + cfg.profile);
  if (cfg.a == 0) throw error(errc::precondition, "a must be positive");
  auto want = [&](const char* p) { return cfg.profile == "all" || cfg.profile == p; };

  struct Task {
    std::function<VerificationReport(Rng&)> run;
  };
  std::vector<Task> tasks;
  const std::size_t a = cfg.a, n = cfg.trials;
  const bool random_suites = cfg.points.empty() || cfg.profile == "all";
  if (want("sl2hank")) {
    for (std::size_t k = 0; k < cfg.points.size(); ++k) {
      const ZastavaPoint& p = cfg.points[k];
      const std::string name = k < cfg.point_names.size() ? cfg.point_names[k] : "point " + std::to_string(k + 1);
      if (!p.is_sl2()) continue;
      tasks.push_back({[&p, name](Rng&) { return suite_sl2hank_point(p, name); }});
    }
    if (random_suites) tasks.push_back({[a, n](Rng& r) { return suite_sl2hank(r, std::min<std::size_t>(a, 4), n); }});
  }
  if (want("kronecker")) tasks.push_back({[a, n](Rng& r) { return suite_kronecker(r, a, n); }});
  if (want("bezout")) tasks.push_back({[a, n](Rng& r) { return suite_bezout(r, a, n); }});
  if (want("jacobi")) tasks.push_back({[](Rng&) { return suite_jacobi(); }});
  if (want("descent")) tasks.push_back({[](Rng&) { return suite_descent(); }});
  if (want("symplectic")) tasks.push_back({[n](Rng& r) { return suite_symplectic(r, n); }});
  if (want("gw")) {
    for (std::size_t k = 0; k < cfg.points.size(); ++k) {
      const ZastavaPoint& p = cfg.points[k];
      const std::string name = k < cfg.point_names.size() ? cfg.point_names[k] : "point " + std::to_string(k + 1);
      tasks.push_back({[&p, name](Rng&) { return suite_gw_point(p, name); }});
    }
    if (random_suites) tasks.push_back({[a, n](Rng& r) { return suite_gw(r, a, n); }});
  }
  if (want("series")) tasks.push_back({[a, n](Rng& r) { return suite_series(r, a, n); }});
  if (want("eta")) tasks.push_back({[a, n](Rng& r) { return suite_eta(r, a, n); }});
  if (want("exchange")) tasks.push_back({[a](Rng&) { return suite_exchange(std::max<std::size_t>(a, 2)); }});
  if (want("cluster")) tasks.push_back({[n](Rng& r) { return suite_cluster(r, std::max<std::size_t>(n, 5)); }});

  std::vector<VerificationReport> parts(tasks.size());
  auto rng_for = [&](std::size_t k) {
    std::seed_seq sq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32), static_cast<std::uint32_t>(k)};
    return Rng(sq);
  };
  if (cfg.parallel) {
    std::vector<std::future<VerificationReport>> fs;
    for (std::size_t k = 0; k < tasks.size(); ++k)
      fs.push_back(std::async(std::launch::async, [&, k] {
        Rng r = rng_for(k);
        return tasks[k].run(r);
      }));
    for (std::size_t k = 0; k < fs.size(); ++k) parts[k] = fs[k].get();
  } else {
    for (std::size_t k = 0; k < tasks.size(); ++k) {
      Rng r = rng_for(k);
      parts[k] = tasks[k].run(r);
    }
  }
  VerificationReport out{cfg.profile, {}};
  for (const auto& p : parts) out.merge(p);
  return out;
}

}  // namespace zastava
