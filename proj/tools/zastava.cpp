// Command-line front end. Exit status: 0 success, 1 a check failed,
// 2 bad input or internal error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zastava/zastava.hpp"

using namespace zastava;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<Scalar> parse_scalars(const std::string& s) {
  std::vector<Scalar> out;
  for (const auto& t : split(s, ',')) out.push_back(parse_scalar(t));
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
  std::vector<std::size_t> out;
  for (const auto& t : split(s, ',')) {
    const auto dots = t.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoul(t));
      } else {
        const std::size_t lo = std::stoul(t.substr(0, dots)), hi = std::stoul(t.substr(dots + 2));
        for (std::size_t k = lo; k <= hi; ++k) out.push_back(k);
      }
    } catch (const std::logic_error&) {
      throw error(errc::parse, "bad size list '" + s + "'");
    }
  }
  return out;
}

void print_report(const VerificationReport& r, std::ostream& os) {
  for (const auto& c : r.checks) {
    os << (c.status == Status::pass ? "PASS " : c.status == Status::fail ? "FAIL " : "SKIP ") << c.id;
    if (!c.witness.empty()) os << "  [" << c.witness << "]";
    os << '\n';
  }
  std::size_t failed = 0;
  for (const auto& c : r.checks) failed += c.status == Status::fail;
  os << r.suite << ": " << r.checks.size() << " checks, " << failed << " failed\n";
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw error(errc::precondition, "cannot write " + path);
  out << j.dump(2) << '\n';
}

int finish(const VerificationReport& r, const std::string& report_path, bool timing) {
  print_report(r, std::cout);
  if (!report_path.empty()) write_json(report_path, report_to_json(r, timing));
  return r.passed() ? 0 : 1;
}

// ---- verify ----

struct VerifyArgs {
  std::string profile;
  std::size_t a = 0, trials = 0;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> points;
  bool parallel = false, no_timing = false;
  std::string config, report;
};

int run_verify_cmd(const VerifyArgs& args) {
  VerifyConfig cfg;
  std::vector<std::string> point_files;
  if (!args.config.empty()) {
    const json j = read_json_file(args.config);
    try {
      if (j.contains("profile")) cfg.profile = j["profile"].get<std::string>();
      if (j.contains("a")) cfg.a = j["a"].get<std::size_t>();
      if (j.contains("trials")) cfg.trials = j["trials"].get<std::size_t>();
      if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
      if (j.contains("parallel")) cfg.parallel = j["parallel"].get<bool>();
      if (j.contains("points")) point_files = j["points"].get<std::vector<std::string>>();
    } catch (const json::exception& e) {
      throw error(errc::parse, args.config + ": " + e.what());
    }
  }
  if (!args.profile.empty()) cfg.profile = args.profile;
  if (args.a) cfg.a = args.a;
  if (args.trials) cfg.trials = args.trials;
  if (args.seed) cfg.seed = *args.seed;
  if (args.parallel) cfg.parallel = true;
  point_files.insert(point_files.end(), args.points.begin(), args.points.end());
  cfg.seed = resolve_seed(cfg.seed);
  for (const auto& f : point_files) {
    cfg.points.push_back(load_point(f));
    cfg.point_names.push_back(f);
  }
  std::cout << "profile " << cfg.profile << ", a <= " << cfg.a << ", trials " << cfg.trials << ", seed " << cfg.seed
            << (cfg.parallel ? ", parallel" : "") << '\n';
  return finish(run_verify(cfg), args.report, !args.no_timing);
}

// ---- minors ----

int run_minors_cmd(const std::string& point_file, const std::string& report) {
  const ZastavaPoint p = load_point(point_file);
  const CrosscheckReport cr = crosscheck_three_routes(p);
  std::cout << "family,index,wedge,subresultant,hankel,sign_wedge,sign_sub,agree\n";
  json rows = json::array();
  for (const auto& t : cr.triples) {
    const std::string sub = t.subresultant ? to_string(*t.subresultant) : "-";
    std::cout << t.family << ',' << t.index << ',' << to_string(t.wedge) << ',' << sub << ',' << to_string(t.hankel) << ','
              << t.sign_wedge << ',' << t.sign_sub << ',' << (t.magnitudes_equal ? "yes" : "no") << '\n';
    json o;
    o["family"] = std::string(1, t.family);
    o["index"] = t.index;
    o["wedge"] = to_string(t.wedge);
    if (t.subresultant) o["subresultant"] = sub;
    o["hankel"] = to_string(t.hankel);
    o["sign_wedge"] = t.sign_wedge;
    o["sign_sub"] = t.sign_sub;
    o["agree"] = t.magnitudes_equal;
    rows.push_back(o);
  }
  const auto probs = p.consistency_problems();
  for (const auto& s : probs) std::cout << "inconsistent: " << s << '\n';
  const bool ok = cr.pass && probs.empty();
  std::cout << (ok ? "PASS" : "FAIL") << " three routes agree up to sign\n";
  if (!report.empty()) {
    json j;
    j["point"] = point_to_json(p);
    j["triples"] = rows;
    j["status"] = ok ? "pass" : "fail";
    write_json(report, j);
  }
  return ok ? 0 : 1;
}

// ---- poisson ----

struct PoissonArgs {
  std::string kind = "trig", type = "A1", degrees = "1", check = "jacobi", point, report;
  bool extended = false;
  std::size_t trials = 10;
  std::uint64_t seed = kDefaultSeed;
};

int run_poisson_cmd(const PoissonArgs& args) {
  const BracketKind kind = parse_kind(args.kind);
  const RootDatum datum = parse_datum(args.type);
  const std::vector<std::size_t> degrees = parse_sizes(args.degrees);
  if (args.check == "jacobi") {
    const BracketTable t(kind, datum, degrees, args.extended);
    std::cout << t.nonzero_rules().size() << " nonzero coordinate brackets\n";
    return finish(jacobi_all(t), args.report, true);
  }
  if (args.check == "descent") return finish(verify_descent(datum, degrees, kind), args.report, true);
  if (args.check == "symplectic") {
    if (kind != BracketKind::trigonometric) throw error(errc::unsupported, "symplectic check is for the trigonometric bracket");
    VerificationReport rep{"symplectic", {}};
    std::vector<ZastavaPoint> pts;
    if (!args.point.empty()) {
      pts.push_back(load_point(args.point));
    } else {
      Rng rng(resolve_seed(args.seed));
      for (std::size_t k = 0; k < args.trials; ++k) pts.push_back(random_nondegenerate_point(rng, datum, degrees));
    }
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const SymplecticReport s = symplectic_check_trig(pts[k]);
      rep.add("point " + std::to_string(k + 1) + ": bivector * omega = I", s.pass,
              s.pass ? "" : point_to_json(pts[k]).dump());
    }
    return finish(rep, args.report, true);
  }
  throw error(errc::parse, "unknown check '" + args.check + "' (jacobi, descent, symplectic)");
}

// ---- cluster ----

struct ClusterArgs {
  std::size_t a = 0;
  std::string point, mutations, check;
  std::size_t trials = 5;
  std::uint64_t seed = kDefaultSeed;
};

int run_cluster_cmd(const ClusterArgs& args) {
  std::optional<ZastavaPoint> p;
  Seed seed;
  if (!args.point.empty()) {
    p = load_point(args.point);
    seed = initial_seed_sl2(*p);
  } else {
    if (args.a == 0) throw error(errc::precondition, "give --a or --point");
    seed = initial_seed_sl2(args.a);
  }
  const std::size_t a = seed.variables.size() / 2;
  for (const auto& t : split(args.mutations, ',')) {
    std::size_t k = 0;
    try {
      k = std::stoul(t);
    } catch (const std::logic_error&) {
      throw error(errc::parse, "bad mutation index '" + t + "'");
    }
    if (k == 0 || k > seed.variables.size()) throw error(errc::out_of_range, "mutation index " + t + " out of range");
    seed = mutate(seed, k - 1);
  }
  std::cout << "exchange matrix (rows: positions 1.." << seed.variables.size() << ", columns: mutable)\n"
            << seed.matrix.str() << '\n';
  const CoordinateSystem cs({a}, false);
  std::vector<Scalar> vals;
  if (p) vals = cs.values_at(*p);
  for (std::size_t k = 0; k < seed.variables.size(); ++k) {
    std::cout << k + 1 << ' ' << seed.labels[k] << (seed.frozen(k) ? " (frozen)" : "") << " = ";
    if (p) std::cout << to_string(seed.variables[k].evaluate(vals));
    else std::cout << seed.variables[k].reduced().str();
    std::cout << '\n';
  }
  if (args.check.empty()) return 0;
  if (args.check != "log-canonical") throw error(errc::parse, "unknown check '" + args.check + "' (log-canonical)");
  Rng rng(resolve_seed(args.seed));
  const BracketTable t(BracketKind::trigonometric, finite_datum('A', 1), {a}, false);
  const LogCanonicityReport r = log_canonicity_check(seed, t, args.trials, rng);
  for (const auto& pr : r.pairs) {
    std::cout << seed.labels[pr.a] << ',' << seed.labels[pr.b] << ": ";
    if (pr.constant()) std::cout << to_string(pr.values.front());
    else std::cout << "varies (" << to_string(pr.values[0]) << " vs " << to_string(pr.values[1]) << ")";
    std::cout << '\n';
  }
  std::cout << (r.pass ? "PASS" : "FAIL") << " log-canonical over " << r.trials << " points\n";
  return r.pass ? 0 : 1;
}

// ---- superpotential ----

struct SuperArgs {
  std::string point;
  std::vector<std::string> K, nodes;
  bool verify = false;
  int digits = 12;
  std::size_t truncation = 0;
};

int run_super_cmd(const SuperArgs& args) {
  const ZastavaPoint p = load_point(args.point);
  SuperData d;
  if (!args.nodes.empty()) {
    if (!args.K.empty()) throw error(errc::precondition, "give either --K or --node, not both");
    std::vector<Scalar> z;
    std::vector<std::vector<Scalar>> lambda;
    for (const auto& n : args.nodes) {
      const auto colon = n.find(':');
      if (colon == std::string::npos) throw error(errc::parse, "node must look like z:l1,l2,...");
      z.push_back(parse_scalar(n.substr(0, colon)));
      lambda.push_back(parse_scalars(n.substr(colon + 1)));
    }
    d = SuperData::from_configuration(p.datum(), z, lambda);
  } else {
    if (args.K.empty()) throw error(errc::precondition, "give --K once per color or --node");
    for (const auto& k : args.K) d.K.push_back(parse_unipoly(k));
  }
  for (std::size_t i = 0; i < d.K.size(); ++i) std::cout << "K" << i + 1 << " = " << to_string(d.K[i]) << '\n';
  const SuperValue v = eval_gw(p, d);
  std::cout << "exact part " << to_string(v.exact_part) << '\n';
  if (v.boundary) std::cout << "boundary F " << to_string(*v.boundary) << "  (-log F)\n";
  for (const auto& t : v.log_terms)
    std::cout << "log term " << to_string(t.coefficient) << " * log(" << to_string(t.argument) << ")\n";
  std::cout << "value " << render_decimal(v, args.digits) << '\n';
  if (!args.verify) return 0;
  const VerificationReport r =
      args.truncation ? verify_gw_w(p, d, args.truncation) : verify_gw_w(p, d);
  print_report(r, std::cout);
  return r.passed() ? 0 : 1;
}

// ---- bench ----

struct BenchArgs {
  std::string family = "hankel", sizes = "2..10", strategies = "bareiss,cofactor,division_free", out;
  std::size_t reps = 5, cap = 16;
  std::uint64_t seed = kDefaultSeed;
};

int run_bench_cmd(const BenchArgs& args) {
  std::vector<DetStrategy> strategies;
  for (const auto& s : split(args.strategies, ',')) strategies.push_back(parse_strategy(s));
  Rng rng(resolve_seed(args.seed));
  const auto rows = run_bench(rng, parse_family(args.family), parse_sizes(args.sizes), strategies, {args.cap, args.reps});
  if (args.out.empty()) {
    write_csv(std::cout, rows);
  } else {
    std::ofstream f(args.out);
    if (!f) throw error(errc::precondition, "cannot write " + args.out);
    write_csv(f, rows);
  }
  return 0;
}

// ---- point ----

struct PointArgs {
  std::string type = "A1", check, out;
  std::vector<std::string> w, y, Q, R;
};

int run_point_cmd(const PointArgs& args) {
  if (!args.check.empty()) {
    const ZastavaPoint p = load_point(args.check);
    const auto probs = p.consistency_problems();
    std::cout << "datum " << p.datum().name() << ", tier " << to_string(p.tier()) << '\n';
    for (const auto& s : probs) std::cout << "inconsistent: " << s << '\n';
    std::cout << (probs.empty() ? "PASS" : "FAIL") << " point is consistent\n";
    return probs.empty() ? 0 : 1;
  }
  const RootDatum datum = parse_datum(args.type);
  ZastavaPoint p = [&] {
    if (!args.w.empty() || !args.y.empty()) {
      if (!args.Q.empty() || !args.R.empty()) throw error(errc::precondition, "give coordinates or polynomials, not both");
      std::vector<std::vector<Scalar>> w, y;
      for (const auto& s : args.w) w.push_back(parse_scalars(s));
      for (const auto& s : args.y) y.push_back(parse_scalars(s));
      return ZastavaPoint::from_coords(datum, w, y);
    }
    std::vector<UniPoly> Q, R;
    for (const auto& s : args.Q) Q.push_back(parse_unipoly(s));
    for (const auto& s : args.R) R.push_back(parse_unipoly(s));
    return ZastavaPoint::from_polys(datum, Q, R);
  }();
  const json j = point_to_json(p);
  if (args.out.empty()) std::cout << j.dump(2) << '\n';
  else write_json(args.out, j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on Zastava spaces: minors, Poisson brackets, cluster seeds, superpotentials"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--profile", va.profile, "Suite to run (" + [] {
    std::string s;
    for (const auto& p : verify_profiles()) s += (s.empty() ? "" : ", ") + p;
    return s;
  }() + ")");
  verify->add_option("--a", va.a, "Largest degree a");
  verify->add_option("--trials", va.trials, "Random instances per degree");
  verify->add_option("--rng", va.seed, "Seed (ZASTAVA_RNG overrides)");
  verify->add_option("--point", va.points, "Point file (repeatable)")->check(CLI::ExistingFile);
  verify->add_flag("--parallel", va.parallel, "Run suites concurrently");
  verify->add_option("--config", va.config, "JSON with profile, a, trials, seed, parallel, points")->check(CLI::ExistingFile);
  verify->add_option("--report", va.report, "Write a JSON report");
  verify->add_flag("--no-timing", va.no_timing, "Omit timings from the JSON report");

  std::string minors_point, minors_report;
  auto* minors = app.add_subcommand("minors", "Wedge minors, sub-resultants and Hankel minors of an SL2 point");
  minors->add_option("--point", minors_point, "Point file")->required()->check(CLI::ExistingFile);
  minors->add_option("--report", minors_report, "Write a JSON report");

  PoissonArgs pa;
  auto* poisson = app.add_subcommand("poisson", "Poisson bracket checks");
  poisson->add_option("--kind", pa.kind, "trig or rational");
  poisson->add_option("--type", pa.type, "Root datum, e.g. A2");
  poisson->add_option("--degrees", pa.degrees, "Degrees per color, e.g. 1,2");
  poisson->add_flag("--extended", pa.extended, "Include the B_i coordinates");
  poisson->add_option("--check", pa.check, "jacobi, descent or symplectic");
  poisson->add_option("--point", pa.point, "Point for the symplectic check")->check(CLI::ExistingFile);
  poisson->add_option("--trials", pa.trials, "Random points for the symplectic check");
  poisson->add_option("--rng", pa.seed, "Seed");
  poisson->add_option("--report", pa.report, "Write a JSON report");

  ClusterArgs ca;
  auto* cluster = app.add_subcommand("cluster", "Initial SL2 seed, mutations, log-canonicity");
  cluster->add_option("--a", ca.a, "Degree");
  cluster->add_option("--point", ca.point, "Evaluate at this point")->check(CLI::ExistingFile);
  cluster->add_option("--mutations", ca.mutations, "Comma-separated 1-based positions");
  cluster->add_option("--check", ca.check, "log-canonical");
  cluster->add_option("--trials", ca.trials, "Sample points for the check");
  cluster->add_option("--rng", ca.seed, "Seed");

  SuperArgs sa;
  auto* super = app.add_subcommand("super", "Evaluate the restricted superpotential at a point");
  super->add_option("--point", sa.point, "Point file")->required()->check(CLI::ExistingFile);
  super->add_option("--K", sa.K, "Monic K_i, once per color");
  super->add_option("--node", sa.nodes, "Configuration point z:lambda_1,...,lambda_n (repeatable)");
  super->add_flag("--verify", sa.verify, "Compare against the series expansion");
  super->add_option("--digits", sa.digits, "Significant digits");
  super->add_option("--truncation", sa.truncation, "Series truncation order");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Determinant timings as CSV");
  bench->add_option("--family", ba.family, "hankel or sylvester");
  bench->add_option("--sizes", ba.sizes, "Sizes, e.g. 2..10 or 3,5,7");
  bench->add_option("--strategies", ba.strategies, "bareiss,cofactor,division_free");
  bench->add_option("--reps", ba.reps, "Repetitions per cell (median reported)");
  bench->add_option("--cap", ba.cap, "Largest allowed size");
  bench->add_option("--rng", ba.seed, "Seed");
  bench->add_option("--out", ba.out, "CSV file (default stdout)");

  PointArgs pt;
  auto* point = app.add_subcommand("point", "Build or validate a point file");
  point->add_option("--type", pt.type, "Root datum");
  point->add_option("--w", pt.w, "Roots of one color, comma-separated (repeat per color)");
  point->add_option("--y", pt.y, "Values of one color (repeat per color)");
  point->add_option("--Q", pt.Q, "Q_i (repeat per color)");
  point->add_option("--R", pt.R, "R_i (repeat per color)");
  point->add_option("--check", pt.check, "Validate an existing file")->check(CLI::ExistingFile);
  point->add_option("--out", pt.out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return run_verify_cmd(va);
    if (*minors) return run_minors_cmd(minors_point, minors_report);
    if (*poisson) return run_poisson_cmd(pa);
    if (*cluster) return run_cluster_cmd(ca);
    if (*super) return run_super_cmd(sa);
    if (*bench) return run_bench_cmd(ba);
    if (*point) return run_point_cmd(pt);
  } catch (const zastava::error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
