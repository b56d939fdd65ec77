// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "zastava/zastava.hpp"

using namespace zastava;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

Outcome from_report(const VerificationReport& r) {
  if (r.passed()) return {true, std::to_string(r.checks.size()) + " checks"};
  const CheckResult* f = r.first_failure();
  return {false, f ? f->id + ": " + f->witness : "failed"};
}

Outcome within(Outcome o, double seconds, double limit) {
  char buf[64];
  std::snprintf(buf, sizeof buf, ", %.2fs (limit %.0fs)", seconds, limit);
  o.detail += buf;
  if (seconds >= limit) o.ok = false;
  return o;
}

// Header, four fields per row, every (strategy, size) cell present once.
Outcome check_csv(const std::string& csv, const std::vector<std::string>& strategies, std::size_t lo, std::size_t hi) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != "strategy,size,bits,wall_time_ns") return {false, "bad header: " + line};
  std::set<std::pair<std::string, std::size_t>> seen;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string x;
    while (std::getline(ls, x, ',')) f.push_back(x);
    if (f.size() != 4) return {false, "row has " + std::to_string(f.size()) + " fields: " + line};
    for (std::size_t k = 1; k < 4; ++k)
      if (f[k].empty() || f[k].find_first_not_of("0123456789") != std::string::npos) return {false, "non-integer field: " + line};
    const std::size_t n = std::stoul(f[1]);
    if (n < lo || n > hi) return {false, "size out of range: " + line};
    if (!seen.insert({f[0], n}).second) return {false, "duplicate row: " + line};
  }
  for (const auto& s : strategies)
    for (std::size_t n = lo; n <= hi; ++n)
      if (!seen.count({s, n})) return {false, "missing " + s + " size " + std::to_string(n)};
  return {true, std::to_string(rows) + " rows"};
}

Rng stream(std::size_t criterion) {
  const std::uint64_t s = kDefaultSeed;
  std::seed_seq sq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32), static_cast<std::uint32_t>(1000 + criterion)};
  return Rng(sq);
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 three-route SL2 minors, 25 points per a in 1..4",
       [] {
         Rng rng = stream(1);
         const auto t0 = std::chrono::steady_clock::now();
         const Outcome o = from_report(suite_sl2hank(rng, 4, 25));
         return within(o, since(t0), 30);
       }},
      {"AC2 Kronecker sub-resultant = Hankel minor, a <= 5, 20 instances",
       [] {
         Rng rng = stream(2);
         return from_report(suite_kronecker(rng, 5, 20));
       }},
      {"AC3 Bezout completion and det g = 1, 100 inputs, a <= 6",
       [] {
         Rng rng = stream(3);
         return from_report(suite_bezout(rng, 6, 100));
       }},
      {"AC4 Jacobi identity, both kinds, A1 a=1,2 and A2 a=(1,1),(2,1)",
       [] {
         const auto t0 = std::chrono::steady_clock::now();
         const Outcome o = from_report(suite_jacobi());
         return within(o, since(t0), 60);
       }},
      {"AC5 bivector * symplectic form = I, 20 points per configuration",
       [] {
         Rng rng = stream(5);
         return from_report(suite_symplectic(rng, 20));
       }},
      {"AC6 descent checks, both kinds, A1 a <= 3 and A2 a=(1,1)", [] { return from_report(suite_descent()); }},
      {"AC7 exchange matrix, skew-symmetry a <= 5, involutive mutation",
       [] { return from_report(suite_exchange(5)); }},
      {"AC8 log-canonical initial seeds a=2,3 with negative control",
       [] {
         Rng rng = stream(8);
         return from_report(suite_cluster(rng, 6));
       }},
      {"AC9 eta shift: deg R < a, divisor, boundary scaling, a <= 4",
       [] {
         Rng rng = stream(9);
         return from_report(suite_eta(rng, 4, 40));
       }},
      {"AC10 gw = w on 50 points, a <= 4, deg K <= 2a",
       [] {
         Rng rng = stream(10);
         return from_report(suite_gw(rng, 4, 50));
       }},
      {"AC11 series closed form = long division, 50 points, a <= 4",
       [] {
         Rng rng = stream(11);
         return from_report(suite_series(rng, 4, 50));
       }},
      {"AC12 determinant preflight (30 matrices up to 8x8) and Hankel CSV 2..10",
       [] {
         Rng rng = stream(12);
         const std::string pf = det_preflight(rng, 30, 8);
         if (!pf.empty()) return Outcome{false, pf};
         const std::vector<DetStrategy> all{DetStrategy::bareiss, DetStrategy::cofactor, DetStrategy::division_free};
         std::vector<std::size_t> sizes;
         for (std::size_t n = 2; n <= 10; ++n) sizes.push_back(n);
         std::ostringstream csv;
         write_csv(csv, run_bench(rng, BenchFamily::hankel, sizes, all, {16, 3}));
         return check_csv(csv.str(), {"bareiss", "cofactor", "division_free"}, 2, 10);
       }},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::printf("%s %s (%s)\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
