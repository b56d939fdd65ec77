#pragma once

// Determinant timing on structured matrices. Values are cross-checked across
// strategies before anything is timed.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "zastava/error.hpp"
#include "zastava/matrix.hpp"
#include "zastava/structured.hpp"
#include "zastava/unipoly.hpp"

namespace zastava {

enum class BenchFamily { hankel, sylvester };

inline BenchFamily parse_family(std::string_view s) {
  if (s == "hankel") return BenchFamily::hankel;
  if (s == "sylvester") return BenchFamily::sylvester;
  throw error(errc::parse, "unknown bench family: " + std::string(s));
}

struct BenchRow {
  DetStrategy strategy;
  std::size_t size;
  std::size_t bits;
  std::int64_t wall_time_ns;
};

/// Largest numerator or denominator bit length among the entries.
inline std::size_t entry_bits(const ScalarMatrix& m) {
  std::size_t b = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& x = m(i, j);
      b = std::max({b, mpz_sizeinbase(x.get_num_mpz_t(), 2), mpz_sizeinbase(x.get_den_mpz_t(), 2)});
    }
  return b;
}

/// Hankel family: size n matrix of random series coefficients. Sylvester
/// family: size n is the degree a, giving a (2a-1)x(2a-1) matrix.
template <class Rng>
ScalarMatrix bench_instance(Rng& rng, BenchFamily f, std::size_t n) {
  if (f == BenchFamily::hankel) {
    std::vector<Scalar> c;
    for (std::size_t k = 0; k < 2 * n; ++k) c.push_back(random_rational(rng, -9, 9, 4));
    return hankel_matrix(InfSeries(std::move(c)), n);
  }
  UniPoly Q = UniPoly::monomial(Scalar(1), n), R;
  for (std::size_t k = 0; k < n; ++k) {
    Q = Q + UniPoly::monomial(random_rational(rng, -9, 9, 4), k);
    R = R + UniPoly::monomial(random_rational(rng, -9, 9, 4), k);
  }
  return sylvester_matrix(Q, R);
}

template <class Rng>
ScalarMatrix random_matrix(Rng& rng, std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng, -9, 9, 4);
  return m;
}

/// All strategies agree on `count` random matrices of sizes 1..max_size.
/// Returns an empty string on success, otherwise a description of the mismatch.
template <class Rng>
std::string det_preflight(Rng& rng, std::size_t count, std::size_t max_size,
                          const std::vector<DetStrategy>& strategies = {DetStrategy::bareiss, DetStrategy::cofactor,
                                                                        DetStrategy::division_free}) {
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = 1 + k % max_size;
    const ScalarMatrix m = random_matrix(rng, n);
    const Scalar ref = det(m, strategies.front());
    for (auto s : strategies)
      if (det(m, s) != ref)
        return std::string(to_string(s)) + " disagrees with " + to_string(strategies.front()) + " at size " + std::to_string(n);
  }
  return {};
}

struct BenchOptions {
  std::size_t cap = 16;
  std::size_t repeats = 5;
};

template <class Rng>
std::vector<BenchRow> run_bench(Rng& rng, BenchFamily family, const std::vector<std::size_t>& sizes,
                                const std::vector<DetStrategy>& strategies, const BenchOptions& o = {}) {
  if (strategies.empty()) throw error(errc::precondition, "no strategies");
  for (std::size_t n : sizes) {
    if (n == 0) throw error(errc::precondition, "sizes must be positive");
    if (n > o.cap) throw error(errc::out_of_range, "size " + std::to_string(n) + " exceeds cap " + std::to_string(o.cap));
  }
  const std::string pf = det_preflight(rng, 10, std::min<std::size_t>(o.cap, 6), strategies);
  if (!pf.empty()) throw error(errc::invariant, "preflight: " + pf);

  std::vector<BenchRow> rows;
  for (std::size_t n : sizes) {
    const ScalarMatrix m = bench_instance(rng, family, n);
    const Scalar ref = det(m, strategies.front());
    for (auto s : strategies)
      if (det(m, s) != ref) throw error(errc::invariant, std::string("strategies disagree: ") + to_string(s));
    const std::size_t bits = entry_bits(m);
    for (auto s : strategies) {
      std::vector<std::int64_t> t;
      for (std::size_t r = 0; r < std::max<std::size_t>(o.repeats, 1); ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        const Scalar v = det(m, s);
        const auto t1 = std::chrono::steady_clock::now();
        if (v != ref) throw error(errc::invariant, "nondeterministic determinant");
        t.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
      }
      std::nth_element(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(t.size() / 2), t.end());
      rows.push_back({s, n, bits, t[t.size() / 2]});
    }
  }
  return rows;
}

inline void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << "strategy,size,bits,wall_time_ns\n";
  for (const auto& r : rows) os << to_string(r.strategy) << ',' << r.size << ',' << r.bits << ',' << r.wall_time_ns << '\n';
}

}  // namespace zastava
