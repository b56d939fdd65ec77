#pragma once

// Exchange matrices from reduced words, seeds, mutation, and
// log-canonicity sampling against the trigonometric bracket.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "zastava/error.hpp"
#include "zastava/matrix.hpp"
#include "zastava/multirat.hpp"
#include "zastava/point.hpp"
#include "zastava/poisson.hpp"
#include "zastava/report.hpp"
#include "zastava/root_data.hpp"
#include "zastava/sampling.hpp"

namespace zastava {

/// Rows are all word positions 0..l-1; columns are the exchangeable positions.
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  ExchangeMatrix(std::size_t rows, std::vector<std::size_t> columns)
      : rows_(rows), cols_(std::move(columns)), b_(rows_, std::vector<int>(cols_.size(), 0)) {
    for (std::size_t c : cols_)
      if (c >= rows_) throw error(errc::out_of_range, "column position outside the rows");
  }

  std::size_t rows() const { return rows_; }
  const std::vector<std::size_t>& columns() const { return cols_; }
  bool exchangeable(std::size_t pos) const { return col_of(pos).has_value(); }

  std::optional<std::size_t> col_of(std::size_t pos) const {
    auto it = std::find(cols_.begin(), cols_.end(), pos);
    if (it == cols_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - cols_.begin());
  }

  /// Entry at (row position, column position); zero for non-exchangeable columns.
  int operator()(std::size_t row, std::size_t pos) const {
    auto c = col_of(pos);
    return c ? b_.at(row)[*c] : 0;
  }
  void set(std::size_t row, std::size_t pos, int v) {
    auto c = col_of(pos);
    if (!c) throw error(errc::out_of_range, "not an exchangeable column");
    b_.at(row)[*c] = v;
  }

  /// Square block on exchangeable positions.
  std::vector<std::vector<int>> exchangeable_block() const {
    std::vector<std::vector<int>> out;
    for (std::size_t r : cols_) out.push_back(b_[r]);
    return out;
  }

  bool skew_symmetrizable_by(const std::vector<Scalar>& d) const {
    for (std::size_t i : cols_)
      for (std::size_t j : cols_)
        if (d.at(i) * (*this)(i, j) != -d.at(j) * (*this)(j, i)) return false;
    return true;
  }

  ExchangeMatrix mutate(std::size_t k) const {
    auto kc = col_of(k);
    if (!kc) throw error(errc::precondition, "mutation at a frozen position");
    ExchangeMatrix out = *this;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t c = 0; c < cols_.size(); ++c) {
        const int bij = b_[i][c];
        if (i == k || c == *kc) {
          out.b_[i][c] = -bij;
          continue;
        }
        const int bik = b_[i][*kc], bkj = b_[k][c];
        out.b_[i][c] = bij + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
      }
    return out;
  }

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      s += "[";
      for (std::size_t c = 0; c < cols_.size(); ++c) s += (c ? " " : "") + std::to_string(b_[i][c]);
      s += "]\n";
    }
    return s;
  }

 private:
  std::size_t rows_ = 0;
  std::vector<std::size_t> cols_;
  std::vector<std::vector<int>> b_;
};

/// Exchange matrix of a word (letters are node labels of the affine datum).
/// For s with a later repeat s+, b(s, s+) = -1, b(s+, s) = 1; for s < r < s+
/// with no repeat of i_r before s+, b(s, r) = -C(i_s, i_r), b(r, s) = C(i_r, i_s).
/// Row index is the first subscript; entries in frozen columns are dropped.
inline ExchangeMatrix exchange_matrix(const WeylWord& word, const RootDatum& affine) {
  const auto& L = word.letters;
  const std::size_t l = L.size();
  std::vector<std::optional<std::size_t>> next(l);
  std::vector<std::size_t> cols;
  for (std::size_t s = 0; s < l; ++s)
    for (std::size_t r = s + 1; r < l; ++r)
      if (L[r] == L[s]) {
        next[s] = r;
        cols.push_back(s);
        break;
      }
  ExchangeMatrix B(l, cols);
  std::map<std::pair<std::size_t, std::size_t>, int> assigned;
  auto put = [&](std::size_t row, std::size_t col, int v) {
    auto [it, fresh] = assigned.emplace(std::pair{row, col}, v);
    if (!fresh && it->second != v) throw error(errc::invariant, "conflicting exchange matrix entries");
    if (B.exchangeable(col)) B.set(row, col, v);
  };
  for (std::size_t s = 0; s < l; ++s) {
    if (!next[s]) continue;
    const std::size_t sp = *next[s];
    put(s, sp, -1);
    put(sp, s, 1);
    for (std::size_t r = s + 1; r < sp; ++r) {
      bool clean = true;
      for (std::size_t r2 = r + 1; r2 < sp; ++r2) clean = clean && L[r2] != L[r];
      if (!clean) continue;
      put(s, r, -affine.cartan_label(L[s], L[r]));
      put(r, s, affine.cartan_label(L[r], L[s]));
    }
  }
  return B;
}

struct Seed {
  std::vector<MultiRat> variables;
  ExchangeMatrix matrix;
  std::vector<std::string> labels;  // optional names, e.g. "C1", "D1"

  bool frozen(std::size_t k) const { return !matrix.exchangeable(k); }
  std::vector<std::size_t> frozen_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < variables.size(); ++k)
      if (frozen(k)) out.push_back(k);
    return out;
  }
};

inline Seed mutate(const Seed& seed, std::size_t k) {
  if (k >= seed.variables.size() || seed.frozen(k)) throw error(errc::precondition, "mutation at a frozen position");
  MultiRat pos(Scalar(1)), neg(Scalar(1));
  for (std::size_t j = 0; j < seed.variables.size(); ++j) {
    const int b = seed.matrix(j, k);
    if (b > 0) pos *= seed.variables[j].pow(static_cast<unsigned>(b));
    if (b < 0) neg *= seed.variables[j].pow(static_cast<unsigned>(-b));
  }
  Seed out = seed;
  out.variables[k] = (pos + neg) / seed.variables[k];
  out.matrix = seed.matrix.mutate(k);
  if (!out.labels.empty()) out.labels[k] += "'";
  return out;
}

/// Seed whose variables are free symbols x1..xl (for Laurent and periodicity checks).
inline Seed abstract_seed(const ExchangeMatrix& B) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < B.rows(); ++k) names.push_back("x" + std::to_string(k + 1));
  auto vars = std::make_shared<const VarSet>(names, std::vector<VarSet::Role>(names.size(), VarSet::Role::coordinate));
  Seed s{{}, B, names};
  for (std::size_t k = 0; k < B.rows(); ++k) s.variables.push_back(MultiRat::variable(vars, k));
  return s;
}

/// C_k = det(c_{i+j}) and D_k = det(c_{i+j+1}), 0 <= i, j < k, with c_j from the closed form.
inline MultiRat hankel_minor_symbolic(const CoordinateSystem& cs, std::size_t k, bool shifted) {
  std::vector<MultiRat> c;
  for (std::size_t j = 0; j < 2 * k + 1; ++j) c.push_back(series_closed_form(cs, 0, j));
  SymbolicMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = c[i + j + (shifted ? 1 : 0)];
  return det(m);
}

/// Initial SL2 seed over the (w, y) chart: positions 2k-2 and 2k-1 (0-based)
/// carry C_k and D_k for the word (0,1)^a.
inline Seed initial_seed_sl2(std::size_t a) {
  if (a == 0) throw error(errc::precondition, "degree must be positive");
  const RootDatum aff = affine_datum('A', 1);
  WeylWord word;
  for (std::size_t k = 0; k < a; ++k) word.letters.insert(word.letters.end(), {0, 1});
  const CoordinateSystem cs({a}, false);
  Seed s{{}, exchange_matrix(word, aff), {}};
  for (std::size_t k = 1; k <= a; ++k) {
    s.variables.push_back(hankel_minor_symbolic(cs, k, false));
    s.labels.push_back("C" + std::to_string(k));
    s.variables.push_back(hankel_minor_symbolic(cs, k, true));
    s.labels.push_back("D" + std::to_string(k));
  }
  return s;
}

inline Seed initial_seed_sl2(const ZastavaPoint& p) {
  p.require_sl2();
  if (p.tier() != Tier::trigonometric) throw error(errc::precondition, "initial seed needs a trigonometric point");
  return initial_seed_sl2(p.color(0).degree());
}

struct PairRatio {
  std::size_t a = 0, b = 0;
  std::vector<Scalar> values;  // {x_a, x_b} / (x_a x_b) at each sample
  bool constant() const {
    for (const auto& v : values)
      if (v != values.front()) return false;
    return true;
  }
};

struct LogCanonicityReport {
  std::size_t trials = 0;
  std::size_t resampled = 0;
  std::vector<PairRatio> pairs;
  bool pass = false;
  std::optional<std::size_t> first_failure;  // index into pairs
};

/// Samples {x_a, x_b} / (x_a x_b) at random admissible points; pass iff each
/// pair gives the same value every time.
template <class Rng>
LogCanonicityReport log_canonicity_check(const Seed& seed, const BracketTable& table, std::size_t trials, Rng& rng,
                                         const SampleOptions& opts = {}) {
  const CoordinateSystem& cs = table.coords();
  const std::size_t n = cs.coordinate_count();
  const std::size_t m = seed.variables.size();
  for (const auto& x : seed.variables)
    if (x.vars() && !same_varset(x.vars(), cs.vars())) throw error(errc::precondition, "seed is not over the table's variables");

  std::vector<std::vector<std::optional<MultiRat>>> grad(m, std::vector<std::optional<MultiRat>>(n));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (detail::rat_depends_on(seed.variables[k], a)) grad[k][a] = seed.variables[k].derivative(a);

  LogCanonicityReport rep;
  rep.trials = trials;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) rep.pairs.push_back({a, b, {}});

  const auto degrees = cs.degrees();
  std::size_t done = 0;
  while (done < trials) {
    if (rep.resampled > opts.max_attempts) throw error(errc::sampling_exhausted, "too many degenerate samples");
    ZastavaPoint p = random_point(rng, table.datum(), degrees, opts);
    std::vector<Scalar> vals = cs.values_at(p);
    std::vector<Scalar> x(m);
    std::vector<std::vector<Scalar>> g(m, std::vector<Scalar>(n, Scalar(0)));
    std::map<std::pair<std::size_t, std::size_t>, Scalar> rule;
    try {
      for (std::size_t k = 0; k < m; ++k) {
        x[k] = seed.variables[k].evaluate(vals);
        if (x[k] == 0) throw error(errc::division_by_zero, "seed variable vanishes");
        for (std::size_t a = 0; a < n; ++a)
          if (grad[k][a]) g[k][a] = grad[k][a]->evaluate(vals);
      }
      for (const auto& [ab, v] : table.nonzero_rules()) rule[ab] = v.evaluate(vals);
    } catch (const error& e) {
      if (e.code() != errc::division_by_zero) throw;
      ++rep.resampled;
      continue;
    }
    for (auto& pr : rep.pairs) {
      Scalar br = 0;
      for (const auto& [ab, v] : rule) br += v * (g[pr.a][ab.first] * g[pr.b][ab.second] - g[pr.a][ab.second] * g[pr.b][ab.first]);
      pr.values.push_back(br / (x[pr.a] * x[pr.b]));
    }
    ++done;
  }
  rep.pass = true;
  for (std::size_t k = 0; k < rep.pairs.size(); ++k)
    if (!rep.pairs[k].constant()) {
      rep.pass = false;
      if (!rep.first_failure) rep.first_failure = k;
    }
  return rep;
}

/// True iff every denominator factor of f is a single variable.
inline bool has_monomial_denominator(const MultiRat& f) {
  const MultiRat r = f.reduced();
  for (const auto& fac : r.denominator_factors()) {
    if (fac.poly.term_count() != 1) return false;
    const auto& [e, c] = *fac.poly.terms().begin();
    std::size_t nz = 0;
    for (auto x : e) nz += x != 0;
    if (nz != 1) return false;
  }
  return true;
}

/// Laurent phenomenon after two mutations from an abstract seed: denominators
/// are monomials, and evaluation at every +-1 assignment is finite.
inline VerificationReport laurent_check(const ExchangeMatrix& B) {
  VerificationReport rep{"laurent", {}};
  const Seed s0 = abstract_seed(B);
  const std::size_t l = B.rows();
  for (std::size_t k : B.columns())
    for (std::size_t j : B.columns()) {
      if (j == k) continue;
      const Seed s2 = mutate(mutate(s0, k), j);
      const MultiRat& f = s2.variables[j];
      std::string id = "mutate " + std::to_string(k + 1) + "," + std::to_string(j + 1);
      if (!has_monomial_denominator(f)) {
        rep.add(id, false, f.reduced().str());
        continue;
      }
      bool finite = true;
      for (std::size_t mask = 0; mask < (std::size_t{1} << std::min<std::size_t>(l, 12)) && finite; ++mask) {
        std::vector<Scalar> v(l, Scalar(1));
        for (std::size_t t = 0; t < std::min<std::size_t>(l, 12); ++t)
          if (mask >> t & 1) v[t] = -1;
        try {
          (void)f.evaluate(v);
        } catch (const error&) {
          finite = false;
        }
      }
      rep.add(id, finite, finite ? "" : "pole at a unit point: " + f.str());
    }
  return rep;
}

/// Positions whose cluster equals the initial one (as a set) after each of
/// the given mutations; empty means no return.
inline std::vector<std::size_t> returns_to_initial(const Seed& s0, const std::vector<std::size_t>& sequence) {
  std::vector<std::size_t> hits;
  Seed s = s0;
  for (std::size_t t = 0; t < sequence.size(); ++t) {
    s = mutate(s, sequence[t]);
    bool same = true;
    for (const auto& x : s.variables) {
      bool found = false;
      for (const auto& y : s0.variables) found = found || x == y;
      same = same && found;
    }
    if (same) hits.push_back(t + 1);
  }
  return hits;
}

}  // namespace zastava
