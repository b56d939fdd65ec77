#pragma once

// Sparse multivariate polynomials over Scalar in a declared, ordered variable
// set. Terms are kept in a map ordered lexicographically (variable 0 highest),
// so begin() is the lex-leading term.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zastava/error.hpp"
#include "zastava/scalar.hpp"

namespace zastava {

class VarSet {
 public:
  /// Coordinates take part in brackets; parameters (z, u, opaque symbols) are
  /// constants for differentiation purposes.
  enum class Role { coordinate, parameter };

  VarSet(std::vector<std::string> names, std::vector<Role> roles)
      : names_(std::move(names)), roles_(std::move(roles)) {
    if (names_.size() != roles_.size()) throw error(errc::precondition, "VarSet: names/roles size mismatch");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], i).second) throw error(errc::precondition, "VarSet: duplicate variable " + names_[i]);
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  Role role(std::size_t i) const { return roles_.at(i); }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index(std::string_view name) const {
    auto i = find(name);
    if (!i) throw error(errc::precondition, "unknown variable '" + std::string(name) + "'");
    return *i;
  }

  friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_ && a.roles_ == b.roles_; }

 private:
  std::vector<std::string> names_;
  std::vector<Role> roles_;
  std::unordered_map<std::string, std::size_t> index_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline bool same_varset(const VarSetPtr& a, const VarSetPtr& b) {
  return a == b || (a && b && *a == *b);
}

using Exponents = std::vector<std::uint32_t>;

struct LexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const { return b < a; }
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Scalar, LexGreater>;

  /// Zero. Constants built without a variable set are promoted on first
  /// contact with a polynomial that has one.
  MultiPoly() = default;
  MultiPoly(const Scalar& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Exponents{}, c);
  }
  MultiPoly(VarSetPtr vars, const Scalar& c) : vars_(std::move(vars)) {
    if (c != 0) terms_.emplace(Exponents(nvars(), 0), c);
  }

  static MultiPoly variable(const VarSetPtr& vars, std::size_t i) {
    if (!vars || i >= vars->size()) throw error(errc::out_of_range, "variable index out of range");
    MultiPoly p;
    p.vars_ = vars;
    Exponents e(vars->size(), 0);
    e[i] = 1;
    p.terms_.emplace(std::move(e), Scalar(1));
    return p;
  }
  static MultiPoly variable(const VarSetPtr& vars, std::string_view name) {
    if (!vars) throw error(errc::precondition, "variable lookup without a variable set");
    return variable(vars, vars->index(name));
  }

  const VarSetPtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
  }

  Scalar constant_term() const {
    for (const auto& [e, c] : terms_)
      if (std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; })) return c;
    return Scalar(0);
  }

  bool depends_on(std::size_t var) const {
    for (const auto& [e, c] : terms_)
      if (var < e.size() && e[var] != 0) return true;
    return false;
  }

  std::uint32_t degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_)
      if (var < e.size()) d = std::max(d, e[var]);
    return d;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return accumulate(o, 1); }
  MultiPoly& operator-=(const MultiPoly& o) { return accumulate(o, -1); }

  MultiPoly& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Scalar& s) { return a *= s; }
  friend MultiPoly operator*(const Scalar& s, MultiPoly a) { return a *= s; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly x = a, y = b;
    unify(x, y);
    MultiPoly r;
    r.vars_ = x.vars_;
    if (x.is_zero() || y.is_zero()) return r;
    Exponents e(x.nvars());
    for (const auto& [ea, ca] : x.terms_) {
      for (const auto& [eb, cb] : y.terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        auto [it, inserted] = r.terms_.try_emplace(e, ca * cb);
        if (!inserted) {
          it->second += ca * cb;
          if (it->second == 0) r.terms_.erase(it);
        }
      }
    }
    return r;
  }

  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly pow(unsigned k) const {
    MultiPoly r(vars_, Scalar(1));
    MultiPoly base = *this;
    while (k) {
      if (k & 1u) r *= base;
      k >>= 1u;
      if (k) base = base * base;
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly x = a, y = b;
    unify(x, y);
    return x.terms_ == y.terms_;
  }

  MultiPoly derivative(std::size_t var) const {
    MultiPoly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
      if (var >= e.size() || e[var] == 0) continue;
      Exponents f = e;
      --f[var];
      r.terms_.emplace(std::move(f), c * static_cast<unsigned long>(e[var]));
    }
    return r;
  }

  /// Replaces variable `var` by `value`.
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const {
    if (!depends_on(var)) return *this;
    MultiPoly val = value;
    MultiPoly self = *this;
    unify(self, val);
    std::vector<MultiPoly> powers{MultiPoly(self.vars_, Scalar(1))};
    MultiPoly r;
    r.vars_ = self.vars_;
    for (const auto& [e, c] : self.terms_) {
      const std::uint32_t k = e[var];
      while (powers.size() <= k) powers.push_back(powers.back() * val);
      Exponents f = e;
      f[var] = 0;
      MultiPoly mono;
      mono.vars_ = self.vars_;
      mono.terms_.emplace(std::move(f), c);
      r += k == 0 ? mono : mono * powers[k];
    }
    return r;
  }

  MultiPoly substitute(std::size_t var, const Scalar& value) const { return substitute(var, MultiPoly(vars_, value)); }

  /// Full evaluation; `values[i]` is the value of variable i.
  Scalar evaluate(std::span<const Scalar> values) const {
    if (terms_.empty()) return Scalar(0);
    if (vars_ && values.size() != nvars()) throw error(errc::precondition, "evaluate: wrong number of values");
    Scalar acc(0);
    for (const auto& [e, c] : terms_) {
      Scalar t = c;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        Scalar p;
        mpz_pow_ui(p.get_num_mpz_t(), values[k].get_num_mpz_t(), e[k]);
        mpz_pow_ui(p.get_den_mpz_t(), values[k].get_den_mpz_t(), e[k]);
        t *= p;
      }
      acc += t;
    }
    return acc;
  }

  /// Exact quotient this / d, or nullopt when d does not divide this.
  std::optional<MultiPoly> exact_divide(const MultiPoly& d) const {
    if (d.is_zero()) throw error(errc::division_by_zero, "multivariate division by zero");
    MultiPoly rem = *this, div = d;
    unify(rem, div);
    MultiPoly q;
    q.vars_ = rem.vars_;
    const auto& [ld_e, ld_c] = *div.terms_.begin();
    const Scalar inv = 1 / ld_c;
    while (!rem.is_zero()) {
      const auto& [lr_e, lr_c] = *rem.terms_.begin();
      Exponents t(lr_e.size());
      for (std::size_t k = 0; k < t.size(); ++k) {
        if (lr_e[k] < ld_e[k]) return std::nullopt;
        t[k] = lr_e[k] - ld_e[k];
      }
      MultiPoly term;
      term.vars_ = rem.vars_;
      term.terms_.emplace(std::move(t), lr_c * inv);
      rem -= term * div;
      q += term;
    }
    return q;
  }

  /// Returns (lead coefficient, this / lead coefficient).
  std::pair<Scalar, MultiPoly> monic_normalized() const {
    if (is_zero()) throw error(errc::division_by_zero, "normalize zero polynomial");
    Scalar lc = terms_.begin()->second;
    MultiPoly m = *this * Scalar(1 / lc);
    return {lc, std::move(m)};
  }

  /// Componentwise minimum exponent over all terms.
  Exponents monomial_content() const {
    if (terms_.empty()) return Exponents(nvars(), 0);
    Exponents m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], e[k]);
    return m;
  }

  /// Divides by the monomial with exponents `e` (caller guarantees divisibility).
  MultiPoly divide_monomial(const Exponents& e) const {
    MultiPoly r;
    r.vars_ = vars_;
    for (const auto& [f, c] : terms_) {
      Exponents g = f;
      for (std::size_t k = 0; k < g.size() && k < e.size(); ++k) g[k] -= e[k];
      r.terms_.emplace(std::move(g), c);
    }
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      const bool neg = c < 0;
      const Scalar mag = abs(c);
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      std::string mono;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_ ? vars_->name(k) : "x" + std::to_string(k);
        if (e[k] > 1) mono += "^" + std::to_string(e[k]);
      }
      if (mono.empty()) {
        out += mag.get_str();
      } else {
        if (mag != 1) out += mag.get_str() + "*";
        out += mono;
      }
    }
    return out;
  }

  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }

  friend void unify(MultiPoly& a, MultiPoly& b) {
    if (same_varset(a.vars_, b.vars_)) {
      if (a.vars_ != b.vars_) b.vars_ = a.vars_;
      return;
    }
    if (!a.vars_) {
      a.promote(b.vars_);
    } else if (!b.vars_) {
      b.promote(a.vars_);
    } else {
      throw error(errc::precondition, "polynomials over different variable sets");
    }
  }

 private:
  void promote(const VarSetPtr& vars) {
    Scalar c = constant_term();
    vars_ = vars;
    terms_.clear();
    if (c != 0) terms_.emplace(Exponents(nvars(), 0), c);
  }

  MultiPoly& accumulate(const MultiPoly& o, int s) {
    MultiPoly other = o;
    unify(*this, other);
    for (const auto& [e, c] : other.terms_) {
      auto [it, inserted] = terms_.try_emplace(e, s > 0 ? c : Scalar(-c));
      if (!inserted) {
        if (s > 0)
          it->second += c;
        else
          it->second -= c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }

  VarSetPtr vars_;
  TermMap terms_;
};

}  // namespace zastava
