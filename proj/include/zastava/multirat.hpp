#pragma once

// Multivariate rational functions: a numerator polynomial over a product of
// monic denominator factors. Not kept reduced; equality is semantic.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zastava/error.hpp"
#include "zastava/multipoly.hpp"
#include "zastava/scalar.hpp"

namespace zastava {

struct Factor {
  MultiPoly poly;  // non-constant, lex-leading coefficient 1
  unsigned exp = 1;
};

class MultiRat {
 public:
  /// Numerator size at which a trial-division reduction is attempted.
  static constexpr std::size_t reduce_threshold = 256;

  MultiRat() = default;
  MultiRat(const Scalar& c) : num_(c) {}       // NOLINT(google-explicit-constructor)
  MultiRat(MultiPoly num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)

  MultiRat(MultiPoly num, const MultiPoly& den) : num_(std::move(num)) {
    if (den.is_zero()) throw error(errc::division_by_zero, "rational function with zero denominator");
    divide_by_poly(den);
    normalize();
  }

  static MultiRat variable(const VarSetPtr& vars, std::string_view name) { return MultiPoly::variable(vars, name); }
  static MultiRat variable(const VarSetPtr& vars, std::size_t i) { return MultiPoly::variable(vars, i); }

  const MultiPoly& numerator() const { return num_; }
  const std::vector<Factor>& denominator_factors() const { return den_; }

  MultiPoly denominator() const {
    MultiPoly d(Scalar(1));
    for (const auto& f : den_) d *= f.poly.pow(f.exp);
    return d;
  }

  VarSetPtr vars() const {
    if (num_.vars()) return num_.vars();
    return den_.empty() ? nullptr : den_.front().poly.vars();
  }

  bool is_zero() const { return num_.is_zero(); }

  /// The value when this is a constant in the given representation.
  std::optional<Scalar> constant_value() const {
    if (num_.is_zero()) return Scalar(0);
    if (den_.empty() && num_.is_constant()) return num_.constant_term();
    return std::nullopt;
  }

  MultiRat operator-() const {
    MultiRat r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend MultiRat operator+(const MultiRat& a, const MultiRat& b) { return combine(a, b, 1); }
  friend MultiRat operator-(const MultiRat& a, const MultiRat& b) { return combine(a, b, -1); }

  friend MultiRat operator*(const MultiRat& a, const MultiRat& b) {
    if (a.is_zero() || b.is_zero()) return MultiRat(MultiPoly(a.vars() ? a.vars() : b.vars(), Scalar(0)));
    MultiRat r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    for (const auto& f : b.den_) r.add_factor(f.poly, f.exp);
    r.normalize();
    return r;
  }

  friend MultiRat operator/(const MultiRat& a, const MultiRat& b) {
    if (b.is_zero()) throw error(errc::division_by_zero, "division by zero rational function");
    MultiRat r;
    r.num_ = a.num_ * b.denominator();
    r.den_ = a.den_;
    r.divide_by_poly(b.num_);
    r.normalize();
    return r;
  }

  MultiRat& operator+=(const MultiRat& o) { return *this = *this + o; }
  MultiRat& operator-=(const MultiRat& o) { return *this = *this - o; }
  MultiRat& operator*=(const MultiRat& o) { return *this = *this * o; }
  MultiRat& operator/=(const MultiRat& o) { return *this = *this / o; }

  MultiRat pow(unsigned k) const {
    MultiRat r;
    r.num_ = num_.pow(k);
    if (k == 0) return r;
    for (const auto& f : den_) r.den_.push_back({f.poly, f.exp * k});
    return r;
  }

  /// Semantic equality: the difference has zero numerator.
  friend bool operator==(const MultiRat& a, const MultiRat& b) { return (a - b).is_zero(); }

  MultiRat derivative(std::size_t var) const {
    std::vector<std::size_t> dep;
    for (std::size_t k = 0; k < den_.size(); ++k)
      if (den_[k].poly.depends_on(var)) dep.push_back(k);
    MultiRat r;
    if (dep.empty()) {
      r.num_ = num_.derivative(var);
      r.den_ = den_;
      r.normalize();
      return r;
    }
    // (N/(G F_1^e_1..F_m^e_m))' = (N' F_1..F_m - N sum_k e_k F_k' prod_{l!=k} F_l) / (G F_1^{e_1+1}..)
    MultiPoly prod(Scalar(1));
    for (auto k : dep) prod *= den_[k].poly;
    MultiPoly t = num_.derivative(var) * prod;
    for (auto k : dep) {
      MultiPoly others(Scalar(1));
      for (auto l : dep)
        if (l != k) others *= den_[l].poly;
      t -= num_ * (den_[k].poly.derivative(var) * Scalar(den_[k].exp)) * others;
    }
    r.num_ = std::move(t);
    r.den_ = den_;
    for (auto k : dep) ++r.den_[k].exp;
    r.normalize();
    return r;
  }

  /// Replaces variable `var` by a polynomial. Throws if a denominator factor
  /// becomes identically zero.
  MultiRat substitute(std::size_t var, const MultiPoly& value) const {
    MultiRat r;
    r.num_ = num_.substitute(var, value);
    for (const auto& f : den_) {
      if (!f.poly.depends_on(var)) {
        r.den_.push_back(f);
        continue;
      }
      MultiPoly p = f.poly.substitute(var, value);
      if (p.is_zero()) throw error(errc::division_by_zero, "substitution zeroes a denominator factor");
      r.divide_by_poly(p.pow(f.exp));
    }
    r.normalize();
    return r;
  }

  MultiRat substitute(std::size_t var, const Scalar& value) const {
    return substitute(var, MultiPoly(vars(), value));
  }

  Scalar evaluate(std::span<const Scalar> values) const {
    Scalar d(1);
    for (const auto& f : den_) {
      Scalar v = f.poly.evaluate(values);
      if (v == 0) throw error(errc::division_by_zero, "denominator vanishes at evaluation point");
      Scalar p;
      mpz_pow_ui(p.get_num_mpz_t(), v.get_num_mpz_t(), f.exp);
      mpz_pow_ui(p.get_den_mpz_t(), v.get_den_mpz_t(), f.exp);
      d *= p;
    }
    return num_.evaluate(values) / d;
  }

  /// Cancels denominator factors that divide the numerator exactly.
  MultiRat reduced() const {
    MultiRat r = *this;
    r.trial_divide();
    return r;
  }

  std::string str() const {
    if (den_.empty()) return num_.str();
    std::string d;
    for (const auto& f : den_) {
      if (!d.empty()) d += "*";
      d += "(" + f.poly.str() + ")";
      if (f.exp > 1) d += "^" + std::to_string(f.exp);
    }
    return "(" + num_.str() + ")/(" + d + ")";
  }

 private:
  static MultiRat combine(const MultiRat& a, const MultiRat& b, int s) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return s > 0 ? b : -b;
    // factor LCM
    MultiRat r;
    r.den_ = a.den_;
    std::vector<unsigned> need_b(b.den_.size(), 0);
    for (std::size_t k = 0; k < b.den_.size(); ++k) {
      auto idx = r.find_factor(b.den_[k].poly);
      if (!idx) {
        r.den_.push_back(b.den_[k]);
      } else if (r.den_[*idx].exp < b.den_[k].exp) {
        r.den_[*idx].exp = b.den_[k].exp;
      }
    }
    MultiPoly ma(Scalar(1)), mb(Scalar(1));
    for (const auto& f : r.den_) {
      const unsigned ea = exponent_in(a.den_, f.poly), eb = exponent_in(b.den_, f.poly);
      if (f.exp > ea) ma *= f.poly.pow(f.exp - ea);
      if (f.exp > eb) mb *= f.poly.pow(f.exp - eb);
    }
    r.num_ = a.num_ * ma;
    if (s > 0)
      r.num_ += b.num_ * mb;
    else
      r.num_ -= b.num_ * mb;
    if (r.num_.is_zero()) r.den_.clear();
    r.normalize();
    return r;
  }

  static unsigned exponent_in(const std::vector<Factor>& fs, const MultiPoly& p) {
    for (const auto& f : fs)
      if (f.poly == p) return f.exp;
    return 0;
  }

  std::optional<std::size_t> find_factor(const MultiPoly& p) const {
    for (std::size_t k = 0; k < den_.size(); ++k)
      if (den_[k].poly == p) return k;
    return std::nullopt;
  }

  void add_factor(const MultiPoly& monic, unsigned e) {
    if (e == 0) return;
    if (auto idx = find_factor(monic))
      den_[*idx].exp += e;
    else
      den_.push_back({monic, e});
  }

  // Divides by p: scalar into the numerator, monomial content as single-variable
  // factors, the rest as one monic factor (cancelled if it divides the numerator).
  void divide_by_poly(const MultiPoly& p) {
    if (p.is_zero()) throw error(errc::division_by_zero, "division by zero polynomial");
    if (p.is_constant()) {
      num_ *= Scalar(1 / p.constant_term());
      return;
    }
    auto [lc, monic] = p.monic_normalized();
    num_ *= Scalar(1 / lc);
    const Exponents content = monic.monomial_content();
    bool has_content = false;
    for (std::size_t k = 0; k < content.size(); ++k) {
      if (content[k] == 0) continue;
      has_content = true;
      add_factor(MultiPoly::variable(monic.vars(), k), content[k]);
    }
    if (has_content) monic = monic.divide_monomial(content);
    if (monic.is_constant()) return;
    if (auto q = num_.exact_divide(monic)) {
      num_ = std::move(*q);
      return;
    }
    add_factor(monic, 1);
  }

  // Cheap cancellation of single-variable factors against numerator monomial
  // content; trial division once the numerator grows past the threshold.
  void normalize() {
    if (num_.is_zero()) {
      den_.clear();
      return;
    }
    if (!den_.empty() && num_.vars()) {
      Exponents content = num_.monomial_content();
      Exponents cancel(content.size(), 0);
      bool any = false;
      for (auto& f : den_) {
        if (f.poly.term_count() != 1) continue;
        const Exponents& e = f.poly.terms().begin()->first;
        std::size_t var = e.size(), nz = 0;
        for (std::size_t k = 0; k < e.size(); ++k)
          if (e[k] != 0) {
            var = k;
            ++nz;
          }
        if (nz != 1 || e[var] != 1 || content[var] == 0) continue;
        const unsigned c = std::min<unsigned>(content[var], f.exp);
        cancel[var] += c;
        content[var] -= c;
        f.exp -= c;
        any = true;
      }
      if (any) {
        num_ = num_.divide_monomial(cancel);
        std::erase_if(den_, [](const Factor& f) { return f.exp == 0; });
      }
    }
    if (num_.term_count() > reduce_threshold && num_.term_count() > 2 * reduce_mark_) {
      reduce_mark_ = num_.term_count();
      trial_divide();
    }
  }

  void trial_divide() {
    for (auto& f : den_) {
      while (f.exp > 0) {
        auto q = num_.exact_divide(f.poly);
        if (!q) break;
        num_ = std::move(*q);
        --f.exp;
      }
    }
    std::erase_if(den_, [](const Factor& f) { return f.exp == 0; });
  }

  MultiPoly num_;
  std::vector<Factor> den_;
  std::size_t reduce_mark_ = 0;
};

}  // namespace zastava
