#pragma once

// Cartan data for finite types A-D and their untwisted affinizations, and
// reduced words of translation elements of the affine Weyl group.
//
// P is the pairing of simple coroots, normalized so short coroots have
// square length 2; d_i = P_ii / 2 and C_ij = 2 P_ij / P_ii, so P_ij = d_i C_ij.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "zastava/error.hpp"
#include "zastava/matrix.hpp"
#include "zastava/scalar.hpp"

namespace zastava {

class RootDatum {
 public:
  RootDatum(std::string name, std::vector<int> labels, std::vector<std::vector<Scalar>> pairing, bool affine)
      : name_(std::move(name)), labels_(std::move(labels)), P_(std::move(pairing)), affine_(affine) {
    const std::size_t n = labels_.size();
    if (P_.size() != n) throw error(errc::invariant, "pairing size mismatch");
    C_.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      if (P_[i].size() != n) throw error(errc::invariant, "pairing not square");
      d_.push_back(P_[i][i] / 2);
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar c = 2 * P_[i][j] / P_[i][i];
        if (c.get_den() != 1) throw error(errc::invariant, "non-integral Cartan entry");
        C_[i][j] = static_cast<int>(c.get_num().get_si());
      }
    }
  }

  const std::string& name() const { return name_; }
  bool affine() const { return affine_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<int>& labels() const { return labels_; }

  std::size_t index_of(int label) const {
    for (std::size_t k = 0; k < labels_.size(); ++k)
      if (labels_[k] == label) return k;
    throw error(errc::out_of_range, "node label " + std::to_string(label) + " not in " + name_);
  }

  /// Entries by node index.
  int cartan(std::size_t i, std::size_t j) const { return C_.at(i).at(j); }
  const Scalar& pairing(std::size_t i, std::size_t j) const { return P_.at(i).at(j); }
  const Scalar& dcheck(std::size_t i) const { return d_.at(i); }

  /// Entries by node label.
  int cartan_label(int i, int j) const { return C_[index_of(i)][index_of(j)]; }

  const std::vector<std::vector<int>>& cartan_matrix() const { return C_; }
  const std::vector<std::vector<Scalar>>& pairing_matrix() const { return P_; }
  const std::vector<Scalar>& dchecks() const { return d_; }

 private:
  std::string name_;
  std::vector<int> labels_;
  std::vector<std::vector<Scalar>> P_;
  std::vector<std::vector<int>> C_;
  std::vector<Scalar> d_;
  bool affine_;
};

namespace detail {

struct FiniteTable {
  std::vector<std::vector<Scalar>> P;
  std::vector<Scalar> theta;  // highest root in simple roots
};

inline FiniteTable finite_table(char type, std::size_t n) {
  FiniteTable t;
  t.P.assign(n, std::vector<Scalar>(n, Scalar(0)));
  auto link = [&](std::size_t i, std::size_t j, long v) { t.P[i][j] = t.P[j][i] = Scalar(v); };
  switch (type) {
    case 'A':
      for (std::size_t i = 0; i < n; ++i) t.P[i][i] = 2;
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      t.theta.assign(n, Scalar(1));
      break;
    case 'B':  // alpha_n short, so its coroot is long
      for (std::size_t i = 0; i < n; ++i) t.P[i][i] = 2;
      t.P[n - 1][n - 1] = 4;
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      t.theta.assign(n, Scalar(2));
      t.theta[0] = 1;
      break;
    case 'C':  // alpha_n long, so its coroot is short
      for (std::size_t i = 0; i < n; ++i) t.P[i][i] = 4;
      t.P[n - 1][n - 1] = 2;
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -2);
      link(n - 2, n - 1, -2);
      t.theta.assign(n, Scalar(2));
      t.theta[n - 1] = 1;
      break;
    case 'D':
      for (std::size_t i = 0; i < n; ++i) t.P[i][i] = 2;
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      t.theta.assign(n, Scalar(2));
      t.theta[0] = t.theta[n - 2] = t.theta[n - 1] = 1;
      break;
    default:
      throw error(errc::unsupported, std::string("unsupported root system type '") + type + "'");
  }
  return t;
}

/// Highest root theta as a vector in the coroot basis of the coroot of theta:
/// theta^vee = sum_k (theta_k / d_k) alpha_k^vee.
inline std::vector<Scalar> theta_coroot(const std::vector<Scalar>& theta, const std::vector<std::vector<Scalar>>& P) {
  std::vector<Scalar> c(theta.size());
  for (std::size_t k = 0; k < theta.size(); ++k) c[k] = theta[k] * 2 / P[k][k];
  return c;
}

}  // namespace detail

/// Finite datum of type A_n (n>=1), B_n (n>=2), C_n (n>=2), D_n (n>=4).
inline RootDatum finite_datum(char type, std::size_t n) {
  type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  const std::size_t min_rank = type == 'A' ? 1 : type == 'D' ? 4 : 2;
  if (n < min_rank)
    throw error(errc::unsupported, std::string(1, type) + std::to_string(n) + ": rank below " + std::to_string(min_rank));
  auto t = detail::finite_table(type, n);
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  return RootDatum(std::string(1, type) + std::to_string(n), std::move(labels), std::move(t.P), false);
}

/// Untwisted affinization: node label 0 with coroot K - theta^vee.
inline RootDatum affine_datum(char type, std::size_t n) {
  type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  RootDatum fin = finite_datum(type, n);
  auto t = detail::finite_table(type, n);
  const auto c = detail::theta_coroot(t.theta, t.P);
  std::vector<std::vector<Scalar>> P(n + 1, std::vector<Scalar>(n + 1, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) P[i + 1][j + 1] = t.P[i][j];
  Scalar p00(0);
  for (std::size_t j = 0; j < n; ++j) {
    Scalar s(0);
    for (std::size_t k = 0; k < n; ++k) s += c[k] * t.P[k][j];
    P[0][j + 1] = P[j + 1][0] = -s;
    p00 += c[j] * s;
  }
  P[0][0] = p00;
  std::vector<int> labels(n + 1);
  std::iota(labels.begin(), labels.end(), 0);
  return RootDatum(fin.name() + "-affine", std::move(labels), std::move(P), true);
}

/// Parses tags like "A1", "B3", "D4-affine".
inline RootDatum parse_datum(std::string_view tag) {
  std::string s(tag);
  bool affine = false;
  for (std::string_view suffix : {"-affine", "_affine", "^(1)"}) {
    if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) {
      affine = true;
      s.resize(s.size() - suffix.size());
      break;
    }
  }
  if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
    throw error(errc::unsupported, "unsupported root datum tag '" + std::string(tag) + "'");
  for (std::size_t k = 1; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw error(errc::unsupported, "unsupported root datum tag '" + std::string(tag) + "'");
  const std::size_t n = std::stoul(s.substr(1));
  return affine ? affine_datum(s[0], n) : finite_datum(s[0], n);
}

struct WeylWord {
  std::vector<int> letters;

  std::size_t length() const { return letters.size(); }
  friend bool operator==(const WeylWord&, const WeylWord&) = default;

  std::string str() const {
    std::string out = "(";
    for (std::size_t k = 0; k < letters.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(letters[k]);
    }
    return out + ")";
  }
};

struct TranslationWord {
  WeylWord word;
  std::size_t naive_length = 0;  // 2 * sum a_i
  bool matches_naive_length = false;
};

namespace detail {

// Affine Weyl group action on the coroot space (coordinates in the simple
// coroot basis of the finite part).
class AlcoveWalker {
 public:
  AlcoveWalker(std::vector<std::vector<Scalar>> Pf, std::vector<Scalar> theta)
      : P_(std::move(Pf)), theta_(std::move(theta)) {
    const std::size_t n = P_.size();
    thv_ = theta_coroot(theta_, P_);
    // x0 with <x0, alpha_k> = 1 for all k; p = x0 / (ht(theta) + 1) lies in the fundamental alcove
    ScalarMatrix A(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) A(k, i) = root_on_coroot(k, i);
    auto x0 = solve(A, std::vector<Scalar>(n, Scalar(1)));
    if (!x0) throw error(errc::invariant, "singular finite Cartan matrix");
    Scalar ht(0);
    for (const auto& t : theta_) ht += t;
    p_ = *x0;
    for (auto& v : p_) v /= (ht + 1);
  }

  const std::vector<Scalar>& alcove_point() const { return p_; }

  // <alpha_i^vee, alpha_k>
  Scalar root_on_coroot(std::size_t k, std::size_t i) const { return 2 * P_[i][k] / P_[k][k]; }

  Scalar pair_root(const std::vector<Scalar>& x, std::size_t k) const {
    Scalar s(0);
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * root_on_coroot(k, i);
    return s;
  }

  Scalar pair_theta(const std::vector<Scalar>& x) const {
    Scalar s(0);
    for (std::size_t k = 0; k < theta_.size(); ++k) s += theta_[k] * pair_root(x, k);
    return s;
  }

  /// Value of the simple affine root with this label at x.
  Scalar affine_root(int label, const std::vector<Scalar>& x) const {
    if (label == 0) return 1 - pair_theta(x);
    return pair_root(x, static_cast<std::size_t>(label - 1));
  }

  void reflect(int label, std::vector<Scalar>& x) const {
    if (label == 0) {
      const Scalar f = pair_theta(x) - 1;
      for (std::size_t k = 0; k < x.size(); ++k) x[k] -= f * thv_[k];
    } else {
      const std::size_t j = static_cast<std::size_t>(label - 1);
      const Scalar f = pair_root(x, j);
      x[j] -= f;
    }
  }

 private:
  std::vector<std::vector<Scalar>> P_;
  std::vector<Scalar> theta_, thv_, p_;
};

}  // namespace detail

/// Reduced word of the translation by lambda = sum a_i alpha_i^vee, obtained by
/// peeling right descents (smallest label first) until the identity.
inline TranslationWord translation_word(char type, std::size_t n, const std::vector<long>& a) {
  if (a.size() != n) throw error(errc::precondition, "coweight has " + std::to_string(a.size()) + " entries, rank is " +
                                                         std::to_string(n));
  for (long x : a)
    if (x < 0) throw error(errc::precondition, "translation coweight has a negative coefficient");
  type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  RootDatum aff = affine_datum(type, n);
  auto t = detail::finite_table(type, n);
  detail::AlcoveWalker walker(t.P, t.theta);
  // q = w^{-1}(p) with w = t_lambda
  std::vector<Scalar> q = walker.alcove_point();
  for (std::size_t k = 0; k < n; ++k) q[k] -= a[k];
  std::vector<int> peeled;
  const std::size_t guard = 4096;
  while (true) {
    int found = -1;
    for (int label : aff.labels())
      if (walker.affine_root(label, q) < 0) {
        found = label;
        break;
      }
    if (found < 0) break;
    walker.reflect(found, q);
    peeled.push_back(found);
    if (peeled.size() > guard) throw error(errc::invariant, "descent peeling did not terminate");
  }
  if (q != walker.alcove_point()) throw error(errc::invariant, "descent peeling ended away from the identity");
  TranslationWord out;
  out.word.letters.assign(peeled.rbegin(), peeled.rend());
  long total = 0;
  for (long x : a) total += x;
  out.naive_length = static_cast<std::size_t>(2 * total);
  out.matches_naive_length = out.word.length() == out.naive_length;
  return out;
}

inline TranslationWord translation_word(const RootDatum& datum, const std::vector<long>& a) {
  std::string nm = datum.name();
  auto dash = nm.find('-');
  if (dash != std::string::npos) nm.resize(dash);
  return translation_word(nm[0], std::stoul(nm.substr(1)), a);
}

/// Length of the affine Weyl element given by a word: number of descents
/// peeled from the product (equals the word length iff the word is reduced).
inline std::size_t weyl_length(const RootDatum& aff, const WeylWord& w) {
  if (!aff.affine()) throw error(errc::precondition, "weyl_length needs an affine datum");
  std::string nm = aff.name();
  nm.resize(nm.find('-'));
  const char type = nm[0];
  const std::size_t n = std::stoul(nm.substr(1));
  auto t = detail::finite_table(type, n);
  detail::AlcoveWalker walker(t.P, t.theta);
  // q = w^{-1}(p): apply letters of w from the left end first to p in reverse
  std::vector<Scalar> q = walker.alcove_point();
  for (int letter : w.letters) walker.reflect(letter, q);
  std::size_t len = 0;
  while (true) {
    int found = -1;
    for (int label : aff.labels())
      if (walker.affine_root(label, q) < 0) {
        found = label;
        break;
      }
    if (found < 0) break;
    walker.reflect(found, q);
    ++len;
  }
  return len;
}

}  // namespace zastava
