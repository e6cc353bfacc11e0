#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsk/error.hpp"
#include "qsk/integers.hpp"

namespace qsk {

// Variables come in three families: x1..xn (geometric side), q1..q_{n-1}
// (quantum parameters) and h1..h_{n-1} (complete homogeneous generators of the
// target ring). A variable is identified by family + 1-based index.
enum class VarKind : std::uint8_t { X = 0, Q = 1, H = 2 };

struct VarId {
  VarKind kind;
  int index;

  friend bool operator==(const VarId&, const VarId&) = default;
  friend bool operator<(const VarId& a, const VarId& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.index < b.index;
  }
};

std::string var_name(VarId v);

inline VarId xvar(int i) { return {VarKind::X, i}; }
inline VarId qvar(int i) { return {VarKind::Q, i}; }
inline VarId hvar(int i) { return {VarKind::H, i}; }

enum class AlphabetKind : std::uint8_t { X, Q, XQ, H };

// A fixed, finite variable set of a given rank n:
//   X(n)  = x1..xn          Q(n) = q1..q_{n-1}
//   XQ(n) = X(n) + Q(n)     H(n) = h1..h_{n-1}
class VarAlphabet {
 public:
  VarAlphabet(AlphabetKind kind, int n);

  AlphabetKind kind() const { return kind_; }
  int rank() const { return n_; }
  bool contains(VarId v) const;
  std::vector<VarId> variables() const;

  friend bool operator==(const VarAlphabet&, const VarAlphabet&) = default;

 private:
  AlphabetKind kind_;
  int n_;
};

inline VarAlphabet alphabet_x(int n) { return {AlphabetKind::X, n}; }
inline VarAlphabet alphabet_q(int n) { return {AlphabetKind::Q, n}; }
inline VarAlphabet alphabet_xq(int n) { return {AlphabetKind::XQ, n}; }
inline VarAlphabet alphabet_h(int n) { return {AlphabetKind::H, n}; }

// Sorted sparse exponent vector; entries have exponent > 0.
using Monomial = std::vector<std::pair<VarId, int>>;

int monomial_total_degree(const Monomial& m);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
// a / b, or nullopt when b does not divide a.
std::optional<Monomial> monomial_div(const Monomial& a, const Monomial& b);

// Graded-lexicographic, larger-first, so map iteration goes from the leading
// term down. Display and serialization both use this order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Int, MonomialOrder>;

  explicit Polynomial(VarAlphabet alphabet) : alphabet_(alphabet) {}
  static Polynomial constant(VarAlphabet alphabet, Int c);
  static Polynomial variable(VarAlphabet alphabet, VarId v, int exp = 1);

  const VarAlphabet& alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Int coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, Int c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Int& c);
  friend Polynomial operator*(Polynomial a, const Int& c) { return a *= c; }
  friend Polynomial operator*(const Int& c, Polynomial a) { return a *= c; }
  Polynomial pow(int e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
  }

  // Weighted degrees. weight maps a variable to its degree contribution.
  template <class WeightFn>
  long long degree(WeightFn&& weight) const {
    long long best = -1;
    for (const auto& [m, c] : terms_) {
      long long d = 0;
      for (const auto& [v, e] : m) d += static_cast<long long>(weight(v)) * e;
      if (d > best) best = d;
    }
    return best;  // -1 for the zero polynomial
  }
  template <class WeightFn>
  bool is_homogeneous(WeightFn&& weight) const {
    long long seen = -1;
    for (const auto& [m, c] : terms_) {
      long long d = 0;
      for (const auto& [v, e] : m) d += static_cast<long long>(weight(v)) * e;
      if (seen < 0) seen = d;
      else if (seen != d) return false;
    }
    return true;
  }

  // Evaluate under a ring homomorphism. image(v) yields the value of variable v
  // in the target ring R; from_int lifts an integer into R. R needs + and *.
  template <class R, class VarImage, class FromInt>
  R eval(VarImage&& image, FromInt&& from_int) const {
    R acc = from_int(Int(0));
    for (const auto& [m, c] : terms_) {
      R t = from_int(c);
      for (const auto& [v, e] : m) {
        const R& base = image(v);
        for (int k = 0; k < e; ++k) t = t * base;
      }
      acc = acc + t;
    }
    return acc;
  }

  // Exact multivariate division; nullopt when den does not divide *this.
  std::optional<Polynomial> divided_by(const Polynomial& den) const;

  // Terms with any variable of the given family dropped (substitutes 0).
  Polynomial substituted_zero(VarKind kind) const;
  // Same terms re-homed into another alphabet (variables matched by name).
  Polynomial converted(VarAlphabet target) const;
  // Monomial substitution a <-> b (used by divided differences).
  Polynomial swapped_vars(VarId a, VarId b) const;

  // Text form, e.g. "x1^2*x2 + 2*q1*x1 - 3". parse() accepts the same grammar.
  std::string str() const;
  static Polynomial parse(VarAlphabet alphabet, std::string_view text);

  // JSON form: list of {"exponents": {"x1": 2, ...}, "coeff": "<decimal>"}.
  std::string json() const;
  static Polynomial from_json(VarAlphabet alphabet, std::string_view text);

 private:
  void check_same_alphabet(const Polynomial& o) const;

  VarAlphabet alphabet_;
  TermMap terms_;
};

}  // namespace qsk
