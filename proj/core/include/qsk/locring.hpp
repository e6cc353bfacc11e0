#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qsk/polynomial.hpp"
#include "qsk/symfunc.hpp"

namespace qsk {

// Element of Z[h1..h_{n-1}] localized at the rectangle Schur polynomials
// s_{R_1}, ..., s_{R_{n-1}}: a numerator together with a vector of denominator
// exponents (d_1, ..., d_{n-1}), all >= 0, meaning num / prod_i s_{R_i}^{d_i}.
// Values are immutable; arithmetic returns reduced results. There is no
// canonical form: use loc_eq for semantic equality.
class LocElem {
 public:
  explicit LocElem(int n);  // zero of rank n
  LocElem(HPoly num, std::vector<int> den);

  static LocElem from_int(int n, Int c);
  static LocElem from_poly(HPoly num);
  // 1 / s_{R_i}.
  static LocElem inverse_rect(int n, int i);

  int rank() const { return num_.alphabet().rank(); }
  const HPoly& num() const { return num_; }
  const std::vector<int>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  LocElem operator-() const;
  friend LocElem operator+(const LocElem& a, const LocElem& b);
  friend LocElem operator-(const LocElem& a, const LocElem& b);
  friend LocElem operator*(const LocElem& a, const LocElem& b);

  // Divides the numerator by each s_{R_i} as long as the exact division
  // succeeds and d_i > 0. Best effort, semantically the identity.
  LocElem reduced() const;

  // "h1 / e2*h2" style; rectangle factors are named h{n-1}, e{n-1} or sR{i}.
  std::string str() const;
  std::string json() const;
  static LocElem from_json(std::string_view text);

 private:
  HPoly num_;
  std::vector<int> den_;
};

// Cross-multiplication equality test (exact; the h-ring is a domain).
bool loc_eq(const LocElem& a, const LocElem& b);

// s_{R_i}^e with a process-wide cache.
const HPoly& rect_schur_power(int i, int e, int n);

// The rational substitution on x/q polynomials:
//   x_i -> P_i - P_{i-1} with P_i = s_{R'_i}/s_{R_i} (P_0 = P_n = 0),
//   q_i -> s_{R_{i-1}} s_{R_{i+1}} / s_{R_i}^2.
const LocElem& phi_x_image(int i, int n);  // 1 <= i <= n
const LocElem& phi_q_image(int i, int n);  // 1 <= i <= n-1
LocElem phi(const Polynomial& p);

// Ring-homomorphism evaluation of an arbitrary polynomial; every variable of p
// must have an image of the given rank.
LocElem eval_hom(const Polynomial& p, const std::map<VarId, LocElem>& images, int rank);

// Balanced pairwise summation (keeps intermediate denominators small).
LocElem loc_sum(std::vector<LocElem> items, int n);

}  // namespace qsk
