#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qsk/partition.hpp"
#include "qsk/polynomial.hpp"

namespace qsk {

// Permutation of {1..n} in one-line notation.
class Perm {
 public:
  explicit Perm(std::vector<int> window);
  static Perm identity(int n);
  static Perm longest(int n);  // n, n-1, ..., 1

  int rank() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }
  int operator()(int i) const;     // 1-based
  int position_of(int value) const;  // inverse image of a value

  Perm inverse() const;
  // Composition as functions: (a*b)(i) = a(b(i)).
  friend Perm operator*(const Perm& a, const Perm& b);
  // w s_i, i.e. swap the window entries at positions i, i+1.
  Perm times_simple(int i) const;

  int length() const;  // inversion count
  std::vector<int> descents() const;  // {i : w(i) > w(i+1)}
  // A reduced word (s_{a_1} ... s_{a_l} = w), built by stripping descents.
  std::vector<int> reduced_word() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend bool operator<(const Perm& a, const Perm& b) { return a.window_ < b.window_; }

  std::string str() const;  // "2,1,3"
  static Perm parse(std::string_view text);
  static std::vector<Perm> all(int n);  // lexicographic one-line order

 private:
  std::vector<int> window_;
};

// (p - p with x_i, x_{i+1} swapped) / (x_i - x_{i+1}); always exact.
Polynomial divided_difference(int i, const Polynomial& p);

// Schubert polynomial of w, top monomial x_1^{n-1} x_2^{n-2} ... x_{n-1}.
const Polynomial& schubert_poly(const Perm& w);
// Same, but along a caller-chosen reduced word of w^{-1} w_0 (the divided
// differences are applied right to left). Used to test word independence.
Polynomial schubert_poly_via_word(const Perm& w, const std::vector<int>& word);

// Index tuple (i_1,...,i_{n-1}), 0 <= i_k <= k, for the product basis
// e_{i_1}(x_1) e_{i_2}(x_1,x_2) ... e_{i_{n-1}}(x_1..x_{n-1}); n! of them.
using ETuple = std::vector<int>;
std::vector<ETuple> all_etuples(int n);
const Polynomial& elementary_monomial(const ETuple& t, int n);

// Exact integer coordinates of p in the product basis; errors with
// "not in standard elementary span" when p is outside it.
std::map<ETuple, Int> elementary_expansion(const Polynomial& p);
std::string etuple_expansion_json(const std::map<ETuple, Int>& expansion);

// E^q_i(m): quantum deformation of e_i(x_1..x_m) by
//   E^q_i(m) = E^q_i(m-1) + x_m E^q_{i-1}(m-1) + q_{m-1} E^q_{i-2}(m-2).
const Polynomial& quantum_e(int i, int m, int n);

// Elementary expansion of schubert_poly(w) with each e_i(m) replaced by
// E^q_i(m).
const Polynomial& quantum_schubert(const Perm& w);

// Flagged determinant det(E^q_{lambda'_i - i + j}(x_1..x_{m+j-1})) of size
// lambda_1; needs len(lambda) <= m and lambda_1 <= n-m. Coincides with the
// quantum Schubert polynomial of the m-Grassmannian permutation of shape
// lambda.
Polynomial quantum_schur(const Partition& lambda, int m, int n);

// The unique m-Grassmannian permutation of shape lambda:
// (1+lambda_m, 2+lambda_{m-1}, ..., m+lambda_1, rest ascending).
Perm grassmannian_perm(const Partition& lambda, int m, int n);

// Every value decremented cyclically: 1 -> n, v -> v-1 otherwise.
Perm shift_values_down(const Perm& w);

}  // namespace qsk
