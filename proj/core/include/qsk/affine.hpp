#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qsk/check.hpp"
#include "qsk/partition.hpp"
#include "qsk/schubert.hpp"

namespace qsk {

// Affine permutation of rank n in window notation: a bijection x of the
// integers with x(i+n) = x(i)+n, stored as [x(1),...,x(n)]. Windows with
// distinct residues mod n and arbitrary sum represent the extended group
// (rotations allowed); the non-extended subgroup is exactly the windows whose
// entries sum to 1+2+...+n. Adding n to every entry gives the same extended
// element: compare with same_extended when that identification matters.
class AffinePerm {
 public:
  explicit AffinePerm(std::vector<int> window);
  static AffinePerm identity(int n);
  // s_i for 0 <= i <= n-1; s_0 = [0, 2, ..., n-1, n+1].
  static AffinePerm simple(int i, int n);
  // The shift j -> j-m, window [1-m, ..., n-m].
  static AffinePerm rotation(int m, int n);

  int rank() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }
  long long apply(long long j) const;

  bool is_proper() const;  // entries sum to 1+...+n (non-extended subgroup)
  // m with *this = rotation(m) * proper_part(), before/after reduction mod n.
  int rotation_shift() const;
  int rotation_part() const { return ((rotation_shift() % rank()) + rank()) % rank(); }
  AffinePerm proper_part() const;

  friend AffinePerm operator*(const AffinePerm& a, const AffinePerm& b);
  AffinePerm inverse() const;

  int length() const;  // affine inversion count
  bool is_grassmannian() const;  // strictly increasing window
  std::vector<int> right_descents() const;  // i in [0, n-1] with l(x s_i) < l(x)
  std::vector<int> reduced_word() const;  // empty for length-zero elements

  bool same_extended(const AffinePerm& other) const;

  friend bool operator==(const AffinePerm&, const AffinePerm&) = default;
  friend bool operator<(const AffinePerm& a, const AffinePerm& b) {
    return a.window_ < b.window_;
  }

  std::string str() const;  // "[-2,0,2]"
  static AffinePerm parse(std::string_view text);

 private:
  std::vector<int> window_;
};

// Coweights as raw integer vectors of length n, read modulo (1,...,1).
using CoweightVec = std::vector<int>;
CoweightVec omega_coweight(int i, int n);  // e_1 + ... + e_i, 0 <= i <= n
CoweightVec coweight_sum(const CoweightVec& a, const CoweightVec& b);
CoweightVec coweight_negate(const CoweightVec& a);
bool is_antidominant(const CoweightVec& a);            // weakly increasing entries
bool in_coroot_lattice_class(const CoweightVec& a);    // some representative sums to 0

// t_lambda = [1 + n*lambda_1, ..., n + n*lambda_n].
AffinePerm translation(const CoweightVec& lambda);

// [n-i+1, ..., n, 1, ..., n-i]: the finite permutation rotating values by n-i.
AffinePerm block_rotation_perm(int i, int n);  // 0 <= i <= n-1
// tau_i = block_rotation_perm(i) * translation(-omega_i); equals rotation(i).
AffinePerm special_rotation(int i, int n);

// The proper (non-extended) part of t_{-omega_i}: the affine Grassmannian
// element whose bounded partition is the rectangle R_i.
AffinePerm d_element(int i, int n);

// b(y): the (n-1)-bounded partition with column lengths
// lambda'_r = #{ integers j < r : y(j) > y(r) }, r = 1..n-1. Insensitive to
// rotation components. Requires an increasing window.
Partition bounded_partition_of(const AffinePerm& y);

// The partition attached to a finite permutation by circular-shift peeling:
// after cycling w's values so that w(1) = 1, m_r counts the left rotations of
// the suffix at positions r+1..n needed to bring w(r+1) into place, and the
// result has m_r parts equal to r.
Partition lambda_of(const Perm& w);
// Independent route: y(i) = w(i) - n * #{j in Des(w) : j >= i} must be an
// increasing window; returns bounded_partition_of(y).
Partition lambda_of_via_lemma(const Perm& w);

// l(y) = l(y * d_i^{-1}) + l(d_i)?
bool i_reducible(const AffinePerm& y, int i);

struct RectFactorization {
  AffinePerm core;
  std::vector<int> exponents;  // exponents[i-1] = multiplicity of d_i
};
// Greedily peels rectangle factors: while some i is reducible, replace y by
// the proper part of tau_i * (y d_i^{-1}) * tau_i^{-1} and count the factor.
RectFactorization rectangle_factor_decomposition(const AffinePerm& y);

// Window identities tying d_i to the special rotations, plus shape/length
// facts about d_i itself.
std::vector<Check> check_d_formulas(int i, int n);

// All strictly-increasing-window proper elements of length <= max_len, by
// breadth-first search upward in left weak order.
std::vector<AffinePerm> grassmannian_up_to_length(int n, int max_len);

}  // namespace qsk
