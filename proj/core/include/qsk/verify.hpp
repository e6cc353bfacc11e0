#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qsk/check.hpp"
#include "qsk/locring.hpp"
#include "qsk/partition.hpp"
#include "qsk/schubert.hpp"

namespace qsk {

// Image of quantum_e(i, m, n) under the rational substitution, built by the
// same three-term recursion but directly in the localized ring (cached).
// Denominators stay small this way, which keeps the sweeps fast at n = 5, 6.
const LocElem& phi_quantum_e(int i, int m, int n);

// Image of quantum_schubert(w): sum of c_T * prod_k phi_quantum_e(i_k, k)
// over the elementary expansion of schubert_poly(w). Agrees with
// phi(quantum_schubert(w)) but never materializes the large x/q polynomial.
LocElem phi_quantum_schubert(const Perm& w);

// One row of the main verification sweep.
struct TheoremRecord {
  Perm w = Perm::identity(1);
  std::vector<int> descents;
  Partition lambda;
  LocElem lhs = LocElem(2);
  LocElem rhs = LocElem(2);
  bool pass = false;
  std::string detail;  // mismatch description or the per-permutation error
};

struct VerifyReport {
  int n = 0;
  std::vector<TheoremRecord> records;  // in the order the sweep was given
  int pass_count = 0;
  long long millis = 0;
  bool passed() const { return pass_count == static_cast<int>(records.size()); }
};

// For every w in S_n, in lexicographic one-line order: lhs is the image of
// the quantum Schubert polynomial of w, rhs is the k-Schur function of
// lambda_of(w) over prod_{i in Des(w)} s_{R_i}; the record holds loc_eq of
// the two. Also cross-checks lambda_of against lambda_of_via_lemma. Domain
// errors are recorded per permutation, never fatal to the sweep. jobs > 1
// fans rows out to a worker pool; record order is input order regardless.
VerifyReport verify_theorem(int n, int jobs = 1);
VerifyReport verify_theorem_subset(int n, const std::vector<Perm>& perms,
                                   int jobs = 1);

std::string report_json(const VerifyReport& report);
VerifyReport report_from_json(std::string_view text);

// Image of S^q_{w'} equals image of S^q_w times s_{R_{j-1}}/s_{R_j} with
// j = w^{-1}(1) and w' = shift_values_down(w) (conventions s_{R_0} = s_{R_n}
// = 1), plus lambda_of(w') = lambda_of(w), for every w in S_n.
std::vector<Check> verify_cyclic(int n);

// For 1 <= m <= n-1 and lambda inside the m x (n-m) rectangle, the image of
// quantum_schur(lambda, m) is checked against (s_{lambda'}^perp s_{R_m}) /
// s_{R_m}, against s_{complement transpose of lambda} / s_{R_m}, and against
// the m-Grassmannian permutation of shape lambda: its quantum Schubert
// polynomial must coincide, and its affine translate by -omega_m must be
// Grassmannian with bounded partition the complement transpose.
std::vector<Check> verify_qschur_image(int n);

// Images of the block rotations [n-i+1..n, 1..n-i]: each equals 1/s_{R_i},
// and pairwise products multiply accordingly (1/(s_{R_i} s_{R_j})).
std::vector<Check> verify_rotation_images(int n);

// d_i window identities for every i, plus the rectangle factor decomposition
// contract on all Grassmannian elements of length <= max_size: the bounded
// partition is b(core) plus rectangles as a multiset of parts, the core is
// irreducible (no i divides out, and no rectangle fits in its parts as a
// multiset), and kschur_in_h factors the same way.
std::vector<Check> verify_appendix(int n, int max_size = 8);

}  // namespace qsk
