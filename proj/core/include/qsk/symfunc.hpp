#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsk/partition.hpp"
#include "qsk/polynomial.hpp"

namespace qsk {

// The ambient ring for the symmetric-function side of every identity in this
// library is Z[h1..h_{n-1}], the quotient of the full ring of symmetric
// functions by h_m = 0 for m >= n. Schur functions are represented through
// their Jacobi-Trudi images in that quotient; a straight shape with
// lambda_1 >= n maps to zero (its whole top determinant row dies), while skew
// shapes and e-images can survive with nontrivial combinations.
using HPoly = Polynomial;

// h_m as an HPoly of rank n: 1 for m == 0, zero for m < 0 or m >= n.
HPoly h_gen(int m, int n);

// deg h_i = i. The grading used everywhere on the h side.
inline int h_weight(VarId v) { return v.kind == VarKind::H ? v.index : 1; }

// The monomial h_{mu_1} h_{mu_2} ...; parts must stay below the rank to be
// usable in H(n).
Monomial h_monomial(const Partition& mu);

// det(h_{lambda_i - i + j}).
const HPoly& schur_to_h(const Partition& lambda, int n);
// det(h_{lambda_i - mu_j - i + j}); zero when mu is not contained in lambda.
HPoly skew_schur_to_h(const Partition& lambda, const Partition& mu, int n);

using SchurExpansion = std::map<Partition, Int>;

// Inverse of schur_to_h on homogeneous input: writes f as an integer
// combination of s_lambda over partitions of `degree` with parts <= n-1.
// The transition to the h-monomial basis is unitriangular under dominance
// (refined by lex), so this is exact back-substitution with no rationals.
SchurExpansion schur_expand(const HPoly& f, int degree);

// Adjoint of multiplication by s_mu, term by term on a Schur expansion.
SchurExpansion perp(const Partition& mu, const SchurExpansion& f, int n);

// Sum of c * schur_to_h(shape) over the expansion's entries.
HPoly schur_expansion_to_h(const SchurExpansion& f, int n);

// The rectangles R_i = i^{n-i} and R'_i = R_i minus its outer corner, with the
// boundary conventions s_{R_0} = s_{R_n} = 1 and s_{R'_0} = s_{R'_n} = 0.
Partition rect_shape(int i, int n);
Partition rect_clipped_shape(int i, int n);
const HPoly& rect_schur(int i, int n);
HPoly rect_clipped_schur(int i, int n);

// Determinant by row-wise Laplace expansion with column-subset memoization;
// fine for the sizes Jacobi-Trudi needs, no division required.
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& mat, VarAlphabet alphabet);

std::string schur_expansion_json(const SchurExpansion& f);
SchurExpansion schur_expansion_from_json(std::string_view text);

}  // namespace qsk
