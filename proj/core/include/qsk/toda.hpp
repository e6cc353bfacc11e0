#pragma once

#include <string>
#include <vector>

#include "qsk/check.hpp"
#include "qsk/locring.hpp"
#include "qsk/polynomial.hpp"

namespace qsk {

using PolyMatrix = std::vector<std::vector<Polynomial>>;
using LocMatrix = std::vector<std::vector<LocElem>>;

LocMatrix loc_identity_matrix(int n);
LocMatrix loc_matrix_mul(const LocMatrix& a, const LocMatrix& b);
bool loc_matrix_eq(const LocMatrix& a, const LocMatrix& b);
std::string loc_matrix_json(const LocMatrix& m);

// Tridiagonal Lax matrix over XQ(n): diagonal x_i, superdiagonal -1,
// subdiagonal q_i.
PolyMatrix lax_matrix(int n);

// H_k = tr(L^{k+1}) for k = 1..n, kept integer-scaled (no division by k+1, so
// every coefficient stays in Z). Each is homogeneous of degree k+1 under
// deg x = 1, deg q = 2.
std::vector<Polynomial> hamiltonians(int n);

// Unipotent upper-triangular Toeplitz matrix with (i,j) entry h_{j-i}.
LocMatrix toeplitz_g(int n);

// Lower unitriangular, (i,j) entry (-1)^{i-j} (e_{i-j}^perp s_{R_j})/s_{R_j}
// below the diagonal.
LocMatrix n_minus_closed_form(int n);
// Lower unitriangular, (i,j) entry (h_{i-j}^perp s_{R_{i-1}})/s_{R_{i-1}};
// verified against n_minus_closed_form (product must be the identity).
LocMatrix n_minus_inverse_closed_form(int n);

// Does g * n_minus vanish strictly above the anti-diagonal (i+j <= n)?
bool antitriangular_check(int n);

// n_minus^{-1} e n_minus with e the superdiagonal -1 matrix; aborts unless the
// result is tridiagonal.
LocMatrix psi(int n);

// Entrywise comparison of psi(n) against the phi-image of the Lax matrix,
// plus shape facts: superdiagonal -1, trace zero, nilpotency of order n,
// and phi(H_k) = 0 for every Hamiltonian.
std::vector<Check> verify_kostant(int n);

}  // namespace qsk
