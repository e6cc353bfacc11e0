#include "qsk/toda.hpp"

#include <utility>

#include <json.hpp>

#include "qsk/symfunc.hpp"

namespace qsk {

namespace {

void check_rank(int n) {
  if (n < 1) throw error("matrix rank must be at least 1");
}

PolyMatrix poly_matrix_mul(const PolyMatrix& a, const PolyMatrix& b, const VarAlphabet& alphabet) {
  const std::size_t n = a.size();
  PolyMatrix out(n, std::vector<Polynomial>(n, Polynomial(alphabet)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[k][j].is_zero()) continue;
        out[i][j] += a[i][k] * b[k][j];
      }
    }
  return out;
}

// e_m^perp or h_m^perp applied to s_{R_j}, as an h-polynomial.
HPoly perp_of_rect(bool elementary, int m, int j, int n) {
  SchurExpansion rect{{rect_shape(j, n), Int(1)}};
  Partition mu = elementary ? Partition(std::vector<int>(static_cast<std::size_t>(m), 1))
                            : Partition(std::vector<int>{m});
  return schur_expansion_to_h(perp(mu, rect, n), n);
}

}  // namespace

LocMatrix loc_identity_matrix(int n) {
  check_rank(n);
  LocMatrix out(static_cast<std::size_t>(n),
                std::vector<LocElem>(static_cast<std::size_t>(n), LocElem(n)));
  for (int i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = LocElem::from_int(n, 1);
  return out;
}

LocMatrix loc_matrix_mul(const LocMatrix& a, const LocMatrix& b) {
  const std::size_t n = a.size();
  if (n == 0 || b.size() != n) throw error("loc_matrix_mul: size mismatch");
  const int rank = a[0][0].rank();
  LocMatrix out(n, std::vector<LocElem>(n, LocElem(rank)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[k][j].is_zero()) continue;
        out[i][j] = out[i][j] + a[i][k] * b[k][j];
      }
    }
  return out;
}

bool loc_matrix_eq(const LocMatrix& a, const LocMatrix& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (!loc_eq(a[i][j], b[i][j])) return false;
  }
  return true;
}

std::string loc_matrix_json(const LocMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : m) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& e : row) r.push_back(nlohmann::ordered_json::parse(e.json()));
    rows.push_back(std::move(r));
  }
  return rows.dump();
}

PolyMatrix lax_matrix(int n) {
  check_rank(n);
  VarAlphabet a = alphabet_xq(n);
  PolyMatrix out(static_cast<std::size_t>(n),
                 std::vector<Polynomial>(static_cast<std::size_t>(n), Polynomial(a)));
  for (int i = 1; i <= n; ++i) {
    out[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(i) - 1] =
        Polynomial::variable(a, xvar(i));
    if (i <= n - 1) {
      out[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(i)] =
          Polynomial::constant(a, -1);
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(i) - 1] =
          Polynomial::variable(a, qvar(i));
    }
  }
  return out;
}

std::vector<Polynomial> hamiltonians(int n) {
  check_rank(n);
  VarAlphabet a = alphabet_xq(n);
  const PolyMatrix lax = lax_matrix(n);
  PolyMatrix power = lax;
  std::vector<Polynomial> out;
  auto toda_weight = [](VarId v) { return v.kind == VarKind::Q ? 2 : 1; };
  for (int k = 1; k <= n; ++k) {
    power = poly_matrix_mul(power, lax, a);  // L^{k+1}
    Polynomial trace(a);
    for (int i = 0; i < n; ++i)
      trace += power[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    if (!trace.is_homogeneous(toda_weight) || (!trace.is_zero() && trace.degree(toda_weight) != k + 1))
      throw internal_error("hamiltonians: trace not homogeneous of the expected degree");
    out.push_back(std::move(trace));
  }
  return out;
}

LocMatrix toeplitz_g(int n) {
  check_rank(n);
  LocMatrix out(static_cast<std::size_t>(n),
                std::vector<LocElem>(static_cast<std::size_t>(n), LocElem(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      out[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] =
          LocElem::from_poly(h_gen(j - i, n));
  return out;
}

LocMatrix n_minus_closed_form(int n) {
  check_rank(n);
  LocMatrix out = loc_identity_matrix(n);
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j) {
      HPoly num = perp_of_rect(true, i - j, j, n);
      if ((i - j) % 2) num = -num;
      std::vector<int> den(static_cast<std::size_t>(n - 1), 0);
      den[static_cast<std::size_t>(j) - 1] = 1;
      out[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] =
          LocElem(std::move(num), std::move(den)).reduced();
    }
  return out;
}

LocMatrix n_minus_inverse_closed_form(int n) {
  check_rank(n);
  LocMatrix out = loc_identity_matrix(n);
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j) {
      HPoly num = perp_of_rect(false, i - j, i - 1, n);
      std::vector<int> den(static_cast<std::size_t>(n - 1), 0);
      den[static_cast<std::size_t>(i) - 2] = 1;
      out[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] =
          LocElem(std::move(num), std::move(den)).reduced();
    }
  if (!loc_matrix_eq(loc_matrix_mul(out, n_minus_closed_form(n)), loc_identity_matrix(n)))
    throw internal_error("n_minus_inverse_closed_form: product with n_minus is not the identity");
  return out;
}

bool antitriangular_check(int n) {
  const LocMatrix prod = loc_matrix_mul(toeplitz_g(n), n_minus_closed_form(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i + j <= n && !prod[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1].is_zero())
        return false;
  return true;
}

LocMatrix psi(int n) {
  check_rank(n);
  LocMatrix e(static_cast<std::size_t>(n),
              std::vector<LocElem>(static_cast<std::size_t>(n), LocElem(n)));
  for (int i = 1; i <= n - 1; ++i)
    e[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(i)] = LocElem::from_int(n, -1);
  const LocMatrix lower = n_minus_closed_form(n);
  LocMatrix out = loc_matrix_mul(n_minus_inverse_closed_form(n), loc_matrix_mul(e, lower));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if ((j > i + 1 || i > j + 1) &&
          !out[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1].is_zero())
        throw internal_error("psi: conjugate is not tridiagonal");
  return out;
}

std::vector<Check> verify_kostant(int n) {
  std::vector<Check> out;
  const LocMatrix m = psi(n);
  const PolyMatrix lax = lax_matrix(n);

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const LocElem& lhs = m[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1];
      const LocElem rhs = phi(lax[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1]);
      const bool pass = loc_eq(lhs, rhs);
      out.push_back({"entry-" + std::to_string(i) + "-" + std::to_string(j), pass,
                     pass ? lhs.str() : lhs.str() + " vs " + rhs.str()});
    }

  bool super = true;
  for (int i = 1; i <= n - 1; ++i)
    super = super &&
            loc_eq(m[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(i)],
                   LocElem::from_int(n, -1));
  out.push_back({"superdiagonal-minus-one", super, ""});

  LocElem trace(n);
  for (int i = 1; i <= n; ++i)
    trace = trace + m[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(i) - 1];
  out.push_back({"trace-zero", trace.is_zero(), trace.str()});

  LocMatrix power = m;
  for (int k = 2; k <= n; ++k) power = loc_matrix_mul(power, m);
  bool nilpotent = true;
  for (const auto& row : power)
    for (const auto& entry : row) nilpotent = nilpotent && entry.is_zero();
  out.push_back({"nilpotent-order-n", nilpotent, ""});

  const std::vector<Polynomial> hams = hamiltonians(n);
  for (int k = 1; k <= n; ++k) {
    const LocElem image = phi(hams[static_cast<std::size_t>(k) - 1]);
    out.push_back({"hamiltonian-" + std::to_string(k) + "-vanishes",
                   image.is_zero(), image.is_zero() ? "" : image.str()});
  }

  return out;
}

}  // namespace qsk
