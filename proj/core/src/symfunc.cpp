#include "qsk/symfunc.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <mutex>
#include <utility>

#include <json.hpp>

namespace qsk {

HPoly h_gen(int m, int n) {
  if (n < 1) throw error("h_gen: rank must be at least 1");
  VarAlphabet a = alphabet_h(n);
  if (m < 0 || m >= n) return HPoly(a);
  if (m == 0) return HPoly::constant(a, 1);
  return HPoly::variable(a, hvar(m));
}

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& mat, VarAlphabet alphabet) {
  const std::size_t size = mat.size();
  if (size == 0) return Polynomial::constant(alphabet, 1);
  if (size > 63) throw internal_error("poly_det: matrix too large");
  for (const auto& row : mat)
    if (row.size() != size) throw internal_error("poly_det: matrix not square");

  // Expand row by row, keyed by the set of columns consumed so far. Zero
  // entries never extend a mask, so banded matrices (the Jacobi-Trudi case)
  // touch only a tiny fraction of the 2^size subsets.
  std::map<std::uint64_t, Polynomial> level;
  level.emplace(0, Polynomial::constant(alphabet, 1));
  for (std::size_t r = 0; r < size; ++r) {
    std::map<std::uint64_t, Polynomial> next;
    for (const auto& [mask, val] : level) {
      for (std::size_t j = 0; j < size; ++j) {
        if (mask & (std::uint64_t{1} << j)) continue;
        const Polynomial& entry = mat[r][j];
        if (entry.is_zero()) continue;
        Polynomial term = val * entry;
        // Parity of already-used columns to the right of j = inversions added.
        if (std::popcount(mask >> (j + 1)) & 1) term = -term;
        const std::uint64_t key = mask | (std::uint64_t{1} << j);
        auto it = next.find(key);
        if (it == next.end()) {
          next.emplace(key, std::move(term));
        } else {
          it->second += term;
          if (it->second.is_zero()) next.erase(it);
        }
      }
    }
    level = std::move(next);
  }

  auto it = level.find((std::uint64_t{1} << size) - 1);
  if (it == level.end()) return Polynomial(alphabet);
  return std::move(it->second);
}

HPoly skew_schur_to_h(const Partition& lambda, const Partition& mu, int n) {
  VarAlphabet a = alphabet_h(n);
  if (!lambda.contains(mu)) return HPoly(a);
  const int rows = lambda.length();
  if (rows == 0) return HPoly::constant(a, 1);
  std::vector<std::vector<Polynomial>> m;
  m.reserve(rows);
  for (int i = 1; i <= rows; ++i) {
    std::vector<Polynomial> row;
    row.reserve(rows);
    for (int j = 1; j <= rows; ++j) row.push_back(h_gen(lambda.part(i) - mu.part(j) - i + j, n));
    m.push_back(std::move(row));
  }
  return poly_det(m, a);
}

const HPoly& schur_to_h(const Partition& lambda, int n) {
  static std::mutex guard;
  static std::map<std::pair<std::vector<int>, int>, HPoly> cache;
  std::pair<std::vector<int>, int> key{lambda.parts(), n};
  {
    std::scoped_lock lock(guard);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  HPoly value = skew_schur_to_h(lambda, Partition{}, n);
  std::scoped_lock lock(guard);
  return cache.try_emplace(std::move(key), std::move(value)).first->second;
}

Monomial h_monomial(const Partition& mu) {
  Monomial m;
  const auto& ps = mu.parts();
  std::size_t i = 0;
  while (i < ps.size()) {
    std::size_t j = i;
    while (j < ps.size() && ps[j] == ps[i]) ++j;
    m.push_back({hvar(ps[i]), static_cast<int>(j - i)});
    i = j;
  }
  std::reverse(m.begin(), m.end());  // Monomial wants ascending variable ids
  return m;
}

SchurExpansion schur_expand(const HPoly& f, int degree) {
  if (f.alphabet().kind() != AlphabetKind::H)
    throw internal_error("schur_expand: input must live in an h-alphabet");
  SchurExpansion out;
  if (f.is_zero()) return out;
  if (degree < 0 || !f.is_homogeneous(h_weight) || f.degree(h_weight) != degree)
    throw internal_error("schur_expand: input not homogeneous of the stated degree");
  const int n = f.alphabet().rank();

  // s_mu = h_mu + (h_nu terms with nu strictly dominating mu), and dominance
  // implies lex-greater, so sweeping shapes in ascending lex order makes the
  // h_mu coefficient of the residual exactly the Schur coefficient of mu.
  HPoly residual = f;
  std::vector<Partition> shapes = Partition::all(degree, n - 1);
  for (auto it = shapes.rbegin(); it != shapes.rend(); ++it) {
    Int c = residual.coefficient(h_monomial(*it));
    if (c == 0) continue;
    residual -= schur_to_h(*it, n) * c;
    out.emplace(*it, std::move(c));
  }
  if (!residual.is_zero())
    throw internal_error("schur_expand: nonzero residual after back-substitution");
  return out;
}

SchurExpansion perp(const Partition& mu, const SchurExpansion& f, int n) {
  SchurExpansion out;
  for (const auto& [lambda, c] : f) {
    if (c == 0 || !lambda.contains(mu)) continue;
    HPoly skew = skew_schur_to_h(lambda, mu, n);
    if (skew.is_zero()) continue;
    for (auto& [nu, d] : schur_expand(skew, lambda.size() - mu.size())) {
      auto it = out.find(nu);
      if (it == out.end()) {
        out.emplace(nu, c * d);
      } else {
        it->second += c * d;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

HPoly schur_expansion_to_h(const SchurExpansion& f, int n) {
  HPoly out(alphabet_h(n));
  for (const auto& [shape, c] : f) out += schur_to_h(shape, n) * c;
  return out;
}

Partition rect_shape(int i, int n) {
  if (n < 1 || i < 0 || i > n) throw error("rect_shape: need 0 <= i <= n");
  if (i == 0 || i == n) return Partition{};
  return Partition::rectangle(i, n - i);
}

Partition rect_clipped_shape(int i, int n) {
  if (n < 1 || i < 1 || i > n - 1) throw error("rect_clipped_shape: need 1 <= i <= n-1");
  std::vector<int> parts(rect_shape(i, n).parts());
  parts.back() -= 1;  // remove the outer corner cell row-wise: last row loses a cell
  if (parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

const HPoly& rect_schur(int i, int n) { return schur_to_h(rect_shape(i, n), n); }

HPoly rect_clipped_schur(int i, int n) {
  if (n < 1 || i < 0 || i > n) throw error("rect_clipped_schur: need 0 <= i <= n");
  if (i == 0 || i == n) return HPoly(alphabet_h(n));
  return schur_to_h(rect_clipped_shape(i, n), n);
}

std::string schur_expansion_json(const SchurExpansion& f) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [shape, c] : f) j[shape.str()] = c.str();
  return j.dump();
}

SchurExpansion schur_expansion_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw error(std::string("schur expansion: bad json: ") + e.what());
  }
  if (!j.is_object()) throw error("schur expansion: expected a json object");
  SchurExpansion out;
  for (const auto& [key, value] : j.items()) {
    Int c;
    if (value.is_string()) c = Int(value.get<std::string>());
    else if (value.is_number_integer()) c = Int(value.get<long long>());
    else throw error("schur expansion: coefficient must be a string or integer");
    if (c == 0) continue;
    out.emplace(Partition::parse(key), std::move(c));
  }
  return out;
}

}  // namespace qsk
