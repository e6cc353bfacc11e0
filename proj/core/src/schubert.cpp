#include "qsk/schubert.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>
#include <utility>

#include <json.hpp>

#include "qsk/symfunc.hpp"

namespace qsk {

Perm::Perm(std::vector<int> window) : window_(std::move(window)) {
  const int n = static_cast<int>(window_.size());
  if (n < 1) throw error("Perm: empty one-line notation");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : window_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw error("Perm: not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::identity(int n) {
  if (n < 1) throw error("Perm: rank must be at least 1");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Perm(std::move(w));
}

Perm Perm::longest(int n) {
  if (n < 1) throw error("Perm: rank must be at least 1");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return Perm(std::move(w));
}

int Perm::operator()(int i) const {
  if (i < 1 || i > rank()) throw error("Perm: index out of range");
  return window_[static_cast<std::size_t>(i) - 1];
}

int Perm::position_of(int value) const {
  for (int i = 1; i <= rank(); ++i)
    if (window_[static_cast<std::size_t>(i) - 1] == value) return i;
  throw error("Perm: value out of range");
}

Perm Perm::inverse() const {
  std::vector<int> w(window_.size());
  for (int i = 1; i <= rank(); ++i) w[static_cast<std::size_t>((*this)(i)) - 1] = i;
  return Perm(std::move(w));
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.rank() != b.rank()) throw error("Perm: rank mismatch");
  std::vector<int> w(a.window_.size());
  for (int i = 1; i <= a.rank(); ++i) w[static_cast<std::size_t>(i) - 1] = a(b(i));
  return Perm(std::move(w));
}

Perm Perm::times_simple(int i) const {
  if (i < 1 || i > rank() - 1) throw error("Perm: simple reflection index out of range");
  std::vector<int> w = window_;
  std::swap(w[static_cast<std::size_t>(i) - 1], w[static_cast<std::size_t>(i)]);
  return Perm(std::move(w));
}

int Perm::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < window_.size(); ++i)
    for (std::size_t j = i + 1; j < window_.size(); ++j)
      if (window_[i] > window_[j]) ++inv;
  return inv;
}

std::vector<int> Perm::descents() const {
  std::vector<int> out;
  for (int i = 1; i <= rank() - 1; ++i)
    if ((*this)(i) > (*this)(i + 1)) out.push_back(i);
  return out;
}

std::vector<int> Perm::reduced_word() const {
  std::vector<int> word;
  Perm cur = *this;
  for (;;) {
    int i = 0;
    for (int j = 1; j <= rank() - 1; ++j)
      if (cur(j) > cur(j + 1)) {
        i = j;
        break;
      }
    if (i == 0) break;
    cur = cur.times_simple(i);
    word.push_back(i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::string Perm::str() const {
  std::string out;
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(window_[i]);
  }
  return out;
}

Perm Perm::parse(std::string_view text) {
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
    text.remove_prefix(1);
    text.remove_suffix(1);
  }
  std::vector<int> w;
  std::string buf(text);
  for (char& c : buf)
    if (c == ',') c = ' ';
  std::istringstream in(buf);
  int v = 0;
  while (in >> v) w.push_back(v);
  if (!in.eof()) throw error("Perm: cannot parse '" + std::string(text) + "'");
  return Perm(std::move(w));
}

std::vector<Perm> Perm::all(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Perm> out;
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Polynomial divided_difference(int i, const Polynomial& p) {
  const int n = p.alphabet().rank();
  if (p.alphabet().kind() != AlphabetKind::X && p.alphabet().kind() != AlphabetKind::XQ)
    throw error("divided_difference: polynomial has no x-variables");
  if (i < 1 || i > n - 1) throw error("divided_difference: need 1 <= i <= n-1");
  Polynomial num = p - p.swapped_vars(xvar(i), xvar(i + 1));
  Polynomial den =
      Polynomial::variable(p.alphabet(), xvar(i)) - Polynomial::variable(p.alphabet(), xvar(i + 1));
  auto q = num.divided_by(den);
  if (!q) throw internal_error("divided_difference: non-exact quotient");
  return std::move(*q);
}

const Polynomial& schubert_poly(const Perm& w) {
  static std::mutex guard;
  static std::map<std::vector<int>, Polynomial> cache;
  {
    std::scoped_lock lock(guard);
    auto it = cache.find(w.window());
    if (it != cache.end()) return it->second;
  }
  const int n = w.rank();
  Polynomial value(alphabet_x(n));
  int ascent = 0;
  for (int i = 1; i <= n - 1; ++i)
    if (w(i) < w(i + 1)) {
      ascent = i;
      break;
    }
  if (ascent == 0) {
    // longest element: the staircase monomial x1^{n-1} x2^{n-2} ... x_{n-1}
    Monomial m;
    for (int i = 1; i <= n - 1; ++i) m.push_back({xvar(i), n - i});
    value.add_term(m, 1);
  } else {
    value = divided_difference(ascent, schubert_poly(w.times_simple(ascent)));
  }
  std::scoped_lock lock(guard);
  return cache.try_emplace(w.window(), std::move(value)).first->second;
}

Polynomial schubert_poly_via_word(const Perm& w, const std::vector<int>& word) {
  const int n = w.rank();
  Perm v = w.inverse() * Perm::longest(n);
  if (static_cast<int>(word.size()) != v.length())
    throw error("schubert_poly_via_word: word length != l(w^-1 w0)");
  Perm prod = Perm::identity(n);
  for (int i : word) prod = prod.times_simple(i);
  if (!(prod == v)) throw error("schubert_poly_via_word: word is not a word for w^-1 w0");
  Polynomial acc = schubert_poly(Perm::longest(n));
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = divided_difference(*it, acc);
  return acc;
}

std::vector<ETuple> all_etuples(int n) {
  if (n < 1) throw error("all_etuples: rank must be at least 1");
  std::vector<ETuple> out{ETuple(static_cast<std::size_t>(n - 1), 0)};
  for (int k = 1; k <= n - 1; ++k) {
    std::vector<ETuple> next;
    next.reserve(out.size() * static_cast<std::size_t>(k + 1));
    for (const ETuple& t : out)
      for (int v = 0; v <= k; ++v) {
        ETuple u = t;
        u[static_cast<std::size_t>(k) - 1] = v;
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// e_i(x_1..x_m) inside X(n).
const Polynomial& elementary_sym(int i, int m, int n) {
  static std::mutex guard;
  static std::map<std::tuple<int, int, int>, Polynomial> cache;
  std::tuple<int, int, int> key{i, m, n};
  {
    std::scoped_lock lock(guard);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  VarAlphabet a = alphabet_x(n);
  Polynomial value(a);
  if (i >= 0 && i <= m) {
    if (i == 0) value = Polynomial::constant(a, 1);
    else
      value = elementary_sym(i, m - 1, n) +
              Polynomial::variable(a, xvar(m)) * elementary_sym(i - 1, m - 1, n);
  }
  std::scoped_lock lock(guard);
  return cache.try_emplace(std::move(key), std::move(value)).first->second;
}

int etuple_weight(const ETuple& t) { return std::accumulate(t.begin(), t.end(), 0); }

}  // namespace

const Polynomial& elementary_monomial(const ETuple& t, int n) {
  if (static_cast<int>(t.size()) != n - 1) throw error("elementary_monomial: tuple length != n-1");
  for (int k = 1; k <= n - 1; ++k) {
    const int v = t[static_cast<std::size_t>(k) - 1];
    if (v < 0 || v > k) throw error("elementary_monomial: index out of range");
  }
  static std::mutex guard;
  static std::map<std::pair<ETuple, int>, Polynomial> cache;
  std::pair<ETuple, int> key{t, n};
  {
    std::scoped_lock lock(guard);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Polynomial value = Polynomial::constant(alphabet_x(n), 1);
  for (int k = 1; k <= n - 1; ++k) {
    const int v = t[static_cast<std::size_t>(k) - 1];
    if (v > 0) value *= elementary_sym(v, k, n);
  }
  std::scoped_lock lock(guard);
  return cache.try_emplace(std::move(key), std::move(value)).first->second;
}

std::map<ETuple, Int> elementary_expansion(const Polynomial& p) {
  if (p.alphabet().kind() != AlphabetKind::X)
    throw error("elementary_expansion: expected a polynomial in x-variables only");
  const int n = p.alphabet().rank();
  std::map<ETuple, Int> out;
  if (p.is_zero()) return out;

  // The basis elements are homogeneous, so each total degree is an
  // independent exact linear system over the x-monomial support.
  std::map<int, std::vector<std::pair<Monomial, Int>>> slices;
  for (const auto& [m, c] : p.terms()) slices[monomial_total_degree(m)].push_back({m, c});

  std::vector<ETuple> tuples = all_etuples(n);
  for (const auto& [degree, rhs_terms] : slices) {
    std::vector<ETuple> cols;
    for (const ETuple& t : tuples)
      if (etuple_weight(t) == degree) cols.push_back(t);

    std::map<Monomial, int, MonomialOrder> row_of;
    auto row_index = [&row_of](const Monomial& m) {
      return row_of.try_emplace(m, static_cast<int>(row_of.size())).first->second;
    };
    std::vector<std::vector<std::pair<int, Int>>> col_entries(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (const auto& [m, coeff] : elementary_monomial(cols[c], n).terms())
        col_entries[c].push_back({row_index(m), coeff});
    for (const auto& [m, coeff] : rhs_terms) row_index(m);

    const int rows = static_cast<int>(row_of.size());
    const int ncols = static_cast<int>(cols.size());
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(rows),
                                    std::vector<Rat>(static_cast<std::size_t>(ncols) + 1, Rat(0)));
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (const auto& [r, coeff] : col_entries[c])
        a[static_cast<std::size_t>(r)][c] = Rat(coeff);
    for (const auto& [m, coeff] : rhs_terms)
      a[static_cast<std::size_t>(row_of.at(m))][static_cast<std::size_t>(ncols)] = Rat(coeff);

    std::vector<int> pivot_of_col(static_cast<std::size_t>(ncols), -1);
    int pivot_row = 0;
    for (int c = 0; c < ncols && pivot_row < rows; ++c) {
      int pr = -1;
      for (int r = pivot_row; r < rows; ++r)
        if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
          pr = r;
          break;
        }
      if (pr < 0) continue;
      std::swap(a[static_cast<std::size_t>(pr)], a[static_cast<std::size_t>(pivot_row)]);
      const Rat lead = a[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(c)];
      for (int j = c; j <= ncols; ++j) a[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(j)] /= lead;
      for (int r = 0; r < rows; ++r) {
        if (r == pivot_row) continue;
        const Rat f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        if (f == 0) continue;
        for (int j = c; j <= ncols; ++j)
          a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
              f * a[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(j)];
      }
      pivot_of_col[static_cast<std::size_t>(c)] = pivot_row++;
    }
    for (int r = pivot_row; r < rows; ++r)
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(ncols)] != 0)
        throw error("not in standard elementary span");
    for (int c = 0; c < ncols; ++c) {
      if (pivot_of_col[static_cast<std::size_t>(c)] < 0)
        throw internal_error("elementary_expansion: dependent basis columns");
      const Rat v =
          a[static_cast<std::size_t>(pivot_of_col[static_cast<std::size_t>(c)])][static_cast<std::size_t>(ncols)];
      if (v == 0) continue;
      if (boost::multiprecision::denominator(v) != 1)
        throw error("not in standard elementary span");
      out.emplace(cols[static_cast<std::size_t>(c)], Int(boost::multiprecision::numerator(v)));
    }
  }
  return out;
}

std::string etuple_expansion_json(const std::map<ETuple, Int>& expansion) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [t, c] : expansion) {
    std::string key = "[";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) key += ",";
      key += std::to_string(t[i]);
    }
    key += "]";
    j[key] = c.str();
  }
  return j.dump();
}

const Polynomial& quantum_e(int i, int m, int n) {
  if (m < 0 || m > n) throw error("quantum_e: need 0 <= m <= n");
  static std::mutex guard;
  static std::map<std::tuple<int, int, int>, Polynomial> cache;
  std::tuple<int, int, int> key{i, m, n};
  {
    std::scoped_lock lock(guard);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  VarAlphabet a = alphabet_xq(n);
  Polynomial value(a);
  if (i >= 0 && i <= m) {
    if (i == 0) {
      value = Polynomial::constant(a, 1);
    } else {
      value = quantum_e(i, m - 1, n) +
              Polynomial::variable(a, xvar(m)) * quantum_e(i - 1, m - 1, n);
      if (m >= 2)
        value += Polynomial::variable(a, qvar(m - 1)) * quantum_e(i - 2, m - 2, n);
    }
  }
  std::scoped_lock lock(guard);
  return cache.try_emplace(std::move(key), std::move(value)).first->second;
}

const Polynomial& quantum_schubert(const Perm& w) {
  static std::mutex guard;
  static std::map<std::vector<int>, Polynomial> cache;
  {
    std::scoped_lock lock(guard);
    auto it = cache.find(w.window());
    if (it != cache.end()) return it->second;
  }
  const int n = w.rank();
  Polynomial value(alphabet_xq(n));
  for (const auto& [t, c] : elementary_expansion(schubert_poly(w))) {
    Polynomial term = Polynomial::constant(alphabet_xq(n), c);
    for (int k = 1; k <= n - 1; ++k) {
      const int v = t[static_cast<std::size_t>(k) - 1];
      if (v > 0) term *= quantum_e(v, k, n);
    }
    value += term;
  }
  std::scoped_lock lock(guard);
  return cache.try_emplace(w.window(), std::move(value)).first->second;
}

Polynomial quantum_schur(const Partition& lambda, int m, int n) {
  if (m < 1 || m > n) throw error("quantum_schur: need 1 <= m <= n");
  if (lambda.length() > m || lambda.part(1) > n - m)
    throw error("quantum_schur: shape out of range for the given m");
  VarAlphabet a = alphabet_xq(n);
  const Partition conj = lambda.conjugate();
  const int size = lambda.part(1);
  if (size == 0) return Polynomial::constant(a, 1);
  std::vector<std::vector<Polynomial>> mat;
  mat.reserve(static_cast<std::size_t>(size));
  for (int i = 1; i <= size; ++i) {
    std::vector<Polynomial> row;
    row.reserve(static_cast<std::size_t>(size));
    // Flagged determinant: column j draws on x_1..x_{m+j-1}. With a fixed
    // variable count the q-corrections drop out and the result is only the
    // classical Schur polynomial.
    for (int j = 1; j <= size; ++j)
      row.push_back(quantum_e(conj.part(i) - i + j, m + j - 1, n));
    mat.push_back(std::move(row));
  }
  return poly_det(mat, a);
}

Perm grassmannian_perm(const Partition& lambda, int m, int n) {
  if (m < 1 || m > n - 1) throw error("grassmannian_perm: need 1 <= m <= n-1");
  if (lambda.length() > m || lambda.part(1) > n - m)
    throw error("grassmannian_perm: shape does not fit in (n-m)^m");
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int j = 1; j <= m; ++j) {
    const int v = j + lambda.part(m - j + 1);
    w[static_cast<std::size_t>(j) - 1] = v;
    used[static_cast<std::size_t>(v)] = true;
  }
  int next = 1;
  for (int j = m + 1; j <= n; ++j) {
    while (used[static_cast<std::size_t>(next)]) ++next;
    w[static_cast<std::size_t>(j) - 1] = next;
    used[static_cast<std::size_t>(next)] = true;
  }
  return Perm(std::move(w));
}

Perm shift_values_down(const Perm& w) {
  const int n = w.rank();
  std::vector<int> out(w.window());
  for (int& v : out) v = v == 1 ? n : v - 1;
  return Perm(std::move(out));
}

}  // namespace qsk
