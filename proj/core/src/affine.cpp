#include "qsk/affine.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "qsk/error.hpp"
#include "qsk/symfunc.hpp"

namespace qsk {

namespace {

long long floor_div(long long a, long long b) {
  // b > 0 everywhere below
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long triangular(int n) { return static_cast<long long>(n) * (n + 1) / 2; }

}  // namespace

AffinePerm::AffinePerm(std::vector<int> window) : window_(std::move(window)) {
  const int n = rank();
  if (n < 1) throw error("AffinePerm: empty window");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : window_) {
    const int r = static_cast<int>(((v % n) + n) % n);
    if (seen[static_cast<std::size_t>(r)])
      throw error("AffinePerm: window entries must have distinct residues mod n");
    seen[static_cast<std::size_t>(r)] = true;
  }
}

AffinePerm AffinePerm::identity(int n) {
  if (n < 1) throw error("AffinePerm: rank must be at least 1");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return AffinePerm(std::move(w));
}

AffinePerm AffinePerm::simple(int i, int n) {
  if (n < 2) throw error("AffinePerm: simple reflections need rank >= 2");
  if (i < 0 || i > n - 1) throw error("AffinePerm: simple reflection index out of range");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  if (i == 0) {
    w.front() = 0;
    w.back() = n + 1;
  } else {
    std::swap(w[static_cast<std::size_t>(i) - 1], w[static_cast<std::size_t>(i)]);
  }
  return AffinePerm(std::move(w));
}

AffinePerm AffinePerm::rotation(int m, int n) {
  if (n < 1) throw error("AffinePerm: rank must be at least 1");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) w[static_cast<std::size_t>(j) - 1] = j - m;
  return AffinePerm(std::move(w));
}

long long AffinePerm::apply(long long j) const {
  const int n = rank();
  const long long k = floor_div(j - 1, n);
  const long long i = j - k * n;  // in [1, n]
  return window_[static_cast<std::size_t>(i) - 1] + k * n;
}

bool AffinePerm::is_proper() const {
  long long sum = std::accumulate(window_.begin(), window_.end(), 0LL);
  return sum == triangular(rank());
}

int AffinePerm::rotation_shift() const {
  const int n = rank();
  long long diff = triangular(n) - std::accumulate(window_.begin(), window_.end(), 0LL);
  if (diff % n != 0) throw internal_error("AffinePerm: window sum not congruent to 1+...+n");
  return static_cast<int>(diff / n);
}

AffinePerm AffinePerm::proper_part() const {
  const int m = rotation_shift();
  std::vector<int> w = window_;
  for (int& v : w) v += m;
  return AffinePerm(std::move(w));
}

AffinePerm operator*(const AffinePerm& a, const AffinePerm& b) {
  const int n = a.rank();
  if (n != b.rank()) throw error("AffinePerm: rank mismatch");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    w[static_cast<std::size_t>(i) - 1] = static_cast<int>(a.apply(b.window_[static_cast<std::size_t>(i) - 1]));
  return AffinePerm(std::move(w));
}

AffinePerm AffinePerm::inverse() const {
  const int n = rank();
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (int s = 1; s <= n; ++s) {
      const int x = window_[static_cast<std::size_t>(s) - 1];
      if ((((x - i) % n) + n) % n == 0) {
        w[static_cast<std::size_t>(i) - 1] = s + (i - x);
        break;
      }
    }
  }
  return AffinePerm(std::move(w));
}

int AffinePerm::length() const {
  const int n = rank();
  long long total = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const long long d = window_[static_cast<std::size_t>(i) - 1] -
                          window_[static_cast<std::size_t>(j) - 1];
      // inversions (i, j + kn) with j + kn > i and x(i) > x(j) + kn
      if (j > i) total += std::max(0LL, -floor_div(-d, n));  // ceil(d/n)
      else total += std::max(0LL, floor_div(d, n));
    }
  return static_cast<int>(total);
}

bool AffinePerm::is_grassmannian() const {
  return std::is_sorted(window_.begin(), window_.end()) &&
         std::adjacent_find(window_.begin(), window_.end()) == window_.end();
}

std::vector<int> AffinePerm::right_descents() const {
  std::vector<int> out;
  const int len = length();
  for (int i = 0; i <= rank() - 1; ++i)
    if ((*this * simple(i, rank())).length() < len) out.push_back(i);
  return out;
}

std::vector<int> AffinePerm::reduced_word() const {
  std::vector<int> word;
  AffinePerm cur = *this;
  for (;;) {
    std::vector<int> ds = cur.right_descents();
    if (ds.empty()) break;
    cur = cur * simple(ds.front(), rank());
    word.push_back(ds.front());
  }
  std::reverse(word.begin(), word.end());
  return word;
}

bool AffinePerm::same_extended(const AffinePerm& other) const {
  const int n = rank();
  if (n != other.rank()) return false;
  const int diff = other.window_.front() - window_.front();
  if (diff % n != 0) return false;
  for (std::size_t i = 0; i < window_.size(); ++i)
    if (other.window_[i] - window_[i] != diff) return false;
  return true;
}

std::string AffinePerm::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(window_[i]);
  }
  return out + "]";
}

AffinePerm AffinePerm::parse(std::string_view text) {
  std::string buf(text);
  for (char& c : buf)
    if (c == '[' || c == ']' || c == ',') c = ' ';
  std::istringstream in(buf);
  std::vector<int> w;
  int v = 0;
  while (in >> v) w.push_back(v);
  if (!in.eof()) throw error("AffinePerm: cannot parse '" + std::string(text) + "'");
  return AffinePerm(std::move(w));
}

CoweightVec omega_coweight(int i, int n) {
  if (n < 1 || i < 0 || i > n) throw error("omega_coweight: need 0 <= i <= n");
  CoweightVec v(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < i; ++j) v[static_cast<std::size_t>(j)] = 1;
  return v;
}

CoweightVec coweight_sum(const CoweightVec& a, const CoweightVec& b) {
  if (a.size() != b.size()) throw error("coweight_sum: size mismatch");
  CoweightVec out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

CoweightVec coweight_negate(const CoweightVec& a) {
  CoweightVec out = a;
  for (int& v : out) v = -v;
  return out;
}

bool is_antidominant(const CoweightVec& a) { return std::is_sorted(a.begin(), a.end()); }

bool in_coroot_lattice_class(const CoweightVec& a) {
  long long sum = std::accumulate(a.begin(), a.end(), 0LL);
  return sum % static_cast<long long>(a.size()) == 0;
}

AffinePerm translation(const CoweightVec& lambda) {
  const int n = static_cast<int>(lambda.size());
  if (n < 1) throw error("translation: empty coweight");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    w[static_cast<std::size_t>(i) - 1] = i + n * lambda[static_cast<std::size_t>(i) - 1];
  return AffinePerm(std::move(w));
}

AffinePerm block_rotation_perm(int i, int n) {
  if (n < 1 || i < 0 || i > n - 1) throw error("block_rotation_perm: need 0 <= i <= n-1");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j)
    w[static_cast<std::size_t>(j) - 1] = j <= i ? n - i + j : j - i;
  return AffinePerm(std::move(w));
}

AffinePerm special_rotation(int i, int n) {
  if (n < 1 || i < 0 || i > n - 1) throw error("special_rotation: need 0 <= i <= n-1");
  return block_rotation_perm(i, n) * translation(coweight_negate(omega_coweight(i, n)));
}

AffinePerm d_element(int i, int n) {
  if (n < 2 || i < 1 || i > n - 1) throw error("d_element: need 1 <= i <= n-1");
  AffinePerm d = translation(coweight_negate(omega_coweight(i, n))).proper_part();
  if (!d.is_grassmannian()) throw internal_error("d_element: window not increasing");
  return d;
}

Partition bounded_partition_of(const AffinePerm& y) {
  if (!y.is_grassmannian()) throw error("bounded_partition_of: window not increasing");
  const int n = y.rank();
  std::vector<int> cols;
  for (int r = 1; r <= n - 1; ++r) {
    long long count = 0;
    for (int s = 1; s <= n; ++s) {
      if (s == r) continue;
      // j = s + kn < r with y(j) > y(r): integers k strictly between
      // (y(r)-y(s))/n and (r-s)/n, neither endpoint integral.
      const long long lo = floor_div(y.window()[static_cast<std::size_t>(r) - 1] -
                                         y.window()[static_cast<std::size_t>(s) - 1],
                                     n);
      const long long hi = floor_div(r - s, n);
      count += std::max(0LL, hi - lo);
    }
    cols.push_back(static_cast<int>(count));
  }
  while (!cols.empty() && cols.back() == 0) cols.pop_back();
  if (!std::is_sorted(cols.rbegin(), cols.rend()))
    throw internal_error("bounded_partition_of: column counts not weakly decreasing");
  return Partition(std::move(cols)).conjugate();
}

Partition lambda_of(const Perm& w_in) {
  const int n = w_in.rank();
  Perm w = w_in;
  for (int guard = 0; w(1) != 1; ++guard) {
    if (guard > n) throw internal_error("lambda_of: value cycling failed to fix 1");
    w = shift_values_down(w);
  }
  std::vector<int> cur(static_cast<std::size_t>(n));
  std::iota(cur.begin(), cur.end(), 1);
  std::vector<int> parts;
  for (int r = 1; r <= n - 2; ++r) {
    int m = 0;
    while (cur[static_cast<std::size_t>(r)] != w(r + 1)) {
      std::rotate(cur.begin() + r, cur.begin() + r + 1, cur.end());
      ++m;
      if (m > n - r) throw internal_error("lambda_of: suffix rotation never matched");
    }
    if (m > n - 1 - r) throw internal_error("lambda_of: shift count out of printed bounds");
    for (int c = 0; c < m; ++c) parts.push_back(r);
  }
  if (!std::equal(cur.begin(), cur.end(), w.window().begin()))
    throw internal_error("lambda_of: peeling did not reconstruct the permutation");
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

Partition lambda_of_via_lemma(const Perm& w) {
  const int n = w.rank();
  std::vector<int> des(static_cast<std::size_t>(n) + 1, 0);
  // des[i] = #{j in Des(w) : j >= i}; only this direction of the count makes
  // the window below increasing, so it is asserted rather than assumed.
  for (int i = n - 1; i >= 1; --i)
    des[static_cast<std::size_t>(i)] =
        des[static_cast<std::size_t>(i) + 1] + (w(i) > w(i + 1) ? 1 : 0);
  std::vector<int> window(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    window[static_cast<std::size_t>(i) - 1] = w(i) - n * des[static_cast<std::size_t>(i)];
  AffinePerm y(std::move(window));
  if (!y.is_grassmannian())
    throw internal_error("lambda_of_via_lemma: descent-translated window not increasing");
  return bounded_partition_of(y);
}

bool i_reducible(const AffinePerm& y, int i) {
  if (!y.is_grassmannian()) throw error("i_reducible: window not increasing");
  const AffinePerm d = d_element(i, y.rank());
  return y.length() == (y * d.inverse()).length() + d.length();
}

RectFactorization rectangle_factor_decomposition(const AffinePerm& y) {
  if (!y.is_grassmannian()) throw error("rectangle_factor_decomposition: window not increasing");
  const int n = y.rank();
  RectFactorization out{y.proper_part(), std::vector<int>(static_cast<std::size_t>(n - 1), 0)};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= n - 1; ++i) {
      if (!i_reducible(out.core, i)) continue;
      const AffinePerm tau = special_rotation(i, n);
      AffinePerm next =
          (tau * (out.core * d_element(i, n).inverse()) * tau.inverse()).proper_part();
      if (!next.is_grassmannian())
        throw internal_error("rectangle_factor_decomposition: conjugated quotient not increasing");
      out.core = std::move(next);
      ++out.exponents[static_cast<std::size_t>(i) - 1];
      changed = true;
      break;
    }
  }
  return out;
}

std::vector<Check> check_d_formulas(int i, int n) {
  if (n < 2 || i < 1 || i > n - 1) throw error("check_d_formulas: need 1 <= i <= n-1");
  std::vector<Check> out;
  const AffinePerm d = d_element(i, n);
  const int istar = n - i;
  const AffinePerm tau = special_rotation(istar, n);

  out.push_back({"grassmannian-proper", d.is_grassmannian() && d.is_proper(), d.str()});

  const AffinePerm conj = tau * block_rotation_perm(istar, n) * tau.inverse();
  out.push_back({"conjugated-rotation-form", d.same_extended(conj), conj.str()});

  const AffinePerm rot_trans = tau * translation(coweight_negate(omega_coweight(i, n)));
  out.push_back({"rotation-translation-form", d.same_extended(rot_trans), rot_trans.str()});

  const AffinePerm fused =
      block_rotation_perm(istar, n) *
      translation(coweight_negate(
          coweight_sum(omega_coweight(i, n), omega_coweight(istar, n))));
  out.push_back({"fused-translation-form", d.same_extended(fused), fused.str()});

  out.push_back({"bounded-partition-is-rectangle",
                 bounded_partition_of(d) == rect_shape(i, n),
                 bounded_partition_of(d).str()});
  out.push_back({"length-is-cell-count", d.length() == i * (n - i),
                 std::to_string(d.length())});
  return out;
}

std::vector<AffinePerm> grassmannian_up_to_length(int n, int max_len) {
  if (n < 2) throw error("grassmannian_up_to_length: rank must be at least 2");
  std::vector<AffinePerm> out{AffinePerm::identity(n)};
  std::set<std::vector<int>> seen{out.front().window()};
  std::vector<AffinePerm> level = out;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<AffinePerm> next;
    for (const AffinePerm& y : level)
      for (int i = 0; i <= n - 1; ++i) {
        AffinePerm z = AffinePerm::simple(i, n) * y;
        if (!z.is_grassmannian() || z.length() != len) continue;
        if (seen.insert(z.window()).second) next.push_back(std::move(z));
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

}  // namespace qsk
