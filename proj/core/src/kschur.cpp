#include "qsk/kschur.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace qsk {

namespace {

int hook_with_conjugate(const Partition& shape, const Partition& conj, int row, int col) {
  return (shape.part(row) - col) + (conj.part(col) - row) + 1;
}

}  // namespace

int hook_length(const Partition& shape, int row, int col) {
  if (row < 1 || col < 1 || col > shape.part(row)) throw error("hook_length: cell outside shape");
  return hook_with_conjugate(shape, shape.conjugate(), row, col);
}

bool is_core(const Partition& c, int k) {
  if (k < 0) throw error("is_core: k must be nonnegative");
  const Partition conj = c.conjugate();
  for (int i = 1; i <= c.length(); ++i)
    for (int j = 1; j <= c.part(i); ++j)
      if (hook_with_conjugate(c, conj, i, j) == k + 1) return false;
  return true;
}

Partition core_from_bounded(const Partition& lambda, int k) {
  if (k < 1) throw error("core_from_bounded: k must be at least 1");
  if (lambda.part(1) > k) throw error("core_from_bounded: partition is not k-bounded");
  const int rows = lambda.length();
  std::vector<int> core(static_cast<std::size_t>(rows), 0);
  // Rows are fixed bottom-up; hooks in row i depend only on rows below it.
  for (int i = rows; i >= 1; --i) {
    auto leg = [&](int j) {
      int count = 0;
      for (int r = i + 1; r <= rows; ++r)
        if (core[static_cast<std::size_t>(r) - 1] >= j) ++count;
      return count;
    };
    bool placed = false;
    for (int x = 0; x <= k * rows + 1; ++x) {
      const int ci = lambda.part(i) + x;
      if (i < rows && ci < core[static_cast<std::size_t>(i)]) continue;
      // first kept cell must have small hook, skipped cells must have hooks
      // beyond k+1 (equality k+1 never appears in a core)
      if (lambda.part(i) + leg(x + 1) > k) continue;
      bool ok = true;
      for (int j = 1; j <= x && ok; ++j)
        if ((ci - j) + leg(j) + 1 < k + 2) ok = false;
      if (!ok) continue;
      core[static_cast<std::size_t>(i) - 1] = ci;
      placed = true;
      break;
    }
    if (!placed) throw internal_error("core_from_bounded: no admissible row shift");
  }
  Partition out{std::move(core)};
  if (!is_core(out, k)) throw internal_error("core_from_bounded: produced shape is not a core");
  if (!(bounded_from_core(out, k) == lambda))
    throw internal_error("core_from_bounded: does not round-trip");
  return out;
}

Partition bounded_from_core(const Partition& c, int k) {
  if (!is_core(c, k)) throw error("bounded_from_core: shape is not a (k+1)-core");
  const Partition conj = c.conjugate();
  std::vector<int> parts;
  for (int i = 1; i <= c.length(); ++i) {
    int count = 0;
    for (int j = 1; j <= c.part(i); ++j)
      if (hook_with_conjugate(c, conj, i, j) <= k) ++count;
    if (count < 1) throw internal_error("bounded_from_core: row with no small-hook cells");
    parts.push_back(count);
  }
  if (!std::is_sorted(parts.rbegin(), parts.rend()))
    throw internal_error("bounded_from_core: row counts not weakly decreasing");
  return Partition(std::move(parts));
}

std::vector<Partition> weak_pieri_targets(const Partition& lambda, int r, int k) {
  if (k < 1) throw error("weak_pieri_targets: k must be at least 1");
  if (lambda.part(1) > k) throw error("weak_pieri_targets: partition is not k-bounded");
  if (r < 1 || r > k) throw error("weak_pieri_targets: need 1 <= r <= k");
  const Partition inner = core_from_bounded(lambda, k);
  std::vector<Partition> out;
  for (const Partition& mu : Partition::all(lambda.size() + r, k)) {
    const Partition outer = core_from_bounded(mu, k);
    if (!outer.contains(inner) || !is_horizontal_strip(inner, outer)) continue;
    std::set<int> residues;
    for (int i = 1; i <= outer.length(); ++i)
      for (int j = inner.part(i) + 1; j <= outer.part(i); ++j)
        residues.insert((((j - i) % (k + 1)) + (k + 1)) % (k + 1));
    if (static_cast<int>(residues.size()) == r) out.push_back(mu);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::mutex cache_dir_guard;
std::string cache_dir_value;

// k-Schur expansion of the product h_{mu_1} ... h_{mu_l}, by folding the weak
// Pieri rule over the parts; memoized on (n, mu).
const std::map<Partition, Int>& h_product_in_kschur(const Partition& mu, int n) {
  static std::mutex guard;
  static std::map<std::pair<std::vector<int>, int>, std::map<Partition, Int>> memo;
  std::pair<std::vector<int>, int> key{mu.parts(), n};
  {
    std::scoped_lock lock(guard);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  std::map<Partition, Int> value;
  if (mu.empty()) {
    value.emplace(Partition{}, 1);
  } else {
    std::vector<int> rest_parts(mu.parts().begin() + 1, mu.parts().end());
    const auto& rest = h_product_in_kschur(Partition(std::move(rest_parts)), n);
    for (const auto& [tau, c] : rest)
      for (const Partition& sigma : weak_pieri_targets(tau, mu.part(1), n - 1)) {
        auto it = value.find(sigma);
        if (it == value.end()) value.emplace(sigma, c);
        else it->second += c;
      }
  }
  std::scoped_lock lock(guard);
  return memo.try_emplace(std::move(key), std::move(value)).first->second;
}

std::filesystem::path cache_file(const std::string& dir, int n, int degree) {
  return std::filesystem::path(dir) /
         ("kschur-n" + std::to_string(n) + "-d" + std::to_string(degree) + ".json");
}

bool load_table_from_disk(const std::string& dir, int n, int degree,
                          const std::vector<Partition>& shapes,
                          std::map<Partition, HPoly>& out) {
  std::ifstream in(cache_file(dir, n, degree));
  if (!in) return false;
  nlohmann::json j;
  try {
    in >> j;
    if (!j.is_object()) return false;
    std::map<Partition, HPoly> table;
    for (const auto& [key, value] : j.items())
      table.emplace(Partition::parse(key), HPoly::from_json(alphabet_h(n), value.dump()));
    if (table.size() != shapes.size()) return false;
    for (const Partition& s : shapes)
      if (!table.count(s)) return false;
    out = std::move(table);
    return true;
  } catch (...) {
    return false;  // advisory cache: any damage means recompute
  }
}

void store_table_to_disk(const std::string& dir, int n, int degree,
                         const std::map<Partition, HPoly>& table) {
  try {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [shape, poly] : table)
      j[shape.str()] = nlohmann::ordered_json::parse(poly.json());
    std::filesystem::create_directories(dir);
    const std::filesystem::path final_path = cache_file(dir, n, degree);
    const std::filesystem::path tmp_path = final_path.string() + ".tmp";
    {
      std::ofstream outf(tmp_path, std::ios::trunc);
      if (!outf) return;
      outf << j.dump(1) << "\n";
    }
    std::filesystem::rename(tmp_path, final_path);
  } catch (...) {
    // advisory cache: never let IO problems surface
  }
}

}  // namespace

void set_kschur_cache_dir(const std::string& dir) {
  std::scoped_lock lock(cache_dir_guard);
  cache_dir_value = dir;
}

std::string kschur_cache_dir() {
  std::scoped_lock lock(cache_dir_guard);
  return cache_dir_value;
}

const std::map<Partition, HPoly>& kschur_table(int n, int degree) {
  if (n < 1) throw error("kschur_table: rank must be at least 1");
  if (degree < 0) throw error("kschur_table: degree must be nonnegative");
  static std::mutex guard;
  static std::map<std::pair<int, int>, std::map<Partition, HPoly>> cache;
  std::pair<int, int> key{n, degree};
  {
    std::scoped_lock lock(guard);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  const int k = n - 1;
  std::vector<Partition> shapes = Partition::all(degree, k);  // descending lex
  std::map<Partition, HPoly> table;
  const std::string dir = kschur_cache_dir();
  if (dir.empty() || !load_table_from_disk(dir, n, degree, shapes, table)) {
    // K[nu][mu]: coefficient of the nu-th k-Schur function in h_mu. Dominance
    // unitriangularity is what makes the integer back-substitution exact.
    std::map<Partition, std::map<Partition, Int>> rows;
    for (const Partition& mu : shapes) {
      const auto& column = h_product_in_kschur(mu, n);
      auto diag = column.find(mu);
      if (diag == column.end() || diag->second != 1)
        throw internal_error("kschur_table: k-Kostka diagonal entry is not 1");
      for (const auto& [nu, c] : column) {
        if (c == 0) continue;
        if (!(nu == mu) && !dominates(nu, mu))
          throw internal_error("kschur_table: k-Kostka matrix not dominance-triangular");
        rows[nu][mu] = c;
      }
    }

    std::vector<Partition> ascending(shapes.rbegin(), shapes.rend());
    for (const Partition& lambda : shapes) {
      std::map<Partition, Int> coeff;
      HPoly expansion(alphabet_h(n));
      for (const Partition& nu : ascending) {
        Int c = (nu == lambda) ? 1 : 0;
        auto row = rows.find(nu);
        if (row != rows.end())
          for (const auto& [mu, kv] : row->second) {
            if (mu == nu) continue;
            auto got = coeff.find(mu);
            if (got != coeff.end()) c -= kv * got->second;
          }
        if (c != 0) {
          expansion.add_term(h_monomial(nu), c);
          coeff.emplace(nu, std::move(c));
        }
      }
      table.emplace(lambda, std::move(expansion));
    }
    if (!dir.empty()) store_table_to_disk(dir, n, degree, table);
  }

  std::scoped_lock lock(guard);
  return cache.try_emplace(std::move(key), std::move(table)).first->second;
}

const HPoly& kschur_in_h(const Partition& lambda, int n) {
  if (lambda.part(1) > n - 1) throw error("kschur_in_h: partition is not (n-1)-bounded");
  const auto& table = kschur_table(n, lambda.size());
  auto it = table.find(lambda);
  if (it == table.end()) throw internal_error("kschur_in_h: shape missing from its table");
  return it->second;
}

bool rectangle_factorization_check(const Partition& lambda, int i, int n) {
  if (lambda.part(1) > n - 1)
    throw error("rectangle_factorization_check: partition is not (n-1)-bounded");
  if (i < 1 || i > n - 1) throw error("rectangle_factorization_check: need 1 <= i <= n-1");
  const HPoly lhs = kschur_in_h(lambda.union_parts(rect_shape(i, n)), n);
  return lhs == kschur_in_h(lambda, n) * rect_schur(i, n);
}

}  // namespace qsk
