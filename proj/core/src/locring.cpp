#include "qsk/locring.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>
#include <utility>

#include <json.hpp>

namespace qsk {

namespace {

std::vector<int> zero_den(int n) { return std::vector<int>(static_cast<std::size_t>(n - 1), 0); }

void check_rank(int n) {
  if (n < 1) throw error("LocElem: rank must be at least 1");
}

}  // namespace

LocElem::LocElem(int n) : num_((check_rank(n), HPoly(alphabet_h(n)))), den_(zero_den(n)) {}

LocElem::LocElem(HPoly num, std::vector<int> den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.alphabet().kind() != AlphabetKind::H)
    throw error("LocElem: numerator must live in an h-alphabet");
  const int n = num_.alphabet().rank();
  if (den_.size() != static_cast<std::size_t>(n - 1))
    throw error("LocElem: denominator vector must have length n-1");
  for (int d : den_)
    if (d < 0) throw error("LocElem: negative denominator exponent");
  if (num_.is_zero()) std::fill(den_.begin(), den_.end(), 0);
}

LocElem LocElem::from_int(int n, Int c) {
  check_rank(n);
  return LocElem(HPoly::constant(alphabet_h(n), std::move(c)), zero_den(n));
}

LocElem LocElem::from_poly(HPoly num) {
  const int n = num.alphabet().rank();
  return LocElem(std::move(num), zero_den(n));
}

LocElem LocElem::inverse_rect(int n, int i) {
  check_rank(n);
  if (i < 1 || i > n - 1) throw error("LocElem::inverse_rect: need 1 <= i <= n-1");
  std::vector<int> den = zero_den(n);
  den[static_cast<std::size_t>(i) - 1] = 1;
  return LocElem(HPoly::constant(alphabet_h(n), 1), std::move(den));
}

const HPoly& rect_schur_power(int i, int e, int n) {
  if (e < 0) throw internal_error("rect_schur_power: negative exponent");
  static std::mutex guard;
  static std::map<std::tuple<int, int, int>, HPoly> cache;
  std::tuple<int, int, int> key{i, e, n};
  {
    std::scoped_lock lock(guard);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  HPoly value = e == 0 ? HPoly::constant(alphabet_h(n), 1)
                       : rect_schur_power(i, e - 1, n) * rect_schur(i, n);
  std::scoped_lock lock(guard);
  return cache.try_emplace(std::move(key), std::move(value)).first->second;
}

LocElem LocElem::reduced() const {
  if (num_.is_zero()) return LocElem(rank());
  HPoly num = num_;
  std::vector<int> den = den_;
  const int n = rank();
  for (int i = 1; i <= n - 1; ++i) {
    while (den[static_cast<std::size_t>(i) - 1] > 0) {
      auto q = num.divided_by(rect_schur(i, n));
      if (!q) break;
      num = std::move(*q);
      --den[static_cast<std::size_t>(i) - 1];
    }
  }
  return LocElem(std::move(num), std::move(den));
}

LocElem LocElem::operator-() const {
  LocElem out = *this;
  out.num_ = -out.num_;
  return out;
}

LocElem operator+(const LocElem& a, const LocElem& b) {
  const int n = a.rank();
  if (n != b.rank()) throw error("LocElem: rank mismatch");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<int> den(a.den_.size());
  HPoly na = a.num_;
  HPoly nb = b.num_;
  for (std::size_t i = 0; i < den.size(); ++i) {
    den[i] = std::max(a.den_[i], b.den_[i]);
    const int idx = static_cast<int>(i) + 1;
    if (int lift = den[i] - a.den_[i]; lift > 0) na *= rect_schur_power(idx, lift, n);
    if (int lift = den[i] - b.den_[i]; lift > 0) nb *= rect_schur_power(idx, lift, n);
  }
  return LocElem(na + nb, std::move(den)).reduced();
}

LocElem operator-(const LocElem& a, const LocElem& b) { return a + (-b); }

LocElem operator*(const LocElem& a, const LocElem& b) {
  const int n = a.rank();
  if (n != b.rank()) throw error("LocElem: rank mismatch");
  if (a.is_zero() || b.is_zero()) return LocElem(n);
  std::vector<int> den(a.den_.size());
  for (std::size_t i = 0; i < den.size(); ++i) den[i] = a.den_[i] + b.den_[i];
  return LocElem(a.num_ * b.num_, std::move(den)).reduced();
}

bool loc_eq(const LocElem& a, const LocElem& b) {
  const int n = a.rank();
  if (n != b.rank()) throw error("loc_eq: rank mismatch");
  HPoly lhs = a.num();
  HPoly rhs = b.num();
  for (std::size_t i = 0; i < a.den().size(); ++i) {
    const int d = a.den()[i] - b.den()[i];
    const int idx = static_cast<int>(i) + 1;
    if (d > 0) rhs *= rect_schur_power(idx, d, n);
    else if (d < 0) lhs *= rect_schur_power(idx, -d, n);
  }
  return lhs == rhs;
}

namespace {

std::string rect_factor_name(int i, int n) {
  if (i == n - 1) return "h" + std::to_string(n - 1);
  if (i == 1) return "e" + std::to_string(n - 1);
  return "sR" + std::to_string(i);
}

}  // namespace

std::string LocElem::str() const {
  std::string den;
  const int n = rank();
  for (int i = 1; i <= n - 1; ++i) {
    const int d = den_[static_cast<std::size_t>(i) - 1];
    if (d == 0) continue;
    if (!den.empty()) den += "*";
    den += rect_factor_name(i, n);
    if (d > 1) den += "^" + std::to_string(d);
  }
  std::string num = num_.str();
  if (den.empty()) return num;
  if (num_.term_count() > 1) num = "(" + num + ")";
  return num + " / " + den;
}

std::string LocElem::json() const {
  nlohmann::ordered_json j;
  j["num"] = nlohmann::ordered_json::parse(num_.json());
  j["den"] = den_;
  return j.dump();
}

LocElem LocElem::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw error(std::string("LocElem: bad json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw error("LocElem: expected {num, den}");
  if (!j["den"].is_array()) throw error("LocElem: den must be an array");
  std::vector<int> den = j["den"].get<std::vector<int>>();
  const int n = static_cast<int>(den.size()) + 1;
  HPoly num = HPoly::from_json(alphabet_h(n), j["num"].dump());
  return LocElem(std::move(num), std::move(den));
}

namespace {

struct PhiImages {
  std::vector<LocElem> x;  // index i-1 holds the image of x_i, i = 1..n
  std::vector<LocElem> q;  // index i-1 holds the image of q_i, i = 1..n-1
};

const PhiImages& phi_images(int n) {
  check_rank(n);
  static std::mutex guard;
  static std::map<int, PhiImages> cache;
  {
    std::scoped_lock lock(guard);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  PhiImages images;
  // partial-sum generators P_i = s_{R'_i}/s_{R_i}; P_0 = P_n = 0 since the
  // clipped rectangle Schur polynomial vanishes at the boundary.
  std::vector<LocElem> partial;
  partial.reserve(static_cast<std::size_t>(n) + 1);
  partial.emplace_back(n);
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<int> den(static_cast<std::size_t>(n - 1), 0);
    den[static_cast<std::size_t>(i) - 1] = 1;
    partial.emplace_back(LocElem(rect_clipped_schur(i, n), std::move(den)));
  }
  partial.emplace_back(n);
  for (int i = 1; i <= n; ++i)
    images.x.push_back(partial[static_cast<std::size_t>(i)] -
                       partial[static_cast<std::size_t>(i) - 1]);
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<int> den(static_cast<std::size_t>(n - 1), 0);
    den[static_cast<std::size_t>(i) - 1] = 2;
    images.q.push_back(LocElem(rect_schur(i - 1, n) * rect_schur(i + 1, n), std::move(den)));
  }
  std::scoped_lock lock(guard);
  return cache.try_emplace(n, std::move(images)).first->second;
}

}  // namespace

const LocElem& phi_x_image(int i, int n) {
  if (i < 1 || i > n) throw error("phi_x_image: need 1 <= i <= n");
  return phi_images(n).x[static_cast<std::size_t>(i) - 1];
}

const LocElem& phi_q_image(int i, int n) {
  if (i < 1 || i > n - 1) throw error("phi_q_image: need 1 <= i <= n-1");
  return phi_images(n).q[static_cast<std::size_t>(i) - 1];
}

LocElem phi(const Polynomial& p) {
  const AlphabetKind kind = p.alphabet().kind();
  if (kind == AlphabetKind::H) throw error("phi: expected a polynomial in x/q variables");
  const int n = p.alphabet().rank();
  return p
      .eval<LocElem>(
          [n](VarId v) -> const LocElem& {
            return v.kind == VarKind::X ? phi_x_image(v.index, n) : phi_q_image(v.index, n);
          },
          [n](const Int& c) { return LocElem::from_int(n, c); })
      .reduced();
}

LocElem eval_hom(const Polynomial& p, const std::map<VarId, LocElem>& images, int rank) {
  return p.eval<LocElem>(
      [&](VarId v) -> const LocElem& {
        auto it = images.find(v);
        if (it == images.end()) throw error("eval_hom: no image for " + var_name(v));
        if (it->second.rank() != rank) throw error("eval_hom: image rank mismatch");
        return it->second;
      },
      [rank](const Int& c) { return LocElem::from_int(rank, c); });
}

LocElem loc_sum(std::vector<LocElem> items, int n) {
  if (items.empty()) return LocElem(n);
  while (items.size() > 1) {
    std::vector<LocElem> next;
    next.reserve(items.size() / 2 + 1);
    for (std::size_t i = 0; i + 1 < items.size(); i += 2) next.push_back(items[i] + items[i + 1]);
    if (items.size() % 2) next.push_back(std::move(items.back()));
    items = std::move(next);
  }
  return std::move(items.front());
}

}  // namespace qsk
