#include "qsk/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>
#include <utility>

#include <json.hpp>

#include "qsk/affine.hpp"
#include "qsk/error.hpp"
#include "qsk/kschur.hpp"
#include "qsk/symfunc.hpp"

namespace qsk {

namespace {

using OrderedJson = nlohmann::ordered_json;

const LocElem& loc_zero(int n) {
  static std::map<int, LocElem> cache;
  static std::mutex lock;
  std::scoped_lock guard(lock);
  return cache.try_emplace(n, LocElem(n)).first->second;
}

const LocElem& loc_one(int n) {
  static std::map<int, LocElem> cache;
  static std::mutex lock;
  std::scoped_lock guard(lock);
  return cache.try_emplace(n, LocElem::from_int(n, 1)).first->second;
}

HPoly h_one(int n) { return HPoly::constant(alphabet_h(n), 1); }

}  // namespace

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

std::string checks_json(const std::vector<Check>& checks) {
  OrderedJson rows = OrderedJson::array();
  for (const Check& c : checks) {
    OrderedJson row;
    row["check"] = c.name;
    row["pass"] = c.pass;
    row["detail"] = c.detail;
    rows.push_back(std::move(row));
  }
  return rows.dump(2);
}

const LocElem& phi_quantum_e(int i, int m, int n) {
  if (n < 2) throw error("phi_quantum_e requires n >= 2");
  if (m < 0 || m > n - 1) throw error("phi_quantum_e needs 0 <= m <= n-1");
  if (i < 0 || i > m) return loc_zero(n);
  if (i == 0) return loc_one(n);

  static std::map<std::tuple<int, int, int>, LocElem> cache;
  static std::mutex lock;
  const std::tuple<int, int, int> key{n, m, i};
  {
    std::scoped_lock guard(lock);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  LocElem value =
      phi_quantum_e(i, m - 1, n) + phi_x_image(m, n) * phi_quantum_e(i - 1, m - 1, n);
  if (m >= 2)
    value = value + phi_q_image(m - 1, n) * phi_quantum_e(i - 2, m - 2, n);
  std::scoped_lock guard(lock);
  return cache.try_emplace(key, std::move(value)).first->second;
}

LocElem phi_quantum_schubert(const Perm& w) {
  const int n = w.rank();
  if (n < 2) throw error("phi_quantum_schubert requires n >= 2");
  const std::map<ETuple, Int> expansion = elementary_expansion(schubert_poly(w));
  std::vector<LocElem> terms;
  terms.reserve(expansion.size());
  for (const auto& [tuple, coeff] : expansion) {
    LocElem term = LocElem::from_int(n, coeff);
    for (int k = 1; k <= n - 1; ++k) {
      const int ik = tuple[static_cast<std::size_t>(k) - 1];
      if (ik > 0) term = term * phi_quantum_e(ik, k, n);
    }
    terms.push_back(std::move(term));
  }
  return loc_sum(std::move(terms), n);
}

namespace {

TheoremRecord theorem_record(const Perm& w) {
  const int n = w.rank();
  TheoremRecord rec;
  rec.w = w;
  rec.descents = w.descents();
  rec.lhs = LocElem(n);
  rec.rhs = LocElem(n);
  try {
    rec.lambda = lambda_of(w);
    const Partition via_lemma = lambda_of_via_lemma(w);
    rec.lhs = phi_quantum_schubert(w);
    std::vector<int> den(static_cast<std::size_t>(n) - 1, 0);
    for (int i : rec.descents) den[static_cast<std::size_t>(i) - 1] = 1;
    rec.rhs = LocElem(kschur_in_h(rec.lambda, n), std::move(den));
    rec.pass = loc_eq(rec.lhs, rec.rhs);
    if (!rec.pass) rec.detail = rec.lhs.str() + " vs " + rec.rhs.str();
    if (!(rec.lambda == via_lemma)) {
      rec.pass = false;
      if (!rec.detail.empty()) rec.detail += "; ";
      rec.detail += "lambda_of " + rec.lambda.str() +
                    " disagrees with the coset route " + via_lemma.str();
    }
  } catch (const error& e) {
    rec.pass = false;
    rec.detail = e.what();
  }
  return rec;
}

}  // namespace

VerifyReport verify_theorem_subset(int n, const std::vector<Perm>& perms,
                                   int jobs) {
  if (n < 2) throw error("verify_theorem requires n >= 2");
  for (const Perm& w : perms)
    if (w.rank() != n) throw error("verify_theorem: rank mismatch for " + w.str());
  const auto start = std::chrono::steady_clock::now();

  // Warm the shared k-Schur tables up front so workers only read them.
  std::vector<int> degrees;
  for (const Perm& w : perms) {
    try {
      degrees.push_back(lambda_of(w).size());
    } catch (const error&) {
      // the per-permutation record will carry the failure
    }
  }
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  for (int d : degrees) kschur_table(n, d);

  VerifyReport report;
  report.n = n;
  report.records.resize(perms.size());
  const int workers =
      std::max(1, std::min(jobs, static_cast<int>(perms.size())));
  if (workers <= 1) {
    for (std::size_t idx = 0; idx < perms.size(); ++idx)
      report.records[idx] = theorem_record(perms[idx]);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_lock;
    auto body = [&]() {
      for (;;) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= perms.size()) return;
        try {
          report.records[idx] = theorem_record(perms[idx]);
        } catch (...) {
          std::scoped_lock guard(error_lock);
          if (!first_error) first_error = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(body);
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  for (const TheoremRecord& rec : report.records)
    if (rec.pass) ++report.pass_count;
  report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return report;
}

VerifyReport verify_theorem(int n, int jobs) {
  return verify_theorem_subset(n, Perm::all(n), jobs);
}

namespace {

OrderedJson loc_json(const LocElem& value) {
  return OrderedJson::parse(value.json());
}

}  // namespace

std::string report_json(const VerifyReport& report) {
  OrderedJson j;
  j["n"] = report.n;
  j["total"] = report.records.size();
  j["pass_count"] = report.pass_count;
  j["millis"] = report.millis;
  OrderedJson rows = OrderedJson::array();
  for (const TheoremRecord& rec : report.records) {
    OrderedJson row;
    row["w"] = rec.w.str();
    row["descents"] = rec.descents;
    row["lambda"] = rec.lambda.str();
    row["lhs"] = loc_json(rec.lhs);
    row["rhs"] = loc_json(rec.rhs);
    row["pass"] = rec.pass;
    row["detail"] = rec.detail;
    rows.push_back(std::move(row));
  }
  j["records"] = std::move(rows);
  return j.dump(2);
}

VerifyReport report_from_json(std::string_view text) {
  OrderedJson j = OrderedJson::parse(text, nullptr, false);
  if (j.is_discarded()) throw error("report JSON does not parse");
  try {
    VerifyReport report;
    report.n = j.at("n").get<int>();
    report.pass_count = j.at("pass_count").get<int>();
    report.millis = j.at("millis").get<long long>();
    for (const OrderedJson& row : j.at("records")) {
      TheoremRecord rec;
      rec.w = Perm::parse(row.at("w").get<std::string>());
      rec.descents = row.at("descents").get<std::vector<int>>();
      rec.lambda = Partition::parse(row.at("lambda").get<std::string>());
      rec.lhs = LocElem::from_json(row.at("lhs").dump());
      rec.rhs = LocElem::from_json(row.at("rhs").dump());
      rec.pass = row.at("pass").get<bool>();
      rec.detail = row.at("detail").get<std::string>();
      report.records.push_back(std::move(rec));
    }
    if (j.at("total").get<std::size_t>() != report.records.size())
      throw error("report total disagrees with its record count");
    return report;
  } catch (const OrderedJson::exception& e) {
    throw error(std::string("malformed verify report: ") + e.what());
  }
}

std::vector<Check> verify_cyclic(int n) {
  if (n < 2) throw error("verify_cyclic requires n >= 2");
  std::vector<Check> out;
  for (const Perm& w : Perm::all(n)) {
    const Perm shifted = shift_values_down(w);
    const int j = w.position_of(1);
    HPoly num = j >= 2 ? rect_schur(j - 1, n) : h_one(n);
    std::vector<int> den(static_cast<std::size_t>(n) - 1, 0);
    if (j <= n - 1) den[static_cast<std::size_t>(j) - 1] = 1;
    const LocElem factor(std::move(num), std::move(den));

    const LocElem lhs = phi_quantum_schubert(shifted);
    const LocElem rhs = phi_quantum_schubert(w) * factor;
    bool pass = loc_eq(lhs, rhs);
    std::string detail;
    if (!pass) detail = lhs.str() + " vs " + rhs.str();
    if (!(lambda_of(shifted) == lambda_of(w))) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "shape changed: " + lambda_of(w).str() + " -> " +
                lambda_of(shifted).str();
    }
    out.push_back({w.str() + " -> " + shifted.str(), pass, detail});
  }
  return out;
}

std::vector<Check> verify_qschur_image(int n) {
  if (n < 2) throw error("verify_qschur_image requires n >= 2");
  std::vector<Check> out;
  for (int m = 1; m <= n - 1; ++m) {
    std::vector<int> den(static_cast<std::size_t>(n) - 1, 0);
    den[static_cast<std::size_t>(m) - 1] = 1;
    for (int size = 0; size <= m * (n - m); ++size)
      for (const Partition& lam : Partition::all(size, n - m, m)) {
        const Polynomial qs = quantum_schur(lam, m, n);
        const LocElem lhs = phi(qs);

        SchurExpansion rect;
        rect[rect_shape(m, n)] = 1;
        const LocElem perp_form(
            schur_expansion_to_h(perp(lam.conjugate(), rect, n), n), den);

        std::vector<int> comp;
        for (int i = 1; i <= m; ++i)
          comp.push_back((n - m) - lam.part(m - i + 1));
        const Partition complement_transpose = Partition(comp).conjugate();
        const LocElem proof_form(schur_to_h(complement_transpose, n), den);

        const Perm w = grassmannian_perm(lam, m, n);
        const bool schubert_match = quantum_schubert(w) == qs;

        const AffinePerm y =
            (AffinePerm(w.window()) *
             translation(coweight_negate(omega_coweight(m, n))))
                .proper_part();
        const bool affine_match =
            y.is_grassmannian() && bounded_partition_of(y) == complement_transpose;

        const bool pass = loc_eq(lhs, perp_form) && loc_eq(lhs, proof_form) &&
                          schubert_match && affine_match;
        std::string detail;
        if (!pass) {
          detail = "image " + lhs.str() + ", perp " + perp_form.str() +
                   ", complement " + proof_form.str();
          if (!schubert_match) detail += ", Schubert route differs";
          if (!affine_match) detail += ", affine route differs";
        }
        out.push_back(
            {"m=" + std::to_string(m) + " lambda=" + lam.str(), pass, detail});
      }
  }
  return out;
}

std::vector<Check> verify_rotation_images(int n) {
  if (n < 2) throw error("verify_rotation_images requires n >= 2");
  std::vector<LocElem> images;
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<int> window;
    for (int v = n - i + 1; v <= n; ++v) window.push_back(v);
    for (int v = 1; v <= n - i; ++v) window.push_back(v);
    images.push_back(phi_quantum_schubert(Perm(std::move(window))));
  }

  std::vector<Check> out;
  for (int i = 1; i <= n - 1; ++i) {
    const LocElem& image = images[static_cast<std::size_t>(i) - 1];
    const bool pass = loc_eq(image, LocElem::inverse_rect(n, i));
    out.push_back({"rotation-image-" + std::to_string(i), pass, image.str()});
  }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i; j <= n - 1; ++j) {
      std::vector<int> den(static_cast<std::size_t>(n) - 1, 0);
      den[static_cast<std::size_t>(i) - 1] += 1;
      den[static_cast<std::size_t>(j) - 1] += 1;
      const LocElem product = images[static_cast<std::size_t>(i) - 1] *
                              images[static_cast<std::size_t>(j) - 1];
      const bool pass = loc_eq(product, LocElem(h_one(n), std::move(den)));
      out.push_back({"rotation-product-" + std::to_string(i) + "-" +
                         std::to_string(j),
                     pass, pass ? "" : product.str()});
    }
  return out;
}

std::vector<Check> verify_appendix(int n, int max_size) {
  if (n < 2) throw error("verify_appendix requires n >= 2");
  std::vector<Check> out;
  for (int i = 1; i <= n - 1; ++i)
    for (Check c : check_d_formulas(i, n)) {
      c.name = "d" + std::to_string(i) + "-" + c.name;
      out.push_back(std::move(c));
    }

  for (const AffinePerm& y : grassmannian_up_to_length(n, max_size)) {
    const Partition lambda = bounded_partition_of(y);
    const RectFactorization rf = rectangle_factor_decomposition(y);
    const Partition core_shape = bounded_partition_of(rf.core);

    Partition expected = core_shape;
    for (int i = 1; i <= n - 1; ++i)
      for (int e = 0; e < rf.exponents[static_cast<std::size_t>(i) - 1]; ++e)
        expected = expected.union_parts(rect_shape(i, n));
    bool pass = expected == lambda;
    std::string detail;
    if (!pass) detail = "parts " + expected.str() + " vs " + lambda.str();

    for (int i = 1; i <= n - 1; ++i) {
      if (i_reducible(rf.core, i)) {
        pass = false;
        detail += " core still divisible by d" + std::to_string(i);
      }
      int mult = 0;
      for (int part : core_shape.parts()) mult += part == i ? 1 : 0;
      if (mult > n - 1 - i) {
        pass = false;
        detail += " core holds a full rectangle of " + std::to_string(i) + "s";
      }
    }

    HPoly product = kschur_in_h(core_shape, n);
    for (int i = 1; i <= n - 1; ++i) {
      const int e = rf.exponents[static_cast<std::size_t>(i) - 1];
      if (e > 0) product = product * rect_schur_power(i, e, n);
    }
    if (!(product == kschur_in_h(lambda, n))) {
      pass = false;
      detail += " function-level factorization mismatch";
    }

    out.push_back({"factorization-" + y.str(), pass, detail});
  }
  return out;
}

}  // namespace qsk
