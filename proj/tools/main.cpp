#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsk/affine.hpp"
#include "qsk/error.hpp"
#include "qsk/kschur.hpp"
#include "qsk/locring.hpp"
#include "qsk/schubert.hpp"
#include "qsk/toda.hpp"
#include "qsk/verify.hpp"

namespace {

using OrderedJson = nlohmann::ordered_json;
using qsk::Check;

struct Args {
  int n = 0;
  std::string w;
  std::string lambda = "<unset>";
  int i = 0;
  std::string format = "text";
  std::string cache_dir;
  int jobs = 1;
  bool allow_large = false;
};

void add_common(CLI::App* cmd, Args& args, bool needs_w, bool needs_lambda,
                bool needs_i) {
  cmd->add_option("--n", args.n, "rank (size of the permutations)")->required();
  if (needs_w)
    cmd->add_option("--w", args.w, "permutation in one-line notation, comma separated")
        ->required();
  if (needs_lambda) {
    args.lambda.clear();
    cmd->add_option("--lambda", args.lambda,
                    "partition, comma separated (omit for the empty one)");
  }
  if (needs_i)
    cmd->add_option("--i", args.i, "rectangle index, 1 <= i <= n-1")->required();
  cmd->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--cache-dir", args.cache_dir,
                  "directory for on-disk expansion caches");
  cmd->add_flag("--allow-large", args.allow_large, "lift the n <= 7 guard");
}

void apply_common(const Args& args) {
  if (args.n < 2) throw qsk::error("--n must be at least 2");
  if (args.n > 7 && !args.allow_large)
    throw qsk::error("n > 7 grows very quickly; pass --allow-large to proceed");
  if (!args.cache_dir.empty()) qsk::set_kschur_cache_dir(args.cache_dir);
}

std::vector<int> parse_ints(const std::string& text, const char* what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = text.find(',', pos);
    const std::string piece =
        comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      const int value = std::stoi(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(value);
    } catch (const std::exception&) {
      throw qsk::error(std::string(what) + ": bad integer '" + piece + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

qsk::Perm perm_arg(const Args& args) {
  const qsk::Perm w{parse_ints(args.w, "--w")};
  if (w.rank() != args.n)
    throw qsk::error("--w has " + std::to_string(w.rank()) +
                     " entries but --n is " + std::to_string(args.n));
  return w;
}

qsk::Partition partition_arg(const Args& args) {
  return qsk::Partition{parse_ints(args.lambda, "--lambda")};
}

void emit_poly(const Args& args, const qsk::Perm& w, const qsk::Polynomial& p) {
  if (args.format == "json") {
    OrderedJson j;
    j["n"] = args.n;
    j["w"] = w.str();
    j["poly"] = OrderedJson::parse(p.json());
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << p.str() << "\n";
  }
}

int run_schubert(const Args& args) {
  const qsk::Perm w = perm_arg(args);
  emit_poly(args, w, qsk::schubert_poly(w));
  return 0;
}

int run_qschubert(const Args& args) {
  const qsk::Perm w = perm_arg(args);
  emit_poly(args, w, qsk::quantum_schubert(w));
  return 0;
}

int run_phi(const Args& args) {
  const qsk::Perm w = perm_arg(args);
  const qsk::LocElem image = qsk::phi_quantum_schubert(w);
  if (args.format == "json") {
    OrderedJson j;
    j["n"] = args.n;
    j["w"] = w.str();
    j["image"] = OrderedJson::parse(image.json());
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << image.str() << "\n";
  }
  return 0;
}

int run_kschur(const Args& args) {
  const qsk::Partition lambda = partition_arg(args);
  const qsk::HPoly& f = qsk::kschur_in_h(lambda, args.n);
  if (args.format == "json") {
    OrderedJson j;
    j["n"] = args.n;
    j["lambda"] = lambda.str();
    j["poly"] = OrderedJson::parse(f.json());
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << f.str() << "\n";
  }
  return 0;
}

int run_lambda_of(const Args& args) {
  const qsk::Perm w = perm_arg(args);
  const qsk::Partition lambda = qsk::lambda_of(w);
  if (args.format == "json") {
    OrderedJson j;
    j["n"] = args.n;
    j["w"] = w.str();
    j["lambda"] = lambda.str();
    j["descents"] = w.descents();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << lambda.str() << "\n";
  }
  return 0;
}

int run_d_element(const Args& args) {
  if (args.i < 1 || args.i > args.n - 1)
    throw qsk::error("--i must satisfy 1 <= i <= n-1");
  const qsk::AffinePerm d = qsk::d_element(args.i, args.n);
  if (args.format == "json") {
    OrderedJson j;
    j["n"] = args.n;
    j["i"] = args.i;
    j["window"] = d.window();
    j["bounded_partition"] = qsk::bounded_partition_of(d).str();
    j["length"] = d.length();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << d.str() << "\n";
  }
  return 0;
}

int count_pass(const std::vector<Check>& checks) {
  int count = 0;
  for (const Check& c : checks) count += c.pass ? 1 : 0;
  return count;
}

void print_checks(const std::string& label, const std::vector<Check>& checks) {
  std::cout << label << ": " << count_pass(checks) << "/" << checks.size()
            << " passed\n";
  for (const Check& c : checks)
    if (!c.pass)
      std::cout << "  FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail)
                << "\n";
}

int run_toda_check(const Args& args) {
  std::vector<Check> checks = qsk::verify_kostant(args.n);
  checks.push_back({"antitriangular", qsk::antitriangular_check(args.n), ""});
  if (args.format == "json")
    std::cout << qsk::checks_json(checks) << "\n";
  else
    print_checks("Toda/Kostant n=" + std::to_string(args.n), checks);
  return qsk::all_pass(checks) ? 0 : 1;
}

int run_verify(const Args& args) {
  const qsk::VerifyReport report = qsk::verify_theorem(args.n, args.jobs);
  const std::vector<Check> cyclic = qsk::verify_cyclic(args.n);
  const std::vector<Check> images = qsk::verify_qschur_image(args.n);
  const std::vector<Check> rotations = qsk::verify_rotation_images(args.n);
  std::vector<Check> kostant = qsk::verify_kostant(args.n);
  kostant.push_back({"antitriangular", qsk::antitriangular_check(args.n), ""});
  const std::vector<Check> appendix = qsk::verify_appendix(args.n);

  const bool ok = report.passed() && qsk::all_pass(cyclic) &&
                  qsk::all_pass(images) && qsk::all_pass(rotations) &&
                  qsk::all_pass(kostant) && qsk::all_pass(appendix);

  if (args.format == "json") {
    OrderedJson j;
    j["n"] = args.n;
    j["theorem"] = OrderedJson::parse(qsk::report_json(report));
    j["cyclic"] = OrderedJson::parse(qsk::checks_json(cyclic));
    j["qschur_image"] = OrderedJson::parse(qsk::checks_json(images));
    j["rotation_images"] = OrderedJson::parse(qsk::checks_json(rotations));
    j["kostant"] = OrderedJson::parse(qsk::checks_json(kostant));
    j["appendix"] = OrderedJson::parse(qsk::checks_json(appendix));
    j["pass"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "theorem sweep n=" << args.n << ": " << report.pass_count << "/"
              << report.records.size() << " passed (" << report.millis
              << " ms)\n";
    for (const qsk::TheoremRecord& rec : report.records)
      if (!rec.pass) std::cout << "  FAIL " << rec.w.str() << ": " << rec.detail << "\n";
    print_checks("cyclic shift", cyclic);
    print_checks("quantum Schur images", images);
    print_checks("rotation images", rotations);
    print_checks("Toda/Kostant", kostant);
    print_checks("rectangle factorization", appendix);
    std::cout << (ok ? "all suites passed\n" : "FAILURES above\n");
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact quantum Schubert / k-Schur calculator and verifier"};
  app.require_subcommand(1);

  Args schubert_args, qschubert_args, phi_args, kschur_args, lambda_args,
      d_args, verify_args, toda_args;
  std::function<int()> action;

  auto* schubert = app.add_subcommand("schubert", "Schubert polynomial of w");
  add_common(schubert, schubert_args, true, false, false);
  schubert->callback([&]() { action = [&]() { return run_schubert(schubert_args); }; });

  auto* qschubert =
      app.add_subcommand("qschubert", "quantum Schubert polynomial of w");
  add_common(qschubert, qschubert_args, true, false, false);
  qschubert->callback(
      [&]() { action = [&]() { return run_qschubert(qschubert_args); }; });

  auto* phi = app.add_subcommand(
      "phi", "image of the quantum Schubert polynomial in the localized h-ring");
  add_common(phi, phi_args, true, false, false);
  phi->callback([&]() { action = [&]() { return run_phi(phi_args); }; });

  auto* kschur =
      app.add_subcommand("kschur", "k-Schur function (t=1, k=n-1) in the h basis");
  add_common(kschur, kschur_args, false, true, false);
  kschur->callback([&]() { action = [&]() { return run_kschur(kschur_args); }; });

  auto* lambda_of =
      app.add_subcommand("lambda-of", "k-bounded shape attached to w");
  add_common(lambda_of, lambda_args, true, false, false);
  lambda_of->callback(
      [&]() { action = [&]() { return run_lambda_of(lambda_args); }; });

  auto* d_element = app.add_subcommand(
      "d-element", "affine Grassmannian element with rectangular shape R_i");
  add_common(d_element, d_args, false, false, true);
  d_element->callback([&]() { action = [&]() { return run_d_element(d_args); }; });

  auto* verify = app.add_subcommand(
      "verify", "run every verification suite for the given rank");
  add_common(verify, verify_args, false, false, false);
  verify->add_option("--jobs", verify_args.jobs, "worker threads for the sweep")
      ->check(CLI::PositiveNumber);
  verify->callback([&]() { action = [&]() { return run_verify(verify_args); }; });

  auto* toda = app.add_subcommand("toda-check", "Lax/Kostant matrix suite");
  add_common(toda, toda_args, false, false, false);
  toda->callback([&]() { action = [&]() { return run_toda_check(toda_args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::vector<Args*> all = {&schubert_args, &qschubert_args, &phi_args,
                              &kschur_args,   &lambda_args,    &d_args,
                              &verify_args,   &toda_args};
    for (const Args* a : all)
      if (a->n != 0) apply_common(*a);
    return action();
  } catch (const qsk::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const qsk::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
