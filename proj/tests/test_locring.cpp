#include <doctest.h>

#include <map>
#include <random>
#include <vector>

#include "qsk/locring.hpp"
#include "qsk/partition.hpp"
#include "qsk/polynomial.hpp"
#include "qsk/symfunc.hpp"
#include "test_support.hpp"

using qsk::HPoly;
using qsk::LocElem;
using qsk::Partition;
using qsk::Polynomial;

namespace {

HPoly parse_h(const std::string& text, int n) {
  return Polynomial::parse(qsk::alphabet_h(n), text);
}

LocElem random_loc(std::mt19937& rng, int n) {
  HPoly num = qsk::testing::random_poly(rng, qsk::alphabet_h(n), 4, 2, 6);
  std::vector<int> den(n - 1);
  for (int& d : den) d = std::uniform_int_distribution<int>(0, 3)(rng);
  return LocElem(std::move(num), std::move(den));
}

}  // namespace

TEST_CASE("construction and accessors") {
  LocElem zero(3);
  CHECK(zero.rank() == 3);
  CHECK(zero.is_zero());
  CHECK(zero.den() == std::vector<int>{0, 0});

  LocElem c = LocElem::from_int(4, qsk::Int(7));
  CHECK(c.rank() == 4);
  CHECK_FALSE(c.is_zero());
  CHECK(c.num() == Polynomial::constant(qsk::alphabet_h(4), 7));

  LocElem inv = LocElem::inverse_rect(3, 2);
  CHECK(inv.num() == Polynomial::constant(qsk::alphabet_h(3), 1));
  CHECK(inv.den() == std::vector<int>{0, 1});

  CHECK_THROWS_AS(LocElem(parse_h("h1", 3), {1, 2, 3}), qsk::error);  // wrong length
  CHECK_THROWS_AS(LocElem(parse_h("h1", 3), {-1, 0}), qsk::error);
}

TEST_CASE("field arithmetic against hand fractions") {
  const int n = 3;
  // At n = 3, s_{R_1} = e_2 and s_{R_2} = h_2.
  const LocElem a(parse_h("h1", n), {1, 0});   // h1 / e2
  const LocElem b(parse_h("h2", n), {0, 1});   // h2 / h2 = 1
  CHECK(qsk::loc_eq(b, LocElem::from_int(n, qsk::Int(1))));

  // h1/e2 + 1 = (h1 + e2)/e2.
  CHECK(qsk::loc_eq(a + b, LocElem(parse_h("h1 + h1^2 - h2", n), {1, 0})));
  // (h1/e2) * (h2/e2) = h1*h2 / e2^2.
  const LocElem q1(parse_h("h2", n), {2, 0});
  CHECK(qsk::loc_eq(a * q1, LocElem(parse_h("h1*h2", n), {3, 0})));
  // Subtraction.
  CHECK((a - a).is_zero());
  CHECK(qsk::loc_eq(-a, LocElem::from_int(n, qsk::Int(0)) - a));
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937 rng(9090);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 4)(rng);
    const LocElem a = random_loc(rng, n);
    const LocElem b = random_loc(rng, n);
    const LocElem c = random_loc(rng, n);
    const LocElem one = LocElem::from_int(n, qsk::Int(1));
    CHECK(qsk::loc_eq(a + b, b + a));
    CHECK(qsk::loc_eq((a + b) + c, a + (b + c)));
    CHECK(qsk::loc_eq(a * b, b * a));
    CHECK(qsk::loc_eq((a * b) * c, a * (b * c)));
    CHECK(qsk::loc_eq(a * (b + c), a * b + a * c));
    CHECK(qsk::loc_eq(a * one, a));
    CHECK((a - a).is_zero());
    CHECK(qsk::loc_eq(a + LocElem(n), a));
  }
}

TEST_CASE("loc_eq is an equivalence relation and detects inequality") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 4)(rng);
    const LocElem a = random_loc(rng, n);
    CHECK(qsk::loc_eq(a, a));
    // Multiplying num and den by the same rectangle power preserves equality.
    std::vector<int> bump(n - 1, 0);
    const int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
    bump[i - 1] = 2;
    std::vector<int> den = a.den();
    den[i - 1] += 2;
    const LocElem scaled(a.num() * qsk::rect_schur_power(i, 2, n), den);
    CHECK(qsk::loc_eq(a, scaled));
    CHECK(qsk::loc_eq(scaled, a));
    // And shifting the numerator by 1 breaks it.
    const LocElem shifted(a.num() + Polynomial::constant(qsk::alphabet_h(n), 1), a.den());
    CHECK_FALSE(qsk::loc_eq(a, shifted));
  }

  // Transitivity on triples built from one element.
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3;
    const LocElem a = random_loc(rng, n);
    const LocElem b(a.num() * qsk::rect_schur_power(1, 1, n),
                    {a.den()[0] + 1, a.den()[1]});
    const LocElem c(a.num() * qsk::rect_schur_power(2, 3, n),
                    {a.den()[0], a.den()[1] + 3});
    CHECK(qsk::loc_eq(a, b));
    CHECK(qsk::loc_eq(b, c));
    CHECK(qsk::loc_eq(a, c));
  }
}

TEST_CASE("reduced preserves value and clears common factors") {
  const int n = 3;
  const LocElem bloated(parse_h("h1", n) * qsk::rect_schur_power(1, 2, n) *
                            qsk::rect_schur_power(2, 1, n),
                        {3, 2});
  const LocElem slim = bloated.reduced();
  CHECK(qsk::loc_eq(bloated, slim));
  CHECK(slim.den() == std::vector<int>{1, 1});
  CHECK(slim.num() == parse_h("h1", n));

  std::mt19937 rng(303);
  for (int trial = 0; trial < 100; ++trial) {
    const LocElem a = random_loc(rng, 3);
    CHECK(qsk::loc_eq(a, a.reduced()));
  }
}

TEST_CASE("str shows rectangle names") {
  const int n = 3;
  CHECK(LocElem(parse_h("h1", n), {0, 0}).str() == "h1");
  CHECK(LocElem(parse_h("h1", n), {1, 1}).str() == "h1 / e2*h2");
  CHECK(LocElem(parse_h("h1", n), {2, 0}).str() == "h1 / e2^2");
  CHECK(LocElem(3).str() == "0");
}

TEST_CASE("json round trip") {
  std::mt19937 rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 5)(rng);
    const LocElem a = random_loc(rng, n);
    const LocElem back = LocElem::from_json(a.json());
    CHECK(back.rank() == a.rank());
    CHECK(back.num() == a.num());
    CHECK(back.den() == a.den());
  }
  CHECK_THROWS_AS(LocElem::from_json("{}"), qsk::error);
}

TEST_CASE("substitution images at n = 3") {
  const int n = 3;
  // P_1 = s_{(1,1)} / s_{(1,1)} restricted... spelled out: R_1 = (1,1),
  // R'_1 = (1), R_2 = (2), R'_2 = (1). So
  //   x_1 -> s_{(1)}/s_{(1,1)} = h1/e2,
  //   x_2 -> s_{(1)}/s_{(2)} - s_{(1)}/s_{(1,1)} = h1/h2 - h1/e2,
  //   x_3 -> -s_{(1)}/s_{(2)} = -h1/h2,
  //   q_1 -> s_{R_0} s_{R_2} / s_{R_1}^2 = h2/e2^2,
  //   q_2 -> s_{R_1} s_{R_3} / s_{R_2}^2 = e2/h2^2.
  CHECK(qsk::loc_eq(qsk::phi_x_image(1, n), LocElem(parse_h("h1", n), {1, 0})));
  CHECK(qsk::loc_eq(qsk::phi_x_image(2, n),
                    LocElem(parse_h("h1", n) * parse_h("h1^2 - h2", n) - parse_h("h1*h2", n),
                            {1, 1})));
  CHECK(qsk::loc_eq(qsk::phi_x_image(3, n), -LocElem(parse_h("h1", n), {0, 1})));
  CHECK(qsk::loc_eq(qsk::phi_q_image(1, n), LocElem(parse_h("h2", n), {2, 0})));
  CHECK(qsk::loc_eq(qsk::phi_q_image(2, n), LocElem(parse_h("h1^2 - h2", n), {0, 2})));

  // x_1 + x_2 + x_3 telescopes to zero, at every rank.
  for (int rank = 2; rank <= 5; ++rank) {
    std::vector<LocElem> xs;
    for (int i = 1; i <= rank; ++i) xs.push_back(qsk::phi_x_image(i, rank));
    CHECK(qsk::loc_sum(std::move(xs), rank).is_zero());
  }
}

TEST_CASE("phi is a ring homomorphism") {
  std::mt19937 rng(606);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 3)(rng);
    const Polynomial p = qsk::testing::random_poly(rng, qsk::alphabet_xq(n), 3, 2, 4);
    const Polynomial q = qsk::testing::random_poly(rng, qsk::alphabet_xq(n), 3, 2, 4);
    CHECK(qsk::loc_eq(qsk::phi(p + q), qsk::phi(p) + qsk::phi(q)));
    CHECK(qsk::loc_eq(qsk::phi(p * q), qsk::phi(p) * qsk::phi(q)));
  }
  CHECK(qsk::phi(Polynomial(qsk::alphabet_xq(3))).is_zero());
  CHECK(qsk::loc_eq(qsk::phi(Polynomial::constant(qsk::alphabet_x(4), 5)),
                    LocElem::from_int(4, qsk::Int(5))));
}

TEST_CASE("phi on a mixed monomial") {
  // p = x1 * q1 at n = 3 maps to (h1/e2) * (h2/e2^2) = h1*h2 / e2^3.
  const Polynomial p = Polynomial::parse(qsk::alphabet_xq(3), "x1*q1");
  CHECK(qsk::loc_eq(qsk::phi(p), LocElem(parse_h("h1*h2", 3), {3, 0})));
}

TEST_CASE("eval_hom matches phi when handed the phi images") {
  std::mt19937 rng(707);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3;
    const Polynomial p = qsk::testing::random_poly(rng, qsk::alphabet_xq(n), 4, 2, 5);
    std::map<qsk::VarId, LocElem> images;
    for (int i = 1; i <= n; ++i) {
      images.emplace(qsk::VarId{qsk::VarKind::X, i}, qsk::phi_x_image(i, n));
    }
    for (int i = 1; i < n; ++i) {
      images.emplace(qsk::VarId{qsk::VarKind::Q, i}, qsk::phi_q_image(i, n));
    }
    CHECK(qsk::loc_eq(qsk::eval_hom(p, images, n), qsk::phi(p)));
  }
}

TEST_CASE("loc_sum agrees with sequential addition") {
  std::mt19937 rng(808);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 4)(rng);
    const int count = std::uniform_int_distribution<int>(0, 6)(rng);
    std::vector<LocElem> items;
    LocElem serial(n);
    for (int k = 0; k < count; ++k) {
      items.push_back(random_loc(rng, n));
      serial = serial + items.back();
    }
    CHECK(qsk::loc_eq(qsk::loc_sum(std::move(items), n), serial));
  }
}

TEST_CASE("rect_schur_power") {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i < n; ++i) {
      CHECK(qsk::rect_schur_power(i, 0, n) ==
            Polynomial::constant(qsk::alphabet_h(n), 1));
      CHECK(qsk::rect_schur_power(i, 1, n) == qsk::rect_schur(i, n));
      CHECK(qsk::rect_schur_power(i, 3, n) ==
            qsk::rect_schur(i, n) * qsk::rect_schur(i, n) * qsk::rect_schur(i, n));
    }
  }
}
