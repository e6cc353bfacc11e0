#include <doctest.h>

#include <map>
#include <random>

#include "qsk/error.hpp"
#include "qsk/polynomial.hpp"

#include "test_support.hpp"

using namespace qsk;
using testing::random_nonzero_poly;
using testing::random_poly;

namespace {

Polynomial xp(int i, int n = 3) { return Polynomial::variable(alphabet_xq(n), xvar(i)); }
Polynomial qp(int i, int n = 3) { return Polynomial::variable(alphabet_xq(n), qvar(i)); }

int unit_weight(VarId) { return 1; }

}  // namespace

TEST_CASE("display of small polynomials") {
  const VarAlphabet a = alphabet_xq(3);
  CHECK(Polynomial(a).str() == "0");
  CHECK(Polynomial::constant(a, 5).str() == "5");
  CHECK(Polynomial::constant(a, -5).str() == "-5");
  CHECK(xp(1).str() == "x1");
  CHECK((xp(1) * xp(1) * xp(2) + qp(1) * xp(1)).str() == "x1^2*x2 + q1*x1");
  CHECK((xp(1) - xp(2)).str() == "x1 - x2");
  CHECK((-xp(1)).str() == "-x1");
  CHECK((xp(1) * 2).str() == "2*x1");
  CHECK((xp(2) * xp(2) - qp(2) + Polynomial::constant(a, 1)).str() ==
        "x2^2 - q2 + 1");
}

TEST_CASE("parse accepts the printed grammar and rejects junk") {
  const VarAlphabet a = alphabet_xq(3);
  CHECK(Polynomial::parse(a, "0").is_zero());
  CHECK(Polynomial::parse(a, "x1^2*x2 + q1*x1") ==
        xp(1) * xp(1) * xp(2) + qp(1) * xp(1));
  CHECK(Polynomial::parse(a, "-x1 + 3") ==
        Polynomial::constant(a, 3) - xp(1));
  CHECK_THROWS_AS(Polynomial::parse(a, "h1"), error);       // wrong family
  CHECK_THROWS_AS(Polynomial::parse(a, "x9"), error);       // out of rank
  CHECK_THROWS_AS(Polynomial::parse(a, "x1 +"), error);
  CHECK_THROWS_AS(Polynomial::parse(a, "x1 x2"), error);
  CHECK_THROWS_AS(Polynomial::parse(a, "(x1)"), error);
}

TEST_CASE("parse/str round trip on random polynomials") {
  std::mt19937 rng(20260814);
  for (const AlphabetKind kind :
       {AlphabetKind::X, AlphabetKind::Q, AlphabetKind::XQ, AlphabetKind::H}) {
    const VarAlphabet a(kind, 4);
    for (int trial = 0; trial < 200; ++trial) {
      const Polynomial p = random_poly(rng, a);
      CHECK(Polynomial::parse(a, p.str()) == p);
    }
  }
}

TEST_CASE("json round trip on random polynomials") {
  std::mt19937 rng(7);
  const VarAlphabet a = alphabet_xq(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = random_poly(rng, a);
    CHECK(Polynomial::from_json(a, p.json()) == p);
  }
}

TEST_CASE("ring axioms hold on random triples") {
  std::mt19937 rng(99);
  const VarAlphabet a = alphabet_xq(3);
  const Polynomial zero(a);
  const Polynomial one = Polynomial::constant(a, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = random_poly(rng, a, 4);
    const Polynomial q = random_poly(rng, a, 4);
    const Polynomial r = random_poly(rng, a, 4);
    CHECK(p + q == q + p);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + zero == p);
    CHECK(p * one == p);
    CHECK(p - p == zero);
    CHECK(p + (-p) == zero);
  }
}

TEST_CASE("powers and integer scalars") {
  std::mt19937 rng(11);
  const VarAlphabet a = alphabet_xq(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial p = random_poly(rng, a, 3);
    CHECK(p.pow(0) == Polynomial::constant(a, 1));
    CHECK(p.pow(1) == p);
    CHECK(p.pow(3) == p * p * p);
    CHECK(p * Int(0) == Polynomial(a));
    CHECK(p * Int(-2) == -(p + p));
  }
}

TEST_CASE("exact division recovers the cofactor") {
  std::mt19937 rng(12345);
  const VarAlphabet a = alphabet_xq(3);
  int done = 0;
  while (done < 200) {
    const Polynomial p = random_poly(rng, a, 4);
    const Polynomial d = random_nonzero_poly(rng, a);
    const auto back = (p * d).divided_by(d);
    REQUIRE(back.has_value());
    CHECK(*back == p);

    // p*d + 1 is never divisible by a nonconstant d
    if (d.degree(unit_weight) >= 1) {
      const Polynomial off = p * d + Polynomial::constant(a, 1);
      CHECK(!off.divided_by(d).has_value());
    }
    ++done;
  }
  CHECK(!Polynomial::constant(a, 3).divided_by(Polynomial::constant(a, 2)).has_value());
  CHECK_THROWS_AS(xp(1).divided_by(Polynomial(a)), error);
}

TEST_CASE("weighted degree and homogeneity") {
  const auto quantum = [](VarId v) { return v.kind == VarKind::Q ? 2 : 1; };
  const Polynomial f = xp(1) * xp(1) * xp(2) + qp(1) * xp(1);
  CHECK(f.degree(quantum) == 3);
  CHECK(f.is_homogeneous(quantum));
  CHECK(!f.is_homogeneous(unit_weight));
  CHECK(Polynomial(alphabet_xq(3)).degree(unit_weight) == -1);
  CHECK(Polynomial(alphabet_xq(3)).is_homogeneous(unit_weight));
}

TEST_CASE("eval is a ring homomorphism into the rationals") {
  std::mt19937 rng(314);
  const VarAlphabet a = alphabet_xq(3);
  std::uniform_int_distribution<int> num(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::map<VarId, Rat> point;
    for (VarId v : a.variables()) point[v] = Rat(num(rng), 7);
    const auto image = [&](VarId v) -> const Rat& { return point.at(v); };
    const auto lift = [](const Int& c) { return Rat(c); };
    const auto value = [&](const Polynomial& p) {
      return p.eval<Rat>(image, lift);
    };
    const Polynomial p = random_poly(rng, a, 4);
    const Polynomial q = random_poly(rng, a, 4);
    CHECK(value(p + q) == value(p) + value(q));
    CHECK(value(p * q) == value(p) * value(q));
    CHECK(value(Polynomial::constant(a, 9)) == Rat(9));
  }
}

TEST_CASE("substitute zero for a family") {
  const Polynomial f = xp(1) * xp(1) * xp(2) + qp(1) * xp(1);
  const Polynomial classical = f.substituted_zero(VarKind::Q);
  CHECK(classical == xp(1) * xp(1) * xp(2));
  CHECK(classical.alphabet() == alphabet_xq(3));
  CHECK(f.substituted_zero(VarKind::X).is_zero());
}

TEST_CASE("alphabet conversion keeps terms and checks membership") {
  const Polynomial f = xp(1) * xp(2);
  const Polynomial g = f.converted(alphabet_x(3));
  CHECK(g.alphabet() == alphabet_x(3));
  CHECK(g.str() == f.str());
  CHECK_THROWS_AS((qp(1) * xp(1)).converted(alphabet_x(3)), error);
  CHECK(g.converted(alphabet_xq(3)) == f);
}

TEST_CASE("swapping variables is an involution") {
  std::mt19937 rng(2718);
  const VarAlphabet a = alphabet_x(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = random_poly(rng, a);
    const Polynomial once = p.swapped_vars(xvar(1), xvar(3));
    CHECK(once.swapped_vars(xvar(1), xvar(3)) == p);
  }
  CHECK(xp(1).converted(alphabet_x(3)).swapped_vars(xvar(1), xvar(2)) ==
        xp(2).converted(alphabet_x(3)));
}

TEST_CASE("add_term accumulates and erases cancellations") {
  Polynomial p(alphabet_x(2));
  const Monomial m{{xvar(1), 1}};
  p.add_term(m, 2);
  p.add_term(m, -2);
  CHECK(p.is_zero());
  p.add_term(m, 5);
  CHECK(p.coefficient(m) == 5);
  CHECK(p.coefficient(Monomial{}) == 0);
}

TEST_CASE("monomial helpers") {
  const Monomial a{{xvar(1), 2}, {xvar(2), 1}};
  const Monomial b{{xvar(1), 1}};
  CHECK(monomial_total_degree(a) == 3);
  CHECK(monomial_mul(a, b) == Monomial{{xvar(1), 3}, {xvar(2), 1}});
  CHECK(monomial_div(a, b) == Monomial{{xvar(1), 1}, {xvar(2), 1}});
  CHECK(!monomial_div(b, a).has_value());
}

TEST_CASE("mixed-alphabet arithmetic is rejected") {
  const Polynomial p = xp(1);
  const Polynomial other = Polynomial::variable(alphabet_xq(4), xvar(1));
  CHECK_THROWS_AS(p + other, error);
  CHECK_THROWS_AS(p * other, error);
}
