#include <doctest.h>

#include <random>

#include "qclus/torus.hpp"

using namespace qclus;

namespace {

SkewFormPtr form2() {
  return std::make_shared<SkewForm>(Mat{{0, 1}, {-1, 0}});
}

TorusElem random_elem(std::mt19937_64& rng, const SkewFormPtr& f, int max_terms,
                      int max_exp = 3) {
  std::uniform_int_distribution<int> nt(1, max_terms), e(-max_exp, max_exp), c(-3, 3), q(-2, 2);
  TorusElem r(f);
  for (int i = 0, n = nt(rng); i < n; ++i) {
    ExpVec a(f->dim());
    for (auto& x : a) x = e(rng);
    r.add_term(a, QCoeff::term(c(rng), q(rng)));
  }
  return r;
}

// commutative oracle: multiply exponent polynomials ignoring the twist
std::map<ExpVec, Int> commutative_mul_q1(const TorusElem& a, const TorusElem& b) {
  std::map<ExpVec, Int> r;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) {
      ExpVec k(x.size());
      for (size_t i = 0; i < x.size(); ++i) k[i] = x[i] + y[i];
      r[k] += cx.eval_at_one() * cy.eval_at_one();
      if (r[k] == 0) r.erase(k);
    }
  return r;
}

std::map<ExpVec, Int> eval1(const TorusElem& t) {
  std::map<ExpVec, Int> r;
  for (const auto& [a, c] : t.terms()) {
    r[a] = c.eval_at_one();
    if (r[a] == 0) r.erase(a);
  }
  return r;
}

}  // namespace

TEST_CASE("torus_mul forced twists") {
  auto f = form2();
  TorusElem x1 = TorusElem::monomial(f, {1, 0});
  TorusElem x2 = TorusElem::monomial(f, {0, 1});
  CHECK(x1 * x2 == TorusElem::monomial(f, {1, 1}, QCoeff::term(1, 1)));
  CHECK(x2 * x1 == TorusElem::monomial(f, {1, 1}, QCoeff::term(1, -1)));

  TorusElem s = x1 + x2;
  TorusElem sq = s * s;
  TorusElem expect = TorusElem::monomial(f, {2, 0}) + TorusElem::monomial(f, {0, 2}) +
                     TorusElem::monomial(f, {1, 1}, QCoeff::term(1, 1) + QCoeff::term(1, -1));
  CHECK(sq == expect);
}

TEST_CASE("torus_mul associativity (property)") {
  std::mt19937_64 rng(3);
  Mat lam4 = {{0, 1, -2, 0}, {-1, 0, 1, 1}, {2, -1, 0, 0}, {0, -1, 0, 0}};
  auto f = std::make_shared<SkewForm>(lam4);
  for (int t = 0; t < 60; ++t) {
    TorusElem a = random_elem(rng, f, 6), b = random_elem(rng, f, 6), c = random_elem(rng, f, 6);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("q=1 specialization of torus_mul is commutative multiplication") {
  std::mt19937_64 rng(5);
  auto f = form2();
  for (int t = 0; t < 80; ++t) {
    TorusElem a = random_elem(rng, f, 5), b = random_elem(rng, f, 5);
    CHECK(eval1(a * b) == commutative_mul_q1(a, b));
  }
}

TEST_CASE("form mismatch is an error") {
  auto f = form2();
  auto g = std::make_shared<SkewForm>(Mat{{0, 2}, {-2, 0}});
  TorusElem a = TorusElem::monomial(f, {1, 0});
  TorusElem b = TorusElem::monomial(g, {0, 1});
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(SkewForm(Mat{{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("yhat_form integrality") {
  Mat B = {{0, 1}, {-1, 0}};
  auto f = yhat_form({{1, 1}, {1, 1}}, B);
  CHECK(f->matrix() == B);
  // d = (1/2, 1/2) makes DB non-integral
  CHECK_THROWS_AS(yhat_form({{1, 2}, {1, 2}}, B), std::domain_error);
  // Yhat relations: q^{(1/2) d1 b12} etc.
  TorusElem y1 = TorusElem::monomial(f, {1, 0});
  TorusElem y2 = TorusElem::monomial(f, {0, 1});
  CHECK(yhat_mul(y1, y2, {{1, 1}, {1, 1}}, B) ==
        TorusElem::monomial(f, {1, 1}, QCoeff::term(1, 1)));
  CHECK(yhat_mul(y2, y1, {{1, 1}, {1, 1}}, B) ==
        TorusElem::monomial(f, {1, 1}, QCoeff::term(1, -1)));
  // squares see no twist
  TorusElem y12 = yhat_mul(y1, y1, {{1, 1}, {1, 1}}, B);
  CHECK(y12 == TorusElem::monomial(f, {2, 0}));
  // G2 data: d_i = 1, B as above: Y1 Y2 = q Y2 Y1
  TorusElem lhs = y1 * y2;
  TorusElem rhs = (y2 * y1).scaled(QCoeff::term(1, 2));
  CHECK(lhs == rhs);
}

TEST_CASE("series inverse: geometric example") {
  auto f = form2();
  QSeries one = QSeries::unit(f, 3);
  QSeries z = QSeries::monomial(f, {1, 0}, 3);
  QSeries inv = (one + z).inverse();
  QSeries expect = one - z + QSeries::monomial(f, {2, 0}, 3) - QSeries::monomial(f, {3, 0}, 3);
  CHECK(inv == expect);
  CHECK(one.inverse() == one);
}

TEST_CASE("series inverse: commutative cross-check at q=1") {
  // (1 + z*Y1 + Y1^2)^{-1} at bound 2 = 1 - z*Y1 + (z^2-1)*Y1^2, z := 2
  auto f = form2();
  QSeries one = QSeries::unit(f, 2);
  QSeries y = QSeries::monomial(f, {1, 0}, 2);
  QSeries a = one + y.scaled(QCoeff(2)) + y * y;
  QSeries inv = a.inverse();
  QSeries expect = one - y.scaled(QCoeff(2)) + (y * y).scaled(QCoeff(3));
  CHECK(inv == expect);
}

TEST_CASE("series inverse is two-sided (property)") {
  std::mt19937_64 rng(9);
  auto f = form2();
  std::uniform_int_distribution<int> e(0, 3), c(-3, 3), q(-2, 2), nt(1, 5);
  for (int t = 0; t < 50; ++t) {
    TorusElem el = TorusElem::unit(f);
    for (int i = 0, n = nt(rng); i < n; ++i) {
      ExpVec a{e(rng), e(rng)};
      if (a[0] == 0 && a[1] == 0) continue;
      el.add_term(a, QCoeff::term(c(rng), q(rng)));
    }
    QSeries s(el, 6);
    QSeries inv = s.inverse();
    CHECK(s * inv == QSeries::unit(f, 6));
    CHECK(inv * s == QSeries::unit(f, 6));
  }
}

TEST_CASE("series with non-unit constant term cannot be inverted") {
  auto f = form2();
  QSeries two = QSeries::unit(f, 4).scaled(QCoeff(2));
  CHECK_THROWS_AS(two.inverse(), std::domain_error);
  QSeries noconst = QSeries::monomial(f, {1, 0}, 4);
  CHECK_THROWS_AS(noconst.inverse(), std::domain_error);
  CHECK_THROWS_AS(QSeries(TorusElem::monomial(f, {-1, 0}), 4), std::domain_error);
}

TEST_CASE("canonical torus rendering") {
  auto f = form2();
  TorusElem t = TorusElem::monomial(f, {1, 0}, QCoeff(1) + QCoeff::term(1, 2)) +
                TorusElem::monomial(f, {0, -1}, QCoeff::term(1, 1));
  CHECK(t.str() == "q^(1/2) * X(0,-1) + (1 + q) * X(1,0)");
}
