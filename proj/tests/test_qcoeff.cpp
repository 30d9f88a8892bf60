#include <doctest.h>

#include <random>

#include "qclus/qcoeff.hpp"

using namespace qclus;

namespace {

// brute-force convolution oracle on raw (q2, hp, coeff) triples
QCoeff naive_mul(const QCoeff& a, const QCoeff& b) {
  std::map<QKey, Int> acc;
  for (const auto& [ka, va] : a.terms())
    for (const auto& [kb, vb] : b.terms()) acc[QKey{ka.q2 + kb.q2, ka.hp + kb.hp}] += va * vb;
  QCoeff r;
  for (const auto& [k, v] : acc) r += QCoeff::term(v, k.q2, k.hp);
  return r;
}

QCoeff random_qc(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), e(-6, 6), h(0, 2), c(-5, 5);
  QCoeff r;
  for (int i = 0, n = nterms(rng); i < n; ++i) r += QCoeff::term(c(rng), e(rng), h(rng));
  return r;
}

}  // namespace

TEST_CASE("qc_mul examples") {
  QCoeff qh = QCoeff::term(1, 1);    // q^(1/2)
  QCoeff qmh = QCoeff::term(1, -1);  // q^(-1/2)
  CHECK(qh * qmh == QCoeff(1));

  // (1 + q^(1/2)) (1 - q^(1/2)) = 1 - q
  QCoeff lhs = (QCoeff(1) + qh) * (QCoeff(1) - qh);
  CHECK(lhs == QCoeff(1) - QCoeff::term(1, 2));
  CHECK(lhs == naive_mul(QCoeff(1) + qh, QCoeff(1) - qh));

  CHECK((QCoeff(0) * QCoeff::term(3, -3)).is_zero());
}

TEST_CASE("qc_eval_at_one examples") {
  CHECK((QCoeff(1) + QCoeff::term(1, 1) + QCoeff::term(1, 2)).eval_at_one() == 3);
  CHECK(QCoeff::term(1, -3).eval_at_one() == 1);
  CHECK((QCoeff(2) - QCoeff::term(1, 1)).eval_at_one() == 1);
  CHECK_THROWS_AS(QCoeff::sym_h().eval_at_one(), std::domain_error);
}

TEST_CASE("eval_at_one is a ring homomorphism") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    QCoeff a = random_qc(rng), b = random_qc(rng);
    auto strip = [](QCoeff x) {  // drop h so eval_at_one applies
      QCoeff r;
      for (const auto& [k, v] : x.terms()) r += QCoeff::term(v, k.q2, 0);
      return r;
    };
    a = strip(a);
    b = strip(b);
    CHECK((a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one());
    CHECK(a * b == naive_mul(a, b));
    CHECK(a * b == b * a);
  }
}

TEST_CASE("associativity and distributivity") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    QCoeff a = random_qc(rng), b = random_qc(rng), c = random_qc(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("canonical text round-trip") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    QCoeff a = random_qc(rng);
    CAPTURE(a.str());
    CHECK(QCoeff::parse(a.str()) == a);
  }
  CHECK(QCoeff::parse("1 + 2*q^(1/2) - q^3") ==
        QCoeff(1) + QCoeff::term(2, 1) + QCoeff::term(-1, 6));
  CHECK((QCoeff(1) + QCoeff::term(2, 1) - QCoeff::term(1, 6)).str() == "1 + 2*q^(1/2) - q^3");
  CHECK(QCoeff::parse("h") == QCoeff::sym_h());
  CHECK(QCoeff::parse("0").is_zero());
  CHECK(QCoeff::parse("2*h^2*q^(-3/2)") == QCoeff::term(2, -3, 2));
  CHECK_THROWS(QCoeff::parse("q^(1/3)"));
}

TEST_CASE("units and positivity at one") {
  CHECK(QCoeff::term(1, -5).is_unit());
  CHECK(QCoeff::term(-1, 2).is_unit());
  CHECK_FALSE(QCoeff(2).is_unit());
  CHECK_FALSE(QCoeff::sym_h().is_unit());
  CHECK(QCoeff::term(1, -5).unit_inverse() == QCoeff::term(1, 5));

  CHECK(QCoeff::sym_h().positive_at_one());
  CHECK((QCoeff(2) - QCoeff::term(1, 1)).positive_at_one());          // value 1
  CHECK_FALSE((QCoeff(1) - QCoeff::term(1, 1)).positive_at_one());    // value 0
  CHECK_FALSE((QCoeff::term(1, 1) - QCoeff(2)).positive_at_one());    // value -1
}
