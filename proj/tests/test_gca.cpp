#include <doctest.h>

#include <random>

#include "qclus/gca.hpp"
#include "qclus/randgen.hpp"
#include "qclus/torus.hpp"
#include "qclus/verify.hpp"

using namespace qclus;

namespace {

ClassicalSeedState ex1_seed() {
  Mat B = {{0, 1}, {-1, 0}};
  std::vector<std::vector<ZEntry>> z = {{1LL, std::string("z"), 1LL}, {1LL, 1LL}};
  return initial_classical_seed(B, {2, 1}, z);
}

// independent principal-coefficients engine for ordinary (r = 1) mutation:
// x'_k x_k = y_k^+ prod x^{[b_k]_+} + y_k^- prod x^{[-b_k]_+}, y tropically
struct OrdinaryOracle {
  PolyRingPtr ring;
  Mat B;
  std::vector<MPoly> x;
  std::vector<ExpVec> y;

  explicit OrdinaryOracle(const ClassicalSeedState& s) : ring(s.ring), B(s.B), x(s.x) {
    for (int i = 0; i < ring->rank(); ++i) {
      ExpVec e(ring->nvars(), 0);
      e[ring->y_var(i)] = 1;
      y.push_back(e);
    }
  }
  void mutate(int k) {
    int n = ring->rank();
    ExpVec yplus(ring->nvars(), 0), yminus(ring->nvars(), 0);
    for (int v = 0; v < ring->nvars(); ++v) {
      yplus[v] = pos_part(y[k][v]);
      yminus[v] = pos_part(-y[k][v]);
    }
    MPoly t1 = MPoly::monomial(ring, yplus);
    MPoly t2 = MPoly::monomial(ring, yminus);
    for (int j = 0; j < n; ++j) {
      if (B[j][k] > 0) t1 *= x[j].pow(B[j][k]);
      if (B[j][k] < 0) t2 *= x[j].pow(-B[j][k]);
    }
    x[k] = (t1 + t2).exact_div(x[k]);
    // tropical y step
    std::vector<ExpVec> ny = y;
    for (int i = 0; i < n; ++i) {
      if (i == k) {
        for (auto& v : ny[k]) v = 0;
        for (int t = 0; t < ring->nvars(); ++t) ny[k][t] = -y[k][t];
      } else {
        for (int t = 0; t < ring->nvars(); ++t)
          ny[i][t] = y[i][t] + pos_part(B[k][i]) * y[k][t] - B[k][i] * std::min(0LL, y[k][t]);
      }
    }
    y = ny;
    // ordinary matrix mutation
    Mat nb = B;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == k || j == k) {
          nb[i][j] = -B[i][j];
        } else {
          long long sgn = B[i][k] > 0 ? 1 : (B[i][k] < 0 ? -1 : 0);
          long long prod = B[i][k] * B[k][j];
          nb[i][j] = B[i][j] + sgn * (prod > 0 ? prod : 0);
        }
      }
    B = nb;
  }
};

}  // namespace

TEST_CASE("EX1 first mutation step") {
  auto s0 = ex1_seed();
  auto s1 = mutate_seed_classical(s0, 0);
  // x'_1 = x1^{-1}(x2^2 + z y1 x2 + y1^2)
  const auto& r = s0.ring;
  MPoly x1 = MPoly::variable(r, 0), x2 = MPoly::variable(r, 1);
  MPoly y1 = MPoly::variable(r, r->y_var(0));
  MPoly z = MPoly::variable(r, r->zslot(0, 1).var);
  MPoly expect = (x2 * x2 + z * y1 * x2 + y1 * y1).exact_div(x1);
  CHECK(s1.x[0] == expect);
  CHECK(f_poly_direct(s1, 0).str() == "1 + z*y1 + y1^2");
  CHECK(s1.B == Mat{{0, -1}, {1, 0}});
}

TEST_CASE("mutation is an involution and eps-independent") {
  auto s0 = ex1_seed();
  for (int k = 0; k < 2; ++k) {
    auto a = mutate_seed_classical(s0, k, +1);
    auto b = mutate_seed_classical(s0, k, -1);
    CHECK(a.x[k] == b.x[k]);
    CHECK(a.ytrop == b.ytrop);
    for (int e1 : {+1, -1})
      for (int e2 : {+1, -1}) {
        auto back = mutate_seed_classical(mutate_seed_classical(s0, k, e1), k, e2);
        CHECK(back.x == s0.x);
        CHECK(back.ytrop == s0.ytrop);
        CHECK(back.B == s0.B);
      }
  }
  // deeper state, rank 3
  std::mt19937_64 rng(43);
  RandomSeedOptions o;
  o.n_min = o.n_max = 3;
  o.formal_z = true;
  SeedFile seed = random_seed(rng, o);
  Mat B(3, Vec(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) B[i][j] = seed.Btilde[i][j];
  auto st = initial_classical_seed(B, seed.R, seed.z);
  st = mutate_seed_classical(st, 0);
  st = mutate_seed_classical(st, 1);
  auto a = mutate_seed_classical(st, 2, +1);
  auto b = mutate_seed_classical(st, 2, -1);
  CHECK(a.x == b.x);
  CHECK(a.ytrop == b.ytrop);
}

TEST_CASE("r = (1,1,1) matches an independent ordinary-mutation oracle") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 12; ++t) {
    Mat B = random_exchange_matrix(rng, 3, 2);
    std::vector<std::vector<ZEntry>> z(3, std::vector<ZEntry>{1LL, 1LL});
    auto s = initial_classical_seed(B, {1, 1, 1}, z);
    OrdinaryOracle oracle(s);
    auto path = random_path(rng, 3, 5);
    for (int k1 : path) {
      s = mutate_seed_classical(s, k1 - 1);
      oracle.mutate(k1 - 1);
      CHECK(s.x == oracle.x);
      CHECK(s.B == oracle.B);
      CHECK(s.ytrop == oracle.y);
    }
  }
}

TEST_CASE("EX1 direct F-polynomials (printed values)") {
  auto s = ex1_seed();
  std::vector<int> path = {1, 2, 1, 2};
  std::vector<std::string> expected = {
      "1 + z*y1 + y1^2",
      "1 + z*y1 + y1^2 + y1^2*y2",
      "1 + z*y1 + y1^2 + z*y1*y2 + 2*y1^2*y2 + y1^2*y2^2",
      "1 + y2",
  };
  for (int j = 0; j < 4; ++j) {
    s = mutate_seed_classical(s, path[j] - 1);
    CHECK(f_poly_direct(s, path[j] - 1).str() == expected[j]);
  }
  // empty path: F = 1
  auto s0 = ex1_seed();
  CHECK(f_poly_direct(s0, 0).is_one());
}

TEST_CASE("EX1 L-sequence: the printed closed forms") {
  auto s0 = ex1_seed();
  const auto& ring = s0.ring;
  PathData pd = run_path_classical(s0.B0, s0.r, {1, 2, 1, 2});
  auto L = gupta_L_sequence(pd, ring);
  REQUIRE(L.size() == 4);
  MPoly y1 = MPoly::variable(ring, ring->y_var(0));
  MPoly y2 = MPoly::variable(ring, ring->y_var(1));
  MPoly z = MPoly::variable(ring, ring->zslot(0, 1).var);
  MPoly one = MPoly::constant(ring, 1);
  MPoly L1 = one + z * y1 + y1 * y1;
  // L1 is already polynomial
  CHECK(L[0].to_poly() == L1);
  // L2 = 1 + y1^2 y2 L1^{-1}  <=>  L2 * L1 = L1 + y1^2 y2
  MPoly L2L1 = (L[1] * L[0]).to_poly();
  CHECK(L2L1 == L1 + y1 * y1 * y2);
  // L3 = 1 + z M + M^2 with M = y1 y2 (L1 L2)^{-1}
  //  <=> L3 (L1 L2)^2 = (L1 L2)^2 + z y1 y2 (L1 L2) + (y1 y2)^2
  MRat L12 = L[0] * L[1];
  MPoly L12p = L12.to_poly();  // L1 L2 = L1 + y1^2 y2
  CHECK((L[2] * L12.pow(2)).to_poly() ==
        L12p * L12p + z * y1 * y2 * L12p + y1 * y1 * y2 * y2);
  // L4 = 1 + y2 (L1 L2^2 L3)^{-1}
  MPoly L123 = (L[0] * L[1].pow(2) * L[2]).to_poly();
  CHECK((L[3] * MRat(L123)).to_poly() == L123 + y2);
  // single-step path gives only L1
  PathData pd1 = run_path_classical(s0.B0, s0.r, {1});
  CHECK(gupta_L_sequence(pd1, ring).size() == 1);
}

TEST_CASE("EX1 gupta product: printed exponents and equality with direct") {
  auto s0 = ex1_seed();
  std::vector<int> path = {1, 2, 1, 2};
  std::vector<std::vector<long long>> expected_exps = {
      {1}, {1, 1}, {1, 2, 1}, {0, 1, 1, 1}};
  auto s = s0;
  for (int j = 1; j <= 4; ++j) {
    s = mutate_seed_classical(s, path[j - 1] - 1);
    PathData pd = run_path_classical(s0.B0, s0.r, {path.begin(), path.begin() + j});
    CHECK(gupta_product_exponents(pd) == expected_exps[j - 1]);
    MPoly fg = gupta_product(pd, s0.ring);
    MPoly fd = f_poly_direct(s, path[j - 1] - 1);
    CHECK(fg == fd);
    MPoly fe = gupta_expansion(pd, s0.ring, fg.degree_over(fg.y_vars()));
    CHECK(fe == fg);
  }
  // F_{2;t4} = L2 L3 L4 = 1 + y2
  PathData pd = run_path_classical(s0.B0, s0.r, path);
  CHECK(gupta_product(pd, s0.ring).str() == "1 + y2");
}

TEST_CASE("expansion conventions") {
  // {h; n0, n1..nl} = 0 unless n0 = n1 + ... + nl is built into the
  // enumeration; the base identity of the binomial lemma:
  // (1 + a1 z + a2 z^2)^{-1} expanded to degree 4 equals the series inverse
  long long a1 = 2, a2 = 3;
  auto form1 = std::make_shared<SkewForm>(Mat{{0}});
  QSeries one = QSeries::unit(form1, 4);
  QSeries zs = QSeries::monomial(form1, {1}, 4);
  QSeries inv = (one + zs.scaled(QCoeff(a1)) + (zs * zs).scaled(QCoeff(a2))).inverse();
  // expansion: sum over n1, n2 >= 0 of {-1; n0, n1, n2} a1^n1 a2^n2 z^{n1+2n2}
  std::map<long long, Int> coeffs;
  for (long long n1 = 0; n1 <= 4; ++n1)
    for (long long n2 = 0; n2 <= 2; ++n2) {
      long long degz = n1 + 2 * n2;
      if (degz > 4) continue;
      Int c = generalized_binomial(-1, n1 + n2) * multinomial({n1, n2});
      Int a = 1;
      for (long long i = 0; i < n1; ++i) a *= a1;
      for (long long i = 0; i < n2; ++i) a *= a2;
      coeffs[degz] += c * a;
    }
  for (long long d = 0; d <= 4; ++d) {
    QCoeff c = inv.elem().coeff(ExpVec{d});
    Int v = c.is_zero() ? Int(0) : c.eval_at_one();
    CHECK(v == coeffs[d]);
  }
}

TEST_CASE("separation formula and tropical C-consistency (EX1 + random)") {
  auto s0 = ex1_seed();
  std::vector<int> path = {1, 2, 1, 2};
  auto s = s0;
  PathData pd = run_path_classical(s0.B0, s0.r, path);
  for (int j = 1; j <= 4; ++j) {
    s = mutate_seed_classical(s, path[j - 1] - 1);
    for (int i = 0; i < 2; ++i) {
      MPoly f = f_poly_direct(s, i);
      CHECK(classical_separation_check(s, i, mat_col(pd.G[j], i), f));
      // y-exponents of the tropical coefficients match the C-matrix column
      for (int a = 0; a < 2; ++a) CHECK(s.ytrop[i][s.ring->y_var(a)] == pd.C[j][a][i]);
      // z never leaks into the tropical coefficients
      for (int v = 2 * 2; v < s.ring->nvars(); ++v) CHECK(s.ytrop[i][v] == 0);
    }
  }
  std::mt19937_64 rng(53);
  for (int t = 0; t < 6; ++t) {
    RandomSeedOptions o;
    o.formal_z = t % 2 == 0;
    SeedFile seed = random_seed(rng, o);
    Mat B(seed.n, Vec(seed.n));
    for (int i = 0; i < seed.n; ++i)
      for (int j = 0; j < seed.n; ++j) B[i][j] = seed.Btilde[i][j];
    auto path2 = random_path(rng, seed.n, 5);
    PathData pd2 = run_path_classical(B, seed.R, path2);
    auto st = initial_classical_seed(B, seed.R, seed.z);
    for (int j = 1; j <= pd2.length(); ++j) {
      st = mutate_seed_classical(st, path2[j - 1] - 1);
      for (int i = 0; i < seed.n; ++i) {
        CHECK(classical_separation_check(st, i, mat_col(pd2.G[j], i), f_poly_direct(st, i)));
        for (int a = 0; a < seed.n; ++a)
          CHECK(st.ytrop[i][st.ring->y_var(a)] == pd2.C[j][a][i]);
      }
    }
  }
}

TEST_CASE("classical F structure invariants") {
  auto s = ex1_seed();
  std::vector<int> path = {1, 2, 1, 2};
  for (int j = 0; j < 4; ++j) {
    s = mutate_seed_classical(s, path[j] - 1);
    MPoly f = f_poly_direct(s, path[j] - 1);
    std::string why;
    CHECK_MESSAGE(classical_f_structure_ok(f, &why), why);
  }
}

TEST_CASE("triple equality on random seeds (spot run)") {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 4; ++t) {
    RandomSeedOptions o;
    o.formal_z = t % 2 == 0;
    SeedFile seed = random_seed(rng, o);
    Mat B(seed.n, Vec(seed.n));
    for (int i = 0; i < seed.n; ++i)
      for (int j = 0; j < seed.n; ++j) B[i][j] = seed.Btilde[i][j];
    auto st = initial_classical_seed(B, seed.R, seed.z);
    auto path = random_path(rng, seed.n, 4);
    for (int j = 1; j <= static_cast<int>(path.size()); ++j) {
      st = mutate_seed_classical(st, path[j - 1] - 1);
      PathData pd = run_path_classical(B, seed.R, {path.begin(), path.begin() + j});
      MPoly fd = f_poly_direct(st, path[j - 1] - 1);
      MPoly fg = gupta_product(pd, st.ring);
      CHECK(fd == fg);
      CHECK(gupta_expansion(pd, st.ring, fg.degree_over(fg.y_vars())) == fg);
    }
  }
}
