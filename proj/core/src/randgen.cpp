#include "qclus/randgen.hpp"

#include <algorithm>

#include "qclus/gqca.hpp"

namespace qclus {

Mat random_exchange_matrix(std::mt19937_64& rng, int n, int b_max) {
  std::uniform_int_distribution<int> entry(-b_max, b_max);
  std::uniform_int_distribution<int> diag(1, 2);
  while (true) {
    Mat S(n, Vec(n, 0));
    bool nonzero = false;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        S[i][j] = entry(rng);
        S[j][i] = -S[i][j];
        nonzero |= S[i][j] != 0;
      }
    if (!nonzero) continue;
    Mat B(n, Vec(n));
    for (int i = 0; i < n; ++i) {
      int v = diag(rng);
      for (int j = 0; j < n; ++j) B[i][j] = v * S[i][j];
    }
    return B;
  }
}

namespace {

QCoeff random_h_entry(std::mt19937_64& rng, int coeff_max) {
  // small Laurent polynomial in q^(1/2) with positive value at 1
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> c(1, coeff_max);
  std::uniform_int_distribution<int> e(-2, 2);
  switch (kind(rng)) {
    case 0:
      return QCoeff(c(rng));
    case 1:
      return QCoeff::term(c(rng), e(rng));
    case 2: {
      int a = c(rng), b = c(rng);
      return QCoeff::term(a, e(rng)) + QCoeff::term(b, e(rng));
    }
    default: {
      // one negative term dominated by positive ones
      int a = c(rng) + 1, b = c(rng);
      int neg = std::min(a + b - 1, c(rng));
      return QCoeff::term(a, e(rng)) + QCoeff::term(b, e(rng)) + QCoeff::term(-neg, e(rng) + 5);
    }
  }
}

}  // namespace

SeedFile random_seed(std::mt19937_64& rng, const RandomSeedOptions& opts) {
  std::uniform_int_distribution<int> nrand(opts.n_min, opts.n_max);
  std::uniform_int_distribution<int> rrand(1, opts.r_max);
  int n = nrand(rng);
  Mat B;
  std::vector<int> r(n);
  // keep the mutation dynamics at desk scale: the pairwise growth weight
  // r_i r_j |b_ij b_ji| drives the degree growth of cluster variables
  while (true) {
    B = random_exchange_matrix(rng, n, opts.b_max);
    for (auto& x : r) x = rrand(rng);
    long long wmax = 0, wsum = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        long long w = r[i] * r[j] * std::abs(B[i][j] * B[j][i]);
        wmax = std::max(wmax, w);
        wsum += w;
      }
    if (wmax <= 4 && wsum <= 8) break;
  }

  SeedFile s;
  s.n = n;
  if (opts.quantum) {
    s.mode = "quantum";
    CompatiblePair pair = principal_lift(B, r);
    s.m = pair.m();
    s.Btilde = pair.Btilde;
    s.Lambda = pair.Lambda;
    s.R = r;
    s.h.resize(n);
    for (int i = 0; i < n; ++i) {
      s.h[i].assign(r[i] + 1, QCoeff(1));
      for (int sx = 1; sx <= r[i] / 2; ++sx) {
        QCoeff v = random_h_entry(rng, opts.h_coeff_max);
        while (!v.positive_at_one()) v = random_h_entry(rng, opts.h_coeff_max);
        s.h[i][sx] = v;
        s.h[i][r[i] - sx] = v;
      }
    }
  } else {
    s.mode = "classical";
    s.m = n;
    s.Btilde = B;
    s.R = r;
    s.z.resize(n);
    std::uniform_int_distribution<int> zval(1, 3);
    for (int i = 0; i < n; ++i) {
      s.z[i].assign(r[i] + 1, ZEntry{1LL});
      for (int sx = 1; sx <= r[i] / 2; ++sx) {
        ZEntry e;
        if (opts.formal_z)
          e = "z" + std::to_string(i + 1) + "_" + std::to_string(sx);
        else
          e = static_cast<long long>(zval(rng));
        s.z[i][sx] = e;
        s.z[i][r[i] - sx] = e;
      }
    }
  }
  s.validate();
  return s;
}

std::vector<int> random_path(std::mt19937_64& rng, int n, int length) {
  std::uniform_int_distribution<int> krand(1, n);
  std::vector<int> path;
  int prev = 0;
  for (int i = 0; i < length; ++i) {
    int k = krand(rng);
    while (n > 1 && k == prev) k = krand(rng);
    path.push_back(k);
    prev = k;
  }
  return path;
}

}  // namespace qclus
