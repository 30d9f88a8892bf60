#include "qclus/seed.hpp"

#include <stdexcept>

namespace qclus {

namespace {

void check_range(int k, int n, const char* who) {
  if (k < 0 || k >= n) throw std::out_of_range(std::string(who) + ": direction index out of range");
}

bool zentry_equal(const ZEntry& a, const ZEntry& b) { return a == b; }

bool zentry_is_one(const ZEntry& e) {
  return std::holds_alternative<long long>(e) && std::get<long long>(e) == 1;
}

}  // namespace

void MutationData::validate() const {
  int n = rank();
  for (int i = 0; i < n; ++i)
    if (r[i] <= 0) throw std::invalid_argument("MutationData: r entries must be positive");
  if (!h.empty()) {
    if (static_cast<int>(h.size()) != n)
      throw std::invalid_argument("MutationData: h has wrong length");
    for (int k = 0; k < n; ++k) {
      if (static_cast<int>(h[k].size()) != r[k] + 1)
        throw std::invalid_argument("MutationData: h[" + std::to_string(k + 1) +
                                    "] must have r_k+1 entries");
      if (!h[k].front().is_one() || !h[k].back().is_one())
        throw std::invalid_argument("MutationData: h_{k,0} and h_{k,r_k} must be 1");
      for (int s = 0; s <= r[k]; ++s)
        if (!(h[k][s] == h[k][r[k] - s]))
          throw std::invalid_argument("MutationData: h reciprocity violated in direction " +
                                      std::to_string(k + 1));
    }
  }
  if (!z.empty()) {
    if (static_cast<int>(z.size()) != n)
      throw std::invalid_argument("MutationData: z has wrong length");
    for (int k = 0; k < n; ++k) {
      if (static_cast<int>(z[k].size()) != r[k] + 1)
        throw std::invalid_argument("MutationData: z[" + std::to_string(k + 1) +
                                    "] must have r_k+1 entries");
      if (!zentry_is_one(z[k].front()) || !zentry_is_one(z[k].back()))
        throw std::invalid_argument("MutationData: z_{k,0} and z_{k,r_k} must be 1");
      for (int s = 0; s <= r[k]; ++s)
        if (!zentry_equal(z[k][s], z[k][r[k] - s]))
          throw std::invalid_argument("MutationData: z reciprocity violated in direction " +
                                      std::to_string(k + 1));
    }
  }
}

std::vector<std::vector<ZEntry>> MutationData::z_from_h(
    const std::vector<int>& r, const std::vector<std::vector<QCoeff>>& h) {
  std::vector<std::vector<ZEntry>> z(h.size());
  for (size_t k = 0; k < h.size(); ++k) {
    z[k].resize(r[k] + 1);
    for (int s = 0; s <= r[k]; ++s) {
      if (h[k][s].has_symbol())
        z[k][s] = std::string("h");
      else
        z[k][s] = static_cast<long long>(h[k][s].eval_at_one());
    }
  }
  return z;
}

Mat CompatiblePair::principal_part() const {
  Mat B(n(), Vec(n()));
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j) B[i][j] = Btilde[i][j];
  return B;
}

Vec check_compatible(const Mat& Btilde, const Mat& Lambda) {
  if (Btilde.empty()) throw std::invalid_argument("check_compatible: empty Btilde");
  int m = static_cast<int>(Btilde.size());
  int n = static_cast<int>(Btilde[0].size());
  if (n > m) throw std::invalid_argument("check_compatible: need m >= n");
  if (static_cast<int>(Lambda.size()) != m)
    throw std::invalid_argument("check_compatible: Lambda dimension mismatch");
  if (!is_skew_symmetric(Lambda))
    throw std::invalid_argument("check_compatible: Lambda is not skew-symmetric");
  Mat P = matmul(transpose(Btilde), Lambda);  // n x m
  Vec D(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      if (P[i][j] != 0)
        throw std::invalid_argument("check_compatible: Btilde^T Lambda is not of the form [D 0]");
    }
    if (P[i][i] <= 0)
      throw std::invalid_argument("check_compatible: diagonal of D must be positive");
    D[i] = P[i][i];
  }
  // D B skew-symmetric comes with the territory; verify anyway
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (D[i] * Btilde[i][j] != -D[j] * Btilde[j][i])
        throw std::invalid_argument("check_compatible: D B is not skew-symmetric");
  return D;
}

CompatiblePair make_pair(Mat Btilde, Mat Lambda) {
  Vec D = check_compatible(Btilde, Lambda);
  return CompatiblePair{std::move(Btilde), std::move(Lambda), std::move(D)};
}

Mat e_matrix(const Mat& Btilde, const std::vector<int>& r, int k, int eps) {
  int m = static_cast<int>(Btilde.size());
  check_range(k, static_cast<int>(Btilde[0].size()), "e_matrix");
  Mat E = identity_mat(m);
  for (int i = 0; i < m; ++i)
    E[i][k] = (i == k) ? -1 : pos_part(-eps * Btilde[i][k] * r[k]);
  return E;
}

Mat f_matrix(const Mat& Btilde, const std::vector<int>& r, int k, int eps) {
  int n = static_cast<int>(Btilde[0].size());
  check_range(k, n, "f_matrix");
  Mat F = identity_mat(n);
  for (int i = 0; i < n; ++i)
    F[k][i] = (i == k) ? -1 : pos_part(eps * r[k] * Btilde[k][i]);
  return F;
}

CompatiblePair mutate_pair(const CompatiblePair& pair, const MutationData& md, int k, int eps) {
  check_range(k, pair.n(), "mutate_pair");
  Mat E = e_matrix(pair.Btilde, md.r, k, eps);
  Mat F = f_matrix(pair.Btilde, md.r, k, eps);
  Mat Bp = matmul(matmul(E, pair.Btilde), F);
  Mat Lp = matmul(matmul(transpose(E), pair.Lambda), E);
  CompatiblePair out = make_pair(std::move(Bp), std::move(Lp));
  if (out.D != pair.D)
    throw std::logic_error("mutate_pair: skew-symmetrizer changed across mutation");
  return out;
}

Mat mutate_exchange_classical(const Mat& B, const std::vector<int>& r, int k, int eps) {
  int n = static_cast<int>(B.size());
  check_range(k, n, "mutate_exchange_classical");
  Mat Bp(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k)
        Bp[i][j] = -B[i][j];
      else
        Bp[i][j] = B[i][j] + r[k] * (pos_part(-eps * B[i][k]) * B[k][j] +
                                     B[i][k] * pos_part(eps * B[k][j]));
    }
  return Bp;
}

}  // namespace qclus
