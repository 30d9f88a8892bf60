#include "qclus/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace qclus {

Mat identity_mat(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat matmul(const Mat& a, const Mat& b) {
  if (a.empty() || b.empty() || a[0].size() != b.size())
    throw std::invalid_argument("matmul: dimension mismatch");
  size_t n = a.size(), p = b.size(), m = b[0].size();
  Mat r(n, Vec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < p; ++k) {
      long long aik = a[i][k];
      if (aik == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += aik * b[k][j];
    }
  return r;
}

Mat transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat r(a[0].size(), Vec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

Vec matvec(const Mat& a, const Vec& v) {
  if (a.empty() || a[0].size() != v.size())
    throw std::invalid_argument("matvec: dimension mismatch");
  Vec r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

Vec mat_col(const Mat& a, int j) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i][j];
  return r;
}

bool is_square(const Mat& a) {
  for (const auto& row : a)
    if (row.size() != a.size()) return false;
  return true;
}

bool is_skew_symmetric(const Mat& a) {
  if (!is_square(a)) return false;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != -a[j][i]) return false;
  return true;
}

std::string mat_str(const Mat& a) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < a.size(); ++i) {
    os << (i ? ",[" : "[");
    for (size_t j = 0; j < a[i].size(); ++j) os << (j ? "," : "") << a[i][j];
    os << "]";
  }
  os << "]";
  return os.str();
}

int common_sign(const Vec& c) {
  int s = 0;
  for (long long x : c) {
    if (x > 0) {
      if (s < 0) throw std::domain_error("common_sign: vector is not sign-coherent");
      s = 1;
    } else if (x < 0) {
      if (s > 0) throw std::domain_error("common_sign: vector is not sign-coherent");
      s = -1;
    }
  }
  if (s == 0) throw std::domain_error("common_sign: zero vector");
  return s;
}

}  // namespace qclus
