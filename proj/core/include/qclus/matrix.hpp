#pragma once

#include <string>
#include <vector>

namespace qclus {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;
using ExpVec = Vec;

Mat identity_mat(int n);
Mat matmul(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
Vec matvec(const Mat& a, const Vec& v);
Vec mat_col(const Mat& a, int j);
bool is_skew_symmetric(const Mat& a);
bool is_square(const Mat& a);
std::string mat_str(const Mat& a);

inline long long pos_part(long long x) { return x > 0 ? x : 0; }

/// sign of a nonzero sign-coherent integer vector; throws on mixed signs
/// or the zero vector. Zeros are ignored: (0,-1) -> -1.
int common_sign(const Vec& c);

}  // namespace qclus
