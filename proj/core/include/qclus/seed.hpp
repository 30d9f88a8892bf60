#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qclus/matrix.hpp"
#include "qclus/qcoeff.hpp"

namespace qclus {

/// A classical exchange coefficient z_{i,s}: either a concrete integer or a
/// named formal symbol of the tropical semifield.
using ZEntry = std::variant<long long, std::string>;

/// The pair (R, h) (quantum) together with its classical counterpart (r, z).
/// h lists have length r_k + 1 and satisfy h_{k,s} = h_{k,r_k-s},
/// h_{k,0} = h_{k,r_k} = 1; same shape for z.
struct MutationData {
  std::vector<int> r;
  std::vector<std::vector<QCoeff>> h;   // may be empty for classical-only seeds
  std::vector<std::vector<ZEntry>> z;   // may be empty for quantum-only seeds

  int rank() const { return static_cast<int>(r.size()); }
  void validate() const;  // throws std::invalid_argument on any broken invariant

  /// classical z derived from h by specializing q^(1/2) = 1; symbolic entries
  /// keep the symbol name "h"
  static std::vector<std::vector<ZEntry>> z_from_h(const std::vector<int>& r,
                                                   const std::vector<std::vector<QCoeff>>& h);
};

/// (Btilde, Lambda) with Btilde^T Lambda = [D 0]; D holds the positive
/// integers d_i^{-1} recovered by check_compatible.
struct CompatiblePair {
  Mat Btilde;  // m x n
  Mat Lambda;  // m x m skew-symmetric
  Vec D;       // n entries: d_i^{-1}

  int n() const { return static_cast<int>(Btilde.empty() ? 0 : Btilde[0].size()); }
  int m() const { return static_cast<int>(Btilde.size()); }
  Mat principal_part() const;  // first n rows of Btilde
};

/// Verifies Btilde^T Lambda = [D 0] with positive diagonal D and that D B is
/// skew-symmetric; returns the diagonal of D. Throws on incompatibility.
Vec check_compatible(const Mat& Btilde, const Mat& Lambda);

CompatiblePair make_pair(Mat Btilde, Mat Lambda);

/// E_{k,eps}^{Btilde R}: identity except column k, entries [-eps b_{ik} r_k]_+
/// off the diagonal and -1 at (k,k).
Mat e_matrix(const Mat& Btilde, const std::vector<int>& r, int k, int eps);
/// F_{k,eps}^{R Btilde}: identity except row k, entries [eps r_k b_{ki}]_+
/// off the diagonal and -1 at (k,k).
Mat f_matrix(const Mat& Btilde, const std::vector<int>& r, int k, int eps);

/// Btilde' = E Btilde F, Lambda' = E^T Lambda E; recomputes and checks D.
CompatiblePair mutate_pair(const CompatiblePair& pair, const MutationData& md, int k,
                           int eps = +1);

/// (r,z)-mutation of an exchange matrix, Eq.-(6)-style entrywise rule.
Mat mutate_exchange_classical(const Mat& B, const std::vector<int>& r, int k, int eps = +1);

}  // namespace qclus
