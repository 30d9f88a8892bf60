#pragma once

#include <optional>
#include <vector>

#include "qclus/matrix.hpp"
#include "qclus/seed.hpp"

namespace qclus {

/// One mutation step of Eq.-(9)-type C-dynamics. k is 0-based.
Mat c_step(const Mat& C, const Mat& Bt, const std::vector<int>& r, int k, int eps);

/// G-recursion in the sign-coherent form: only column k changes; eps_k is the
/// common sign of the c-vector c_{k;t} (extracted by the caller).
Mat g_step_classical(const Mat& G, const Mat& C, const Mat& Bt, const Mat& B0,
                     const std::vector<int>& r, int k);

/// General form of the Gtilde-recursion (valid for either sign eps).
Mat g_step_quantum_general(const Mat& Gt, const Mat& C, const Mat& Bt, const Mat& B0t,
                           const std::vector<int>& r, int k, int eps);
/// Fast form Gtilde' = Gtilde * E_{k,eps_k}.
Mat g_step_quantum_fast(const Mat& Gt, const Mat& Bt, const std::vector<int>& r, int k,
                        int eps_k);

/// Smallest positive integer diagonal D0 with D0*R*B skew-symmetric.
/// Throws if B is not skew-symmetrizable.
Vec compute_d0(const Mat& B, const std::vector<int>& r);

/// Exact check of D0^{-1} R^{-1} G^T D0 R C = I, phrased as G^T W C = W with
/// W = D0 R.
bool verify_tropical_duality(const Mat& G, const Mat& C, const Vec& D0,
                             const std::vector<int>& r);
/// Exact check of G_t B_t = B_{t0} C_t (classical) or Gt_t Bt_t = Bt_{t0} C_t.
bool verify_gb_bc(const Mat& G_or_Gt, const Mat& Bt, const Mat& B0, const Mat& Ct);
/// Exact check of C^T [D 0] Gtilde = D (n x n), entries d_i^{-1} delta_ij.
bool verify_d_form_duality(const Mat& C, const Mat& Gtilde, const Vec& D);

/// Everything a mutation path produces at the matrix level. For classical
/// runs m == n, Btilde is B and Lam stays empty.
struct PathStep {
  int k = 0;        // 0-based direction
  int eps = 0;      // common sign of c_{k;t_{j-1}}
  Vec c;            // c_j
  Vec cplus;        // eps_j * c_j
  Vec chat_plus;    // B * cplus
};

struct PathData {
  int n = 0, m = 0;
  std::vector<int> r;
  Vec W;                    // diag of D0R (classical) or of D (quantum): d_i^{-1}
  Vec D0;                   // classical only: the diagonal of D0
  std::vector<Mat> Bt;      // m x n per vertex, size k+1
  std::vector<Mat> Lam;     // quantum only
  std::vector<Mat> C;       // n x n per vertex
  std::vector<Mat> G;       // n x n per vertex (classical pattern)
  std::vector<Mat> Gtilde;  // m x m per vertex (quantum; == G when m == n)
  std::vector<PathStep> steps;
  std::vector<int> path;    // 1-based as given

  int length() const { return static_cast<int>(steps.size()); }
  /// truncated g-vector of the variable made at step j (1-based prefix length)
  Vec g_of_step(int j) const;
  Vec gtilde_of_step(int j) const;
  /// (u, v)_W = u^T diag(W) v
  long long ip_w(const Vec& u, const Vec& v) const;
  /// d_{(j)} (u, v)_W for step j (1-based); asserts divisibility
  long long scaled_ip(int j, const Vec& u, const Vec& v) const;
};

/// Runs the C/G patterns for a classical seed (B n x n).
PathData run_path_classical(const Mat& B, const std::vector<int>& r,
                            const std::vector<int>& path);
/// Runs the C/G/Gtilde patterns for a quantum compatible pair.
PathData run_path_quantum(const CompatiblePair& pair, const std::vector<int>& r,
                          const std::vector<int>& path);

}  // namespace qclus
