#include "qclus/patterns.hpp"

#include <numeric>
#include <stdexcept>

namespace qclus {

Mat c_step(const Mat& C, const Mat& Bt, const std::vector<int>& r, int k, int eps) {
  int n = static_cast<int>(C.size());
  Mat Cp(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == k)
        Cp[i][j] = -C[i][j];
      else
        Cp[i][j] = C[i][j] + r[k] * (C[i][k] * pos_part(eps * Bt[k][j]) +
                                     pos_part(-eps * C[i][k]) * Bt[k][j]);
    }
  return Cp;
}

Mat g_step_classical(const Mat& G, const Mat& C, const Mat& Bt, const Mat& B0,
                     const std::vector<int>& r, int k) {
  int n = static_cast<int>(G.size());
  int eps_k = common_sign(mat_col(C, k));
  Mat Gp = G;
  Vec neu(n);
  for (int i = 0; i < n; ++i) neu[i] = -G[i][k];
  for (int j = 0; j < n; ++j) {
    long long c = r[k] * pos_part(-eps_k * Bt[j][k]);
    if (c == 0) continue;
    for (int i = 0; i < n; ++i) neu[i] += c * G[i][j];
  }
  for (int i = 0; i < n; ++i) Gp[i][k] = neu[i];
  // cross-check against the general form for both signs
  for (int eps : {+1, -1}) {
    Mat alt = g_step_quantum_general(G, C, Bt, B0, r, k, eps);
    if (alt != Gp)
      throw std::logic_error("g_step_classical: sign-coherent and general forms disagree");
  }
  return Gp;
}

Mat g_step_quantum_general(const Mat& Gt, const Mat& C, const Mat& Bt, const Mat& B0t,
                           const std::vector<int>& r, int k, int eps) {
  int m = static_cast<int>(Gt.size());
  int n = static_cast<int>(C.size());
  Mat Gp = Gt;
  Vec neu(m);
  for (int i = 0; i < m; ++i) neu[i] = -Gt[i][k];
  for (int j = 0; j < m; ++j) {
    long long c = r[k] * pos_part(-eps * Bt[j][k]);
    if (c == 0) continue;
    for (int i = 0; i < m; ++i) neu[i] += c * Gt[i][j];
  }
  for (int j = 0; j < n; ++j) {
    long long c = r[k] * pos_part(-eps * C[j][k]);
    if (c == 0) continue;
    for (int i = 0; i < m; ++i) neu[i] -= c * B0t[i][j];
  }
  for (int i = 0; i < m; ++i) Gp[i][k] = neu[i];
  return Gp;
}

Mat g_step_quantum_fast(const Mat& Gt, const Mat& Bt, const std::vector<int>& r, int k,
                        int eps_k) {
  return matmul(Gt, e_matrix(Bt, r, k, eps_k));
}

Vec compute_d0(const Mat& B, const std::vector<int>& r) {
  int n = static_cast<int>(B.size());
  Mat RB(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) RB[i][j] = r[i] * B[i][j];
  // propagate ratios d0_i / d0_j = -RB[j][i] / RB[i][j] over the support graph
  std::vector<std::pair<long long, long long>> ratio(n, {0, 0});  // num/den, 0/0 = unset
  auto set_ratio = [&](int i, long long nu, long long de) {
    long long g = std::gcd(nu, de);
    ratio[i] = {nu / g, de / g};
  };
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (ratio[s].second != 0) continue;
    set_ratio(s, 1, 1);
    stack.push_back(s);
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (RB[i][j] == 0 && RB[j][i] == 0) continue;
        if ((RB[i][j] == 0) != (RB[j][i] == 0) || RB[i][j] * RB[j][i] > 0)
          throw std::domain_error("compute_d0: B is not skew-symmetrizable");
        // want d0_j = d0_i * (-RB[i][j]) / RB[j][i]
        long long nu = ratio[i].first * (-RB[i][j]);
        long long de = ratio[i].second * RB[j][i];
        if (de < 0) {
          nu = -nu;
          de = -de;
        }
        long long g = std::gcd(nu < 0 ? -nu : nu, de);
        nu /= g;
        de /= g;
        if (ratio[j].second == 0) {
          ratio[j] = {nu, de};
          stack.push_back(j);
        } else if (ratio[j] != std::make_pair(nu, de)) {
          throw std::domain_error("compute_d0: inconsistent symmetrizing ratios");
        }
      }
    }
  }
  long long L = 1;
  for (auto& [nu, de] : ratio) L = std::lcm(L, de);
  Vec d0(n);
  for (int i = 0; i < n; ++i) d0[i] = ratio[i].first * (L / ratio[i].second);
  long long g = 0;
  for (long long x : d0) g = std::gcd(g, x);
  for (auto& x : d0) x /= g;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d0[i] * RB[i][j] != -d0[j] * RB[j][i])
        throw std::logic_error("compute_d0: symmetrizer verification failed");
  return d0;
}

bool verify_tropical_duality(const Mat& G, const Mat& C, const Vec& D0,
                             const std::vector<int>& r) {
  int n = static_cast<int>(G.size());
  Mat W(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) W[i][i] = D0[i] * r[i];
  return matmul(matmul(transpose(G), W), C) == W;
}

bool verify_gb_bc(const Mat& G_or_Gt, const Mat& Bt, const Mat& B0, const Mat& Ct) {
  return matmul(G_or_Gt, Bt) == matmul(B0, Ct);
}

bool verify_d_form_duality(const Mat& C, const Mat& Gtilde, const Vec& D) {
  int n = static_cast<int>(C.size());
  int m = static_cast<int>(Gtilde.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long s = 0;
      for (int t = 0; t < n; ++t) s += C[t][i] * D[t] * Gtilde[t][j];
      (void)m;
      if (s != (i == j ? D[i] : 0)) return false;
    }
  return true;
}

Vec PathData::g_of_step(int j) const {
  Vec g = gtilde_of_step(j);
  g.resize(n);
  return g;
}

Vec PathData::gtilde_of_step(int j) const {
  int k = steps[j - 1].k;
  return mat_col(Gtilde[j], k);
}

long long PathData::ip_w(const Vec& u, const Vec& v) const {
  long long s = 0;
  for (int i = 0; i < n; ++i) s += u[i] * W[i] * v[i];
  return s;
}

long long PathData::scaled_ip(int j, const Vec& u, const Vec& v) const {
  long long s = ip_w(u, v);
  long long w = W[steps[j - 1].k];
  if (s % w != 0)
    throw std::domain_error("PathData: inner product is not integral after scaling by d_(j)");
  return s / w;
}

namespace {

PathData run_path_impl(Mat B0t, std::optional<Mat> Lam0, const std::vector<int>& r,
                       const std::vector<int>& path, Vec W, Vec D0) {
  PathData pd;
  pd.m = static_cast<int>(B0t.size());
  pd.n = static_cast<int>(B0t[0].size());
  pd.r = r;
  pd.W = std::move(W);
  pd.D0 = std::move(D0);
  pd.path = path;
  pd.Bt.push_back(B0t);
  if (Lam0) pd.Lam.push_back(*Lam0);
  pd.C.push_back(identity_mat(pd.n));
  pd.G.push_back(identity_mat(pd.n));
  pd.Gtilde.push_back(identity_mat(pd.m));
  Mat B0 = B0t;
  B0.resize(pd.n);  // principal part
  MutationData md;
  md.r = r;
  for (int k1 : path) {
    if (k1 < 1 || k1 > pd.n) throw std::out_of_range("run_path: path entry out of range");
    int k = k1 - 1;
    const Mat Bc = pd.Bt.back();  // copies: the push_backs below reallocate
    const Mat Cc = pd.C.back();
    PathStep st;
    st.k = k;
    st.c = mat_col(Cc, k);
    st.eps = common_sign(st.c);
    st.cplus.resize(pd.n);
    for (int i = 0; i < pd.n; ++i) st.cplus[i] = st.eps * st.c[i];
    st.chat_plus = matvec(B0, st.cplus);
    // principal n x n block of Bc for the classical recursions
    Mat Bc_n = Bc;
    Bc_n.resize(pd.n);
    Mat Cn = c_step(Cc, Bc_n, r, k, +1);
    if (Cn != c_step(Cc, Bc_n, r, k, -1))
      throw std::logic_error("run_path: C-step is not eps-independent");
    Mat Gn = g_step_classical(pd.G.back(), Cc, Bc_n, B0, r, k);
    Mat Gt1 = g_step_quantum_general(pd.Gtilde.back(), Cc, Bc, B0t, r, k, +1);
    Mat Gt2 = g_step_quantum_general(pd.Gtilde.back(), Cc, Bc, B0t, r, k, -1);
    Mat Gt3 = g_step_quantum_fast(pd.Gtilde.back(), Bc, r, k, st.eps);
    if (Gt1 != Gt2 || Gt1 != Gt3)
      throw std::logic_error("run_path: Gtilde forms disagree");
    if (!pd.Lam.empty()) {
      CompatiblePair cur{Bc, pd.Lam.back(), {}};
      cur.D = check_compatible(Bc, pd.Lam.back());
      CompatiblePair nxt = mutate_pair(cur, md, k, +1);
      CompatiblePair nxt2 = mutate_pair(cur, md, k, -1);
      if (nxt.Btilde != nxt2.Btilde || nxt.Lambda != nxt2.Lambda)
        throw std::logic_error("run_path: mutate_pair is not eps-independent");
      pd.Bt.push_back(nxt.Btilde);
      pd.Lam.push_back(nxt.Lambda);
    } else {
      pd.Bt.push_back(mutate_exchange_classical(Bc, r, k, +1));
      if (pd.Bt.back() != mutate_exchange_classical(Bc, r, k, -1))
        throw std::logic_error("run_path: exchange mutation is not eps-independent");
    }
    pd.C.push_back(std::move(Cn));
    pd.G.push_back(std::move(Gn));
    pd.Gtilde.push_back(Gt1);
    pd.steps.push_back(std::move(st));
  }
  return pd;
}

}  // namespace

PathData run_path_classical(const Mat& B, const std::vector<int>& r,
                            const std::vector<int>& path) {
  Vec d0 = compute_d0(B, r);
  Vec W(B.size());
  for (size_t i = 0; i < B.size(); ++i) W[i] = d0[i] * r[i];
  return run_path_impl(B, std::nullopt, r, path, std::move(W), std::move(d0));
}

PathData run_path_quantum(const CompatiblePair& pair, const std::vector<int>& r,
                          const std::vector<int>& path) {
  return run_path_impl(pair.Btilde, pair.Lambda, r, path, pair.D, {});
}

}  // namespace qclus
