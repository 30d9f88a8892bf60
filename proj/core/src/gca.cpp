#include "qclus/gca.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qclus {

ClassicalSeedState initial_classical_seed(Mat B, std::vector<int> r,
                                          const std::vector<std::vector<ZEntry>>& z) {
  int n = static_cast<int>(B.size());
  if (!is_square(B)) throw std::invalid_argument("initial_classical_seed: B must be square");
  ClassicalSeedState s;
  s.ring = PolyRing::principal(n, r, z);
  s.B0 = B;
  s.B = std::move(B);
  s.r = std::move(r);
  for (int i = 0; i < n; ++i) s.x.push_back(MPoly::variable(s.ring, s.ring->x_var(i)));
  for (int i = 0; i < n; ++i) {
    ExpVec e(s.ring->nvars(), 0);
    e[s.ring->y_var(i)] = 1;
    s.ytrop.push_back(std::move(e));
  }
  return s;
}

MPoly z_entry_poly(const PolyRingPtr& ring, int i, int s) {
  const auto& slot = ring->zslot(i, s);
  if (slot.formal) return MPoly::variable(ring, slot.var);
  return MPoly::constant(ring, slot.value);
}

namespace {

ExpVec z_exponent(const PolyRingPtr& ring, int i, int s) {
  ExpVec e(ring->nvars(), 0);
  const auto& slot = ring->zslot(i, s);
  if (slot.formal) e[slot.var] = 1;
  return e;
}

}  // namespace

ClassicalSeedState mutate_seed_classical(const ClassicalSeedState& s, int k, int eps) {
  int n = static_cast<int>(s.B.size());
  if (k < 0 || k >= n) throw std::out_of_range("mutate_seed_classical: k out of range");
  const auto& ring = s.ring;
  int w = ring->nvars();
  int rk = s.r[k];
  // tropical denominator: exponent-wise min over s of z_{k,s} y_k^{eps s}
  ExpVec delta(w);
  for (int v = 0; v < w; ++v) {
    long long mn = 0;
    bool first = true;
    for (int sidx = 0; sidx <= rk; ++sidx) {
      long long e = z_exponent(ring, k, sidx)[v] + static_cast<long long>(eps) * sidx * s.ytrop[k][v];
      mn = first ? e : std::min(mn, e);
      first = false;
    }
    delta[v] = mn;
  }
  // exchange numerator, assembled termwise so all x-powers are nonnegative
  MPoly num(ring);
  for (int sidx = 0; sidx <= rk; ++sidx) {
    ExpVec ye(w, 0);
    for (int v = 0; v < w; ++v) ye[v] = static_cast<long long>(eps) * sidx * s.ytrop[k][v];
    MPoly t = z_entry_poly(ring, k, sidx) * MPoly::monomial(ring, ye);
    for (int j = 0; j < n; ++j) {
      long long p = rk * pos_part(-eps * s.B[j][k]) + static_cast<long long>(eps) * sidx * s.B[j][k];
      if (p < 0) throw std::logic_error("mutate_seed_classical: negative cluster power");
      if (p > 0) t *= s.x[j].pow(p);
    }
    num += t;
  }
  MPoly div = s.x[k] * MPoly::monomial(ring, delta);
  MPoly xk;
  if (!num.try_exact_div(div, xk))
    throw std::domain_error("mutate_seed_classical: Laurent phenomenon falsified in direction " +
                            std::to_string(k + 1));
  ClassicalSeedState out = s;
  out.x[k] = std::move(xk);
  for (int i = 0; i < n; ++i) {
    if (i == k) {
      for (int v = 0; v < w; ++v) out.ytrop[i][v] = -s.ytrop[k][v];
    } else {
      long long c = static_cast<long long>(rk) * pos_part(eps * s.B[k][i]);
      for (int v = 0; v < w; ++v)
        out.ytrop[i][v] = s.ytrop[i][v] + c * s.ytrop[k][v] - s.B[k][i] * delta[v];
    }
  }
  out.B = mutate_exchange_classical(s.B, s.r, k, eps);
  return out;
}

ClassicalSeedState run_classical_path(const ClassicalSeedState& s0, const std::vector<int>& path) {
  ClassicalSeedState s = s0;
  for (int k1 : path) s = mutate_seed_classical(s, k1 - 1);
  return s;
}

MPoly f_poly_direct(const ClassicalSeedState& at_t, int i) {
  return at_t.x[i].substituted_one(at_t.x[i].x_vars());
}

MPoly yhat_substituted(const MPoly& f, const Mat& B0) {
  const auto& ring = f.ring();
  int n = ring->rank();
  MPoly r(ring);
  for (const auto& [e, c] : f.terms()) {
    ExpVec out = e;
    for (int a = 0; a < n; ++a) {
      long long ya = e[ring->y_var(a)];
      if (ya == 0) continue;
      for (int i = 0; i < n; ++i) out[ring->x_var(i)] += B0[i][a] * ya;
    }
    r.add_term(out, c);
  }
  return r;
}

bool classical_separation_check(const ClassicalSeedState& at_t, int i, const Vec& g,
                                const MPoly& f) {
  const auto& ring = at_t.ring;
  ExpVec ge(ring->nvars(), 0);
  for (int j = 0; j < ring->rank(); ++j) ge[ring->x_var(j)] = g[j];
  MPoly rhs = MPoly::monomial(ring, ge) * yhat_substituted(f, at_t.B0);
  return rhs == at_t.x[i];
}

std::vector<MRat> gupta_L_sequence(const PathData& pd, const PolyRingPtr& ring) {
  int k = pd.length();
  std::vector<MRat> L;
  L.reserve(k);
  for (int l = 1; l <= k; ++l) {
    const auto& st = pd.steps[l - 1];
    ExpVec ye(ring->nvars(), 0);
    for (int i = 0; i < pd.n; ++i) ye[ring->y_var(i)] = st.cplus[i];
    MRat M(MPoly::monomial(ring, ye));
    for (int j = 1; j < l; ++j) {
      long long a = pd.scaled_ip(j, st.chat_plus, pd.steps[j - 1].c);
      if (a != 0) M = M * L[j - 1].pow(-a);
    }
    MRat sum{MPoly(ring)};
    for (int s = 0; s <= pd.r[st.k]; ++s)
      sum = sum + MRat(z_entry_poly(ring, st.k, s)) * M.pow(s);
    L.push_back(std::move(sum));
  }
  return L;
}

std::vector<long long> gupta_product_exponents(const PathData& pd) {
  int k = pd.length();
  Vec g = pd.g_of_step(k);
  std::vector<long long> e(k);
  for (int j = 1; j <= k; ++j) e[j - 1] = -pd.scaled_ip(j, g, pd.steps[j - 1].c);
  return e;
}

MPoly gupta_product(const PathData& pd, const PolyRingPtr& ring) {
  auto L = gupta_L_sequence(pd, ring);
  auto e = gupta_product_exponents(pd);
  MRat F = MRat::one(ring);
  for (size_t j = 0; j < L.size(); ++j)
    if (e[j] != 0) F = F * L[j].pow(e[j]);
  MPoly out;
  if (!F.is_polynomial(&out))
    throw std::domain_error("gupta_product: product of L-powers is not a polynomial");
  return out;
}

MPoly gupta_expansion(const PathData& pd, const PolyRingPtr& ring, long long deg_bound) {
  int k = pd.length();
  Vec g = pd.g_of_step(k);
  // |c_j^+| per step: positive by sign-coherence, so the tuple enumeration
  // below is finite once the total y-degree is capped
  std::vector<long long> size(k);
  for (int j = 0; j < k; ++j) {
    size[j] = 0;
    for (long long x : pd.steps[j].cplus) size[j] += x;
    if (size[j] <= 0) throw std::logic_error("gupta_expansion: c+ has nonpositive size");
  }
  std::vector<long long> h(k);                       // -(g_k, d_(j) c_j)
  std::vector<std::vector<long long>> inner(k);      // inner[j][l] = (chat_l^+, -d_(j) c_j)
  for (int j = 1; j <= k; ++j) {
    h[j - 1] = -pd.scaled_ip(j, g, pd.steps[j - 1].c);
    inner[j - 1].assign(k, 0);
    for (int l = j + 1; l <= k; ++l)
      inner[j - 1][l - 1] = -pd.scaled_ip(j, pd.steps[l - 1].chat_plus, pd.steps[j - 1].c);
  }
  MPoly F(ring);
  // per-step tuple (n_1..n_{r_j}) with weight w_j = sum_s s*n_s
  std::vector<std::vector<long long>> tup(k);
  std::vector<long long> weight(k, 0);
  std::function<void(int, long long)> rec = [&](int j, long long used) {
    if (j == k) {
      Int coeff = 1;
      for (int a = 0; a < k && coeff != 0; ++a) {
        long long hh = h[a];
        for (int l = a + 1; l < k; ++l) hh += weight[l] * inner[a][l];
        long long n0 = 0;
        for (long long v : tup[a]) n0 += v;
        coeff *= generalized_binomial(hh, n0) * multinomial(tup[a]);
      }
      if (coeff == 0) return;
      ExpVec mono(ring->nvars(), 0);
      Int c = coeff;
      for (int a = 0; a < k; ++a) {
        const auto& st = pd.steps[a];
        for (size_t s = 1; s <= tup[a].size(); ++s) {
          long long ns = tup[a][s - 1];
          if (ns == 0) continue;
          const auto& slot = ring->zslot(st.k, static_cast<int>(s));
          if (slot.formal) {
            mono[slot.var] += ns;
          } else {
            Int p = 1;
            for (long long t = 0; t < ns; ++t) p *= Int(slot.value);
            c *= p;
          }
        }
        for (int i = 0; i < pd.n; ++i) mono[ring->y_var(i)] += weight[a] * st.cplus[i];
      }
      F.add_term(mono, c);
      return;
    }
    int rj = pd.r[pd.steps[j].k];
    std::vector<long long> t(rj, 0);
    std::function<void(int, long long)> fill = [&](int s, long long wsum) {
      if (s > rj) {
        tup[j] = t;
        weight[j] = wsum;
        rec(j + 1, used + wsum * size[j]);
        return;
      }
      for (long long ns = 0;; ++ns) {
        t[s - 1] = ns;
        long long nw = wsum + s * ns;
        if (used + nw * size[j] > deg_bound) break;
        fill(s + 1, nw);
      }
      t[s - 1] = 0;
    };
    fill(1, 0);
  };
  rec(0, 0);
  return F;
}

}  // namespace qclus
