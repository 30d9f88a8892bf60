#include "qclus/gqca.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qclus {

namespace {

QSeries bracket_factor(const BracketBase& base, long long shift_half, int N) {
  // sum_s h_s q^{shift_half * s / 1} ... shift counted in q^(1/2) units
  QSeries f = QSeries::unit(base.z.elem().form(), N);
  QSeries zp = f;
  for (size_t s = 1; s < base.h.size(); ++s) {
    zp = zp * base.z;
    f = f + zp.scaled(base.h[s].q_shift(shift_half * static_cast<long long>(s)));
  }
  return f;
}

}  // namespace

QSeries bracketed_power(const BracketBase& base, int a, int N) {
  QSeries r = QSeries::unit(base.z.elem().form(), N);
  if (a > 0) {
    for (int i = 1; i <= a; ++i) r = r * bracket_factor(base, static_cast<long long>(base.b) * (2 * i - 1), N);
  } else if (a < 0) {
    for (int i = a; i <= -1; ++i)
      r = r * bracket_factor(base, static_cast<long long>(base.b) * (2 * i + 1), N).inverse();
  }
  return r;
}

QSeries bracket_signed(const BracketBase& base, int A, int eps, int N) {
  QSeries p = bracketed_power(base, A, N);
  return eps == 1 ? p.inverse() : p;
}

LRecursion l_recursion(const PathData& pd, const std::vector<std::vector<QCoeff>>& h,
                       SkewFormPtr db, int N) {
  int k = pd.length();
  LRecursion out;
  out.table.assign(k, {});
  out.bases.reserve(k);
  for (int j = 1; j <= k; ++j) {
    const auto& st = pd.steps[j - 1];
    BracketBase base;
    base.h = h[st.k];
    base.b = static_cast<int>(pd.W[st.k]);
    base.z = (j == 1) ? QSeries::monomial(db, pd.steps[0].cplus, N)
                      : out.table[j - 2][j - 1];
    out.bases.push_back(base);
    out.L.push_back(bracket_factor(base, base.b, N));  // the element L_j itself
    out.table[j - 1].reserve(k);
    for (int i = 1; i <= k; ++i) {
      int A = static_cast<int>(pd.scaled_ip(j, st.cplus, pd.steps[i - 1].chat_plus));
      QSeries corr = bracket_signed(base, A, st.eps, N);
      if (j == 1) {
        out.table[0].push_back(QSeries::monomial(db, pd.steps[i - 1].cplus, N) * corr);
      } else {
        out.table[j - 1].push_back(out.table[j - 2][i - 1] * corr);
      }
    }
  }
  return out;
}

QSeries gupta_product_quantum(const PathData& pd, const std::vector<std::vector<QCoeff>>& h,
                              SkewFormPtr db, int N) {
  int k = pd.length();
  LRecursion lr = l_recursion(pd, h, db, N);
  Vec gk = pd.g_of_step(k);
  QSeries r = QSeries::unit(db, N);
  for (int j = 1; j <= k; ++j) {
    const auto& st = pd.steps[j - 1];
    int A = static_cast<int>(pd.scaled_ip(j, st.cplus, gk));
    r = r * bracket_signed(lr.bases[j - 1], A, st.eps, N);
  }
  return r;
}

StructureReport structure_checks(const TorusElem& f) {
  StructureReport rep;
  std::ostringstream os;
  if (f.is_zero()) {
    rep.detail = "zero element";
    return rep;
  }
  size_t n = f.terms().begin()->first.size();
  ExpVec zero(n, 0), mx(n, 0);
  rep.support_nonnegative = true;
  for (const auto& [a, c] : f.terms())
    for (size_t i = 0; i < n; ++i) {
      if (a[i] < 0) rep.support_nonnegative = false;
      mx[i] = std::max(mx[i], a[i]);
    }
  rep.constant_term_one = f.coeff(zero).is_one();
  if (!rep.constant_term_one) os << "constant term is " << f.coeff(zero).str() << "; ";
  rep.max_monomial = mx;
  QCoeff top = f.coeff(mx);
  rep.has_max_monomial = !top.is_zero();
  if (!rep.has_max_monomial) {
    os << "componentwise-max exponent is not a monomial of F; ";
  } else {
    // Cor.-3.10-style unit: exactly one term, integer coefficient 1, some q-power
    const auto& ts = top.terms();
    rep.max_coeff_unit_q_power =
        ts.size() == 1 && ts.begin()->second == 1 && ts.begin()->first.hp == 0;
    if (!rep.max_coeff_unit_q_power) os << "max-monomial coefficient " << top.str() << " is not q^(a/2); ";
  }
  if (!rep.support_nonnegative) os << "support leaves the nonnegative orthant; ";
  rep.detail = os.str();
  return rep;
}

QuantumEngine::QuantumEngine(CompatiblePair pair, MutationData md)
    : pair_(std::move(pair)), md_(std::move(md)) {
  if (md_.h.empty()) throw std::invalid_argument("QuantumEngine: mutation data has no h lists");
  md_.validate();
  int n = pair_.n();
  Mat B = pair_.principal_part();
  Mat DB(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) DB[i][j] = pair_.D[i] * B[i][j];
  db_ = std::make_shared<SkewForm>(DB);
  lambda_ = std::make_shared<SkewForm>(pair_.Lambda);
  // formal-z classical companion: one symbol per reciprocity orbit
  formal_z_.resize(n);
  for (int i = 0; i < n; ++i) {
    formal_z_[i].resize(md_.r[i] + 1);
    for (int s = 0; s <= md_.r[i]; ++s) {
      if (s == 0 || s == md_.r[i])
        formal_z_[i][s] = 1LL;
      else
        formal_z_[i][s] = "z" + std::to_string(i + 1) + "_" +
                          std::to_string(std::min(s, md_.r[i] - s));
    }
  }
  classical0_ = initial_classical_seed(B, md_.r, formal_z_);
}

PathData QuantumEngine::patterns(const std::vector<int>& path) const {
  return run_path_quantum(pair_, md_.r, path);
}

MPoly QuantumEngine::classical_f(const std::vector<int>& path) const {
  ClassicalSeedState s = run_classical_path(classical0_, path);
  return f_poly_direct(s, path.back() - 1);
}

QuantumFPoly QuantumEngine::fpoly(const std::vector<int>& path, const ExtractOptions& opts) const {
  if (path.empty()) {
    QuantumFPoly r{TorusElem::unit(db_), {}};
    return r;
  }
  StabilizationCertificate cert;
  cert.margin = opts.margin;
  cert.hypothesis_h_positive = true;
  for (const auto& hl : md_.h)
    for (const auto& c : hl)
      if (!c.positive_at_one()) cert.hypothesis_h_positive = false;
  if (!cert.hypothesis_h_positive) {
    if (!opts.experimental)
      throw std::domain_error(
          "fpoly: some h_{i,s}(1) is not positive; polynomiality is not guaranteed "
          "(use the experimental mode to proceed)");
    cert.observational = true;
  }
  MPoly fc = classical_f(path);
  cert.classical_degree = fc.degree_over(fc.y_vars());
  PathData pd = patterns(path);
  int N = opts.initial_bound > 0 ? opts.initial_bound
                                 : static_cast<int>(cert.classical_degree) + 2;
  int maxN = opts.max_bound > 0 ? opts.max_bound : N + 8;
  QSeries low = gupta_product_quantum(pd, md_.h, db_, N);
  while (true) {
    QSeries high = gupta_product_quantum(pd, md_.h, db_, N + opts.delta);
    long long top = low.elem().total_degree();
    if (high.elem() == low.elem() && top <= N - opts.margin) {
      cert.bound_low = N;
      cert.bound_high = N + opts.delta;
      cert.top_degree = top;
      return QuantumFPoly{low.elem(), cert};
    }
    N += opts.delta;
    low = std::move(high);
    if (N + opts.delta > maxN) {
      std::ostringstream os;
      os << "fpoly: ordered product did not stabilize up to truncation " << maxN
         << " (classical degree bound " << cert.classical_degree << ")";
      throw InconclusiveExtraction(os.str());
    }
  }
}

TorusElem QuantumEngine::sep_to_lambda(const Vec& g, const TorusElem& f_db) const {
  TorusElem mapped(lambda_);
  int m = pair_.m(), n = pair_.n();
  for (const auto& [a, c] : f_db.terms()) {
    ExpVec beta(m, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) beta[i] += pair_.Btilde[i][j] * a[j];
    mapped.add_term(beta, c);
  }
  return TorusElem::monomial(lambda_, g) * mapped;
}

TorusElem QuantumEngine::cluster_monomial(const Vec& beta, const std::vector<Vec>& g,
                                          const std::vector<TorusElem>& f,
                                          const Mat& lam_t) const {
  int m = pair_.m();
  long long tw = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) tw += beta[i] * beta[j] * lam_t[j][i];
  TorusElem r = TorusElem::monomial(lambda_, ExpVec(m, 0), QCoeff::term(1, static_cast<int>(tw)));
  for (int i = 0; i < m; ++i) {
    if (beta[i] == 0) continue;
    if (beta[i] < 0) throw std::logic_error("cluster_monomial: negative exponent");
    TorusElem xi = sep_to_lambda(g[i], f[i]);
    for (long long t = 0; t < beta[i]; ++t) r = r * xi;
  }
  return r;
}

QuantumEngine::SeparationResult QuantumEngine::verify_separation(
    const std::vector<int>& path, const ExtractOptions& opts) const {
  SeparationResult res;
  int m = pair_.m(), n = pair_.n();
  PathData pd = patterns(path);
  std::vector<Vec> g(m);
  std::vector<TorusElem> f(m, TorusElem::unit(db_));
  for (int i = 0; i < m; ++i) {
    g[i] = Vec(m, 0);
    g[i][i] = 1;
  }
  for (int j = 1; j <= pd.length(); ++j) {
    const auto& st = pd.steps[j - 1];
    int k = st.k;
    std::vector<int> prefix(path.begin(), path.begin() + j);
    QuantumFPoly qf = fpoly(prefix, opts);
    Vec gnew = pd.gtilde_of_step(j);
    const Mat& Bt = pd.Bt[j - 1];
    const Mat& Lt = pd.Lam[j - 1];
    // X'_k X_{k;t} = sum_s h_s q^{(1/2) a_s^T Lam_t e_k} X_t(a_s + e_k),
    // a finite identity: all exponents on the right are componentwise >= 0.
    TorusElem lhs = sep_to_lambda(gnew, qf.poly) * sep_to_lambda(g[k], f[k]);
    TorusElem rhs(lambda_);
    int rk = md_.r[k];
    for (int s = 0; s <= rk; ++s) {
      Vec alpha(m);
      for (int i = 0; i < m; ++i)
        alpha[i] = s * pos_part(Bt[i][k]) + (rk - s) * pos_part(-Bt[i][k]) - (i == k ? 1 : 0);
      long long tw = 0;
      for (int i = 0; i < m; ++i) tw += alpha[i] * Lt[i][k];
      Vec beta = alpha;
      beta[k] += 1;
      TorusElem term = cluster_monomial(beta, g, f, Lt);
      rhs = rhs + term.scaled(md_.h[k][s].q_shift(tw));
    }
    if (!(lhs == rhs)) {
      std::ostringstream os;
      os << "separation falsified at step " << j << " (direction " << k + 1 << "): ";
      TorusElem diff = lhs - rhs;
      int shown = 0;
      for (const auto& [a, c] : diff.terms()) {
        if (shown++ == 4) {
          os << " ...";
          break;
        }
        os << "[X(";
        for (size_t t = 0; t < a.size(); ++t) os << (t ? "," : "") << a[t];
        os << ") : " << c.str() << "] ";
      }
      res.ok = false;
      res.detail = os.str();
      return res;
    }
    g[k] = gnew;
    f[k] = qf.poly;
    (void)n;
  }
  return res;
}

std::map<ExpVec, std::map<int, Int>> QuantumEngine::specialize_q1(const TorusElem& f) {
  return f.eval_q1();
}

bool QuantumEngine::verify_q1(const std::vector<int>& path, const ExtractOptions& opts,
                              std::string* detail) const {
  QuantumFPoly qf = fpoly(path, opts);
  auto lhs = specialize_q1(qf.poly);
  MPoly fc = classical_f(path);
  const auto& ring = fc.ring();
  int n = ring->rank();
  // z variable -> h_{i,s}(1) as a QCoeff with q = 1
  std::map<int, QCoeff> zval;
  for (int i = 0; i < n; ++i)
    for (int s = 1; s < md_.r[i]; ++s) {
      const auto& slot = ring->zslot(i, s);
      if (!slot.formal) continue;
      QCoeff v;
      for (const auto& [hp, c] : md_.h[i][s].eval_at_one_h()) v += QCoeff::term(c, 0, hp);
      auto it = zval.find(slot.var);
      if (it == zval.end())
        zval.emplace(slot.var, v);
      else if (!(it->second == v))
        throw std::logic_error("verify_q1: inconsistent shared z symbol");
    }
  std::map<ExpVec, QCoeff> rhs_acc;
  for (const auto& [e, c] : fc.terms()) {
    ExpVec alpha(n);
    for (int i = 0; i < n; ++i) alpha[i] = e[ring->y_var(i)];
    QCoeff v(c);
    for (const auto& [var, val] : zval)
      for (long long t = 0; t < e[var]; ++t) v *= val;
    auto [it, fresh] = rhs_acc.try_emplace(alpha, v);
    if (!fresh) it->second += v;
  }
  std::map<ExpVec, std::map<int, Int>> rhs;
  for (auto& [a, v] : rhs_acc)
    if (!v.is_zero()) rhs[a] = v.eval_at_one_h();
  bool ok = lhs == rhs;
  if (!ok && detail) {
    std::ostringstream os;
    os << "q=1 bridge mismatch: quantum has " << lhs.size() << " exponents, classical " << rhs.size();
    *detail = os.str();
  }
  return ok;
}

CompatiblePair principal_lift(const Mat& B, const std::vector<int>& r) {
  int n = static_cast<int>(B.size());
  Vec d0 = compute_d0(B, r);
  Vec D(n);
  for (int i = 0; i < n; ++i) D[i] = d0[i] * r[i];
  Mat Bt(2 * n, Vec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Bt[i][j] = B[i][j];
  for (int i = 0; i < n; ++i) Bt[n + i][i] = 1;
  Mat Lam(2 * n, Vec(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    Lam[i][n + i] = -D[i];
    Lam[n + i][i] = D[i];
    for (int j = 0; j < n; ++j) Lam[n + i][n + j] = -D[i] * B[i][j];
  }
  return make_pair(std::move(Bt), std::move(Lam));
}

}  // namespace qclus
