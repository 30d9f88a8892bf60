#include "qclus/verify.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <sstream>

namespace qclus {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool wants(const VerifyOptions& o, const std::string& name) {
  for (const auto& c : o.checks)
    if (c == "all" || c == name) return true;
  return false;
}

CheckResult run_check(const std::string& name, const std::function<std::pair<bool, std::string>()>& fn) {
  CheckResult r;
  r.name = name;
  auto t0 = Clock::now();
  try {
    auto [ok, detail] = fn();
    r.status = ok ? "pass" : "fail";
    r.detail = detail;
  } catch (const InconclusiveExtraction& e) {
    r.status = "inconclusive";
    r.detail = e.what();
  } catch (const std::exception& e) {
    r.status = "fail";
    r.detail = e.what();
  }
  r.ms = ms_since(t0);
  return r;
}

std::pair<bool, std::string> duality_suite(const PathData& pd, const Vec& D0,
                                           const std::vector<int>& r, bool quantum,
                                           const Vec& Dq) {
  for (int t = 0; t <= pd.length(); ++t) {
    if (!verify_tropical_duality(pd.G[t], pd.C[t], D0, r))
      return {false, "tropical duality (G^T D0R C = D0R) fails at t=" + std::to_string(t)};
    // inner-product form (g_i, d_j c_j) = delta_ij
    Vec W(pd.n);
    for (int i = 0; i < pd.n; ++i) W[i] = D0[i] * r[i];
    for (int i = 0; i < pd.n; ++i)
      for (int j = 0; j < pd.n; ++j) {
        long long s = 0;
        for (int a = 0; a < pd.n; ++a) s += pd.G[t][a][i] * W[a] * pd.C[t][a][j];
        if (s % W[j] != 0 || s / W[j] != (i == j ? 1 : 0))
          return {false, "inner-product duality fails at t=" + std::to_string(t)};
      }
    if (quantum && !verify_d_form_duality(pd.C[t], pd.Gtilde[t], Dq))
      return {false, "(c_i, g_j)_D = d_i^{-1} delta_ij fails at t=" + std::to_string(t)};
  }
  return {true, "verified at " + std::to_string(pd.length() + 1) + " vertices"};
}

std::pair<bool, std::string> gbbc_suite(const PathData& pd) {
  for (int t = 0; t <= pd.length(); ++t) {
    Mat Bn = pd.Bt[t];
    Bn.resize(pd.n);
    Mat B0n = pd.Bt[0];
    B0n.resize(pd.n);
    if (!verify_gb_bc(pd.G[t], Bn, B0n, pd.C[t]))
      return {false, "G_t B_t = B_0 C_t fails at t=" + std::to_string(t)};
    if (!verify_gb_bc(pd.Gtilde[t], pd.Bt[t], pd.Bt[0], pd.C[t]))
      return {false, "Gtilde_t Btilde_t = Btilde_0 C_t fails at t=" + std::to_string(t)};
  }
  return {true, "verified at " + std::to_string(pd.length() + 1) + " vertices"};
}

}  // namespace

bool classical_f_structure_ok(const MPoly& f, std::string* why) {
  const auto& ring = f.ring();
  int n = ring->rank();
  ExpVec zero(ring->nvars(), 0);
  auto it = f.terms().find(zero);
  if (it == f.terms().end() || it->second != 1) {
    if (why) *why = "constant term is not 1";
    return false;
  }
  Vec mx(n, 0);
  for (const auto& [e, c] : f.terms())
    for (int i = 0; i < n; ++i) mx[i] = std::max(mx[i], e[ring->y_var(i)]);
  // coefficient of the dominating y-monomial, as a polynomial in z
  MPoly coeff(ring);
  for (const auto& [e, c] : f.terms()) {
    bool at_max = true;
    for (int i = 0; i < n; ++i) at_max &= e[ring->y_var(i)] == mx[i];
    if (at_max) {
      ExpVec zpart = e;
      for (int i = 0; i < n; ++i) {
        zpart[ring->x_var(i)] = 0;
        zpart[ring->y_var(i)] = 0;
      }
      coeff.add_term(zpart, c);
    }
  }
  if (!coeff.is_one()) {
    if (why) *why = "maximal y-monomial coefficient is " + coeff.str() + ", not 1";
    return false;
  }
  return true;
}

bool VerifyReport::passed() const { return exit_code() == 0; }

int VerifyReport::exit_code() const {
  bool inconclusive = false;
  for (const auto& c : checks) {
    if (c.status == "fail") return 1;
    if (c.status == "inconclusive") inconclusive = true;
  }
  return inconclusive ? 2 : 0;
}

ojson VerifyReport::to_json() const {
  ojson j;
  ojson arr = ojson::array();
  for (const auto& c : checks) {
    ojson e;
    e["name"] = c.name;
    e["status"] = c.status;
    if (!c.detail.empty()) e["detail"] = c.detail;
    e["ms"] = c.ms;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  j["status"] = exit_code() == 0 ? "pass" : (exit_code() == 1 ? "fail" : "inconclusive");
  return j;
}

VerifyReport verify_seed(const SeedFile& seed, const std::vector<int>& path,
                         const VerifyOptions& opts) {
  VerifyReport rep;
  MutationData md = seed.mutation_data();
  bool quantum = seed.mode == "quantum" && seed.has_lambda() && !seed.h.empty();
  Mat B(seed.n, Vec(seed.n));
  for (int i = 0; i < seed.n; ++i)
    for (int j = 0; j < seed.n; ++j) B[i][j] = seed.Btilde[i][j];
  Vec D0 = compute_d0(B, md.r);
  ExtractOptions xopts;
  xopts.experimental = opts.experimental;
  if (opts.truncation > 0) xopts.initial_bound = opts.truncation;

  PathData pd = quantum ? run_path_quantum(seed.pair(), md.r, path)
                        : run_path_classical(B, md.r, path);

  if (wants(opts, "duality"))
    rep.checks.push_back(run_check("duality", [&] {
      return duality_suite(pd, D0, md.r, quantum, quantum ? seed.pair().D : Vec{});
    }));
  if (wants(opts, "gbbc"))
    rep.checks.push_back(run_check("gbbc", [&] { return gbbc_suite(pd); }));

  if (wants(opts, "triple"))
    rep.checks.push_back(run_check("triple", [&]() -> std::pair<bool, std::string> {
      auto z = seed.z_entries();
      ClassicalSeedState s = initial_classical_seed(B, md.r, z);
      ClassicalSeedState cur = s;
      for (int j = 1; j <= pd.length(); ++j) {
        cur = mutate_seed_classical(cur, path[j - 1] - 1);
        PathData sub = run_path_classical(B, md.r, {path.begin(), path.begin() + j});
        MPoly fd = f_poly_direct(cur, path[j - 1] - 1);
        MPoly fg = gupta_product(sub, s.ring);
        if (!(fd == fg))
          return {false, "direct != gupta product at prefix " + std::to_string(j)};
        MPoly fe = gupta_expansion(sub, s.ring, fg.degree_over(fg.y_vars()));
        if (!(fe == fg))
          return {false, "expansion != gupta product at prefix " + std::to_string(j)};
      }
      return {true, "direct = product = expansion on " + std::to_string(pd.length()) + " prefixes"};
    }));

  if (wants(opts, "separation")) {
    if (quantum) {
      rep.checks.push_back(run_check("separation", [&]() -> std::pair<bool, std::string> {
        QuantumEngine eng(seed.pair(), md);
        auto res = eng.verify_separation(path, xopts);
        return {res.ok, res.ok ? "exact at every step" : res.detail};
      }));
    } else {
      rep.checks.push_back(run_check("separation", [&]() -> std::pair<bool, std::string> {
        auto z = seed.z_entries();
        ClassicalSeedState cur = initial_classical_seed(B, md.r, z);
        for (int j = 1; j <= pd.length(); ++j) {
          cur = mutate_seed_classical(cur, path[j - 1] - 1);
          for (int i = 0; i < seed.n; ++i) {
            MPoly f = f_poly_direct(cur, i);
            if (!classical_separation_check(cur, i, mat_col(pd.G[j], i), f))
              return {false, "x = x^g F(yhat,z) fails at t=" + std::to_string(j) +
                                 ", i=" + std::to_string(i + 1)};
          }
        }
        return {true, "exact at every vertex and index"};
      }));
    }
  }

  if (wants(opts, "q1")) {
    if (quantum) {
      rep.checks.push_back(run_check("q1", [&]() -> std::pair<bool, std::string> {
        QuantumEngine eng(seed.pair(), md);
        for (int j = 1; j <= pd.length(); ++j) {
          std::string detail;
          if (!eng.verify_q1({path.begin(), path.begin() + j}, xopts, &detail))
            return {false, "prefix " + std::to_string(j) + ": " + detail};
        }
        return {true, "quantum F at q=1 equals classical F on all prefixes"};
      }));
    } else {
      rep.checks.push_back(CheckResult{"q1", "skip", "classical seed has no quantum side", 0.0});
    }
  }

  if (wants(opts, "structure")) {
    rep.checks.push_back(run_check("structure", [&]() -> std::pair<bool, std::string> {
      if (quantum) {
        QuantumEngine eng(seed.pair(), md);
        for (int j = 1; j <= pd.length(); ++j) {
          QuantumFPoly f = eng.fpoly({path.begin(), path.begin() + j}, xopts);
          StructureReport sr = structure_checks(f.poly);
          if (!sr.ok()) return {false, "prefix " + std::to_string(j) + ": " + sr.detail};
        }
        return {true, "Cor.-3.10-style invariants hold on all prefixes"};
      }
      auto z = seed.z_entries();
      ClassicalSeedState cur = initial_classical_seed(B, md.r, z);
      for (int j = 1; j <= pd.length(); ++j) {
        cur = mutate_seed_classical(cur, path[j - 1] - 1);
        MPoly f = f_poly_direct(cur, path[j - 1] - 1);
        std::string why;
        if (!classical_f_structure_ok(f, &why))
          return {false, "prefix " + std::to_string(j) + ": " + why};
      }
      return {true, "constant term 1 and dominating y-monomial on all prefixes"};
    }));
  }
  return rep;
}

VerifyReport verify_random(uint64_t rng_seed, int trials, int max_path_len,
                           const VerifyOptions& opts) {
  std::vector<std::future<VerifyReport>> futs;
  futs.reserve(trials);
  for (int t = 0; t < trials; ++t) {
    futs.push_back(std::async(std::launch::async, [rng_seed, t, max_path_len, &opts] {
      std::mt19937_64 rng(rng_seed + static_cast<uint64_t>(t) * 7919);
      RandomSeedOptions ropts;
      ropts.quantum = t % 3 == 2;
      ropts.formal_z = t % 3 == 1;
      SeedFile seed = random_seed(rng, ropts);
      std::uniform_int_distribution<int> len(1, max_path_len);
      std::vector<int> path = random_path(rng, seed.n, len(rng));
      return verify_seed(seed, path, opts);
    }));
  }
  VerifyReport rep;
  for (int t = 0; t < trials; ++t) {
    VerifyReport r = futs[t].get();
    for (auto& c : r.checks) {
      c.name = "trial" + std::to_string(t) + "/" + c.name;
      rep.checks.push_back(std::move(c));
    }
  }
  return rep;
}

}  // namespace qclus
