// qclus — exact computations in generalized (quantum) cluster algebras:
// matrix patterns along mutation paths, F-polynomials through several
// independent routes, and machine-checkable identity verification.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qclus/fixtures.hpp"
#include "qclus/gca.hpp"
#include "qclus/gqca.hpp"
#include "qclus/seedio.hpp"
#include "qclus/verify.hpp"

namespace {

using namespace qclus;

constexpr int kExitPass = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInputError = 3;

int cmd_example(const std::string& name, const std::string& out) {
  SeedFile s = example_seed(name);
  if (out.empty()) {
    std::cout << seed_to_json(s).dump(1) << "\n";
  } else {
    save_seed_file(s, out);
    std::cerr << "wrote " << out << "\n";
  }
  return kExitPass;
}

int cmd_mutate(const std::string& file, const std::string& pathcsv, const std::string& out) {
  SeedFile seed = load_seed_file(file);
  std::vector<int> path = parse_path(pathcsv, seed.n);
  MutationData md = seed.mutation_data();
  PathData pd;
  if (seed.has_lambda())
    pd = run_path_quantum(seed.pair(), md.r, path);
  else {
    Mat B(seed.n, Vec(seed.n));
    for (int i = 0; i < seed.n; ++i)
      for (int j = 0; j < seed.n; ++j) B[i][j] = seed.Btilde[i][j];
    pd = run_path_classical(B, md.r, path);
  }
  ojson j = path_dump(seed, pd);
  if (out.empty()) {
    std::cout << j.dump(1) << "\n";
  } else {
    std::ofstream o(out);
    o << j.dump(1) << "\n";
  }
  return kExitPass;
}

std::vector<int> prefix_for_index(const std::vector<int>& path, int index1) {
  // F_{i;t} is unchanged by mutations in other directions, so reduce to the
  // prefix ending at the last step in direction `index1`
  for (int j = static_cast<int>(path.size()); j >= 1; --j)
    if (path[j - 1] == index1) return {path.begin(), path.begin() + j};
  return {};
}

int cmd_fpoly(const std::string& file, const std::string& pathcsv, int index1,
              const std::string& route, int truncation, bool experimental, bool as_json) {
  SeedFile seed = load_seed_file(file);
  std::vector<int> path = parse_path(pathcsv, seed.n);
  MutationData md = seed.mutation_data();
  if (index1 == 0) {
    if (path.empty()) throw std::invalid_argument("fpoly: empty path needs --index");
    index1 = path.back();
  }
  if (index1 < 1 || index1 > seed.n) throw std::invalid_argument("fpoly: index out of range");
  Mat B(seed.n, Vec(seed.n));
  for (int i = 0; i < seed.n; ++i)
    for (int j = 0; j < seed.n; ++j) B[i][j] = seed.Btilde[i][j];

  ojson j;
  j["route"] = route;
  j["index"] = index1;
  j["path"] = path;
  std::string rendered;

  if (route == "quantum") {
    QuantumEngine eng(seed.pair(), md);
    ExtractOptions opts;
    opts.experimental = experimental;
    if (truncation > 0) opts.initial_bound = truncation;
    std::vector<int> prefix = prefix_for_index(path, index1);
    QuantumFPoly f = eng.fpoly(prefix, opts);
    rendered = fpoly_quantum_str(f.poly);
    j["certificate"] = {{"classical_degree", f.cert.classical_degree},
                        {"bound_low", f.cert.bound_low},
                        {"bound_high", f.cert.bound_high},
                        {"margin", f.cert.margin},
                        {"top_degree", f.cert.top_degree},
                        {"hypothesis_h_positive", f.cert.hypothesis_h_positive},
                        {"observational", f.cert.observational}};
    StructureReport sr = structure_checks(f.poly);
    j["structure_ok"] = sr.ok();
  } else {
    auto z = seed.z_entries();
    ClassicalSeedState s0 = initial_classical_seed(B, md.r, z);
    MPoly f;
    if (route == "direct") {
      ClassicalSeedState s = run_classical_path(s0, path);
      f = f_poly_direct(s, index1 - 1);
    } else {
      std::vector<int> prefix = prefix_for_index(path, index1);
      if (prefix.empty()) {
        f = MPoly::constant(s0.ring, 1);
      } else {
        PathData pd = run_path_classical(B, md.r, prefix);
        if (route == "gupta") {
          f = gupta_product(pd, s0.ring);
        } else if (route == "expansion") {
          MPoly fp = gupta_product(pd, s0.ring);
          f = gupta_expansion(pd, s0.ring, fp.degree_over(fp.y_vars()));
        } else {
          throw std::invalid_argument("fpoly: unknown route " + route);
        }
      }
    }
    rendered = f.str();
  }
  j["fpoly"] = rendered;
  if (as_json)
    std::cout << j.dump(1) << "\n";
  else
    std::cout << rendered << "\n";
  return kExitPass;
}

int cmd_verify(const std::string& file, const std::string& pathcsv,
               const std::vector<std::string>& checks, long long seed_random, int trials,
               int max_path_len, int truncation, bool experimental, bool as_json) {
  VerifyOptions opts;
  if (!checks.empty()) opts.checks = checks;
  opts.truncation = truncation;
  opts.experimental = experimental;
  VerifyReport rep;
  if (seed_random >= 0) {
    rep = verify_random(static_cast<uint64_t>(seed_random), trials, max_path_len, opts);
  } else {
    if (file.empty())
      throw std::invalid_argument("verify: provide a seed file or --seed-random");
    SeedFile seed = load_seed_file(file);
    std::vector<int> path = parse_path(pathcsv, seed.n);
    rep = verify_seed(seed, path, opts);
  }
  if (as_json) {
    std::cout << rep.to_json().dump(1) << "\n";
  } else {
    for (const auto& c : rep.checks)
      std::cout << "[" << c.status << "] " << c.name
                << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  }
  return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact generalized (quantum) cluster algebra computations"};
  app.require_subcommand(1);

  auto* ex = app.add_subcommand("example", "write a bundled example seed file");
  std::string ex_name, ex_out;
  ex->add_option("name", ex_name, "g2 or rank2")->required();
  ex->add_option("-o,--out", ex_out, "output file (default: stdout)");

  auto* mu = app.add_subcommand("mutate", "dump Btilde/Lambda/C/G/Gtilde along a path");
  std::string mu_file, mu_path, mu_out;
  mu->add_option("seed", mu_file, "seed file")->required();
  mu->add_option("-p,--path", mu_path, "comma-separated directions, e.g. 1,2,1,2")->required();
  mu->add_option("-o,--out", mu_out, "output file (default: stdout)");

  auto* fp = app.add_subcommand("fpoly", "compute an F-polynomial");
  std::string fp_file, fp_path;
  int fp_index = 0, fp_trunc = -1;
  bool fp_direct = false, fp_gupta = false, fp_expansion = false, fp_quantum = false;
  bool fp_experimental = false, fp_json = false;
  fp->add_option("seed", fp_file, "seed file")->required();
  fp->add_option("-p,--path", fp_path, "mutation path")->required();
  fp->add_option("-i,--index", fp_index, "cluster index (default: last path direction)");
  fp->add_flag("--direct", fp_direct, "specialize the mutated cluster variable at x=1");
  fp->add_flag("--gupta", fp_gupta, "ordered product of L-powers");
  fp->add_flag("--expansion", fp_expansion, "generalized-multinomial expansion");
  fp->add_flag("--quantum", fp_quantum, "quantum route with stabilization certificate");
  fp->add_option("--truncation", fp_trunc, "series truncation override (quantum route)");
  fp->add_flag("--experimental", fp_experimental, "allow h with h_{i,s}(1) <= 0");
  fp->add_flag("--json", fp_json, "machine-readable output");

  auto* ve = app.add_subcommand("verify", "run identity checks and emit a report");
  std::string ve_file, ve_path;
  std::vector<std::string> ve_checks;
  long long ve_random = -1;
  int ve_trials = 10, ve_maxlen = 6, ve_trunc = -1;
  bool ve_exp = false, ve_json = false;
  ve->add_option("seed", ve_file, "seed file");
  ve->add_option("-p,--path", ve_path, "mutation path");
  ve->add_option("-c,--check", ve_checks,
                 "duality|gbbc|separation|q1|structure|triple|all (repeatable)");
  ve->add_option("--seed-random", ve_random, "run random trials with this RNG seed");
  ve->add_option("--trials", ve_trials, "number of random trials");
  ve->add_option("--max-path-len", ve_maxlen, "random path length bound");
  ve->add_option("--truncation", ve_trunc, "series truncation override");
  ve->add_flag("--experimental", ve_exp, "allow h with h_{i,s}(1) <= 0");
  ve->add_flag("--json", ve_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*ex) return cmd_example(ex_name, ex_out);
    if (*mu) return cmd_mutate(mu_file, mu_path, mu_out);
    if (*fp) {
      int nroutes = fp_direct + fp_gupta + fp_expansion + fp_quantum;
      if (nroutes != 1)
        throw std::invalid_argument("fpoly: choose exactly one of --direct/--gupta/--expansion/--quantum");
      std::string route = fp_direct ? "direct" : fp_gupta ? "gupta" : fp_expansion ? "expansion" : "quantum";
      return cmd_fpoly(fp_file, fp_path, fp_index, route, fp_trunc, fp_experimental, fp_json);
    }
    if (*ve)
      return cmd_verify(ve_file, ve_path, ve_checks, ve_random, ve_trials, ve_maxlen, ve_trunc,
                        ve_exp, ve_json);
  } catch (const qclus::InconclusiveExtraction& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "falsified: " << e.what() << "\n";
    return kExitFalsified;
  }
  return kExitInputError;
}
