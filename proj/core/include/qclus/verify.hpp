#pragma once

#include <string>
#include <vector>

#include "qclus/fixtures.hpp"
#include "qclus/gqca.hpp"
#include "qclus/randgen.hpp"
#include "qclus/seedio.hpp"

namespace qclus {

struct CheckResult {
  std::string name;
  std::string status;  // "pass" | "fail" | "inconclusive" | "skip"
  std::string detail;
  double ms = 0.0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  int exit_code() const;  // 0 pass, 1 falsification, 2 inconclusive
  ojson to_json() const;
};

struct VerifyOptions {
  std::vector<std::string> checks{"all"};
  int truncation = -1;
  bool experimental = false;
};

/// Runs the requested identity checks for one seed and path.
VerifyReport verify_seed(const SeedFile& seed, const std::vector<int>& path,
                         const VerifyOptions& opts);

/// Random-seed campaign: `trials` independent random seeds and paths, all
/// checks, fanned out over a parallel pure map.
VerifyReport verify_random(uint64_t rng_seed, int trials, int max_path_len,
                           const VerifyOptions& opts);

/// classical structure invariants: constant term 1 and a unique maximal
/// y-monomial with coefficient 1 dividing every other monomial
bool classical_f_structure_ok(const MPoly& f, std::string* why = nullptr);

}  // namespace qclus
