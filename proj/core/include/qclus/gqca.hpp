#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qclus/gca.hpp"
#include "qclus/patterns.hpp"
#include "qclus/torus.hpp"

namespace qclus {

/// One generalized-binomial factor family: sum_s h_s (q^{b/2} z)^s with a
/// zero-constant-term series base z. Each factor has constant term 1, so
/// every integer bracketed power exists as a truncated series.
struct BracketBase {
  std::vector<QCoeff> h;
  int b = 1;
  QSeries z;
};

/// The a-th bracketed power: the q-shifted product for a > 0, 1 for a = 0,
/// the inverse shifted product for a < 0.
QSeries bracketed_power(const BracketBase& base, int a, int N);

/// (bracketed power {A})^{-eps}: inverted when eps = +1, as-is when eps = -1.
QSeries bracket_signed(const BracketBase& base, int A, int eps, int N);

struct LRecursion {
  std::vector<std::vector<QSeries>> table;  // table[j][i] = L_{j+1,i+1}
  std::vector<QSeries> L;                   // L_1..L_k
  std::vector<BracketBase> bases;           // base of L_j (z of the bracket)
};

/// Table L_{j,i} and elements L_j along the path, in the DB-torus.
LRecursion l_recursion(const PathData& pd, const std::vector<std::vector<QCoeff>>& h,
                       SkewFormPtr db, int N);

/// Ordered product of bracket powers for the variable made at the last step.
QSeries gupta_product_quantum(const PathData& pd, const std::vector<std::vector<QCoeff>>& h,
                              SkewFormPtr db, int N);

struct StabilizationCertificate {
  long long classical_degree = 0;  // Newton degree of the q=1 F-polynomial
  int bound_low = 0;               // truncation at which the series stabilized
  int bound_high = 0;              // confirming truncation
  int margin = 1;
  long long top_degree = 0;
  bool hypothesis_h_positive = true;
  bool observational = false;      // ran with the experimental h allowance
};

struct QuantumFPoly {
  TorusElem poly;  // finite element of the DB-torus, exponents >= 0
  StabilizationCertificate cert;
};

struct StructureReport {
  bool constant_term_one = false;
  bool support_nonnegative = false;
  bool has_max_monomial = false;
  bool max_coeff_unit_q_power = false;
  ExpVec max_monomial;
  std::string detail;
  bool ok() const {
    return constant_term_one && support_nonnegative && has_max_monomial &&
           max_coeff_unit_q_power;
  }
};

StructureReport structure_checks(const TorusElem& f);

struct ExtractOptions {
  int initial_bound = -1;  // default: classical degree + 2
  int max_bound = -1;      // default: initial + 8
  int delta = 2;
  int margin = 1;
  bool experimental = false;
};

/// Extraction did not stabilize within the configured bounds.
struct InconclusiveExtraction : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Orchestrates the quantum pipeline for one compatible pair: patterns,
/// bracket products, F-extraction with certificate, exact separation
/// verification and the q=1 bridge.
class QuantumEngine {
 public:
  QuantumEngine(CompatiblePair pair, MutationData md);

  const CompatiblePair& pair() const { return pair_; }
  const MutationData& mutation_data() const { return md_; }
  SkewFormPtr db_form() const { return db_; }
  SkewFormPtr lambda_form() const { return lambda_; }

  PathData patterns(const std::vector<int>& path) const;

  /// classical companion F (formal z) of the variable made at the last step
  MPoly classical_f(const std::vector<int>& path) const;

  QuantumFPoly fpoly(const std::vector<int>& path, const ExtractOptions& opts = {}) const;

  struct SeparationResult {
    bool ok = true;
    std::string detail;
  };
  /// Exact verification of X_{i;t} = X(gtilde) F(Yhat) at every step of the
  /// path: each new variable's exchange identity is checked as an identity
  /// between finite torus elements, with no truncation.
  SeparationResult verify_separation(const std::vector<int>& path,
                                     const ExtractOptions& opts = {}) const;

  /// q^(1/2) = 1 specialization equals the classical F with z_{i,s} = h_{i,s}(1).
  bool verify_q1(const std::vector<int>& path, const ExtractOptions& opts,
                 std::string* detail = nullptr) const;

  /// F with every q-power dropped at q=1, as a classical (y,z)-check helper:
  /// exponent -> coefficient polynomial in h
  static std::map<ExpVec, std::map<int, Int>> specialize_q1(const TorusElem& f);

 private:
  CompatiblePair pair_;
  MutationData md_;
  SkewFormPtr db_;
  SkewFormPtr lambda_;
  std::vector<std::vector<ZEntry>> formal_z_;
  ClassicalSeedState classical0_;

  TorusElem sep_to_lambda(const Vec& g, const TorusElem& f_db) const;
  TorusElem cluster_monomial(const Vec& beta, const std::vector<Vec>& g,
                             const std::vector<TorusElem>& f, const Mat& lam_t) const;
};

/// Principal-coefficient quantum lift of a classical seed: Btilde = [B; I],
/// Lambda = [[0, -D], [D, -DB]] with D = D0 R.
CompatiblePair principal_lift(const Mat& B, const std::vector<int>& r);

}  // namespace qclus
