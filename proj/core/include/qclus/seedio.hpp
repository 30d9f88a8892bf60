#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qclus/gqca.hpp"
#include "qclus/seed.hpp"

namespace qclus {

using ojson = nlohmann::ordered_json;

/// On-disk seed description (UTF-8 JSON). Quantum seeds carry Lambda and h;
/// classical seeds carry z (Lambda and h optional).
struct SeedFile {
  std::string mode;  // "classical" or "quantum"
  int n = 0, m = 0;
  Mat Btilde;
  Mat Lambda;  // empty when absent
  std::vector<int> R;
  std::vector<std::vector<QCoeff>> h;  // empty when absent
  std::vector<std::vector<ZEntry>> z;  // empty when absent

  MutationData mutation_data() const;
  CompatiblePair pair() const;  // requires Lambda
  bool has_lambda() const { return !Lambda.empty(); }
  /// z lists, deriving them from h (values at q=1) when no z was given
  std::vector<std::vector<ZEntry>> z_entries() const;

  void validate() const;
};

SeedFile seed_from_json(const ojson& j);
ojson seed_to_json(const SeedFile& s);
SeedFile load_seed_file(const std::string& path);
void save_seed_file(const SeedFile& s, const std::string& path);

std::vector<int> parse_path(const std::string& csv, int n);

ojson matrix_to_json(const Mat& m);
Mat matrix_from_json(const ojson& j, const char* what);

/// per-vertex record dump for cmd_mutate
ojson path_dump(const SeedFile& seed, const PathData& pd);

/// canonical rendering of a quantum F-polynomial in Z-variables,
/// graded-lex ascending: "1 + q^(-1/2)*Z2"
std::string fpoly_quantum_str(const TorusElem& f);

}  // namespace qclus
