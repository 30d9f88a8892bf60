#pragma once

#include <random>

#include "qclus/seedio.hpp"

namespace qclus {

struct RandomSeedOptions {
  int n_min = 2;
  int n_max = 3;
  int r_max = 3;
  int b_max = 2;         // magnitude bound of the skew generator entries
  bool quantum = false;  // principal quantum lift with random h
  bool formal_z = false; // classical z as formal symbols instead of integers
  int h_coeff_max = 2;
};

/// Random skew-symmetrizable exchange matrix (never zero), built as V*S with
/// S skew-symmetric and V a small positive diagonal.
Mat random_exchange_matrix(std::mt19937_64& rng, int n, int b_max);

/// Random seed file honoring reciprocity; quantum seeds use the principal
/// lift and random h with h_{i,s}(1) > 0.
SeedFile random_seed(std::mt19937_64& rng, const RandomSeedOptions& opts);

/// Random path with no immediate repeats (a repeat is an involution).
std::vector<int> random_path(std::mt19937_64& rng, int n, int length);

}  // namespace qclus
