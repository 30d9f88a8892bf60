#pragma once

#include <vector>

#include "qclus/mpoly.hpp"
#include "qclus/patterns.hpp"

namespace qclus {

/// Classical seed with principal coefficients, evolved along mutations.
/// Cluster variables are exact Laurent polynomials in the initial cluster;
/// coefficients are tropical monomials kept as exponent vectors.
struct ClassicalSeedState {
  PolyRingPtr ring;
  Mat B0;
  std::vector<int> r;
  Mat B;                      // current exchange matrix
  std::vector<MPoly> x;       // current cluster in the initial variables
  std::vector<ExpVec> ytrop;  // current coefficients as exponent vectors
};

ClassicalSeedState initial_classical_seed(Mat B, std::vector<int> r,
                                          const std::vector<std::vector<ZEntry>>& z);

/// One x/y/B mutation step (Eq.-(4)(5)(6)-style), k 0-based. The rational
/// exchange is evaluated termwise so only one exact Laurent division happens;
/// failure of that division falsifies the Laurent phenomenon and throws.
ClassicalSeedState mutate_seed_classical(const ClassicalSeedState& s, int k, int eps = +1);

ClassicalSeedState run_classical_path(const ClassicalSeedState& s0, const std::vector<int>& path);

/// z_{i,s} as a polynomial (variable or integer constant)
MPoly z_entry_poly(const PolyRingPtr& ring, int i, int s);

/// F_{i;t} = x_{i;t}|_{x=1}, a polynomial in y and z. i is 0-based.
MPoly f_poly_direct(const ClassicalSeedState& at_t, int i);

/// substitute y_a -> y_a * x^{B0 a} into a (y,z)-polynomial
MPoly yhat_substituted(const MPoly& f, const Mat& B0);

/// x_{i;t} == x^{g_{i;t}} * F_{i;t}(yhat, z), exactly.
bool classical_separation_check(const ClassicalSeedState& at_t, int i, const Vec& g,
                                const MPoly& f);

/// The L-sequence of the path, as unreduced fractions in (yhat == y, z).
std::vector<MRat> gupta_L_sequence(const PathData& pd, const PolyRingPtr& ring);

/// exponents -(g_k, d_(j) c_j)_{D0R} of the product formula, j = 1..k
std::vector<long long> gupta_product_exponents(const PathData& pd);

/// F-polynomial of the variable made at the last step, via the ordered
/// product of L-powers; polynomiality of the result is asserted.
MPoly gupta_product(const PathData& pd, const PolyRingPtr& ring);

/// Same value through the explicit expansion with generalized multinomials,
/// truncated by the given total y-degree bound (every excluded tuple has
/// y-degree beyond the bound, so exceeding terms cannot occur in the result).
MPoly gupta_expansion(const PathData& pd, const PolyRingPtr& ring, long long deg_bound);

}  // namespace qclus
