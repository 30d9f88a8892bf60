#pragma once

#include "qclus/seedio.hpp"

namespace qclus {

/// Bundled example seeds: "g2" (rank-2 quantum seed of type G2 with symbolic
/// h) and "rank2" (classical r=(2,1) seed with one formal z).
SeedFile example_seed(const std::string& name);

}  // namespace qclus
