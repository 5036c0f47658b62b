#pragma once

// Seeded random toupie presentations for property suites.

#include "toupie/presentation.hpp"

#include <cstdint>
#include <random>

namespace toupie {

struct RandomOptions {
  std::size_t max_branches = 5;
  std::size_t max_length = 4;
  int max_coeff = 3;  // nonzero integers in [-max_coeff, max_coeff]
};

/// A presentation that builds as a ToupieAlgebra. Branches are free,
/// carry monomial relations, or take part in combinations of full branches.
Presentation random_presentation(std::mt19937_64& rng, const RandomOptions& options = {});

/// Deterministic suite: the i-th presentation is drawn from seed + i.
std::vector<Presentation> random_suite(std::uint64_t seed, std::size_t count,
                                       const RandomOptions& options = {});

}  // namespace toupie
