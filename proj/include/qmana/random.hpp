#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qmana/state.hpp"

namespace qmana {

using Rng = std::mt19937_64;

// Independent stream seed from a master seed (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept;

ComplexVector random_unit_vector(Eigen::Index dim, Rng& rng);
// Haar unitary via QR of a complex Ginibre matrix.
ComplexMatrix random_unitary(Eigen::Index dim, Rng& rng);
// G G^dagger / tr with G of uniformly drawn rank, so pure and full-rank states both occur.
DensityState random_density(const std::vector<int>& dims, Rng& rng);
DensityState random_pure_state(const std::vector<int>& dims, Rng& rng);

}  // namespace qmana
