#pragma once

#include "boxball/linalg.hpp"

#include <cstdint>

namespace boxball {

struct ThetaResult {
  Rational value;
  IntVec minimizer;
};

// min over n in Z^g of n.(Xi n / 2 + Z). extra_radius widens the scanned box
// beyond the rigorous bound (used to confirm stability).
ThetaResult theta_min(const RatVec& Z, const RatMat& Xi, long extra_radius = 0);
Rational theta(const RatVec& Z, const RatMat& Xi);
Rational theta(const RatVec& Z, const IntMat& Xi);

// Randomized check of Theta(Z + Xi m) = -m.(Xi m / 2 + Z) + Theta(Z).
bool check_quasi_periodicity(const RatMat& Xi, int trials, std::uint64_t seed = 1);

}  // namespace boxball
