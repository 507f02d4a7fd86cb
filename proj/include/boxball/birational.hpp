#pragma once

#include "boxball/common.hpp"

#include <utility>
#include <vector>

namespace boxball {

// Point (x_1,...,x_{n+1}) with strictly positive rational coordinates.
using RationalPoint = std::vector<Rational>;

// R(x ⊗ y) = ỹ ⊗ x̃, returned as {ỹ, x̃}.
std::pair<RationalPoint, RationalPoint> birational_R(const RationalPoint& x, const RationalPoint& y);

// x_i y_i = ỹ_i x̃_i, 1/x_i + 1/y_{i+1} = 1/ỹ_i + 1/x̃_{i+1}, Π x/x̃ = Π y/ỹ = 1.
bool check_toda_relations(const RationalPoint& x, const RationalPoint& y, const RationalPoint& yt,
                          const RationalPoint& xt);

// Leading exponents of birational_R at x_i = b^{X_i}, y_i = b^{Y_i}, b = 2^log2_base.
// Returns {Ỹ, X̃}. Throws DomainError when the base is too small to separate orders.
std::pair<std::vector<long>, std::vector<long>> ultradiscretize_R(const std::vector<long>& X,
                                                                   const std::vector<long>& Y,
                                                                   unsigned log2_base);

}  // namespace boxball
