#pragma once

#include "boxball/common.hpp"

#include <vector>

namespace boxball {

using IntVec = std::vector<long>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

RatMat to_rational(const IntMat& a);
RatVec to_rational(const IntVec& v);

// Exact determinant by Bareiss fraction-free elimination.
BigInt det(const IntMat& a);
Rational det(const RatMat& a);

RatMat inverse(const RatMat& a);
RatVec mul(const RatMat& a, const RatVec& v);
RatMat mul(const RatMat& a, const RatMat& b);
RatMat transpose(const RatMat& a);
bool is_symmetric(const RatMat& a);
// Leading principal minors all positive.
bool is_positive_definite(const RatMat& a);

// Replace column i of a by b.
IntMat replace_column(const IntMat& a, std::size_t i, const IntVec& b);

// Lower-triangular column Hermite normal form of the lattice spanned by the
// columns of a (full rank assumed). Diagonal entries are positive and the
// entries left of each diagonal lie in [0, diagonal).
IntMat column_hnf(const IntMat& a);

// True when the columns of a and b span the same sublattice of Z^g.
bool same_lattice(const IntMat& a, const IntMat& b);

// One representative per coset of Z^g / (column span of a).
std::vector<IntVec> coset_representatives(const IntMat& a);

}  // namespace boxball
