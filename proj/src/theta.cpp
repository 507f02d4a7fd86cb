#include "boxball/theta.hpp"

#include <boost/multiprecision/integer.hpp>

#include <random>

namespace boxball {

namespace {

Rational dot(const IntVec& a, const RatVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational quad(const IntVec& n, const RatMat& Xi, const RatVec& Z) {
  RatVec half(n.size(), 0);
  for (std::size_t i = 0; i < n.size(); ++i) {
    for (std::size_t j = 0; j < n.size(); ++j) half[i] += Xi[i][j] * n[j];
    half[i] = half[i] / 2 + Z[i];
  }
  return dot(n, half);
}

long to_long(const BigInt& v) {
  if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min())
    throw DomainError("theta search exceeds machine integers");
  return static_cast<long>(v);
}

BigInt ceil_sqrt(const Rational& q) {
  BigInt c = -floor_div(-q);
  BigInt r = boost::multiprecision::sqrt(c);
  if (r * r < c) r += 1;
  return r;
}

}  // namespace

ThetaResult theta_min(const RatVec& Z, const RatMat& Xi, long extra_radius) {
  const std::size_t g = Z.size();
  if (Xi.size() != g) throw DomainError("period matrix and vector sizes differ");
  if (!is_symmetric(Xi) || !is_positive_definite(Xi)) throw DomainError("period matrix must be symmetric positive definite");
  if (g == 0) return {0, {}};
  RatMat inv = inverse(Xi);
  // Shift Z into the fundamental domain around the origin.
  RatVec c = mul(inv, Z);
  IntVec m(g);
  for (std::size_t i = 0; i < g; ++i) m[i] = to_long(round_nearest(-c[i]));
  RatVec Zr = Z;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) Zr[i] += Xi[i][j] * m[j];
  Rational offset = quad(m, Xi, Z);
  // Minimizers satisfy f(n) <= 0, i.e. (n - c)Xi(n - c) <= c Xi c with
  // c = -Xi^{-1} Zr, so |n_i - c_i|^2 <= (Xi^{-1})_ii * r^2.
  RatVec center = mul(inv, Zr);
  Rational r2 = 0;
  for (std::size_t i = 0; i < g; ++i) {
    center[i] = -center[i];
    r2 -= center[i] * Zr[i];
  }
  IntVec lo(g), hi(g);
  for (std::size_t i = 0; i < g; ++i) {
    long s = to_long(ceil_sqrt(inv[i][i] * r2)) + extra_radius;
    lo[i] = to_long(floor_div(center[i])) - s;
    hi[i] = to_long(-floor_div(-center[i])) + s;
  }
  // Integer scan of 2D f(n) = n A n + 2 n z with A = D Xi, z = D Zr.
  BigInt D = 1;
  for (std::size_t i = 0; i < g; ++i) {
    D = boost::multiprecision::lcm(D, denominator(Zr[i]));
    for (std::size_t j = 0; j < g; ++j) D = boost::multiprecision::lcm(D, denominator(Xi[i][j]));
  }
  std::vector<std::vector<__int128>> A(g, std::vector<__int128>(g));
  std::vector<__int128> z(g);
  for (std::size_t i = 0; i < g; ++i) {
    z[i] = to_long(numerator(Zr[i] * Rational(D)));
    for (std::size_t j = 0; j < g; ++j) A[i][j] = to_long(numerator(Xi[i][j] * Rational(D)));
  }
  IntVec n = lo, best(g, 0);
  __int128 best_val = 0;
  bool have = false;
  for (;;) {
    __int128 v = 0;
    for (std::size_t i = 0; i < g; ++i) {
      __int128 row = 2 * z[i];
      for (std::size_t j = 0; j < g; ++j) row += A[i][j] * n[j];
      v += row * n[i];
    }
    if (!have || v < best_val) {
      best_val = v;
      best = n;
      have = true;
    }
    std::size_t k = 0;
    while (k < g && n[k] == hi[k]) {
      n[k] = lo[k];
      ++k;
    }
    if (k == g) break;
    ++n[k];
  }
  ThetaResult res;
  res.value = quad(best, Xi, Zr) + offset;
  res.minimizer = best;
  for (std::size_t i = 0; i < g; ++i) res.minimizer[i] += m[i];
  return res;
}

Rational theta(const RatVec& Z, const RatMat& Xi) { return theta_min(Z, Xi).value; }

Rational theta(const RatVec& Z, const IntMat& Xi) { return theta(Z, to_rational(Xi)); }

bool check_quasi_periodicity(const RatMat& Xi, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> zdist(-60, 60), den(1, 6), mdist(-3, 3);
  const std::size_t g = Xi.size();
  for (int t = 0; t < trials; ++t) {
    RatVec Z(g);
    IntVec m(g);
    for (std::size_t i = 0; i < g; ++i) {
      Z[i] = Rational(zdist(rng), den(rng));
      m[i] = mdist(rng);
    }
    RatVec shifted = Z;
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) shifted[i] += Xi[i][j] * m[j];
    if (theta(shifted, Xi) != -quad(m, Xi, Z) + theta(Z, Xi)) return false;
  }
  return true;
}

}  // namespace boxball
