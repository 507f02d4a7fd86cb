#pragma once

#include "boxball/linalg.hpp"
#include "boxball/pbbs.hpp"

#include <string>
#include <vector>

namespace boxball {

struct TodaState {
  RatVec Q;
  RatVec W;

  std::size_t N() const { return Q.size(); }
  // (Q_1, W_1, ..., Q_N, W_N)
  static TodaState from_interleaved(const RatVec& v);
  static TodaState from_interleaved(const IntVec& v);
  RatVec interleaved() const;
  std::string str() const;
  bool operator==(const TodaState&) const = default;
};

TodaState evolve_toda(const TodaState& s);
// H_k for 1 <= k <= N+1.
Rational conserved(const TodaState& s, std::size_t k);
RatVec conserved_all(const TodaState& s);

struct SpectralData {
  RatVec C;
  Rational L;
  RatVec lambda;  // lambda_0 .. lambda_{N-1}
  RatVec eta;     // eta_0 .. eta_{N-1}
  RatMat Omega;   // (N-1) x (N-1)
  bool smooth = false;
  std::size_t genus() const { return Omega.size(); }
};
SpectralData spectral_data(const RatVec& C);

// (Q_n^t, W_n^t) from the theta formula with Xi = Omega.
std::pair<Rational, Rational> theta_solution(const RatVec& Z0, const SpectralData& sd, long t, long n);
TodaState theta_trajectory_state(const RatVec& Z0, const SpectralData& sd, long t);

// s: (Q_1, W_1, Q_2, W_2, ...) -> (Q_2, W_2, ..., Q_1, W_1)
TodaState shift_s(const TodaState& s);

// Conserved values attached to the isolevel set P_L(mu).
RatVec toda_levels(const ActionVariable& action);
// eta of the state read from the box `leftmost` (0-based) onward.
TodaState embed_pbbs(const PeriodicState& p, long leftmost = 0);

// With U lower unitriangular of ones: the columns of U Omega U^T together
// with U (L e_1) span the same lattice as the columns of F.
bool omega_matches_F(const SpectralData& sd, const IntMat& F);
IntMat omega_prime(const SpectralData& sd);

}  // namespace boxball
