#include "boxball/troptoda.hpp"

#include "boxball/theta.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace boxball {

TodaState TodaState::from_interleaved(const RatVec& v) {
  if (v.size() < 2 || v.size() % 2) throw DomainError("Toda state needs an even number of entries");
  TodaState s;
  for (std::size_t k = 0; k < v.size(); k += 2) {
    s.Q.push_back(v[k]);
    s.W.push_back(v[k + 1]);
  }
  return s;
}

TodaState TodaState::from_interleaved(const IntVec& v) { return from_interleaved(to_rational(v)); }

RatVec TodaState::interleaved() const {
  RatVec v;
  for (std::size_t j = 0; j < N(); ++j) {
    v.push_back(Q[j]);
    v.push_back(W[j]);
  }
  return v;
}

std::string TodaState::str() const {
  std::string s = "(";
  RatVec v = interleaved();
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + to_string(v[k]);
  return s + ")";
}

TodaState evolve_toda(const TodaState& s) {
  const std::size_t N = s.N();
  if (N == 0 || s.W.size() != N) throw DomainError("malformed Toda state");
  Rational sq = std::accumulate(s.Q.begin(), s.Q.end(), Rational(0));
  Rational sw = std::accumulate(s.W.begin(), s.W.end(), Rational(0));
  if (!(sq < sw)) throw DomainError("phase-space condition sum Q < sum W fails");
  auto at = [N](const RatVec& v, long j) { return v[cyc(j, N)]; };
  TodaState out;
  out.Q.resize(N);
  out.W.resize(N);
  for (std::size_t j = 1; j <= N; ++j) {
    Rational X = 0, partial = 0;
    for (std::size_t k = 1; k < N; ++k) {
      long idx = static_cast<long>(j) - static_cast<long>(k);
      partial += at(s.W, idx) - at(s.Q, idx);
      X = std::min(X, partial);
    }
    out.Q[j - 1] = std::min(s.W[j - 1], Rational(s.Q[j - 1] - X));
  }
  for (std::size_t j = 1; j <= N; ++j) out.W[j - 1] = at(s.Q, static_cast<long>(j) + 1) + s.W[j - 1] - out.Q[j - 1];
  return out;
}

namespace {

// Minimum weight of a k-element independent set on the path a[from..to).
std::optional<Rational> path_min(const RatVec& a, std::size_t from, std::size_t to, std::size_t k) {
  // best[c][used]: minimum with c chosen, used = last element chosen.
  std::vector<std::optional<Rational>> take(k + 1), skip(k + 1);
  skip[0] = Rational(0);
  auto relax = [](std::optional<Rational>& dst, const std::optional<Rational>& v) {
    if (v && (!dst || *v < *dst)) dst = v;
  };
  for (std::size_t i = from; i < to; ++i) {
    std::vector<std::optional<Rational>> ntake(k + 1), nskip(k + 1);
    for (std::size_t c = 0; c <= k; ++c) {
      relax(nskip[c], skip[c]);
      relax(nskip[c], take[c]);
      if (c + 1 <= k && skip[c]) relax(ntake[c + 1], *skip[c] + a[i]);
    }
    take.swap(ntake);
    skip.swap(nskip);
  }
  std::optional<Rational> r = skip[k];
  relax(r, take[k]);
  return r;
}

}  // namespace

Rational conserved(const TodaState& s, std::size_t k) {
  const std::size_t N = s.N();
  if (k < 1 || k > N + 1) throw DomainError("conserved quantity index out of range");
  RatVec a = s.interleaved();
  if (k == N + 1) return std::accumulate(a.begin(), a.end(), Rational(0));
  const std::size_t m = a.size();
  // The cycle a_0, ..., a_{m-1}: either a_0 is unused, or it is used and its
  // two neighbours are not.
  std::optional<Rational> best = path_min(a, 1, m, k);
  if (k == 1) {
    best = std::min(*best, a[0]);
  } else if (auto with0 = path_min(a, 2, m - 1, k - 1)) {
    Rational v = *with0 + a[0];
    if (!best || v < *best) best = v;
  }
  if (!best) throw DomainError("no independent set of the requested size");
  return *best;
}

RatVec conserved_all(const TodaState& s) {
  RatVec c;
  for (std::size_t k = 1; k <= s.N() + 1; ++k) c.push_back(conserved(s, k));
  return c;
}

SpectralData spectral_data(const RatVec& C) {
  if (C.size() < 2) throw DomainError("need at least two conserved values");
  const std::size_t N = C.size() - 1;
  SpectralData sd;
  sd.C = C;
  sd.L = C[N] - 2 * static_cast<long>(N - 1) * C[0];
  sd.lambda.assign(N, 0);
  for (std::size_t k = 1; k < N; ++k) sd.lambda[k] = C[k] - C[k - 1];
  sd.eta.assign(N, sd.L);
  for (std::size_t k = 1; k < N; ++k)
    for (std::size_t j = 1; j < N; ++j) sd.eta[k] -= 2 * std::min(sd.lambda[k], sd.lambda[j]);
  const std::size_t g = N - 1;
  sd.Omega.assign(g, RatVec(g, 0));
  for (std::size_t i = 1; i <= g; ++i) {
    sd.Omega[i - 1][i - 1] = sd.eta[i - 1] + sd.eta[i] + 2 * (sd.lambda[i] - sd.lambda[i - 1]);
    if (i < g) {
      sd.Omega[i - 1][i] = -sd.eta[i];
      sd.Omega[i][i - 1] = -sd.eta[i];
    }
  }
  sd.smooth = true;
  for (std::size_t k = 1; k < N; ++k) {
    if (k >= 2 && !(sd.lambda[k - 1] < sd.lambda[k])) sd.smooth = false;
    if (!(sd.eta[k] > 0)) sd.smooth = false;
  }
  return sd;
}

namespace {

Rational tau_theta(const RatVec& Z0, const SpectralData& sd, long t, long n) {
  const std::size_t g = sd.genus();
  RatVec z = Z0;
  for (std::size_t i = 0; i < g; ++i) z[i] += (sd.lambda[i + 1] - sd.lambda[i]) * t;
  z[0] -= sd.L * n;
  return theta(z, sd.Omega);
}

}  // namespace

std::pair<Rational, Rational> theta_solution(const RatVec& Z0, const SpectralData& sd, long t, long n) {
  if (!sd.smooth) throw DomainError("spectral curve is not smooth");
  if (Z0.size() != sd.genus()) throw DomainError("Z0 has the wrong dimension");
  auto T = [&](long tt, long nn) { return tau_theta(Z0, sd, tt, nn); };
  const Rational& C1 = sd.C[0];
  Rational Q = T(t, n - 1) + T(t + 1, n) - T(t + 1, n - 1) - T(t, n) + C1;
  Rational W = T(t + 1, n - 1) + T(t, n + 1) - T(t, n) - T(t + 1, n) + sd.L + C1;
  return {Q, W};
}

TodaState theta_trajectory_state(const RatVec& Z0, const SpectralData& sd, long t) {
  TodaState s;
  for (long n = 1; n <= static_cast<long>(sd.C.size()) - 1; ++n) {
    auto [q, w] = theta_solution(Z0, sd, t, n);
    s.Q.push_back(q);
    s.W.push_back(w);
  }
  return s;
}

TodaState shift_s(const TodaState& s) {
  TodaState out = s;
  std::rotate(out.Q.begin(), out.Q.begin() + 1, out.Q.end());
  std::rotate(out.W.begin(), out.W.begin() + 1, out.W.end());
  return out;
}

RatVec toda_levels(const ActionVariable& action) {
  RatVec C = {0};
  long acc = 0;
  for (std::size_t k = 0; k < action.g(); ++k) {
    for (long l = 1; l <= action.mult[k]; ++l) C.push_back(acc + action.parts[k] * l);
    acc += action.parts[k] * action.mult[k];
  }
  C.push_back(action.L);
  return C;
}

TodaState embed_pbbs(const PeriodicState& p, long leftmost) {
  const ActionVariable action = action_variable(p);
  long N = 1;
  for (long m : action.mult) N += m;
  PeriodicState r = p.shifted(-leftmost);
  std::vector<std::pair<int, long>> runs;
  for (int b : r.word) {
    if (runs.empty() || runs.back().first != b) runs.push_back({b, 0});
    ++runs.back().second;
  }
  IntVec Q, W;
  if (r.word.front() == 1) Q.push_back(0);
  for (auto [b, len] : runs) (b == 2 ? Q : W).push_back(len);
  if (static_cast<long>(Q.size()) > N || static_cast<long>(W.size()) > N)
    throw DomainError("state has more runs than the Toda lattice size");
  Q.resize(static_cast<std::size_t>(N), 0);
  W.resize(static_cast<std::size_t>(N), 0);
  TodaState s;
  s.Q = to_rational(Q);
  s.W = to_rational(W);
  return s;
}

IntMat omega_prime(const SpectralData& sd) {
  const std::size_t g = sd.genus();
  RatMat U(g, RatVec(g, 0));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j <= i; ++j) U[i][j] = 1;
  RatMat op = mul(mul(U, sd.Omega), transpose(U));
  IntMat out(g, IntVec(g));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      if (denominator(op[i][j]) != 1) throw DomainError("period matrix is not integral");
      out[i][j] = static_cast<long>(numerator(op[i][j]));
    }
  return out;
}

bool omega_matches_F(const SpectralData& sd, const IntMat& F) {
  IntMat op = omega_prime(sd);
  if (denominator(sd.L) != 1) return false;
  const long L = static_cast<long>(numerator(sd.L));
  // U (L e_1) = (L, ..., L)
  for (auto& row : op) row.push_back(L);
  return same_lattice(op, F);
}

}  // namespace boxball
