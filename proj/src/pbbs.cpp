#include "boxball/pbbs.hpp"

#include "boxball/kkr.hpp"
#include "boxball/theta.hpp"

#include <boost/integer/common_factor.hpp>

#include <algorithm>
#include <numeric>

namespace boxball {

PeriodicState PeriodicState::parse(std::string_view text) {
  PeriodicState p;
  for (char c : text) {
    if (c == '.' || c == '1') p.word.push_back(1);
    else if (c == '2') p.word.push_back(2);
    else throw DomainError(std::string("bad periodic cell '") + c + "'");
  }
  if (p.word.empty()) throw DomainError("empty periodic state");
  return p;
}

long PeriodicState::M() const { return std::count(word.begin(), word.end(), 2); }

std::string PeriodicState::str() const {
  std::string s;
  for (int b : word) s += b == 1 ? '.' : '2';
  return s;
}

PeriodicState PeriodicState::shifted(long d) const {
  PeriodicState out;
  const long n = L();
  out.word.resize(word.size());
  for (long k = 0; k < n; ++k) out.word[static_cast<std::size_t>(((k + d) % n + n) % n)] = word[static_cast<std::size_t>(k)];
  return out;
}

PeriodicEvolved evolve_periodic(const PeriodicState& p, int l) {
  const long M = p.M();
  if (2 * M > p.L()) throw DomainError("more balls than half the system size");
  int cap = l == kInfinity ? static_cast<int>(std::max<long>(M, 1)) : l;
  if (cap < 1) throw DomainError("carrier capacity must be positive");
  std::vector<int> v = {cap, 0};
  for (int b : p.word) carrier_step(v, b);
  const std::vector<int> fixed = v;
  PeriodicEvolved out;
  for (int b : p.word) {
    auto [left, winding] = carrier_step(v, b);
    out.state.word.push_back(left);
    if (!winding) ++out.energy;
  }
  if (v != fixed) throw DomainError("carrier has no fixed point for this state");
  return out;
}

ActionVariable ActionVariable::from_partition(std::vector<long> mu, long L) {
  ActionVariable a;
  a.L = L;
  std::erase_if(mu, [](long x) { return x == 0; });
  for (long x : mu)
    if (x < 0) throw DomainError("negative part");
  std::sort(mu.rbegin(), mu.rend());
  a.mu = mu;
  long total = std::accumulate(mu.begin(), mu.end(), 0L);
  if (2 * total > L) throw DomainError("more balls than half the system size");
  for (auto it = mu.rbegin(); it != mu.rend(); ++it) {
    if (a.parts.empty() || a.parts.back() != *it) {
      a.parts.push_back(*it);
      a.mult.push_back(1);
    } else {
      ++a.mult.back();
    }
  }
  return a;
}

long ActionVariable::vacancy(long j) const {
  long s = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) s += std::min(j, parts[k]) * mult[k];
  return L - 2 * s;
}

IntVec ActionVariable::vacancies() const {
  IntVec p;
  for (long i : parts) p.push_back(vacancy(i));
  return p;
}

IntMat ActionVariable::F() const {
  const std::size_t n = g();
  IntMat f(n, IntVec(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      f[a][b] = (a == b ? vacancy(parts[a]) : 0) + 2 * std::min(parts[a], parts[b]) * mult[b];
  return f;
}

IntVec ActionVariable::h(int l) const {
  IntVec v;
  for (long i : parts) v.push_back(l == kInfinity ? i : std::min<long>(i, l));
  return v;
}

long highest_offset(const PeriodicState& p) {
  for (long d = 0; d < p.L(); ++d)
    if (is_highest(p.shifted(-d).word, 1)) return d;
  throw DomainError("no cyclic rotation is highest");
}

ActionVariable action_variable(const PeriodicState& p) {
  long d = highest_offset(p);
  RiggedConfiguration rc = kkr_phi(p.shifted(-d).word, 1);
  return ActionVariable::from_partition(rc.partition(1), p.L());
}

long AngleVariable::at(std::size_t k, long alpha) const {
  const long m = action.mult[k];
  const long p = action.vacancy(action.parts[k]);
  long q = (alpha - 1) / m;
  long r = (alpha - 1) % m;
  if (r < 0) {
    r += m;
    q -= 1;
  }
  return J[k][static_cast<std::size_t>(r)] + q * p;
}

AngleVariable direct_scattering(const PeriodicState& p) {
  long d = highest_offset(p);
  RiggedConfiguration rc = kkr_phi(p.shifted(-d).word, 1);
  AngleVariable J;
  J.action = ActionVariable::from_partition(rc.partition(1), p.L());
  J.J.assign(J.action.g(), {});
  for (const auto& s : rc.color(1)) {
    auto k = static_cast<std::size_t>(std::find(J.action.parts.begin(), J.action.parts.end(), s.length) - J.action.parts.begin());
    J.J[k].push_back(s.rigging + d);
  }
  for (auto& w : J.J) std::sort(w.begin(), w.end());
  return J;
}

namespace {

// Window of (prod_k sigma_{i_k}^{a_k})(J) for part k.
IntVec slid_window(const AngleVariable& J, std::size_t k, const IntVec& a) {
  long shift = 0;
  for (std::size_t j = 0; j < a.size(); ++j) shift += 2 * a[j] * std::min(J.action.parts[k], J.action.parts[j]);
  IntVec w;
  for (long alpha = 1; alpha <= J.action.mult[k]; ++alpha) w.push_back(J.at(k, alpha + a[k]) + shift);
  return w;
}

}  // namespace

AngleVariable slide(const AngleVariable& J, std::size_t k, long power) {
  IntVec a(J.action.g(), 0);
  a.at(k) = power;
  AngleVariable out = J;
  for (std::size_t i = 0; i < J.action.g(); ++i) out.J[i] = slid_window(J, i, a);
  return out;
}

AngleVariable evolve_angle(const AngleVariable& J, int l, long steps) {
  AngleVariable out = J;
  IntVec h = J.action.h(l);
  for (std::size_t k = 0; k < out.J.size(); ++k)
    for (long& x : out.J[k]) x += steps * h[k];
  return out;
}

PeriodicState inverse_scattering(const AngleVariable& J) {
  const ActionVariable& act = J.action;
  const std::size_t g = act.g();
  const long L = act.L;
  if (g == 0) return PeriodicState{std::vector<int>(static_cast<std::size_t>(L), 1)};
  const IntVec p = act.vacancies();
  // F' a approximates the window offsets: (F' a)_i = a_i p_i / m_i + 2 sum_k a_k min(i,k).
  RatMat Fp(g, RatVec(g, 0));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t k = 0; k < g; ++k)
      Fp[i][k] = (i == k ? Rational(p[i], act.mult[i]) : Rational(0)) + 2 * std::min(act.parts[i], act.parts[k]);
  RatMat inv = inverse(Fp);
  // Valid a satisfy (F' a)_i in e - J_{i,1} + [-p_i, p_i + p_i / m_i].
  IntVec radius(g);
  for (std::size_t k = 0; k < g; ++k) {
    Rational r = 0;
    for (std::size_t j = 0; j < g; ++j) r += abs(inv[k][j]) * (Rational(p[j]) + Rational(p[j], 2 * act.mult[j]));
    radius[k] = static_cast<long>(floor_div(r)) + 1;
  }
  for (long e = 0; e < L; ++e) {
    RatVec target(g);
    for (std::size_t i = 0; i < g; ++i) target[i] = Rational(e - J.J[i][0]) + Rational(p[i], 2 * act.mult[i]);
    RatVec center = mul(inv, target);
    IntVec lo(g), hi(g);
    for (std::size_t k = 0; k < g; ++k) {
      lo[k] = static_cast<long>(floor_div(center[k])) - radius[k];
      hi[k] = static_cast<long>(floor_div(center[k])) + radius[k] + 1;
    }
    IntVec a = lo;
    for (;;) {
      bool ok = true;
      RiggedConfiguration rc(L, 1);
      for (std::size_t i = 0; i < g && ok; ++i) {
        IntVec w = slid_window(J, i, a);
        for (long x : w) {
          long r = x - e;
          if (r < 0 || r > p[i]) {
            ok = false;
            break;
          }
          rc.color(1).push_back({act.parts[i], r});
        }
      }
      if (ok) return PeriodicState{kkr_phi_inv(rc)}.shifted(e);
      std::size_t k = 0;
      while (k < g && a[k] == hi[k]) {
        a[k] = lo[k];
        ++k;
      }
      if (k == g) break;
      ++a[k];
    }
  }
  throw DomainError("no slide brings the angle variable to a rigged configuration");
}

AngleVariable canonicalize(const AngleVariable& J) {
  return direct_scattering(inverse_scattering(J));
}

PeriodicState theta_state(const IntVec& J, const ActionVariable& action) {
  for (long m : action.mult)
    if (m != 1) throw DomainError("theta formula needs all multiplicities equal to 1");
  const std::size_t g = action.g();
  if (J.size() != g) throw DomainError("angle vector has the wrong dimension");
  RatMat F = to_rational(action.F());
  IntVec p = action.vacancies(), h1 = action.h(1), hinf = action.h(kInfinity);
  auto Z = [&](long k, bool with_inf) {
    RatVec z(g);
    for (std::size_t i = 0; i < g; ++i)
      z[i] = Rational(J[i]) - Rational(p[i], 2) - k * h1[i] + (with_inf ? hinf[i] : 0);
    return z;
  };
  PeriodicState out;
  for (long k = 1; k <= action.L; ++k) {
    Rational b = 1 - theta(Z(k, false), F) + theta(Z(k - 1, false), F) + theta(Z(k, true), F) -
                 theta(Z(k - 1, true), F);
    if (b != 1 && b != 2) throw DomainError("theta formula produced a non-letter");
    out.word.push_back(b == 1 ? 1 : 2);
  }
  return out;
}

IntVec internal_symmetry(const AngleVariable& J) {
  IntVec gamma;
  for (std::size_t k = 0; k < J.action.g(); ++k) {
    const long m = J.action.mult[k];
    const long p = J.action.vacancy(J.action.parts[k]);
    const long G = std::gcd(m, p);
    long best = 1;
    for (long c = G; c >= 1; --c) {
      if (G % c) continue;
      bool ok = true;
      for (long alpha = 1; alpha <= m && ok; ++alpha) ok = J.at(k, alpha + m / c) == J.at(k, alpha) + p / c;
      if (ok) {
        best = c;
        break;
      }
    }
    gamma.push_back(best);
  }
  return gamma;
}

IntVec internal_symmetry(const PeriodicState& p) { return internal_symmetry(direct_scattering(p)); }

long fundamental_period(const ActionVariable& action, const IntVec& gamma, int l) {
  if (action.g() == 0) return 1;
  IntMat F = action.F();
  BigInt detF = det(F);
  if (detF == 0) throw DomainError("singular F matrix");
  IntVec h = action.h(l);
  BigInt n = 1;
  for (std::size_t i = 0; i < action.g(); ++i) {
    BigInt Di = det(replace_column(F, i, h));
    if (Di == 0) continue;
    Rational r(detF, gamma[i] * Di);
    n = boost::multiprecision::lcm(n, abs(numerator(r)));
  }
  return static_cast<long>(n);
}

long fundamental_period(const PeriodicState& p, int l) {
  AngleVariable J = direct_scattering(p);
  return fundamental_period(J.action, internal_symmetry(J), l);
}

namespace {

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

int mobius(long k) {
  int sign = 1;
  for (long q = 2; q * q <= k; ++q) {
    if (k % q) continue;
    k /= q;
    if (k % q == 0) return 0;
    sign = -sign;
  }
  if (k > 1) sign = -sign;
  return sign;
}

}  // namespace

Rational cardinality_bethe(const ActionVariable& action) {
  Rational c(det(action.F()));
  for (std::size_t k = 0; k < action.g(); ++k) {
    long m = action.mult[k], p = action.vacancy(action.parts[k]);
    c *= Rational(binomial(p + m - 1, m - 1), m);
  }
  return c;
}

Rational cardinality_combinatorial(const ActionVariable& action) {
  const std::size_t g = action.g();
  if (g == 0) return 1;
  Rational c = 1;
  for (std::size_t k = 0; k + 1 < g; ++k) {
    long m = action.mult[k], p = action.vacancy(action.parts[k]);
    c *= Rational(binomial(p + m - 1, m));
  }
  long m = action.mult[g - 1], p = action.vacancy(action.parts[g - 1]);
  // At p = 0 the factor (L/p) C(p+m-1, m) takes its limiting value (L/m) C(p+m-1, m-1).
  if (p == 0) c *= Rational(action.L, m) * Rational(binomial(p + m - 1, m - 1));
  else c *= Rational(action.L, p) * Rational(binomial(p + m - 1, m));
  return c;
}

BigInt isolevel_cardinality(const ActionVariable& action) {
  Rational a = cardinality_bethe(action), b = cardinality_combinatorial(action);
  if (a != b || denominator(a) != 1) throw DomainError("cardinality formulas disagree");
  return numerator(a);
}

BigInt mobius_count(long gamma, long m, long p) {
  const long G = std::gcd(m, p);
  if (gamma < 1 || G % gamma) throw DomainError("gamma must divide gcd(m, p)");
  BigInt c = 0;
  for (long beta = gamma; beta <= G; beta += gamma)
    if (G % beta == 0) c += mobius(beta / gamma) * binomial((p + m) / beta - 1, m / beta - 1);
  return c;
}

std::vector<TorusComponent> torus_decomposition(const ActionVariable& action) {
  const std::size_t g = action.g();
  std::vector<IntVec> divisors(g);
  for (std::size_t k = 0; k < g; ++k) {
    long G = std::gcd(action.mult[k], action.vacancy(action.parts[k]));
    for (long d = 1; d <= G; ++d)
      if (G % d == 0) divisors[k].push_back(d);
  }
  RatMat F = to_rational(action.F());
  std::vector<TorusComponent> out;
  std::vector<std::size_t> idx(g, 0);
  for (;;) {
    TorusComponent c;
    Rational mult = 1;
    for (std::size_t k = 0; k < g; ++k) {
      long gam = divisors[k][idx[k]];
      c.gamma.push_back(gam);
      mult *= Rational(gam * mobius_count(gam, action.mult[k], action.vacancy(action.parts[k])), action.mult[k]);
    }
    if (denominator(mult) != 1) throw DomainError("non-integral torus multiplicity");
    c.multiplicity = numerator(mult);
    c.F_gamma = F;
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) c.F_gamma[i][j] /= c.gamma[j];
    c.det_F_gamma = det(c.F_gamma);
    out.push_back(c);
    std::size_t k = 0;
    while (k < g && idx[k] + 1 == divisors[k].size()) {
      idx[k] = 0;
      ++k;
    }
    if (k == g) break;
    ++idx[k];
  }
  return out;
}

std::vector<PeriodicState> enumerate_isolevel(const ActionVariable& action) {
  if (action.L > 20) throw DomainError("enumeration is limited to L <= 20");
  long M = std::accumulate(action.mu.begin(), action.mu.end(), 0L);
  std::vector<int> word(static_cast<std::size_t>(action.L), 1);
  std::fill(word.end() - M, word.end(), 2);
  std::vector<PeriodicState> out;
  do {
    PeriodicState p{word};
    if (action_variable(p).mu == action.mu) out.push_back(p);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

}  // namespace boxball
