#include "boxball/birational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace boxball {

namespace {

void check_point(const RationalPoint& x) {
  if (x.empty()) throw DomainError("empty point");
  for (const auto& c : x)
    if (c <= 0) throw DomainError("coordinates must be positive");
}

const Rational& at(const RationalPoint& v, long i) { return v[cyc(i, v.size())]; }

// P_i(x,y) = Σ_k Π_{j=k}^{n+1} x_{i+j} Π_{j=1}^{k} y_{i+j}
Rational P(const RationalPoint& x, const RationalPoint& y, long i) {
  const long m = static_cast<long>(x.size());
  Rational sum = 0;
  for (long k = 1; k <= m; ++k) {
    Rational term = 1;
    for (long j = k; j <= m; ++j) term *= at(x, i + j);
    for (long j = 1; j <= k; ++j) term *= at(y, i + j);
    sum += term;
  }
  return sum;
}

Rational power_of_two(long e) {
  if (e >= 0) return Rational(BigInt(1) << static_cast<unsigned>(e));
  return Rational(BigInt(1), BigInt(1) << static_cast<unsigned>(-e));
}

long msb(const BigInt& v) { return static_cast<long>(boost::multiprecision::msb(v)); }

// The unique e with v / 2^{k e} in [1/c, c].
long leading_exponent(const Rational& v, unsigned k, long c) {
  long approx = msb(numerator(v)) - msb(denominator(v));
  long base = approx >= 0 ? approx / static_cast<long>(k) : -((-approx) / static_cast<long>(k));
  long found = 0;
  int hits = 0;
  for (long e = base - 2; e <= base + 2; ++e) {
    Rational scaled = v / power_of_two(e * static_cast<long>(k));
    if (scaled * c >= 1 && scaled <= c) {
      found = e;
      ++hits;
    }
  }
  if (hits != 1) throw DomainError("ambiguous leading order; retry with a larger base");
  return found;
}

}  // namespace

std::pair<RationalPoint, RationalPoint> birational_R(const RationalPoint& x, const RationalPoint& y) {
  check_point(x);
  check_point(y);
  if (x.size() != y.size()) throw DomainError("rank mismatch");
  const long m = static_cast<long>(x.size());
  std::vector<Rational> Ps(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) Ps[static_cast<std::size_t>(i)] = P(x, y, i);
  auto Pc = [&](long i) -> const Rational& { return Ps[static_cast<std::size_t>(((i % m) + m) % m)]; };
  RationalPoint xt(static_cast<std::size_t>(m)), yt(static_cast<std::size_t>(m));
  for (long i = 1; i <= m; ++i) {
    xt[static_cast<std::size_t>(i - 1)] = at(x, i) * Pc(i - 1) / Pc(i);
    yt[static_cast<std::size_t>(i - 1)] = at(y, i) * Pc(i) / Pc(i - 1);
  }
  return {yt, xt};
}

bool check_toda_relations(const RationalPoint& x, const RationalPoint& y, const RationalPoint& yt,
                          const RationalPoint& xt) {
  const std::size_t m = x.size();
  if (y.size() != m || yt.size() != m || xt.size() != m) return false;
  Rational px = 1, py = 1;
  for (long i = 1; i <= static_cast<long>(m); ++i) {
    if (at(x, i) * at(y, i) != at(yt, i) * at(xt, i)) return false;
    if (1 / at(x, i) + 1 / at(y, i + 1) != 1 / at(yt, i) + 1 / at(xt, i + 1)) return false;
    px *= at(x, i) / at(xt, i);
    py *= at(y, i) / at(yt, i);
  }
  return px == 1 && py == 1;
}

std::pair<std::vector<long>, std::vector<long>> ultradiscretize_R(const std::vector<long>& X,
                                                                   const std::vector<long>& Y,
                                                                   unsigned log2_base) {
  if (X.size() != Y.size() || X.empty()) throw DomainError("rank mismatch");
  RationalPoint x, y;
  for (long e : X) x.push_back(power_of_two(e * static_cast<long>(log2_base)));
  for (long e : Y) y.push_back(power_of_two(e * static_cast<long>(log2_base)));
  auto [yt, xt] = birational_R(x, y);
  // Each P_i has at most n+1 unit monomials, so ratios of P's carry a
  // coefficient in [1/(n+1), n+1].
  long c = static_cast<long>(X.size());
  std::vector<long> Yt, Xt;
  for (const auto& v : yt) Yt.push_back(leading_exponent(v, log2_base, c));
  for (const auto& v : xt) Xt.push_back(leading_exponent(v, log2_base, c));
  return {Yt, Xt};
}

}  // namespace boxball
