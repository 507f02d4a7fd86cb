#include "boxball/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace boxball {

RatMat to_rational(const IntMat& a) {
  RatMat r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (long v : a[i]) r[i].emplace_back(v);
  return r;
}

RatVec to_rational(const IntVec& v) {
  RatVec r;
  for (long x : v) r.emplace_back(x);
  return r;
}

BigInt det(const IntMat& a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Rational det(const RatMat& a) {
  std::size_t n = a.size();
  RatMat m = a;
  Rational d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      d = -d;
    }
    d *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return d;
}

RatMat inverse(const RatMat& a) {
  std::size_t n = a.size();
  RatMat m = a;
  RatMat inv(n, RatVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) throw DomainError("singular matrix");
    std::swap(m[p], m[k]);
    std::swap(inv[p], inv[k]);
    Rational piv = m[k][k];
    for (std::size_t j = 0; j < n; ++j) {
      m[k][j] /= piv;
      inv[k][j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      Rational f = m[i][k];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[k][j];
        inv[i][j] -= f * inv[k][j];
      }
    }
  }
  return inv;
}

RatVec mul(const RatMat& a, const RatVec& v) {
  RatVec r(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

RatMat mul(const RatMat& a, const RatMat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMat r(n, RatVec(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
  return r;
}

RatMat transpose(const RatMat& a) {
  if (a.empty()) return {};
  RatMat t(a[0].size(), RatVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

bool is_symmetric(const RatMat& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != a.size()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (a[i][j] != a[j][i]) return false;
  }
  return true;
}

bool is_positive_definite(const RatMat& a) {
  for (std::size_t k = 1; k <= a.size(); ++k) {
    RatMat minor(k, RatVec(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = a[i][j];
    if (det(minor) <= 0) return false;
  }
  return true;
}

IntMat replace_column(const IntMat& a, std::size_t i, const IntVec& b) {
  IntMat r = a;
  for (std::size_t row = 0; row < r.size(); ++row) r[row][i] = b[row];
  return r;
}

namespace {

// Columns of a as separate vectors.
std::vector<IntVec> columns(const IntMat& a) {
  std::vector<IntVec> cols;
  if (a.empty()) return cols;
  for (std::size_t j = 0; j < a[0].size(); ++j) {
    IntVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i][j];
    cols.push_back(std::move(c));
  }
  return cols;
}

long floor_div_long(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntMat column_hnf(const IntMat& a) {
  std::size_t g = a.size();
  std::vector<IntVec> cols = columns(a);
  auto axpy = [](IntVec& dst, long f, const IntVec& src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += f * src[i];
  };
  for (std::size_t row = 0; row < g; ++row) {
    // Euclid across the columns row..end until only column `row` is nonzero.
    for (;;) {
      std::size_t best = cols.size();
      for (std::size_t j = row; j < cols.size(); ++j) {
        if (cols[j][row] == 0) continue;
        if (best == cols.size() || std::labs(cols[j][row]) < std::labs(cols[best][row])) best = j;
      }
      if (best == cols.size()) throw DomainError("lattice is not of full rank");
      std::swap(cols[row], cols[best]);
      bool done = true;
      for (std::size_t j = row + 1; j < cols.size(); ++j) {
        if (cols[j][row] == 0) continue;
        long q = floor_div_long(cols[j][row], cols[row][row]);
        axpy(cols[j], -q, cols[row]);
        if (cols[j][row] != 0) done = false;
      }
      if (done) break;
    }
    if (cols[row][row] < 0)
      for (long& v : cols[row]) v = -v;
    for (std::size_t j = 0; j < row; ++j) {
      long q = floor_div_long(cols[j][row], cols[row][row]);
      axpy(cols[j], -q, cols[row]);
    }
  }
  IntMat h(g, IntVec(g, 0));
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t i = 0; i < g; ++i) h[i][j] = cols[j][i];
  return h;
}

bool same_lattice(const IntMat& a, const IntMat& b) {
  return column_hnf(a) == column_hnf(b);
}

std::vector<IntVec> coset_representatives(const IntMat& a) {
  IntMat h = column_hnf(a);
  std::size_t g = h.size();
  std::vector<IntVec> reps;
  IntVec v(g, 0);
  for (;;) {
    reps.push_back(v);
    std::size_t i = 0;
    while (i < g) {
      if (++v[i] < h[i][i]) break;
      v[i] = 0;
      ++i;
    }
    if (i == g) break;
  }
  return reps;
}

}  // namespace boxball
