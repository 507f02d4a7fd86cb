#include "boxball/tau.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace boxball {

StringSet StringSet::from_rc(const RiggedConfiguration& rc) {
  StringSet s;
  s.n = rc.n;
  s.L = rc.L;
  for (int a = 1; a <= rc.n; ++a)
    for (const auto& str : rc.color(a)) s.strings.push_back({a, str.length, str.rigging});
  return s;
}

StringSet StringSet::evolved(int l) const {
  StringSet out = *this;
  for (auto& s : out.strings)
    if (s.color == 1) s.rigging += l == kInfinity ? s.length : std::min<long>(l, s.length);
  return out;
}

std::size_t subset_cap() {
  if (const char* env = std::getenv("BOXBALL_SUBSET_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 20;
}

namespace {

long cartan(int a, int b) {
  if (a == b) return 2;
  return std::abs(a - b) == 1 ? -1 : 0;
}

long pair_term(const TauString& s, const TauString& t) {
  return cartan(s.color, t.color) * std::min(s.length, t.length);
}

void check_size(const StringSet& s) {
  if (s.strings.size() > subset_cap() || s.strings.size() >= 8 * sizeof(unsigned long) - 1)
    throw DomainError("string set exceeds the subset cap (" + std::to_string(subset_cap()) + ")");
}

}  // namespace

long cocharge(const StringSet& s, unsigned long mask) {
  long pairs = 0, riggings = 0;
  for (std::size_t i = 0; i < s.strings.size(); ++i) {
    if (!(mask >> i & 1UL)) continue;
    riggings += s.strings[i].rigging;
    for (std::size_t j = 0; j < s.strings.size(); ++j)
      if (mask >> j & 1UL) pairs += pair_term(s.strings[i], s.strings[j]);
  }
  return pairs / 2 + riggings;
}

TauTable tau_table(const StringSet& s) {
  check_size(s);
  const std::size_t N = s.strings.size();
  const std::size_t subsets = std::size_t{1} << N;
  const int n = s.n;
  // best[a][v]: min over subsets with v color-1 strings of c(T) + sum_{cl=a} lg.
  constexpr long kInf = std::numeric_limits<long>::max() / 4;
  std::vector<std::vector<long>> best(static_cast<std::size_t>(n) + 2, std::vector<long>(N + 1, kInf));
  std::vector<long> c(subsets, 0), ones(subsets, 0);
  std::vector<std::vector<long>> lg(static_cast<std::size_t>(n) + 2, std::vector<long>(subsets, 0));
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    std::size_t i = 0;
    while (!(mask >> i & 1U)) ++i;
    std::size_t rest = mask & (mask - 1);
    const TauString& si = s.strings[i];
    long add = si.length + si.rigging;
    for (std::size_t j = i + 1; j < N; ++j)
      if (rest >> j & 1U) add += pair_term(si, s.strings[j]);
    c[mask] = c[rest] + add;
    ones[mask] = ones[rest] + (si.color == 1 ? 1 : 0);
    for (int a = 1; a <= n; ++a) lg[static_cast<std::size_t>(a)][mask] = lg[static_cast<std::size_t>(a)][rest];
    lg[static_cast<std::size_t>(si.color)][mask] += si.length;
  }
  for (std::size_t mask = 0; mask < subsets; ++mask)
    for (int a = 1; a <= n + 1; ++a) {
      long v = c[mask] + lg[static_cast<std::size_t>(a)][mask];
      long& b = best[static_cast<std::size_t>(a)][static_cast<std::size_t>(ones[mask])];
      b = std::min(b, v);
    }
  TauTable t;
  t.L = s.L;
  t.n = n;
  t.values.assign(static_cast<std::size_t>(s.L) + 1, std::vector<long>(static_cast<std::size_t>(n) + 2, 0));
  for (long k = 0; k <= s.L; ++k) {
    auto& row = t.values[static_cast<std::size_t>(k)];
    for (int a = 1; a <= n + 1; ++a) {
      long m = kInf;
      for (std::size_t v = 0; v <= N; ++v) {
        long b = best[static_cast<std::size_t>(a)][v];
        if (b < kInf) m = std::min(m, b - k * static_cast<long>(v));
      }
      row[static_cast<std::size_t>(a)] = -m;
    }
    row[0] = row[static_cast<std::size_t>(n) + 1] - k;
  }
  return t;
}

long tau(const StringSet& s, long k, int a) {
  if (k < 0 || k > s.L || a < 0 || a > s.n + 1) throw DomainError("tau index out of range");
  return tau_table(s)(k, a);
}

std::vector<int> path_from_tau(const StringSet& s) {
  TauTable t = tau_table(s);
  std::vector<int> word;
  for (long k = 1; k <= s.L; ++k) {
    int letter = 0;
    for (int a = 1; a <= s.n + 1; ++a) {
      long x = t(k, a) - t(k - 1, a) - t(k, a - 1) + t(k - 1, a - 1);
      if (x == 1 && letter == 0) letter = a;
      else if (x != 0) throw DomainError("tau second difference is not a unit vector at k=" + std::to_string(k));
    }
    if (letter == 0) throw DomainError("empty cell at k=" + std::to_string(k));
    word.push_back(letter);
  }
  return word;
}

std::vector<BBSState> evolution_table(const BBSState& p, std::size_t depth) {
  std::vector<BBSState> table{p};
  for (std::size_t t = 0; t < depth; ++t) table.push_back(evolve(table.back(), kInfinity).state);
  return table;
}

std::vector<BBSState> evolution_table_until(const BBSState& p, long k) {
  std::vector<BBSState> table{p};
  for (;;) {
    auto sup = table.back().support();
    if (!sup || sup->first > k) return table;
    table.push_back(evolve(table.back(), kInfinity).state);
  }
}

long rho(const std::vector<BBSState>& table, long k, int i, std::size_t t) {
  if (t >= table.size()) throw DomainError("evolution table too short");
  const int n = table[t].n;
  if (i < 0 || i > n + 1) throw DomainError("rho color index out of range");
  if (i == 0) return rho(table, k, n + 1, t) - k;
  auto count = [&](const BBSState& s, int top) {
    long c = 0;
    for (std::size_t j = 0; j < s.cells.size(); ++j) {
      long pos = s.origin + static_cast<long>(j);
      if (pos <= k && s.cells[j] >= 2 && s.cells[j] <= top) ++c;
    }
    return c;
  };
  long r = count(table[t], i);
  for (std::size_t tp = t + 1;; ++tp) {
    const BBSState& prev = table[tp - 1];
    auto sup = prev.support();
    if (!sup || sup->first > k) break;
    if (tp >= table.size()) throw DomainError("evolution table too short for rho");
    r += count(table[tp], n + 1);
  }
  return r;
}

bool check_hirota(const StringSet& s) {
  TauTable tau = tau_table(s);
  TauTable bar = tau_table(s.evolved(kInfinity));
  for (long k = 1; k <= s.L; ++k)
    for (int a = 2; a <= s.n + 1; ++a) {
      long lhs = bar(k, a - 1) + tau(k - 1, a);
      long rhs = std::max(bar(k, a) + tau(k - 1, a - 1), bar(k - 1, a - 1) + tau(k, a) - 1);
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace boxball
