#pragma once

#include "boxball/bbs.hpp"
#include "boxball/kkr.hpp"

#include <vector>

namespace boxball {

struct TauString {
  int color = 1;
  long length = 1;
  long rigging = 0;
};

// Rigged configuration flattened to a multiset of strings.
struct StringSet {
  int n = 1;
  long L = 0;
  std::vector<TauString> strings;

  static StringSet from_rc(const RiggedConfiguration& rc);
  // Color-1 riggings shifted by min(l, length) (l = kInfinity: length).
  StringSet evolved(int l) const;
};

// Largest |S| accepted by the subset minimization; BOXBALL_SUBSET_CAP overrides 20.
std::size_t subset_cap();

// c(T) for T given as a bit mask over S.strings.
long cocharge(const StringSet& s, unsigned long mask);

// tau[k][a] for 0 <= k <= L, 0 <= a <= n+1.
struct TauTable {
  long L = 0;
  int n = 1;
  std::vector<std::vector<long>> values;
  long operator()(long k, int a) const {
    return values.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(a));
  }
};

TauTable tau_table(const StringSet& s);
long tau(const StringSet& s, long k, int a);

// Letters b_1..b_L from second differences of tau.
std::vector<int> path_from_tau(const StringSet& s);

// T_inf^t(p) for t = 0..depth.
std::vector<BBSState> evolution_table(const BBSState& p, std::size_t depth);
// Same, extended until no ball sits at a position <= k.
std::vector<BBSState> evolution_table_until(const BBSState& p, long k);
// rho^t_{k,i}, 0 <= i <= n+1.
long rho(const std::vector<BBSState>& table, long k, int i, std::size_t t);

bool check_hirota(const StringSet& s);

}  // namespace boxball
