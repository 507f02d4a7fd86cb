#pragma once

#include "boxball/bbs.hpp"
#include "boxball/common.hpp"

#include <string>
#include <vector>

namespace boxball {

struct RiggedString {
  long length = 0;
  long rigging = 0;
  auto operator<=>(const RiggedString&) const = default;
};

struct RiggedConfiguration {
  long L = 0;
  int n = 1;
  std::vector<std::vector<RiggedString>> strings;  // strings[a-1] for color a

  RiggedConfiguration() = default;
  RiggedConfiguration(long length, int rank);

  std::vector<RiggedString>& color(int a) { return strings.at(static_cast<std::size_t>(a - 1)); }
  const std::vector<RiggedString>& color(int a) const { return strings.at(static_cast<std::size_t>(a - 1)); }

  // q^{(a)}_j = sum_k min(j,k) m^{(a)}_k with q^{(0)}_j = L and q^{(n+1)}_j = 0.
  long q(int a, long j) const;
  long vacancy(int a, long j) const;
  // |mu^{(a)}| for 0 <= a <= n+1.
  long size(int a) const;
  // lambda_1..lambda_{n+1}
  std::vector<long> weight() const;
  // Riggings within [0, vacancy] and a dominant weight.
  bool valid() const;
  // Partition mu^{(a)} in weakly decreasing order.
  std::vector<long> partition(int a) const;
  // Sorts each color by (length, rigging).
  void normalize();

  bool operator==(const RiggedConfiguration& other) const;
};

bool is_highest(const std::vector<int>& word, int n);
std::vector<int> parse_word(std::string_view text);
std::string format_word(const std::vector<int>& word);

// phi. With require_highest = false the extended map of non-highest paths
// is produced.
RiggedConfiguration kkr_phi(const std::vector<int>& word, int n, bool require_highest = true);
// check = false accepts extended configurations without the rigging bounds.
std::vector<int> kkr_phi_inv(const RiggedConfiguration& rc, bool check = true);

// J^{(1)}_j += steps * min(l, j); l = kInfinity uses j.
RiggedConfiguration evolve_rc(const RiggedConfiguration& rc, int l, long steps);

// T_l^t(p) through phi, linear rigging flow and phi^{-1}.
BBSState solve_ivp(const BBSState& p, int l, long t);

std::string rc_to_json(const RiggedConfiguration& rc);
RiggedConfiguration rc_from_json(const std::string& text);

}  // namespace boxball
