#pragma once

#include "boxball/common.hpp"

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace boxball {

// Element of the crystal B_l of affine sl(n+1): letter counts summing to l.
struct CrystalElement {
  int n = 1;
  std::vector<int> x;  // x[0] counts the letter 1

  CrystalElement() = default;
  CrystalElement(int rank, std::vector<int> counts);

  // Weakly increasing word such as "13347"; comma-separated letters are
  // accepted as well ("1,3,10").
  static CrystalElement from_word(int rank, std::string_view word);
  // u_l = 11...1
  static CrystalElement highest(int rank, int l);

  int rank() const { return n; }
  int capacity() const;
  // Cyclic 1-based access, x_{i+n+1} = x_i.
  int operator()(long i) const { return x[cyc(i, x.size())]; }
  std::string word() const;

  bool operator==(const CrystalElement&) const = default;
};

using Tensor = std::vector<CrystalElement>;

enum class Dir { Raise, Lower };

std::pair<int, int> eps_phi(const CrystalElement& b, int i);
// An empty optional is the crystal 0.
std::optional<CrystalElement> kashiwara(const CrystalElement& b, int i, Dir dir);

std::pair<int, int> tensor_eps_phi(const Tensor& p, int i);
std::optional<Tensor> tensor_kashiwara(const Tensor& p, int i, Dir dir);

// R(x ⊗ y) = left ⊗ right with left in B_{l'} and right in B_l.
struct RResult {
  CrystalElement left;
  CrystalElement right;
  int energy = 0;
  bool operator==(const RResult&) const = default;
};

RResult comb_R(const CrystalElement& x, const CrystalElement& y);
// Dot-pairing algorithm. When rng is given the dots of the pile being paired
// are processed in random order.
RResult comb_R_ny(const CrystalElement& x, const CrystalElement& y, std::mt19937_64* rng = nullptr);
int energy_H(const CrystalElement& x, const CrystalElement& y);

// "13347*135"
Tensor parse_tensor(int rank, std::string_view text);
std::string format_tensor(const Tensor& p);

}  // namespace boxball
