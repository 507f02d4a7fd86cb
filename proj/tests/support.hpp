#pragma once

#include "boxball/crystal.hpp"
#include "boxball/kkr.hpp"
#include "boxball/pbbs.hpp"

#include <functional>
#include <random>
#include <vector>

namespace boxball::testing {

inline CrystalElement random_element(std::mt19937_64& rng, int n, int l) {
  std::vector<int> x(static_cast<std::size_t>(n + 1), 0);
  std::uniform_int_distribution<int> pick(0, n);
  for (int k = 0; k < l; ++k) ++x[static_cast<std::size_t>(pick(rng))];
  return CrystalElement(n, x);
}

// Every element of B_l for the given rank.
inline std::vector<CrystalElement> all_elements(int n, int l) {
  std::vector<CrystalElement> out;
  std::vector<int> x(static_cast<std::size_t>(n + 1), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      x[static_cast<std::size_t>(i)] = left;
      out.emplace_back(n, x);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      x[static_cast<std::size_t>(i)] = c;
      rec(i + 1, left - c);
    }
  };
  rec(0, l);
  return out;
}

// Uniform over allowed letters at each step; the result is highest.
inline std::vector<int> random_highest(std::mt19937_64& rng, int n, int L, double ball_bias = 0.5) {
  std::vector<int> counts(static_cast<std::size_t>(n + 2), 0);
  std::vector<int> word;
  std::bernoulli_distribution ball(ball_bias);
  for (int k = 0; k < L; ++k) {
    std::vector<int> allowed;
    for (int a = 2; a <= n + 1; ++a)
      if (counts[static_cast<std::size_t>(a)] < counts[static_cast<std::size_t>(a - 1)]) allowed.push_back(a);
    int letter = 1;
    if (!allowed.empty() && ball(rng)) letter = allowed[std::uniform_int_distribution<std::size_t>(0, allowed.size() - 1)(rng)];
    ++counts[static_cast<std::size_t>(letter)];
    word.push_back(letter);
  }
  return word;
}

// All highest words of length L over 1..n+1.
inline std::vector<std::vector<int>> all_highest(int n, int L) {
  std::vector<std::vector<int>> out;
  std::vector<int> word, counts(static_cast<std::size_t>(n + 2), 0);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(word.size()) == L) {
      out.push_back(word);
      return;
    }
    for (int a = 1; a <= n + 1; ++a) {
      if (a > 1 && counts[static_cast<std::size_t>(a)] >= counts[static_cast<std::size_t>(a - 1)]) continue;
      ++counts[static_cast<std::size_t>(a)];
      word.push_back(a);
      rec();
      word.pop_back();
      --counts[static_cast<std::size_t>(a)];
    }
  };
  rec();
  return out;
}

inline PeriodicState from_bits(unsigned long bits, long L) {
  PeriodicState p;
  for (long k = 0; k < L; ++k) p.word.push_back((bits >> k) & 1UL ? 2 : 1);
  return p;
}

// Orbit length of p under T_l.
inline long orbit_length(const PeriodicState& p, int l) {
  PeriodicState q = p;
  long n = 0;
  do {
    q = evolve_periodic(q, l).state;
    ++n;
  } while (!(q == p));
  return n;
}

}  // namespace boxball::testing
