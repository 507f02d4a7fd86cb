#pragma once

#include "boxball/common.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace boxball {

// Capacity value standing for T_∞.
inline constexpr int kInfinity = 0;

// State of the sl(n+1) box-ball system on the infinite line. Cells outside
// the stored window hold the letter 1.
struct BBSState {
  int n = 1;
  long origin = 0;         // position of cells[0]
  std::vector<int> cells;  // letters 1..n+1

  // '.' or '1' for an empty box, digits 2..9 for balls. rank 0 infers the
  // rank from the largest letter.
  static BBSState parse(std::string_view text, int rank = 0, long origin = 0);

  int letter(long pos) const;
  long ball_count() const;
  bool is_vacuum() const;
  // Position range [first, last] of balls; nullopt for the vacuum.
  std::optional<std::pair<long, long>> support() const;
  BBSState trimmed() const;
  // Cells from..to inclusive in dot notation.
  std::string render(long from, long to) const;
  // Equality as configurations on the whole line.
  bool same_as(const BBSState& other) const;
  // Equality up to translation.
  bool same_shape(const BBSState& other) const;
};

struct Evolved {
  BBSState state;
  long energy = 0;
};

// Carrier v (letter counts, v[0] = #1) passing a box holding `letter`:
// updates v, returns the letter left behind and whether H = 1 (winding).
std::pair<int, bool> carrier_step(std::vector<int>& v, int letter);

// One step of T_l (l = kInfinity for T_∞) with the energy E_l.
Evolved evolve(const BBSState& p, int l);
// T_∞ as K_2 K_3 ... K_{n+1}; optionally records the state after each K_a.
BBSState evolve_takahashi(const BBSState& p, std::vector<BBSState>* intermediates = nullptr);
// [E_1, ..., E_{l_max}]
std::vector<long> energies(const BBSState& p, int l_max);
// Soliton length -> multiplicity.
std::map<int, int> soliton_content(const BBSState& p);

struct Soliton {
  long position = 0;      // leftmost cell
  std::vector<int> label; // letters as they appear left to right
  bool operator==(const Soliton&) const = default;
};
// Separated weakly decreasing runs; nullopt when the state is not in the
// asymptotic regime.
std::optional<std::vector<Soliton>> solitons(const BBSState& p);

struct ScatterResult {
  std::vector<int> small_out;
  std::vector<int> big_out;
  int delta = 0;
  bool operator==(const ScatterResult&) const = default;
};
ScatterResult scatter_two(const std::vector<int>& big, const std::vector<int>& small);
// Same data read off a lattice simulation under T_∞.
ScatterResult scatter_two_simulated(const std::vector<int>& big, const std::vector<int>& small);
std::vector<int> parse_label(std::string_view text);
std::string format_label(const std::vector<int>& label);

// sl2 soliton coordinates: ball runs Q_1..Q_N and gaps W_1..W_{N-1}.
struct TodaCoords {
  std::vector<long> Q;
  std::vector<long> W;
  bool operator==(const TodaCoords&) const = default;
};
TodaCoords toda_coords(const BBSState& p);
TodaCoords toda_evolve(const TodaCoords& c);
BBSState from_toda(const TodaCoords& c, long origin = 0);

using Tableau = std::vector<std::vector<int>>;
void row_insert(Tableau& t, int letter);
Tableau p_symbol(const BBSState& p);
std::string format_tableau(const Tableau& t);

}  // namespace boxball
