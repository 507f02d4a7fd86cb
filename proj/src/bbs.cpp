#include "boxball/bbs.hpp"

#include "boxball/crystal.hpp"

#include <algorithm>
#include <numeric>

namespace boxball {

BBSState BBSState::parse(std::string_view text, int rank, long origin) {
  BBSState s;
  s.origin = origin;
  int top = 1;
  for (char c : text) {
    int letter;
    if (c == '.' || c == '1') letter = 1;
    else if (c >= '2' && c <= '9') letter = c - '0';
    else throw DomainError(std::string("bad cell '") + c + "'");
    top = std::max(top, letter);
    s.cells.push_back(letter);
  }
  s.n = rank > 0 ? rank : std::max(1, top - 1);
  if (top > s.n + 1) throw DomainError("letter exceeds rank");
  return s;
}

int BBSState::letter(long pos) const {
  long k = pos - origin;
  if (k < 0 || k >= static_cast<long>(cells.size())) return 1;
  return cells[static_cast<std::size_t>(k)];
}

long BBSState::ball_count() const {
  return std::count_if(cells.begin(), cells.end(), [](int c) { return c != 1; });
}

bool BBSState::is_vacuum() const { return ball_count() == 0; }

std::optional<std::pair<long, long>> BBSState::support() const {
  long first = -1, last = -1;
  for (std::size_t k = 0; k < cells.size(); ++k)
    if (cells[k] != 1) {
      if (first < 0) first = static_cast<long>(k);
      last = static_cast<long>(k);
    }
  if (first < 0) return std::nullopt;
  return std::make_pair(origin + first, origin + last);
}

BBSState BBSState::trimmed() const {
  BBSState t;
  t.n = n;
  auto sup = support();
  if (!sup) return t;
  t.origin = sup->first;
  for (long pos = sup->first; pos <= sup->second; ++pos) t.cells.push_back(letter(pos));
  return t;
}

std::string BBSState::render(long from, long to) const {
  std::string s;
  for (long pos = from; pos <= to; ++pos) {
    int c = letter(pos);
    s += c == 1 ? '.' : static_cast<char>('0' + c);
  }
  return s;
}

bool BBSState::same_as(const BBSState& other) const {
  BBSState a = trimmed(), b = other.trimmed();
  return a.origin == b.origin && a.cells == b.cells;
}

bool BBSState::same_shape(const BBSState& other) const {
  return trimmed().cells == other.trimmed().cells;
}

std::pair<int, bool> carrier_step(std::vector<int>& v, int letter) {
  int a = letter - 1;
  int b = -1;
  bool winding = false;
  for (int c = a - 1; c >= 0 && b < 0; --c)
    if (v[static_cast<std::size_t>(c)] > 0) b = c;
  if (b < 0) {
    winding = true;
    for (int c = static_cast<int>(v.size()) - 1; c >= 0 && b < 0; --c)
      if (v[static_cast<std::size_t>(c)] > 0) b = c;
  }
  --v[static_cast<std::size_t>(b)];
  ++v[static_cast<std::size_t>(a)];
  return {b + 1, winding};
}

Evolved evolve(const BBSState& p, int l) {
  BBSState in = p.trimmed();
  long balls = in.ball_count();
  if (balls == 0) return {in, 0};
  int cap = l == kInfinity ? static_cast<int>(balls) : l;
  if (cap < 1) throw DomainError("carrier capacity must be positive");
  std::vector<int> v(static_cast<std::size_t>(p.n) + 1, 0);
  v[0] = cap;
  BBSState out;
  out.n = p.n;
  out.origin = in.origin;
  long energy = 0;
  long width = static_cast<long>(in.cells.size()) + balls + 1;
  for (long k = 0; k < width; ++k) {
    auto [left, winding] = carrier_step(v, in.letter(in.origin + k));
    out.cells.push_back(left);
    if (!winding) ++energy;
  }
  return {out.trimmed(), energy};
}

BBSState evolve_takahashi(const BBSState& p, std::vector<BBSState>* intermediates) {
  BBSState s = p.trimmed();
  long balls = s.ball_count();
  if (balls == 0) return s;
  s.cells.resize(s.cells.size() + static_cast<std::size_t>(balls) + 1, 1);
  for (int a = p.n + 1; a >= 2; --a) {
    std::vector<std::size_t> pos;
    for (std::size_t k = 0; k < s.cells.size(); ++k)
      if (s.cells[k] == a) pos.push_back(k);
    for (std::size_t k : pos) {
      std::size_t j = k + 1;
      while (s.cells[j] != 1) ++j;
      std::swap(s.cells[k], s.cells[j]);
    }
    if (intermediates && a > 2) intermediates->push_back(s.trimmed());
  }
  return s.trimmed();
}

std::vector<long> energies(const BBSState& p, int l_max) {
  if (l_max < 1) throw DomainError("l_max must be positive");
  std::vector<long> e;
  for (int l = 1; l <= l_max; ++l) e.push_back(evolve(p, l).energy);
  return e;
}

std::map<int, int> soliton_content(const BBSState& p) {
  int top = static_cast<int>(p.ball_count()) + 1;
  std::vector<long> e = {0};
  for (long v : energies(p, top + 1)) e.push_back(v);
  std::map<int, int> m;
  for (int l = 1; l <= top; ++l) {
    long ml = -e[static_cast<std::size_t>(l - 1)] + 2 * e[static_cast<std::size_t>(l)] -
              e[static_cast<std::size_t>(l + 1)];
    if (ml < 0) throw DomainError("negative soliton count");
    if (ml > 0) m[l] = static_cast<int>(ml);
  }
  return m;
}

std::optional<std::vector<Soliton>> solitons(const BBSState& p) {
  BBSState s = p.trimmed();
  std::vector<Soliton> out;
  std::size_t k = 0;
  long prev_end = 0;
  while (k < s.cells.size()) {
    if (s.cells[k] == 1) {
      ++k;
      continue;
    }
    Soliton sol;
    sol.position = s.origin + static_cast<long>(k);
    while (k < s.cells.size() && s.cells[k] != 1) sol.label.push_back(s.cells[k++]);
    if (!std::is_sorted(sol.label.rbegin(), sol.label.rend())) return std::nullopt;
    if (!out.empty()) {
      long gap = sol.position - prev_end - 1;
      if (gap < static_cast<long>(out.back().label.size())) return std::nullopt;
    }
    prev_end = sol.position + static_cast<long>(sol.label.size()) - 1;
    out.push_back(std::move(sol));
  }
  return out;
}

namespace {

void check_label(const std::vector<int>& w) {
  if (w.empty()) throw DomainError("empty soliton label");
  for (int c : w)
    if (c < 2 || c > 9) throw DomainError("soliton letters must be in 2..9");
  if (!std::is_sorted(w.rbegin(), w.rend())) throw DomainError("soliton label must be weakly decreasing");
}

// Tableau of a weakly decreasing label as an sl_n crystal element (letters - 1).
CrystalElement label_element(const std::vector<int>& w, int rank) {
  std::vector<int> counts(static_cast<std::size_t>(rank) + 1, 0);
  for (int c : w) ++counts[static_cast<std::size_t>(c - 2)];
  return CrystalElement(rank, counts);
}

std::vector<int> element_label(const CrystalElement& b) {
  std::vector<int> w;
  for (int a = static_cast<int>(b.x.size()) - 1; a >= 0; --a)
    for (int k = 0; k < b.x[static_cast<std::size_t>(a)]; ++k) w.push_back(a + 2);
  return w;
}

}  // namespace

std::vector<int> parse_label(std::string_view text) {
  std::vector<int> w;
  for (char c : text) {
    if (c == '[' || c == ']') continue;
    if (c < '0' || c > '9') throw DomainError(std::string("bad soliton letter '") + c + "'");
    w.push_back(c - '0');
  }
  check_label(w);
  return w;
}

std::string format_label(const std::vector<int>& label) {
  std::string s;
  for (int c : label) s += static_cast<char>('0' + c);
  return s;
}

ScatterResult scatter_two(const std::vector<int>& big, const std::vector<int>& small) {
  check_label(big);
  check_label(small);
  if (big.size() <= small.size()) throw DomainError("the first soliton must be strictly longer");
  int top = std::max(big.front(), small.front());
  int rank = std::max(1, top - 2);
  RResult r = comb_R(label_element(big, rank), label_element(small, rank));
  return {element_label(r.left), element_label(r.right), r.energy + static_cast<int>(small.size())};
}

ScatterResult scatter_two_simulated(const std::vector<int>& big, const std::vector<int>& small) {
  check_label(big);
  check_label(small);
  if (big.size() <= small.size()) throw DomainError("the first soliton must be strictly longer");
  const long l = static_cast<long>(big.size()), lp = static_cast<long>(small.size());
  const long x = 0, y = l + 3 * (l + lp);
  BBSState s;
  s.n = std::max(big.front(), small.front()) - 1;
  s.origin = 0;
  s.cells.assign(static_cast<std::size_t>(y + lp), 1);
  std::copy(big.begin(), big.end(), s.cells.begin());
  std::copy(small.begin(), small.end(), s.cells.begin() + y);
  for (long t = 1; t < 100 * (l + lp) + 100; ++t) {
    s = evolve(s, kInfinity).state;
    auto sols = solitons(s);
    if (!sols || sols->size() != 2) continue;
    const Soliton& a = (*sols)[0];
    const Soliton& b = (*sols)[1];
    if (static_cast<long>(a.label.size()) != lp) continue;
    if (b.position - (a.position + lp) < 2 * (l + lp)) continue;
    long delta_small = y + lp * t - a.position;
    long delta_big = b.position - (x + l * t);
    if (delta_small != delta_big) throw DomainError("inconsistent asymptotic phase shifts");
    return {a.label, b.label, static_cast<int>(delta_small)};
  }
  throw DomainError("solitons did not separate");
}

TodaCoords toda_coords(const BBSState& p) {
  if (p.n != 1) throw DomainError("Toda coordinates need rank 1");
  BBSState s = p.trimmed();
  TodaCoords c;
  std::size_t k = 0;
  while (k < s.cells.size()) {
    long run = 0;
    while (k < s.cells.size() && s.cells[k] == 2) {
      ++run;
      ++k;
    }
    c.Q.push_back(run);
    long gap = 0;
    while (k < s.cells.size() && s.cells[k] == 1) {
      ++gap;
      ++k;
    }
    if (k < s.cells.size()) c.W.push_back(gap);
  }
  return c;
}

TodaCoords toda_evolve(const TodaCoords& c) {
  const std::size_t N = c.Q.size();
  if (N == 0) return c;
  if (c.W.size() + 1 != N) throw DomainError("expected one gap fewer than runs");
  TodaCoords out;
  out.Q.resize(N);
  long sum_old = 0, sum_new = 0;
  for (std::size_t j = 0; j < N; ++j) {
    sum_old += c.Q[j];
    long q = sum_old - sum_new;
    if (j + 1 < N) q = std::min(q, c.W[j]);
    out.Q[j] = q;
    sum_new += q;
  }
  for (std::size_t j = 0; j + 1 < N; ++j) out.W.push_back(c.Q[j + 1] + c.W[j] - out.Q[j]);
  return out;
}

BBSState from_toda(const TodaCoords& c, long origin) {
  if (!c.Q.empty() && c.W.size() + 1 != c.Q.size()) throw DomainError("expected one gap fewer than runs");
  BBSState s;
  s.n = 1;
  s.origin = origin;
  for (std::size_t j = 0; j < c.Q.size(); ++j) {
    if (c.Q[j] < 0 || (j < c.W.size() && c.W[j] < 0)) throw DomainError("negative run length");
    s.cells.insert(s.cells.end(), static_cast<std::size_t>(c.Q[j]), 2);
    if (j < c.W.size()) s.cells.insert(s.cells.end(), static_cast<std::size_t>(c.W[j]), 1);
  }
  return s;
}

void row_insert(Tableau& t, int letter) {
  for (auto& row : t) {
    auto it = std::upper_bound(row.begin(), row.end(), letter);
    if (it == row.end()) {
      row.push_back(letter);
      return;
    }
    std::swap(*it, letter);
  }
  t.push_back({letter});
}

Tableau p_symbol(const BBSState& p) {
  std::vector<int> word;
  for (int c : p.cells)
    if (c != 1) word.push_back(c);
  Tableau t;
  for (auto it = word.rbegin(); it != word.rend(); ++it) row_insert(t, *it);
  return t;
}

std::string format_tableau(const Tableau& t) {
  std::string s;
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (r) s += '/';
    for (int c : t[r]) s += static_cast<char>('0' + c);
  }
  return s;
}

}  // namespace boxball
