#include "boxball/crystal.hpp"

#include <algorithm>
#include <numeric>

namespace boxball {

namespace {

void check_rank(const CrystalElement& x, const CrystalElement& y) {
  if (x.n != y.n) throw DomainError("rank mismatch in tensor product");
}

void check_color(const CrystalElement& b, int i) {
  if (i < 0 || i > b.n) throw DomainError("color index out of range: " + std::to_string(i));
}

}  // namespace

CrystalElement::CrystalElement(int rank, std::vector<int> counts) : n(rank), x(std::move(counts)) {
  if (rank < 1) throw DomainError("rank must be positive");
  if (x.size() != static_cast<std::size_t>(rank) + 1)
    throw DomainError("expected " + std::to_string(rank + 1) + " letter counts");
  for (int c : x)
    if (c < 0) throw DomainError("negative letter count");
}

CrystalElement CrystalElement::from_word(int rank, std::string_view word) {
  std::vector<int> counts(static_cast<std::size_t>(rank) + 1, 0);
  auto add = [&](int letter) {
    if (letter < 1 || letter > rank + 1)
      throw DomainError("letter " + std::to_string(letter) + " outside 1.." + std::to_string(rank + 1));
    ++counts[static_cast<std::size_t>(letter - 1)];
  };
  if (word.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= word.size()) {
      std::size_t end = word.find(',', start);
      if (end == std::string_view::npos) end = word.size();
      std::string tok(word.substr(start, end - start));
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw DomainError("bad letter '" + tok + "'");
      add(std::stoi(tok));
      start = end + 1;
    }
  } else {
    for (char c : word) {
      if (c < '1' || c > '9') throw DomainError(std::string("bad letter '") + c + "'");
      add(c - '0');
    }
  }
  return CrystalElement(rank, counts);
}

CrystalElement CrystalElement::highest(int rank, int l) {
  std::vector<int> counts(static_cast<std::size_t>(rank) + 1, 0);
  counts[0] = l;
  return CrystalElement(rank, counts);
}

int CrystalElement::capacity() const { return std::accumulate(x.begin(), x.end(), 0); }

std::string CrystalElement::word() const {
  std::string s;
  bool wide = n + 1 > 9;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (int k = 0; k < x[a]; ++k) {
      if (wide) {
        if (!s.empty()) s += ',';
        s += std::to_string(a + 1);
      } else {
        s += static_cast<char>('1' + a);
      }
    }
  return s;
}

std::pair<int, int> eps_phi(const CrystalElement& b, int i) {
  check_color(b, i);
  return {b(i + 1), b(i)};
}

std::optional<CrystalElement> kashiwara(const CrystalElement& b, int i, Dir dir) {
  check_color(b, i);
  std::size_t up = cyc(i, b.x.size());
  std::size_t down = cyc(i + 1, b.x.size());
  CrystalElement r = b;
  if (dir == Dir::Raise) {
    if (r.x[down] == 0) return std::nullopt;
    ++r.x[up];
    --r.x[down];
  } else {
    if (r.x[up] == 0) return std::nullopt;
    --r.x[up];
    ++r.x[down];
  }
  return r;
}

namespace {

std::pair<int, int> combine(std::pair<int, int> a, std::pair<int, int> b) {
  int eps = a.first + std::max(b.first - a.second, 0);
  int phi = b.second + std::max(a.second - b.first, 0);
  return {eps, phi};
}

std::pair<int, int> fold(const Tensor& p, std::size_t end, int i) {
  std::pair<int, int> acc = eps_phi(p[0], i);
  for (std::size_t k = 1; k < end; ++k) acc = combine(acc, eps_phi(p[k], i));
  return acc;
}

}  // namespace

std::pair<int, int> tensor_eps_phi(const Tensor& p, int i) {
  if (p.empty()) throw DomainError("empty tensor");
  return fold(p, p.size(), i);
}

std::optional<Tensor> tensor_kashiwara(const Tensor& p, int i, Dir dir) {
  if (p.empty()) throw DomainError("empty tensor");
  for (const auto& b : p) check_rank(p[0], b);
  // Peel off the last factor: p = A ⊗ b.
  std::size_t cut = p.size();
  Tensor r = p;
  while (cut > 1) {
    auto [epsA, phiA] = fold(p, cut - 1, i);
    (void)epsA;
    auto [epsB, phiB] = eps_phi(p[cut - 1], i);
    (void)phiB;
    bool on_left = dir == Dir::Raise ? phiA >= epsB : phiA > epsB;
    if (!on_left) {
      auto moved = kashiwara(p[cut - 1], i, dir);
      if (!moved) return std::nullopt;
      r[cut - 1] = *moved;
      return r;
    }
    --cut;
  }
  auto moved = kashiwara(p[0], i, dir);
  if (!moved) return std::nullopt;
  r[0] = *moved;
  return r;
}

RResult comb_R(const CrystalElement& x, const CrystalElement& y) {
  check_rank(x, y);
  const long m = static_cast<long>(x.x.size());
  // P[i] for i = 0..n, cyclic.
  std::vector<int> P(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    int best = 0;
    for (long k = 1; k <= m; ++k) {
      int s = 0;
      for (long j = k; j <= m; ++j) s += x(i + j);
      for (long j = 1; j <= k; ++j) s += y(i + j);
      if (k == 1 || s > best) best = s;
    }
    P[static_cast<std::size_t>(i)] = best;
  }
  auto Pc = [&](long i) { return P[static_cast<std::size_t>(((i % m) + m) % m)]; };
  std::vector<int> xt(static_cast<std::size_t>(m)), yt(static_cast<std::size_t>(m));
  for (long i = 1; i <= m; ++i) {
    xt[static_cast<std::size_t>(i - 1)] = x(i) - Pc(i) + Pc(i - 1);
    yt[static_cast<std::size_t>(i - 1)] = y(i) + Pc(i) - Pc(i - 1);
  }
  int energy = P[0] - std::max(x.capacity(), y.capacity());
  return {CrystalElement(x.n, yt), CrystalElement(x.n, xt), energy};
}

RResult comb_R_ny(const CrystalElement& x, const CrystalElement& y, std::mt19937_64* rng) {
  check_rank(x, y);
  const int letters = x.n + 1;
  const bool left_big = x.capacity() >= y.capacity();
  // The smaller pile supplies the dots A; the bigger pile supplies partners B.
  const CrystalElement& small = left_big ? y : x;
  std::vector<int> big = left_big ? x.x : y.x;
  std::vector<int> dots;
  for (int a = 0; a < letters; ++a)
    for (int k = 0; k < small.x[static_cast<std::size_t>(a)]; ++k) dots.push_back(a);
  if (rng) std::shuffle(dots.begin(), dots.end(), *rng);
  std::vector<int> paired(static_cast<std::size_t>(letters), 0);
  int winding = 0;
  for (int a : dots) {
    int b = -1;
    if (left_big) {
      // Lowest unconnected dot strictly higher than A, else the lowest one.
      for (int c = a - 1; c >= 0 && b < 0; --c)
        if (big[static_cast<std::size_t>(c)] > 0) b = c;
      if (b < 0) {
        ++winding;
        for (int c = letters - 1; c >= 0 && b < 0; --c)
          if (big[static_cast<std::size_t>(c)] > 0) b = c;
      }
    } else {
      // Highest unconnected dot strictly lower than A, else the highest one.
      for (int c = a + 1; c < letters && b < 0; ++c)
        if (big[static_cast<std::size_t>(c)] > 0) b = c;
      if (b < 0) {
        ++winding;
        for (int c = 0; c < letters && b < 0; ++c)
          if (big[static_cast<std::size_t>(c)] > 0) b = c;
      }
    }
    --big[static_cast<std::size_t>(b)];
    ++paired[static_cast<std::size_t>(b)];
  }
  // Unconnected dots of the bigger pile move horizontally to the other side.
  std::vector<int> moved = small.x;
  for (int a = 0; a < letters; ++a) moved[static_cast<std::size_t>(a)] += big[static_cast<std::size_t>(a)];
  if (left_big) return {CrystalElement(x.n, paired), CrystalElement(x.n, moved), winding};
  return {CrystalElement(x.n, moved), CrystalElement(x.n, paired), winding};
}

int energy_H(const CrystalElement& x, const CrystalElement& y) { return comb_R(x, y).energy; }

Tensor parse_tensor(int rank, std::string_view text) {
  Tensor p;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('*', start);
    if (end == std::string_view::npos) end = text.size();
    p.push_back(CrystalElement::from_word(rank, text.substr(start, end - start)));
    start = end + 1;
  }
  return p;
}

std::string format_tensor(const Tensor& p) {
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) s += '*';
    s += p[k].word();
  }
  return s;
}

}  // namespace boxball
