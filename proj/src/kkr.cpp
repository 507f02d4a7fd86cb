#include "boxball/kkr.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>

namespace boxball {

RiggedConfiguration::RiggedConfiguration(long length, int rank)
    : L(length), n(rank), strings(static_cast<std::size_t>(rank)) {
  if (rank < 1) throw DomainError("rank must be positive");
  if (length < 0) throw DomainError("negative path length");
}

long RiggedConfiguration::q(int a, long j) const {
  if (a == 0) return j >= 1 ? L : 0;
  if (a == n + 1) return 0;
  long s = 0;
  for (const auto& str : color(a)) s += std::min(j, str.length);
  return s;
}

long RiggedConfiguration::vacancy(int a, long j) const {
  return q(a - 1, j) - 2 * q(a, j) + q(a + 1, j);
}

long RiggedConfiguration::size(int a) const {
  return q(a, std::numeric_limits<long>::max() / 4);
}

std::vector<long> RiggedConfiguration::weight() const {
  std::vector<long> w;
  for (int a = 0; a <= n; ++a) w.push_back(size(a) - size(a + 1));
  return w;
}

bool RiggedConfiguration::valid() const {
  auto w = weight();
  if (w.back() < 0) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) return false;
  for (int a = 1; a <= n; ++a)
    for (const auto& s : color(a))
      if (s.length < 1 || s.rigging < 0 || s.rigging > vacancy(a, s.length)) return false;
  return true;
}

std::vector<long> RiggedConfiguration::partition(int a) const {
  std::vector<long> mu;
  for (const auto& s : color(a)) mu.push_back(s.length);
  std::sort(mu.rbegin(), mu.rend());
  return mu;
}

void RiggedConfiguration::normalize() {
  for (auto& c : strings) std::sort(c.begin(), c.end());
}

bool RiggedConfiguration::operator==(const RiggedConfiguration& other) const {
  if (L != other.L || n != other.n) return false;
  RiggedConfiguration a = *this, b = other;
  a.normalize();
  b.normalize();
  return a.strings == b.strings;
}

bool is_highest(const std::vector<int>& word, int n) {
  std::vector<long> count(static_cast<std::size_t>(n) + 2, 0);
  for (int d : word) {
    if (d < 1 || d > n + 1) return false;
    ++count[static_cast<std::size_t>(d)];
    if (d > 1 && count[static_cast<std::size_t>(d)] > count[static_cast<std::size_t>(d - 1)]) return false;
  }
  return true;
}

std::vector<int> parse_word(std::string_view text) {
  std::vector<int> w;
  for (char c : text) {
    if (c == '.') w.push_back(1);
    else if (c >= '1' && c <= '9') w.push_back(c - '0');
    else throw DomainError(std::string("bad letter '") + c + "'");
  }
  return w;
}

std::string format_word(const std::vector<int>& word) {
  std::string s;
  for (int d : word) s += static_cast<char>('0' + d);
  return s;
}

namespace {

constexpr long kNone = -1;

// Index of the singular color-a string with the largest length <= bound.
long longest_singular(const RiggedConfiguration& rc, int a, long bound) {
  long best = kNone;
  const auto& c = rc.color(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].length > bound || c[i].rigging != rc.vacancy(a, c[i].length)) continue;
    if (best == kNone || c[i].length > c[static_cast<std::size_t>(best)].length) best = static_cast<long>(i);
  }
  return best;
}

// Index of the singular color-a string with the smallest length >= bound.
long shortest_singular(const RiggedConfiguration& rc, int a, long bound) {
  long best = kNone;
  const auto& c = rc.color(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].length < bound || c[i].rigging != rc.vacancy(a, c[i].length)) continue;
    if (best == kNone || c[i].length < c[static_cast<std::size_t>(best)].length) best = static_cast<long>(i);
  }
  return best;
}

}  // namespace

RiggedConfiguration kkr_phi(const std::vector<int>& word, int n, bool require_highest) {
  if (require_highest && !is_highest(word, n)) throw DomainError("path is not highest");
  RiggedConfiguration rc(0, n);
  for (int d : word) {
    if (d < 1 || d > n + 1) throw DomainError("letter out of range");
    std::vector<long> chosen(static_cast<std::size_t>(n) + 1, kNone);
    long bound = std::numeric_limits<long>::max();
    for (int c = d - 1; c >= 1; --c) {
      long idx = longest_singular(rc, c, bound);
      chosen[static_cast<std::size_t>(c)] = idx;
      bound = idx == kNone ? 0 : rc.color(c)[static_cast<std::size_t>(idx)].length;
    }
    rc.L += 1;
    std::vector<std::pair<int, std::size_t>> changed;
    for (int c = d - 1; c >= 1; --c) {
      long idx = chosen[static_cast<std::size_t>(c)];
      auto& strs = rc.color(c);
      if (idx == kNone) {
        strs.push_back({1, 0});
        changed.emplace_back(c, strs.size() - 1);
      } else {
        strs[static_cast<std::size_t>(idx)].length += 1;
        changed.emplace_back(c, static_cast<std::size_t>(idx));
      }
    }
    for (auto [c, i] : changed) {
      auto& s = rc.color(c)[i];
      s.rigging = rc.vacancy(c, s.length);
    }
  }
  rc.normalize();
  return rc;
}

std::vector<int> kkr_phi_inv(const RiggedConfiguration& input, bool check) {
  if (check && !input.valid()) throw DomainError("invalid rigged configuration");
  RiggedConfiguration rc = input;
  std::vector<int> word(static_cast<std::size_t>(rc.L), 1);
  for (long pos = rc.L; pos >= 1; --pos) {
    std::vector<long> chosen(static_cast<std::size_t>(rc.n) + 1, kNone);
    int d = rc.n + 1;
    long bound = 1;
    for (int c = 1; c <= rc.n; ++c) {
      long idx = shortest_singular(rc, c, bound);
      if (idx == kNone) {
        d = c;
        break;
      }
      chosen[static_cast<std::size_t>(c)] = idx;
      bound = rc.color(c)[static_cast<std::size_t>(idx)].length;
    }
    rc.L -= 1;
    for (int c = 1; c < d; ++c) rc.color(c)[static_cast<std::size_t>(chosen[static_cast<std::size_t>(c)])].length -= 1;
    for (int c = 1; c < d; ++c) {
      auto& strs = rc.color(c);
      auto& s = strs[static_cast<std::size_t>(chosen[static_cast<std::size_t>(c)])];
      if (s.length > 0) s.rigging = rc.vacancy(c, s.length);
    }
    for (auto& strs : rc.strings)
      strs.erase(std::remove_if(strs.begin(), strs.end(), [](const RiggedString& s) { return s.length == 0; }),
                 strs.end());
    word[static_cast<std::size_t>(pos - 1)] = d;
  }
  for (const auto& strs : rc.strings)
    if (!strs.empty()) throw DomainError("rigged configuration did not reduce to the empty one");
  return word;
}

RiggedConfiguration evolve_rc(const RiggedConfiguration& rc, int l, long steps) {
  RiggedConfiguration out = rc;
  for (auto& s : out.color(1)) s.rigging += steps * (l == kInfinity ? s.length : std::min<long>(l, s.length));
  return out;
}

BBSState solve_ivp(const BBSState& p, int l, long t) {
  if (t < 0) throw DomainError("negative time");
  std::vector<int> word = p.cells;
  word.resize(word.size() + static_cast<std::size_t>((t + 1) * p.ball_count() + 1), 1);
  if (!is_highest(word, p.n)) throw DomainError("state is not highest");
  RiggedConfiguration rc = kkr_phi(word, p.n);
  BBSState out;
  out.n = p.n;
  out.origin = p.origin;
  out.cells = kkr_phi_inv(evolve_rc(rc, l, t));
  return out.trimmed();
}

std::string rc_to_json(const RiggedConfiguration& rc) {
  nlohmann::json j;
  j["L"] = rc.L;
  j["n"] = rc.n;
  nlohmann::json strs = nlohmann::json::object();
  RiggedConfiguration sorted = rc;
  sorted.normalize();
  for (int a = 1; a <= rc.n; ++a) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : sorted.color(a)) arr.push_back({s.length, s.rigging});
    strs[std::to_string(a)] = arr;
  }
  j["strings"] = strs;
  return j.dump();
}

RiggedConfiguration rc_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    RiggedConfiguration rc(j.at("L").get<long>(), j.at("n").get<int>());
    for (auto& [key, arr] : j.at("strings").items()) {
      int a = std::stoi(key);
      if (a < 1 || a > rc.n) throw DomainError("color out of range in JSON");
      for (const auto& pair : arr) rc.color(a).push_back({pair.at(0).get<long>(), pair.at(1).get<long>()});
    }
    rc.normalize();
    return rc;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad rigged configuration JSON: ") + e.what());
  }
}

}  // namespace boxball
