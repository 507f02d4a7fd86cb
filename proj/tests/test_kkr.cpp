#include "boxball/kkr.hpp"
#include "support.hpp"

#include <doctest.h>

#include <functional>
#include <map>
#include <set>

using namespace boxball;
using boxball::testing::all_highest;
using boxball::testing::random_highest;

namespace {

RiggedConfiguration ex2() {
  RiggedConfiguration rc(14, 3);
  rc.color(1) = {{4, 0}, {3, 2}, {2, 3}};
  rc.color(2) = {{3, 1}, {1, 0}};
  rc.color(3) = {{1, 0}};
  return rc;
}

// All valid rigged configurations of length L for n = 1.
std::vector<RiggedConfiguration> all_rcs_sl2(long L) {
  std::vector<RiggedConfiguration> out;
  std::vector<long> parts;
  std::function<void(long, long)> partitions = [&](long left, long maxpart) {
    RiggedConfiguration shape(L, 1);
    for (long j : parts) shape.color(1).push_back({j, 0});
    if (2 * (L - left) <= L || parts.empty()) {
      // Enumerate riggings blockwise as weakly increasing sequences.
      std::vector<RiggedString>& s = shape.color(1);
      std::function<void(std::size_t)> rig = [&](std::size_t i) {
        if (i == s.size()) {
          if (shape.valid()) out.push_back(shape);
          return;
        }
        long lo = (i > 0 && s[i - 1].length == s[i].length) ? s[i - 1].rigging : 0;
        long hi = shape.vacancy(1, s[i].length);
        for (long J = lo; J <= hi; ++J) {
          s[i].rigging = J;
          rig(i + 1);
        }
      };
      if (2 * (L - left) <= L) rig(0);
    }
    for (long j = std::min(left, maxpart); j >= 1; --j) {
      parts.push_back(j);
      partitions(left - j, j);
      parts.pop_back();
    }
  };
  partitions(L, L);
  return out;
}

}  // namespace

TEST_CASE("vacancies") {
  RiggedConfiguration ex1(8, 1);
  ex1.color(1) = {{1, 0}, {1, 0}, {2, 0}};
  CHECK(ex1.vacancy(1, 2) == 0);
  CHECK(ex1.vacancy(1, 1) == 2);
  RiggedConfiguration rc = ex2();
  CHECK(rc.vacancy(1, 4) == 0);
  CHECK(rc.vacancy(1, 3) == 2);
  CHECK(rc.vacancy(1, 2) == 5);
  CHECK(rc.vacancy(2, 3) == 1);
  CHECK(rc.vacancy(2, 1) == 0);
  CHECK(rc.vacancy(3, 1) == 0);
  RiggedConfiguration empty(7, 2);
  CHECK(empty.vacancy(1, 3) == 7);
  CHECK(empty.vacancy(2, 3) == 0);
  CHECK(rc.weight() == std::vector<long>{5, 5, 3, 1});
}

TEST_CASE("phi on small sl2 paths") {
  RiggedConfiguration a = kkr_phi(parse_word("112212"), 1);
  CHECK(a.color(1) == std::vector<RiggedString>{{1, 2}, {2, 0}});
  CHECK(kkr_phi(parse_word("111222"), 1).color(1) == std::vector<RiggedString>{{3, 0}});
  CHECK(kkr_phi(parse_word("121212"), 1).color(1) == std::vector<RiggedString>{{1, 0}, {1, 0}, {1, 0}});
  CHECK_THROWS_AS(kkr_phi(parse_word("2111"), 1), DomainError);
  CHECK(format_word(kkr_phi_inv(RiggedConfiguration(4, 1))) == "1111");
}

TEST_CASE("six rigged configurations of one shape and their paths") {
  std::set<std::string> images;
  for (long J1 = 0; J1 <= 2; ++J1)
    for (long J2 = J1; J2 <= 2; ++J2) {
      RiggedConfiguration rc(8, 1);
      rc.color(1) = {{1, J1}, {1, J2}, {2, 0}};
      REQUIRE(rc.valid());
      auto w = kkr_phi_inv(rc);
      CHECK(kkr_phi(w, 1) == rc);
      images.insert(format_word(w));
    }
  CHECK(images == std::set<std::string>{"12121122", "12112122", "12112212", "11212122", "11212212", "11221212"});
}

TEST_CASE("rank-3 rigged configuration in both directions") {
  CHECK(format_word(kkr_phi_inv(ex2())) == "11112221322433");
  CHECK(kkr_phi(parse_word("11112221322433"), 3) == ex2());
}

TEST_CASE("exhaustive round trips and cardinality for sl2") {
  for (long L = 1; L <= 10; ++L) {
    auto paths = all_highest(1, L);
    auto rcs = all_rcs_sl2(L);
    CHECK(paths.size() == rcs.size());
    for (const auto& p : paths) REQUIRE(kkr_phi_inv(kkr_phi(p, 1)) == p);
    for (const auto& rc : rcs) REQUIRE(kkr_phi(kkr_phi_inv(rc), 1) == rc);
  }
}

TEST_CASE("phi weight and partition match the path") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 200; ++k) {
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    auto w = random_highest(rng, n, std::uniform_int_distribution<int>(1, 20)(rng));
    RiggedConfiguration rc = kkr_phi(w, n);
    REQUIRE(rc.valid());
    std::vector<long> wt(static_cast<std::size_t>(n + 1), 0);
    for (int b : w) ++wt[static_cast<std::size_t>(b - 1)];
    REQUIRE(rc.weight() == wt);
    REQUIRE(kkr_phi_inv(rc) == w);
    // mu^(1) is the soliton content and E_l counts the left l columns.
    BBSState s{n, 0, w};
    std::map<int, int> content;
    for (long j : rc.partition(1)) ++content[static_cast<int>(j)];
    REQUIRE(content == soliton_content(s));
    auto E = energies(s, 5);
    for (int l = 1; l <= 5; ++l) {
      long cells = 0;
      for (long j : rc.partition(1)) cells += std::min<long>(j, l);
      REQUIRE(E[static_cast<std::size_t>(l - 1)] == cells);
    }
  }
}

TEST_CASE("linear rigging flow solves the initial value problem") {
  BBSState s = BBSState::parse("........2222.....332..43..................................", 3);
  CHECK(solve_ivp(s, kInfinity, 3).render(0, 57) == "....................2222..32433...........................");
  CHECK(solve_ivp(s, kInfinity, 0).same_as(s));
  RiggedConfiguration rc = kkr_phi(parse_word(s.render(0, 57)), 3);
  CHECK(evolve_rc(rc, 3, 0) == rc);
  RiggedConfiguration moved = evolve_rc(rc, kInfinity, 2);
  CHECK(moved.color(1) == std::vector<RiggedString>{{2, 19}, {3, 16}, {4, 12}});
  CHECK(moved.color(2) == rc.color(2));
  std::mt19937_64 rng(32);
  for (int k = 0; k < 100; ++k) {
    int n = std::uniform_int_distribution<int>(1, 3)(rng);
    int l = std::uniform_int_distribution<int>(1, 5)(rng);
    long t = std::uniform_int_distribution<long>(0, 5)(rng);
    BBSState p{n, 0, random_highest(rng, n, 12)};
    BBSState direct = p;
    for (long j = 0; j < t; ++j) direct = evolve(direct, l).state;
    REQUIRE(solve_ivp(p, l, t).same_as(direct));
  }
}

TEST_CASE("JSON form") {
  const std::string text = rc_to_json(ex2());
  CHECK(text == R"({"L":14,"n":3,"strings":{"1":[[2,3],[3,2],[4,0]],"2":[[1,0],[3,1]],"3":[[1,0]]}})");
  CHECK(rc_from_json(text) == ex2());
  CHECK_THROWS_AS(rc_from_json("{\"L\":3}"), DomainError);
}
