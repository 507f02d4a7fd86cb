#pragma once

#include "boxball/bbs.hpp"
#include "boxball/linalg.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace boxball {

// Periodic sl2 box-ball state b_1..b_L with letters 1, 2.
struct PeriodicState {
  std::vector<int> word;

  static PeriodicState parse(std::string_view text);
  long L() const { return static_cast<long>(word.size()); }
  long M() const;
  std::string str() const;  // '.' for 1
  // T_1^d: cyclic right shift by d.
  PeriodicState shifted(long d) const;
  bool operator==(const PeriodicState&) const = default;
  auto operator<=>(const PeriodicState&) const = default;
};

struct PeriodicEvolved {
  PeriodicState state;
  long energy = 0;
};

// T_l via the carrier fixed point v_l(p) = v'(u_l, p). l = kInfinity uses
// l = M. Half filling is accepted only when the two-pass carrier closes.
PeriodicEvolved evolve_periodic(const PeriodicState& p, int l);

// Partition mu = (i_g^{m_{i_g}} ... i_1^{m_{i_1}}) with its vacancies.
struct ActionVariable {
  long L = 0;
  std::vector<long> mu;     // weakly decreasing
  std::vector<long> parts;  // i_1 < ... < i_g
  std::vector<long> mult;   // m_{i_1}, ..., m_{i_g}

  static ActionVariable from_partition(std::vector<long> mu, long L);
  std::size_t g() const { return parts.size(); }
  long vacancy(long j) const;
  IntVec vacancies() const;  // p_{i_1}, ..., p_{i_g}
  // F_ij = delta_ij p_i + 2 min(i,j) m_j
  IntMat F() const;
  IntVec h(int l) const;  // (min(i,l)); l = kInfinity gives (i)
};

// Smallest d >= 0 with T_1^{-d}(p) highest.
long highest_offset(const PeriodicState& p);
ActionVariable action_variable(const PeriodicState& p);

// Quasi-periodic riggings, one window J_{i,1..m_i} per part.
struct AngleVariable {
  ActionVariable action;
  std::vector<IntVec> J;

  // J_{k,alpha} for the k-th part and any alpha in Z.
  long at(std::size_t k, long alpha) const;
  bool operator==(const AngleVariable& other) const { return J == other.J && action.mu == other.action.mu && action.L == other.action.L; }
};

// Phi with the decomposition p = T_1^d(p_+) for the smallest d.
AngleVariable direct_scattering(const PeriodicState& p);
PeriodicState inverse_scattering(const AngleVariable& J);
// J_{i,alpha} += steps * min(i, l)
AngleVariable evolve_angle(const AngleVariable& J, int l, long steps);
// sigma_{i_k}^{power}
AngleVariable slide(const AngleVariable& J, std::size_t k, long power);
// Representative Phi(Phi^{-1}(J)).
AngleVariable canonicalize(const AngleVariable& J);

// State from the tropical theta formula; requires all m_i = 1.
PeriodicState theta_state(const IntVec& J, const ActionVariable& action);

// gamma_i for each part.
IntVec internal_symmetry(const PeriodicState& p);
IntVec internal_symmetry(const AngleVariable& J);

long fundamental_period(const PeriodicState& p, int l);
long fundamental_period(const ActionVariable& action, const IntVec& gamma, int l);

// Both closed forms for |P_L(mu)|; they are asserted equal.
BigInt isolevel_cardinality(const ActionVariable& action);
Rational cardinality_bethe(const ActionVariable& action);
Rational cardinality_combinatorial(const ActionVariable& action);

struct TorusComponent {
  IntVec gamma;
  BigInt multiplicity;
  RatMat F_gamma;
  Rational det_F_gamma;
};
std::vector<TorusComponent> torus_decomposition(const ActionVariable& action);
BigInt mobius_count(long gamma, long m, long p);  // C_gamma(m, p)

// All states of length L with action variable mu (L <= 20).
std::vector<PeriodicState> enumerate_isolevel(const ActionVariable& action);

}  // namespace boxball
