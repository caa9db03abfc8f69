#pragma once

#include <set>
#include <string>
#include <vector>

#include "serre/basics.hpp"

namespace serre {

struct Gl2Ctx {
  int p;
  int f;

  Gl2Ctx(int p_, int f_) : p(p_), f(f_) {
    require(p >= 3 && is_prime(p), "p must be an odd prime");
    require(f >= 1, "f must be positive");
  }

  long long q() const { return pow_ll(p, f); }
  long long qq() const { return pow_ll(p, 2 * f); }
  // 1 + p + ... + p^{f-1}
  long long digit_sum_base() const { return (q() - 1) / (p - 1); }
};

// F(a,b) with a-b = sum m_i p^i (0 <= m_i <= p-1), b mod q-1.
struct Gl2Weight {
  std::vector<int> m;  // size f
  long long b;         // in [0, q-2]

  auto operator<=>(const Gl2Weight&) const = default;

  long long sym_degree(const Gl2Ctx& ctx) const {
    long long a = 0;
    for (int i = ctx.f - 1; i >= 0; --i) a = a * ctx.p + m[i];
    return a;
  }
  long long dim(const Gl2Ctx& ctx) const {
    long long d = 1;
    for (int mi : m) d *= mi + 1;
    (void)ctx;
    return d;
  }
};

Gl2Weight gl2_weight_from_ab(long long a, long long b, const Gl2Ctx& ctx);
bool gl2_regular(const Gl2Weight& w, const Gl2Ctx& ctx);
Gl2Weight gl2_twist(const Gl2Weight& w, long long k, const Gl2Ctx& ctx);

// Tame two-dimensional inertial type over the unramified field of degree f.
struct Gl2TameType {
  int niveau;  // 1 or 2
  // niveau 1: {c1, c2} sorted, exponents of the level-f character;
  // niveau 2: {g, p^f g mod p^{2f}-1} sorted, g primitive.
  long long e1, e2;

  auto operator<=>(const Gl2TameType&) const = default;
};

Gl2TameType gl2_niveau1(long long c1, long long c2, const Gl2Ctx& ctx);
Gl2TameType gl2_niveau2(long long gamma, const Gl2Ctx& ctx);
Gl2TameType gl2_type_twist(const Gl2TameType& t, long long k, const Gl2Ctx& ctx);

// The conjectural weight set.
std::set<Gl2Weight> w_bdj(const Gl2TameType& rho, const Gl2Ctx& ctx);

struct Gl2CharZeroLabel {
  bool cuspidal;
  long long e1, e2;  // principal series exponents, or e1 = cuspidal exponent
  long long dim;     // q+1 or q-1
};

Gl2CharZeroLabel v_p(const Gl2TameType& rho, const Gl2Ctx& ctx);

// Jordan-Hoelder set of the mod-p reduction of v_p.
std::set<Gl2Weight> diamond_constituents(const Gl2TameType& rho, const Gl2Ctx& ctx);

// F(a,b) -> F(b + (p-2) sum p^i, a) on regular weights.
Gl2Weight r_p(const Gl2Weight& w, const Gl2Ctx& ctx);

// The subsets S of Z/f entering the multi-valued extension of r_p.
std::set<std::set<int>> ss_sets(const Gl2Weight& w, const Gl2Ctx& ctx);
// Weakened variant: drops the m_s != 0 requirement.
std::set<std::set<int>> ss_sets_weak(const Gl2Weight& w, const Gl2Ctx& ctx);

// Multi-valued extension of r_p; weak = use the weakened subset system.
std::set<Gl2Weight> r_ext(const Gl2Weight& w, const Gl2Ctx& ctx, bool weak = false);

// Signed decorated digit strings.
struct SignedInterval {
  int start;
  int len;  // in [1, f]
  bool positive;

  auto operator<=>(const SignedInterval&) const = default;
};

struct IntervalSystem {
  std::vector<int> values;  // alpha or beta, indexed by Z/f
  std::vector<SignedInterval> intervals;

  auto operator<=>(const IntervalSystem&) const = default;
};

enum class IntervalSide { lower, upper };  // values in [0,p-1] resp. [1,p]

bool check_interval_axioms(const IntervalSystem& sys, IntervalSide side,
                           const Gl2Ctx& ctx);

// All valid systems over a fixed value string.
std::vector<IntervalSystem> interval_systems(const std::vector<int>& values,
                                             IntervalSide side, const Gl2Ctx& ctx);

// The digit rewrite L_[0,p-1] -> L_[1,p]; twist_exponent_out, when non-null,
// receives sum of p^s over successors s of positive intervals.
IntervalSystem phi(const IntervalSystem& sys, const Gl2Ctx& ctx,
                   long long* twist_exponent_out = nullptr);
IntervalSystem phi_inverse(const IntervalSystem& sys, const Gl2Ctx& ctx);

struct SuccessorsReport {
  bool nonempty_agree;       // nonempty subsets coincide on both sides
  bool empty_in_subset_side; // always true: {} is in the subset system
  bool empty_in_interval_side;
  std::set<std::set<int>> subset_side;
  std::set<std::set<int>> interval_side;
};

// Compares the subset system of m = p-1-alpha with the successor sets of
// positive intervals over valid decorations of alpha.
SuccessorsReport successors_equivalence(const std::vector<int>& alpha,
                                        const Gl2Ctx& ctx);

struct BdjVerifyReport {
  long long checked = 0;
  bool passed = true;
  std::vector<std::string> counterexamples;
};

// Exhaustively checks both halves of the weight-set identity over all tame
// types: (i) regular parts related by r_p, (ii) full sets by r_ext.
BdjVerifyReport verify_bdj_theorem(const Gl2Ctx& ctx, bool weak = false);

// All canonical tame types for the context.
std::vector<Gl2TameType> all_gl2_types(const Gl2Ctx& ctx);

std::string gl2_weight_str(const Gl2Weight& w, const Gl2Ctx& ctx);
std::string gl2_type_str(const Gl2TameType& t);

}  // namespace serre
