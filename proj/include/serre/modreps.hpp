#pragma once

#include <map>
#include <set>

#include "serre/basics.hpp"
#include "serre/characters.hpp"

namespace serre {

// Canonical label of an irreducible GL_n(F_p)-representation:
// consecutive differences in [0, p-1], last coordinate in [0, p-2].
struct SerreWeight {
  int n;
  int p;
  Weight a;

  auto operator<=>(const SerreWeight&) const = default;
};

// Requires the differences to be p-restricted; shifts into canonical form.
SerreWeight canonical_serre(const Weight& lam, int p);

bool is_regular(const SerreWeight& f);

// The unique regular Serre weight whose coordinates match b mod p-1.
SerreWeight reg_normalize(const Weight& b, int p);

// F(a_1,...,a_n) -> F(a_n-(n-1),...,a_2-1,a_1)_reg
SerreWeight r_operator(const SerreWeight& f);

// n=3 alcove swap (a,b,c) -> (c+p-2,b,a-p+2) on regular weights.
SerreWeight gl3_reflection(const SerreWeight& f);

// dual: (a_1,...,a_n) -> (-a_n,...,-a_1); then twist by det^k; canonicalize.
SerreWeight dual_twist(const SerreWeight& f, long long k, bool dualize);

SerreWeight serre_twist(const SerreWeight& f, long long k);

// Irreducible of GL_n(F_q), q = p^r, as Frobenius-twist factors.
struct GLnFqIrred {
  int n, p, r;
  std::vector<Weight> factors;  // p-restricted, lambda = sum factors[i] p^i
};

GLnFqIrred steinberg_factorize(const Weight& lam, int p, int r);

// Jordan-Hoelder set of W(lambda) for p-restricted lambda, n = 3.
std::set<SerreWeight> weyl_jh_gl3(const Weight& lam, int p);

// R(JH(W(nu))) for n = 3; empty when W(nu) vanishes on a wall.
std::set<SerreWeight> rjh_of_weyl_term(const Weight& nu, int p);

// Full Grothendieck-group expansion of a virtual Weyl sum into irreducible
// GL_n(F_p) classes, n in {2,3}; every dominant label must be p-restricted.
std::map<SerreWeight, long long> f_expand_virtual(const VirtualWeylSum& v,
                                                  const RootCtx& ctx);

bool is_p_restricted(const Weight& lam, int p);

}  // namespace serre
