#pragma once

#include <map>

#include "serre/basics.hpp"

namespace serre {

// Element of the group ring Z[X(T)], sparse.
struct FormalCharacter {
  std::map<Weight, long long> terms;

  static FormalCharacter unit(int n) {
    FormalCharacter c;
    c.terms[Weight(n, 0)] = 1;
    return c;
  }
  static FormalCharacter monomial(const Weight& w, long long m = 1) {
    FormalCharacter c;
    if (m != 0) c.terms[w] = m;
    return c;
  }

  bool is_zero() const { return terms.empty(); }
  long long mass() const;

  void add_term(const Weight& w, long long m);
  FormalCharacter& operator+=(const FormalCharacter& o);
  FormalCharacter operator*(const FormalCharacter& o) const;  // convolution
  FormalCharacter scaled(long long c) const;

  bool operator==(const FormalCharacter&) const = default;

  // Multiplicity constant on W-orbits.
  bool is_w_symmetric() const;
};

// Integer combination of Weyl-module classes W(lambda), dominant keys only.
struct VirtualWeylSum {
  std::map<Weight, long long> terms;

  void add_term(const Weight& w, long long m);
  VirtualWeylSum& operator+=(const VirtualWeylSum& o);
  bool operator==(const VirtualWeylSum&) const = default;
};

struct Normalized {
  int sign;         // 0 on a wall
  Weight dominant;  // valid when sign != 0
};

// W(lambda) = sign * W(dominant); sign 0 iff lambda + rho' lies on a wall.
Normalized normalize_weyl(const Weight& lam, const RootCtx& ctx);

// Character of W(lambda) for dominant lambda, by branching down GL_n -> GL_1.
FormalCharacter weyl_character(const Weight& lam, const RootCtx& ctx);

// Weyl dimension product; lambda dominant.
long long weyl_dimension(const Weight& lam, const RootCtx& ctx);

// ch W(lambda) * chi = sum a_mu ch W(lambda + mu), collected and normalized.
VirtualWeylSum brauer_expand(const Weight& lam, const FormalCharacter& chi,
                             const RootCtx& ctx);

// Canonical labels modulo (q-1)X^0: W(lambda) and W(lambda + (q-1)(1,..,1))
// restrict to the same GL_n(F_q)-class; shift every label so the last
// coordinate lies in [0, q-2], folding coefficients.
VirtualWeylSum reduce_mod_det(const VirtualWeylSum& v, long long q);

FormalCharacter char_of_virtual(const VirtualWeylSum& v, const RootCtx& ctx);

}  // namespace serre
