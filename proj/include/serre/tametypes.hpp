#pragma once

#include <optional>
#include <vector>

#include "serre/basics.hpp"

namespace serre {

struct TameCtx {
  int n;
  int p;
  int r = 1;

  long long q() const { return pow_ll(p, r); }
};

struct TamePair {
  WeylPerm w;
  Weight mu;

  auto operator<=>(const TamePair&) const = default;
};

// One Frobenius orbit of tame characters: the full p-power orbit of
// omega_niveau^exp, with exp primitive of exact niveau.
struct TameOrbit {
  int niveau;
  long long exp;

  auto operator<=>(const TameOrbit&) const = default;
};

struct TameType {
  int n;
  int p;
  std::vector<TameOrbit> orbits;  // canonical: see from_orbits

  auto operator<=>(const TameType&) const = default;

  // Reduces each orbit to exact niveau and to the minimal exponent in its
  // p-power class, splitting imprimitive entries into repeated smaller
  // orbits; sorts by (niveau desc, exp asc).
  static TameType from_orbits(int n, int p, std::vector<TameOrbit> raw);
};

// (sigma w sigma^{-1}, sigma mu + (q - sigma w sigma^{-1}) nu)
TamePair act_pair(const Weight& nu, const WeylPerm& sigma, const TamePair& x,
                  const TameCtx& ctx);

// Every w-orbit exponent is primitive modulo (q^{n_i}-1)/(q^d-1), d | n_i proper.
bool is_good(const TamePair& x, const TameCtx& ctx);

// The tame inertial type attached to (w, mu); requires r = 1.
TameType tau_of_pair(const TamePair& x, const TameCtx& ctx);

bool tau_iso(const TameType& a, const TameType& b);

// Twist multiplies by omega^k; dual negates all exponents.
TameType tau_transform(const TameType& t, long long twist_k, bool dualize);

// All pairs (w, mu) with mu coordinates in [lo, hi] mapping to tau.
std::vector<TamePair> pairs_for_tau(const TameType& t, int lo, int hi);

// Deterministic scan for a good pair presenting tau (coordinates in
// [0, 3p), last coordinate in [0, p-2]).
std::optional<TamePair> find_good_pair(const TameType& t);

// Some good presenting pair has mu delta-deep in C_0.
bool is_generic(const TameType& t, int delta);

// Multiset of cuspidal parameters (orbit degree, orbit exponent) of a good pair.
std::vector<TameOrbit> cuspidal_support(const TamePair& x, const TameCtx& ctx);

// Exponent of the w-orbit through index i: sum mu_{w^k(i)} q^k.
long long orbit_exponent(const TamePair& x, int start, const TameCtx& ctx);

}  // namespace serre
