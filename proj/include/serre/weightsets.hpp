#pragma once

#include <set>
#include <string>

#include "serre/jantzen.hpp"
#include "serre/modreps.hpp"
#include "serre/tametypes.hpp"

namespace serre {

enum class Route { exact_jantzen, generic, gl3_lists, adps };

std::string route_name(Route r);

struct WeightSet {
  int n;
  int p;
  Route provenance;
  std::set<SerreWeight> weights;

  bool same_weights(const WeightSet& o) const { return weights == o.weights; }
};

// Predicted weights via Jantzen reduction of a good presentation, n in {2,3}.
WeightSet w_question_exact(const TameType& tau);

// Predicted weights for generic tau, any n: F(lambda) is predicted iff
// tau matches tau(w', lambda' + rho) for some dominant lambda' linked below
// lambda.  Emits no guarantee when tau is not delta-generic.
WeightSet w_question_generic(const TameType& tau, int delta, bool* generic_ok = nullptr);

enum class CountMode { formula, enumeration };

// Number of weights predicted for generic tau; p_hint picks the prime used
// for the alcove combinatorics (any p > n gives the same count).
long long predicted_count(int n, CountMode mode, int p_hint = 0);

enum class Gl3Mode { search, closed_form };

// The restricted weights lambda with (w, lambda) good and tau(w, lambda) = tau
// for some w; canonical representatives.
std::set<Weight> c_tau_gl3(const TameType& tau, Gl3Mode mode);

// {F(lambda - rho)_reg} plus its alcove swap when that weight is in the
// lower alcove.
std::set<SerreWeight> a_set(const Weight& lam, int p);

// Union of a_set over c_tau_gl3.
WeightSet w_question_gl3(const TameType& tau);

// The niveau-wise ADPS prediction (lists with the removal rules applied).
WeightSet adps_weights_gl3(const TameType& tau);

struct StructuralReport {
  bool twist_ok = false;
  bool dual_ok = false;
  std::string detail;
};

// Twist and duality identities on the computed sets (n = 3 route).
StructuralReport structural_checks(const TameType& tau);

// All canonical tame types for (n, p).
std::vector<TameType> all_tame_types(int n, int p);

// det-twist of a whole weight set.
std::set<SerreWeight> twist_set(const std::set<SerreWeight>& s, long long k);

// {F^dual tensor det^{1-n}} of a whole weight set.
std::set<SerreWeight> dual_set(const std::set<SerreWeight>& s);

}  // namespace serre
