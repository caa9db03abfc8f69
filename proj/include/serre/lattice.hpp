#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "serre/basics.hpp"

namespace serre {

// An alcove, stored as the level n_alpha of every positive root:
// n_alpha p < <lambda + rho', alpha^vee> < (n_alpha + 1) p on the interior.
struct Alcove {
  std::vector<int> levels;  // indexed like RootCtx::pos_roots

  auto operator<=>(const Alcove&) const = default;

  int level(const RootCtx& ctx, int i, int j) const {
    for (int k = 0; k < ctx.num_pos_roots(); ++k)
      if (ctx.pos_roots[k] == std::make_pair(i, j)) return levels[k];
    fail("not a positive root");
  }
};

struct OnWall {
  int i, j;   // the wall's root
  int level;  // <lambda + rho', alpha^vee> = level * p
};

using AlcoveOrWall = std::variant<Alcove, OnWall>;

struct AlcovePredicates {
  bool restricted;
  bool dominant;
  bool is_c0;
};

Weight dot_action(const WeylPerm& w, const Weight& lam, const RootCtx& ctx);

// s_{alpha, mp} . lambda for alpha = eps_i - eps_j
Weight affine_reflect(const Weight& lam, int i, int j, int m, const RootCtx& ctx);

// mu - lam a nonnegative sum of simple roots
bool dominance_leq(const Weight& lam, const Weight& mu);

bool is_dominant(const Weight& lam);

AlcoveOrWall alcove_of(const Weight& lam, const RootCtx& ctx);

// Throws if lam lies on a wall.
Alcove alcove_of_interior(const Weight& lam, const RootCtx& ctx);

AlcovePredicates alcove_predicates(const Alcove& c, const RootCtx& ctx);

// All (n-1)! restricted alcoves; requires p > n.
std::vector<Alcove> enumerate_restricted_alcoves(const RootCtx& ctx);

// Strong-linkage order on weights.
bool up_arrow(const Weight& lam, const Weight& mu, const RootCtx& ctx);

// Strong-linkage order on alcoves; requires p > n.
bool up_arrow_alcove(const Alcove& c, const Alcove& cp, const RootCtx& ctx);

// rho'_sigma = sum of omega'_alpha over simple alpha with sigma^{-1}(alpha) < 0,
// with omega'_{alpha_i} = eps_1 + ... + eps_i.
Weight rho_sigma(const WeylPerm& sigma, const RootCtx& ctx);

// eps'_sigma = sigma^{-1} rho'_sigma
Weight eps_sigma(const WeylPerm& sigma, const RootCtx& ctx);

// The n elements sigma with sigma . C_0 + p rho'_sigma = C_0.
std::vector<WeylPerm> w1_subgroup(const RootCtx& ctx);

bool is_deep(const Weight& lam, int delta, const Alcove& c, const RootCtx& ctx);

// delta-deep in the lowest alcove.
bool is_deep_in_c0(const Weight& lam, int delta, const RootCtx& ctx);

// All dominant lam' with lam' up-arrow lam, sorted lexicographically.
std::vector<Weight> dominant_below(const Weight& lam, const RootCtx& ctx);

// Representative weights, one per alcove, all in the W_p dot-orbit of 0.
// Grown on demand by wall reflections from C_0; requires p > n.
class AlcoveAtlas {
 public:
  explicit AlcoveAtlas(const RootCtx& ctx);

  // Representative of the given alcove (searches outward from C_0).
  Weight rep(const Alcove& c);

 private:
  const RootCtx& ctx_;
  std::map<Alcove, Weight> reps_;
  std::vector<std::pair<Alcove, Weight>> frontier_;

  void expand_once();
};

}  // namespace serre
