#include "serre/lattice.hpp"

#include <deque>
#include <set>

namespace serre {

Weight dot_action(const WeylPerm& w, const Weight& lam, const RootCtx& ctx) {
  return sub(w.apply(add(lam, ctx.rho)), ctx.rho);
}

Weight affine_reflect(const Weight& lam, int i, int j, int m, const RootCtx& ctx) {
  int c = ctx.shifted_pairing(lam, i, j) - m * ctx.p;
  Weight r = lam;
  r[i] -= c;
  r[j] += c;
  return r;
}

bool dominance_leq(const Weight& lam, const Weight& mu) {
  if (lam.size() != mu.size()) return false;
  long long acc = 0;
  for (size_t i = 0; i < lam.size(); ++i) {
    acc += mu[i] - lam[i];
    if (acc < 0) return false;
  }
  return acc == 0;
}

bool is_dominant(const Weight& lam) {
  for (size_t i = 0; i + 1 < lam.size(); ++i)
    if (lam[i] < lam[i + 1]) return false;
  return true;
}

namespace {
int floor_div(int a, int b) {
  int q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}
}  // namespace

AlcoveOrWall alcove_of(const Weight& lam, const RootCtx& ctx) {
  Alcove c;
  c.levels.resize(ctx.num_pos_roots());
  for (int k = 0; k < ctx.num_pos_roots(); ++k) {
    auto [i, j] = ctx.pos_roots[k];
    int v = ctx.shifted_pairing(lam, i, j);
    if (v % ctx.p == 0) return OnWall{i, j, v / ctx.p};
    c.levels[k] = floor_div(v, ctx.p);
  }
  return c;
}

Alcove alcove_of_interior(const Weight& lam, const RootCtx& ctx) {
  auto a = alcove_of(lam, ctx);
  if (auto* w = std::get_if<OnWall>(&a))
    fail("weight lies on the wall of root (" + std::to_string(w->i + 1) + "," +
         std::to_string(w->j + 1) + ")");
  return std::get<Alcove>(a);
}

AlcovePredicates alcove_predicates(const Alcove& c, const RootCtx& ctx) {
  AlcovePredicates out{true, true, true};
  for (int k = 0; k < ctx.num_pos_roots(); ++k) {
    auto [i, j] = ctx.pos_roots[k];
    if (c.levels[k] != 0) out.is_c0 = false;
    if (c.levels[k] < 0) out.dominant = false;
    if (j == i + 1 && c.levels[k] != 0) out.restricted = false;
  }
  return out;
}

std::vector<Alcove> enumerate_restricted_alcoves(const RootCtx& ctx) {
  require(ctx.p > ctx.n, "p <= n: alcoves may contain no weights");
  Weight zero(ctx.n, 0);
  std::set<Alcove> seen;
  for (const auto& sigma : WeylPerm::all(ctx.n)) {
    Weight pt = add(dot_action(sigma, zero, ctx), scale(ctx.p, rho_sigma(sigma, ctx)));
    Alcove c = alcove_of_interior(pt, ctx);
    require(alcove_predicates(c, ctx).restricted, "sigma . C_0 + p rho'_sigma not restricted");
    seen.insert(c);
  }
  long long want = 1;
  for (int i = 2; i < ctx.n; ++i) want *= i;
  require(static_cast<long long>(seen.size()) == want,
          "restricted alcove count differs from (n-1)!");
  return {seen.begin(), seen.end()};
}

bool up_arrow(const Weight& lam, const Weight& mu, const RootCtx& ctx) {
  if (lam == mu) return true;
  if (!dominance_leq(lam, mu)) return false;
  std::set<Weight> visited{lam};
  std::deque<Weight> queue{lam};
  while (!queue.empty()) {
    Weight nu = queue.front();
    queue.pop_front();
    for (auto [i, j] : ctx.pos_roots) {
      int c = ctx.shifted_pairing(nu, i, j);
      // raising reflections: m p >= c
      for (int m = c / ctx.p + (c % ctx.p > 0 ? 1 : 0);; ++m) {
        if (m * ctx.p == c) continue;  // fixes nu
        Weight next = affine_reflect(nu, i, j, m, ctx);
        if (!dominance_leq(next, mu)) break;  // monotone in m
        if (next == mu) return true;
        if (visited.insert(next).second) queue.push_back(next);
      }
    }
  }
  return false;
}

Weight rho_sigma(const WeylPerm& sigma, const RootCtx& ctx) {
  Weight out(ctx.n, 0);
  WeylPerm inv = sigma.inverse();
  for (int i = 0; i + 1 < ctx.n; ++i) {
    if (inv(i) > inv(i + 1)) {
      // omega'_{alpha_{i+1}} = eps_1 + ... + eps_{i+1}
      for (int k = 0; k <= i; ++k) out[k] += 1;
    }
  }
  return out;
}

Weight eps_sigma(const WeylPerm& sigma, const RootCtx& ctx) {
  return sigma.inverse().apply(rho_sigma(sigma, ctx));
}

std::vector<WeylPerm> w1_subgroup(const RootCtx& ctx) {
  std::vector<WeylPerm> out;
  WeylPerm c = WeylPerm::n_cycle(ctx.n);
  WeylPerm cur = WeylPerm::identity(ctx.n);
  Weight zero(ctx.n, 0);
  for (int k = 0; k < ctx.n; ++k) {
    Weight pt = add(dot_action(cur, zero, ctx), scale(ctx.p, rho_sigma(cur, ctx)));
    require(alcove_predicates(alcove_of_interior(pt, ctx), ctx).is_c0,
            "W_1 element does not stabilise C_0");
    out.push_back(cur);
    cur = c.compose(cur);
  }
  return out;
}

bool is_deep(const Weight& lam, int delta, const Alcove& c, const RootCtx& ctx) {
  require(delta >= 0, "delta must be nonnegative");
  for (int k = 0; k < ctx.num_pos_roots(); ++k) {
    auto [i, j] = ctx.pos_roots[k];
    int v = ctx.shifted_pairing(lam, i, j);
    if (!(c.levels[k] * ctx.p + delta < v && v < (c.levels[k] + 1) * ctx.p - delta))
      return false;
  }
  return true;
}

bool is_deep_in_c0(const Weight& lam, int delta, const RootCtx& ctx) {
  Alcove c0;
  c0.levels.assign(ctx.num_pos_roots(), 0);
  return is_deep(lam, delta, c0, ctx);
}

std::vector<Weight> dominant_below(const Weight& lam, const RootCtx& ctx) {
  require(is_dominant(lam), "dominant_below needs a dominant weight");
  long long total = weight_sum(lam);
  // dominant nu <= lam forces nu_1 <= lam_1 and nu_n >= total - (n-1) lam_1
  int hi = lam[0];
  long long lo = total - static_cast<long long>(ctx.n - 1) * lam[0];
  std::set<Weight> out;
  for (const auto& w : WeylPerm::all(ctx.n)) {
    Weight base = dot_action(w, lam, ctx);
    // nu = base + p beta, sum(beta) = 0
    std::vector<int> bmin(ctx.n), bmax(ctx.n);
    for (int i = 0; i < ctx.n; ++i) {
      bmin[i] = floor_div(static_cast<int>(lo) - base[i], ctx.p) - 1;
      bmax[i] = floor_div(hi - base[i], ctx.p) + 1;
    }
    Weight beta(ctx.n, 0);
    long long bsum = 0;
    auto rec = [&](auto&& self, int idx) -> void {
      if (idx == ctx.n - 1) {
        long long last = -bsum;
        if (last < bmin[idx] || last > bmax[idx]) return;
        beta[idx] = static_cast<int>(last);
        Weight nu = base;
        for (int i = 0; i < ctx.n; ++i) nu[i] += ctx.p * beta[i];
        if (is_dominant(nu) && dominance_leq(nu, lam) && up_arrow(nu, lam, ctx))
          out.insert(nu);
        return;
      }
      for (int b = bmin[idx]; b <= bmax[idx]; ++b) {
        beta[idx] = b;
        bsum += b;
        self(self, idx + 1);
        bsum -= b;
      }
    };
    rec(rec, 0);
  }
  return {out.begin(), out.end()};
}

AlcoveAtlas::AlcoveAtlas(const RootCtx& ctx) : ctx_(ctx) {
  require(ctx.p > ctx.n, "p <= n: alcoves may contain no weights");
  Weight zero(ctx_.n, 0);
  Alcove c0 = alcove_of_interior(zero, ctx_);
  reps_.emplace(c0, zero);
  frontier_.emplace_back(c0, zero);
}

void AlcoveAtlas::expand_once() {
  std::vector<std::pair<Alcove, Weight>> next;
  for (const auto& [c, w] : frontier_) {
    for (int k = 0; k < ctx_.num_pos_roots(); ++k) {
      auto [i, j] = ctx_.pos_roots[k];
      for (int m : {c.levels[k], c.levels[k] + 1}) {
        Weight nb = affine_reflect(w, i, j, m, ctx_);
        Alcove cb = alcove_of_interior(nb, ctx_);
        if (reps_.emplace(cb, nb).second) next.emplace_back(cb, nb);
      }
    }
  }
  frontier_ = std::move(next);
}

Weight AlcoveAtlas::rep(const Alcove& c) {
  for (;;) {
    auto it = reps_.find(c);
    if (it != reps_.end()) return it->second;
    require(!frontier_.empty(), "alcove unreachable by wall reflections");
    expand_once();
  }
}

bool up_arrow_alcove(const Alcove& c, const Alcove& cp, const RootCtx& ctx) {
  AlcoveAtlas atlas(ctx);
  return up_arrow(atlas.rep(c), atlas.rep(cp), ctx);
}

}  // namespace serre
