#include "serre/tametypes.hpp"

#include <algorithm>
#include <set>

#include "serre/lattice.hpp"

namespace serre {

namespace {

long long orbit_min_exp(long long e, int d, int p) {
  long long m = pow_ll(p, d) - 1;
  e = mod_reduce(e, m);
  long long best = e;
  for (int k = 1; k < d; ++k) {
    e = mod_reduce(e * p, m);
    best = std::min(best, e);
  }
  return best;
}

// smallest d' | d such that omega_d^e factors through omega_{d'}
int exact_niveau(long long e, int d, int p) {
  long long m = pow_ll(p, d) - 1;
  e = mod_reduce(e, m);
  for (int dp = 1; dp < d; ++dp) {
    if (d % dp != 0) continue;
    long long quot = m / (pow_ll(p, dp) - 1);
    if (e % quot == 0) return dp;
  }
  return d;
}

}  // namespace

TameType TameType::from_orbits(int n, int p, std::vector<TameOrbit> raw) {
  TameType t{n, p, {}};
  for (const auto& o : raw) {
    require(o.niveau >= 1, "orbit niveau must be positive");
    long long m = pow_ll(p, o.niveau) - 1;
    long long e = mod_reduce(o.exp, m);
    int d = exact_niveau(e, o.niveau, p);
    long long ep = e / (m / (pow_ll(p, d) - 1));
    long long canon = orbit_min_exp(ep, d, p);
    for (int c = 0; c < o.niveau / d; ++c) t.orbits.push_back({d, canon});
  }
  int total = 0;
  for (const auto& o : t.orbits) total += o.niveau;
  require(total == n, "orbit degrees must sum to n");
  std::sort(t.orbits.begin(), t.orbits.end(), [](const TameOrbit& a, const TameOrbit& b) {
    if (a.niveau != b.niveau) return a.niveau > b.niveau;
    return a.exp < b.exp;
  });
  return t;
}

TamePair act_pair(const Weight& nu, const WeylPerm& sigma, const TamePair& x,
                  const TameCtx& ctx) {
  WeylPerm w2 = sigma.compose(x.w).compose(sigma.inverse());
  Weight mu2 = sigma.apply(x.mu);
  Weight wnu = w2.apply(nu);
  for (int i = 0; i < ctx.n; ++i)
    mu2[i] += static_cast<int>(ctx.q()) * nu[i] - wnu[i];
  return {w2, mu2};
}

long long orbit_exponent(const TamePair& x, int start, const TameCtx& ctx) {
  long long q = ctx.q();
  long long e = 0, qk = 1;
  int i = start;
  do {
    e += x.mu[i] * qk;
    qk *= q;
    i = x.w(i);
  } while (i != start);
  return mod_reduce(e, qk - 1);  // qk = q^{orbit size} here
}

bool is_good(const TamePair& x, const TameCtx& ctx) {
  long long q = ctx.q();
  for (const auto& cyc : x.w.cycles()) {
    int ni = static_cast<int>(cyc.size());
    long long m = pow_ll(q, ni) - 1;
    long long e = mod_reduce(orbit_exponent(x, cyc[0], ctx), m);
    for (int d = 1; d < ni; ++d) {
      if (ni % d != 0) continue;
      if (e % (m / (pow_ll(q, d) - 1)) == 0) return false;
    }
  }
  return true;
}

TameType tau_of_pair(const TamePair& x, const TameCtx& ctx) {
  require(ctx.r == 1, "tame types are canonical only for q = p");
  std::vector<TameOrbit> raw;
  for (const auto& cyc : x.w.cycles())
    raw.push_back({static_cast<int>(cyc.size()), orbit_exponent(x, cyc[0], ctx)});
  return TameType::from_orbits(ctx.n, ctx.p, std::move(raw));
}

bool tau_iso(const TameType& a, const TameType& b) {
  require(a.n == b.n && a.p == b.p, "tame types live over different (n, p)");
  return a.orbits == b.orbits;
}

TameType tau_transform(const TameType& t, long long twist_k, bool dualize) {
  std::vector<TameOrbit> raw;
  for (const auto& o : t.orbits) {
    long long m = pow_ll(t.p, o.niveau) - 1;
    long long e = o.exp;
    if (dualize) e = -e;
    e += twist_k * (m / (t.p - 1));
    raw.push_back({o.niveau, mod_reduce(e, m)});
  }
  return TameType::from_orbits(t.n, t.p, std::move(raw));
}

std::vector<TamePair> pairs_for_tau(const TameType& t, int lo, int hi) {
  require(hi >= lo, "empty coordinate box");
  TameCtx ctx{t.n, t.p, 1};
  std::vector<TamePair> out;
  for (const auto& w : WeylPerm::all(t.n)) {
    Weight mu(t.n, lo);
    auto rec = [&](auto&& self, int idx) -> void {
      if (idx == t.n) {
        TamePair x{w, mu};
        if (tau_of_pair(x, ctx) == t) out.push_back(x);
        return;
      }
      for (int v = lo; v <= hi; ++v) {
        mu[idx] = v;
        self(self, idx + 1);
      }
    };
    rec(rec, 0);
  }
  return out;
}

std::optional<TamePair> find_good_pair(const TameType& t) {
  TameCtx ctx{t.n, t.p, 1};
  for (const auto& w : WeylPerm::all(t.n)) {
    Weight mu(t.n, 0);
    std::optional<TamePair> found;
    auto rec = [&](auto&& self, int idx) -> void {
      if (found) return;
      if (idx == t.n) {
        TamePair x{w, mu};
        if (is_good(x, ctx) && tau_of_pair(x, ctx) == t) found = x;
        return;
      }
      int hi = (idx == t.n - 1) ? t.p - 2 : 3 * t.p - 1;
      for (int v = 0; v <= hi && !found; ++v) {
        mu[idx] = v;
        self(self, idx + 1);
      }
    };
    rec(rec, 0);
    if (found) return found;
  }
  return std::nullopt;
}

bool is_generic(const TameType& t, int delta) {
  require(delta >= 0, "delta must be nonnegative");
  if (delta >= t.p) return false;
  TameCtx ctx{t.n, t.p, 1};
  RootCtx rctx(t.n, t.p);
  // mu in C_0 with mu_n normalised to [0, p-2]: coordinates then lie in
  // [0 - n, (p-2) + (n-1) + p] comfortably.
  for (const auto& w : WeylPerm::all(t.n)) {
    Weight mu(t.n, 0);
    bool found = false;
    auto rec = [&](auto&& self, int idx) -> void {
      if (found) return;
      if (idx == t.n) {
        TamePair x{w, mu};
        if (is_deep_in_c0(mu, delta, rctx) && is_good(x, ctx) &&
            tau_of_pair(x, ctx) == t)
          found = true;
        return;
      }
      int lo = (idx == t.n - 1) ? 0 : -(t.n);
      int hi = (idx == t.n - 1) ? t.p - 2 : 2 * t.p;
      for (int v = lo; v <= hi && !found; ++v) {
        mu[idx] = v;
        self(self, idx + 1);
      }
    };
    rec(rec, 0);
    if (found) return true;
  }
  return false;
}

std::vector<TameOrbit> cuspidal_support(const TamePair& x, const TameCtx& ctx) {
  require(is_good(x, ctx), "cuspidal support defined via good pairs only");
  std::vector<TameOrbit> out;
  for (const auto& cyc : x.w.cycles())
    out.push_back({static_cast<int>(cyc.size()), orbit_exponent(x, cyc[0], ctx)});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace serre
