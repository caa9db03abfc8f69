#include "serre/weightsets.hpp"

#include <algorithm>
#include <map>

namespace serre {

std::string route_name(Route r) {
  switch (r) {
    case Route::exact_jantzen: return "exact-jantzen";
    case Route::generic: return "generic";
    case Route::gl3_lists: return "gl3-lists";
    case Route::adps: return "adps";
  }
  return "?";
}

std::set<SerreWeight> twist_set(const std::set<SerreWeight>& s, long long k) {
  std::set<SerreWeight> out;
  for (const auto& f : s) out.insert(serre_twist(f, k));
  return out;
}

std::set<SerreWeight> dual_set(const std::set<SerreWeight>& s) {
  std::set<SerreWeight> out;
  for (const auto& f : s) out.insert(dual_twist(f, 1 - f.n, true));
  return out;
}

WeightSet w_question_exact(const TameType& tau) {
  require(tau.n == 2 || tau.n == 3, "exact route implemented for n in {2,3}");
  auto pair = find_good_pair(tau);
  if (!pair) fail("no good presentation of the tame type exists");
  RootCtx ctx(tau.n, tau.p);
  VirtualWeylSum red = jantzen_virtual(pair->w, pair->mu, ctx, tau.p);
  auto expanded = f_expand_virtual(red, ctx);
  WeightSet ws{tau.n, tau.p, Route::exact_jantzen, {}};
  for (const auto& [f, c] : expanded) {
    if (c < 0) fail("reduction has a negative irreducible coefficient");
    ws.weights.insert(r_operator(f));
  }
  return ws;
}

namespace {

// All dominant lambda' (with their torus type w') such that
// tau(w', lambda' + rho) = tau, within the region reachable from the
// canonical restricted box by downward linkage.
std::vector<std::pair<WeylPerm, Weight>> matching_dominant_pairs(const TameType& tau) {
  auto base = find_good_pair(tau);
  if (!base) fail("no good presentation of the tame type exists");
  const int n = tau.n, p = tau.p;
  TameCtx tctx{n, p, 1};
  RootCtx ctx(n, p);
  const int V = n * n + 6;
  const int hi = n * p;
  const long long lo = -static_cast<long long>(n) * n * p;

  std::set<std::pair<WeylPerm, Weight>> out;
  for (const auto& sigma : WeylPerm::all(n)) {
    WeylPerm w2 = sigma.compose(base->w).compose(sigma.inverse());
    Weight smu = sigma.apply(base->mu);
    Weight nu(n, 0);
    auto rec = [&](auto&& self, int idx) -> void {
      if (idx == n) {
        Weight wnu = w2.apply(nu);
        Weight mu2(n);
        bool in_box = true;
        for (int i = 0; i < n && in_box; ++i) {
          mu2[i] = smu[i] + p * nu[i] - wnu[i];
          long long l = mu2[i] - ctx.rho[i];
          if (l < lo || l > hi) in_box = false;
        }
        if (!in_box) return;
        Weight lam = sub(mu2, ctx.rho);
        if (!is_dominant(lam)) return;
        out.emplace(w2, lam);
        return;
      }
      for (int v = -V; v <= V; ++v) {
        nu[idx] = v;
        self(self, idx + 1);
      }
    };
    rec(rec, 0);
  }
  std::vector<std::pair<WeylPerm, Weight>> res(out.begin(), out.end());
  for (const auto& [w2, lam] : res)
    require(tau_of_pair({w2, add(lam, ctx.rho)}, tctx) == tau,
            "orbit enumeration left the tame type");
  return res;
}

template <typename Fn>
void for_each_canonical_restricted(int n, int p, Fn&& fn) {
  std::vector<int> diffs(n - 1, 0);
  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == n - 1) {
      for (int last = 0; last <= p - 2; ++last) {
        Weight lam(n);
        lam[n - 1] = last;
        for (int i = n - 2; i >= 0; --i) lam[i] = lam[i + 1] + diffs[i];
        fn(lam);
      }
      return;
    }
    for (int d = 0; d <= p - 1; ++d) {
      diffs[idx] = d;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

WeightSet w_question_generic(const TameType& tau, int delta, bool* generic_ok) {
  RootCtx ctx(tau.n, tau.p);
  if (generic_ok) *generic_ok = is_generic(tau, delta);
  auto matches = matching_dominant_pairs(tau);

  // bucket by coordinate sum; lambda' <= lambda forces equal sums
  std::map<long long, std::vector<const Weight*>> by_sum;
  for (const auto& [w2, lam] : matches) by_sum[weight_sum(lam)].push_back(&lam);

  WeightSet ws{tau.n, tau.p, Route::generic, {}};
  for_each_canonical_restricted(tau.n, tau.p, [&](const Weight& lam) {
    auto it = by_sum.find(weight_sum(lam));
    if (it == by_sum.end()) return;
    for (const Weight* lp : it->second) {
      if (!dominance_leq(*lp, lam)) continue;
      if (up_arrow(*lp, lam, ctx)) {
        ws.weights.insert(canonical_serre(lam, tau.p));
        return;
      }
    }
  });
  return ws;
}

long long predicted_count(int n, CountMode mode, int p_hint) {
  int p = p_hint;
  if (p == 0) {
    p = n + 1;
    while (!is_prime(p)) ++p;
  }
  require(p > n, "need p > n for alcove combinatorics");
  if (mode == CountMode::formula) {
    RootCtx ctx(n, p);
    AlcoveAtlas atlas(ctx);
    long long pairs = 0;
    for (const auto& c : enumerate_restricted_alcoves(ctx))
      pairs += static_cast<long long>(dominant_below(atlas.rep(c), ctx).size());
    return static_cast<long long>(n) * pairs;
  }
  // enumeration: count the prediction for a concretely built deep type
  RootCtx ctx(n, p);
  int step = 0;
  for (int k = 1; k < p; ++k) {
    bool ok = true;
    for (int j = 1; j < n && ok; ++j)
      ok = j * (k + 1) > n && j * (k + 1) < p - n;
    if (ok) step = k;
  }
  require(step > 0, "p too small to build an n-deep weight");
  Weight mu(n);
  for (int i = 0; i < n; ++i) mu[i] = (n - 1 - i) * step;
  TameCtx tctx{n, p, 1};
  TameType tau = tau_of_pair({WeylPerm::identity(n), mu}, tctx);
  return static_cast<long long>(w_question_generic(tau, n).weights.size());
}

std::set<SerreWeight> a_set(const Weight& lam, int p) {
  require(lam.size() == 3, "A-sets are specific to n = 3");
  require(is_p_restricted(lam, p), "A-set argument must be restricted");
  RootCtx ctx(3, p);
  SerreWeight f = reg_normalize(sub(lam, ctx.rho), p);
  std::set<SerreWeight> out{f};
  if (f.a[0] - f.a[2] < p - 2) out.insert(gl3_reflection(f));
  return out;
}

namespace {

struct Gl3Shape {
  // orbits sorted niveau-descending; one of [3], [2,1], [1,1,1]
  std::vector<int> niveaux;
};

std::set<Weight> list_to_ctau(const std::vector<Weight>& entries, int p) {
  std::set<Weight> out;
  for (const auto& e : entries)
    if (is_p_restricted(e, p)) out.insert(canonical_serre(e, p).a);
  return out;
}

// niveau-1 closed form for exponents sorted as i >= j >= k within [0, p-2]
std::vector<Weight> niv1_entries(int i, int j, int k, int p) {
  return {
      {i, j, k},
      {j, k, i - p + 1},
      {k + p - 1, i, j},
      {k + p - 1, j, i - p + 1},
      {i, k, j - p + 1},
      {j + p - 1, i, k},
  };
}

std::vector<Weight> niv2_entries(int i, int j, int k, int p, bool adps) {
  std::vector<Weight> v = {
      {i, j, k},
      {j, k, i - p + 1},
      {k + p, i, j - 1},
      {k + p, j - 1, i - p + 1},
      {i, k + 1, j - p},
      {j + p, i, k - 1},
      {i + p - 1, j, k},
      {j, k, i - 2 * p + 2},
  };
  if (adps) v.erase(v.begin() + 5);  // the sixth entry is the extra weight
  return v;
}

std::vector<Weight> niv3_entries(int i, int j, int k, int p, bool adps) {
  std::vector<Weight> v = {
      {i, j, k},
      {j + 1, k, i - p},
      {k + p, i - 1, j},
      {k + p, j + 1, i - p - 1},
      {i, k + 1, j - p},
      {j + p, i, k - 1},
  };
  if (adps) {
    v.resize(3);
    std::vector<Weight> kept;
    for (const auto& e : v)
      if (!(e[0] - e[2] == p && e[0] - 1 > e[1] && e[1] > e[2])) kept.push_back(e);
    v = kept;
  }
  return v;
}

// parameters (i,j,k) with m' = j + pk, i = niveau-1 exponent lift
std::vector<std::array<int, 3>> niv2_params(long long m, long long c, int p) {
  std::vector<std::array<int, 3>> out;
  long long q2 = static_cast<long long>(p) * p - 1;
  for (long long mp : {m, mod_reduce(m * p, q2)}) {
    long long r = mp % (p + 1);
    if (r < 1 || r > p - 1) continue;
    long long k = (mp - r) / (p + 1);
    long long j = k + r;
    for (long long i = j; i <= k + p - 1; ++i) {
      if (mod_reduce(i - c, p - 1) != 0) continue;
      out.push_back({static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::array<int, 3>> niv3_params(long long m, int p) {
  std::vector<std::array<int, 3>> out;
  long long q3 = pow_ll(p, 3) - 1;
  for (long long mp : {m, mod_reduce(m * p, q3), mod_reduce(m * p * p, q3)}) {
    for (int k = 0; k <= p; ++k) {
      for (int j = k; j <= k + p; ++j) {
        long long i = mp - static_cast<long long>(p) * j -
                      static_cast<long long>(p) * p * k;
        if (i <= j || i - k > p) continue;
        out.push_back({static_cast<int>(i), j, k});
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::set<Weight> ctau_closed_form(const TameType& tau, bool adps) {
  const int p = tau.p;
  std::vector<int> shape;
  for (const auto& o : tau.orbits) shape.push_back(o.niveau);

  if (shape == std::vector<int>{1, 1, 1}) {
    std::vector<long long> e = {tau.orbits[0].exp, tau.orbits[1].exp, tau.orbits[2].exp};
    std::sort(e.rbegin(), e.rend());
    return list_to_ctau(
        niv1_entries(static_cast<int>(e[0]), static_cast<int>(e[1]),
                     static_cast<int>(e[2]), p),
        p);
  }
  if (shape == std::vector<int>{2, 1}) {
    auto params = niv2_params(tau.orbits[0].exp, tau.orbits[1].exp, p);
    require(!params.empty(), "no niveau-2 parameterisation found");
    std::set<Weight> out;
    for (const auto& [i, j, k] : params) {
      auto part = list_to_ctau(niv2_entries(i, j, k, p, adps), p);
      out.insert(part.begin(), part.end());
    }
    return out;
  }
  if (shape == std::vector<int>{3}) {
    auto params = niv3_params(tau.orbits[0].exp, p);
    if (params.empty()) {
      // dualise, compute, and map back via lambda -> -w0(lambda)
      TameType dual = tau_transform(tau, 0, true);
      auto cd = ctau_closed_form(dual, adps);
      std::set<Weight> out;
      for (const auto& lam : cd) {
        Weight m{-lam[2], -lam[1], -lam[0]};
        out.insert(canonical_serre(m, p).a);
      }
      return out;
    }
    std::set<Weight> out;
    for (const auto& [i, j, k] : params) {
      auto part = list_to_ctau(niv3_entries(i, j, k, p, adps), p);
      out.insert(part.begin(), part.end());
    }
    return out;
  }
  fail("unexpected niveau shape for n = 3");
}

}  // namespace

std::set<Weight> c_tau_gl3(const TameType& tau, Gl3Mode mode) {
  require(tau.n == 3, "C(tau) is specific to n = 3");
  if (mode == Gl3Mode::closed_form) return ctau_closed_form(tau, false);
  TameCtx tctx{3, tau.p, 1};
  std::set<Weight> out;
  for_each_canonical_restricted(3, tau.p, [&](const Weight& lam) {
    for (const auto& w : WeylPerm::all(3)) {
      TamePair x{w, lam};
      if (is_good(x, tctx) && tau_of_pair(x, tctx) == tau) {
        out.insert(lam);
        return;
      }
    }
  });
  return out;
}

WeightSet w_question_gl3(const TameType& tau) {
  WeightSet ws{tau.n, tau.p, Route::gl3_lists, {}};
  for (const auto& lam : c_tau_gl3(tau, Gl3Mode::search)) {
    auto part = a_set(lam, tau.p);
    ws.weights.insert(part.begin(), part.end());
  }
  return ws;
}

WeightSet adps_weights_gl3(const TameType& tau) {
  require(tau.n == 3, "ADPS comparison is specific to n = 3");
  WeightSet ws{tau.n, tau.p, Route::adps, {}};
  for (const auto& lam : ctau_closed_form(tau, true)) {
    auto part = a_set(lam, tau.p);
    ws.weights.insert(part.begin(), part.end());
  }
  return ws;
}

StructuralReport structural_checks(const TameType& tau) {
  require(tau.n == 3, "structural checks run on the n = 3 routes");
  StructuralReport rep;
  WeightSet base = w_question_gl3(tau);
  WeightSet twisted = w_question_gl3(tau_transform(tau, 1, false));
  rep.twist_ok = twisted.weights == twist_set(base.weights, 1);
  WeightSet dualled = w_question_gl3(tau_transform(tau, 0, true));
  rep.dual_ok = dualled.weights == dual_set(base.weights);
  if (!rep.twist_ok) rep.detail += "twist identity failed; ";
  if (!rep.dual_ok) rep.detail += "dual identity failed; ";
  return rep;
}

std::vector<TameType> all_tame_types(int n, int p) {
  // canonical exponents per niveau
  auto canonical_exps = [&](int d) {
    std::vector<long long> out;
    long long m = pow_ll(p, d) - 1;
    for (long long e = 0; e < m; ++e) {
      TameType probe = TameType::from_orbits(d, p, {{d, e}});
      if (probe.orbits.size() == 1 && probe.orbits[0].niveau == d &&
          probe.orbits[0].exp == e)
        out.push_back(e);
    }
    return out;
  };

  // partitions of n, parts descending
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  auto prec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      parts.push_back(cur);
      return;
    }
    for (int d = std::min(rest, maxpart); d >= 1; --d) {
      cur.push_back(d);
      self(self, rest - d, d);
      cur.pop_back();
    }
  };
  prec(prec, n, n);

  std::vector<TameType> out;
  for (const auto& part : parts) {
    // choose exponents, nondecreasing within runs of equal niveau
    std::vector<std::vector<long long>> pools;
    for (int d : part) pools.push_back(canonical_exps(d));
    std::vector<long long> chosen(part.size());
    auto choose = [&](auto&& self, size_t idx) -> void {
      if (idx == part.size()) {
        std::vector<TameOrbit> orbits;
        for (size_t t = 0; t < part.size(); ++t)
          orbits.push_back({part[t], chosen[t]});
        out.push_back(TameType::from_orbits(n, p, orbits));
        return;
      }
      long long lo = (idx > 0 && part[idx] == part[idx - 1]) ? chosen[idx - 1]
                                                             : std::numeric_limits<long long>::min();
      for (long long e : pools[idx]) {
        if (e < lo) continue;
        chosen[idx] = e;
        self(self, idx + 1);
      }
    };
    choose(choose, 0);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace serre
