#include "serre/jantzen.hpp"

#include <algorithm>

#include "serre/modreps.hpp"

namespace serre {

namespace {

FormalCharacter weyl_class_char(const Weight& lam, const RootCtx& ctx) {
  Normalized nw = normalize_weyl(lam, ctx);
  if (nw.sign == 0) return {};
  return weyl_character(nw.dominant, ctx).scaled(nw.sign);
}

FormalCharacter invert_unit(const FormalCharacter& c) {
  require(c.terms.size() == 1, "diagonal entry is not a unit");
  const auto& [w, m] = *c.terms.begin();
  require(m == 1 || m == -1, "diagonal entry is not a unit");
  return FormalCharacter::monomial(scale(-1, w), m);
}

WeylPerm longest_element(int n) {
  WeylPerm w0;
  w0.img.resize(n);
  for (int i = 0; i < n; ++i) w0.img[i] = n - 1 - i;
  return w0;
}

}  // namespace

bool HulsurkarData::gamma_is_diagonal() const {
  for (size_t a = 0; a < gamma.size(); ++a)
    for (size_t b = 0; b < gamma.size(); ++b)
      if (a != b && !gamma[a][b].is_zero()) return false;
  return true;
}

HulsurkarData hulsurkar(const RootCtx& ctx) {
  HulsurkarData h;
  h.n = ctx.n;
  h.p = ctx.p;
  h.elems = WeylPerm::all(ctx.n);
  const int m = static_cast<int>(h.elems.size());
  WeylPerm w0 = longest_element(ctx.n);

  h.matrix.assign(m, std::vector<FormalCharacter>(m));
  for (int a = 0; a < m; ++a) {
    Weight e_w0s = eps_sigma(w0.compose(h.elems[a]), ctx);
    for (int b = 0; b < m; ++b) {
      Weight arg = sub(sub(eps_sigma(h.elems[b], ctx), e_w0s), ctx.rho);
      h.matrix[a][b] = weyl_class_char(arg, ctx).scaled(h.elems[b].sign());
    }
  }

  // topological ordering of the nonzero off-diagonal support
  std::vector<int> indeg(m, 0);
  std::vector<std::vector<int>> succ(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && !h.matrix[a][b].is_zero()) {
        succ[a].push_back(b);
        ++indeg[b];
      }
  std::vector<int> ready;
  for (int a = 0; a < m; ++a)
    if (indeg[a] == 0) ready.push_back(a);
  while (!ready.empty()) {
    std::sort(ready.begin(), ready.end());
    int a = ready.front();
    ready.erase(ready.begin());
    h.order.push_back(a);
    for (int b : succ[a])
      if (--indeg[b] == 0) ready.push_back(b);
  }
  require(static_cast<int>(h.order.size()) == m,
          "no triangular ordering: support graph has a cycle");

  // invert the reordered upper-triangular matrix by back substitution
  std::vector<std::vector<FormalCharacter>> gperm(m, std::vector<FormalCharacter>(m));
  auto at = [&](int a, int b) -> const FormalCharacter& {
    return h.matrix[h.order[a]][h.order[b]];
  };
  for (int a = m - 1; a >= 0; --a) {
    FormalCharacter diag_inv = invert_unit(at(a, a));
    gperm[a][a] = diag_inv;
    for (int b = a + 1; b < m; ++b) {
      FormalCharacter acc;
      for (int k = a + 1; k <= b; ++k) acc += at(a, k) * gperm[k][b];
      gperm[a][b] = (diag_inv * acc).scaled(-1);
    }
  }
  h.gamma.assign(m, std::vector<FormalCharacter>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) h.gamma[h.order[a]][h.order[b]] = gperm[a][b];
  return h;
}

bool verify_hulsurkar_identity(const HulsurkarData& h) {
  const int m = static_cast<int>(h.elems.size());
  FormalCharacter one = FormalCharacter::unit(h.n);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      FormalCharacter acc;
      for (int k = 0; k < m; ++k) acc += h.matrix[a][k] * h.gamma[k][b];
      if (a == b ? !(acc == one) : !acc.is_zero()) return false;
    }
  }
  return true;
}

VirtualWeylSum jantzen_virtual(const WeylPerm& w, const Weight& lambda,
                               const RootCtx& ctx, long long q,
                               const HulsurkarData* cached) {
  HulsurkarData local;
  if (!cached) {
    local = hulsurkar(ctx);
    cached = &local;
  }
  Weight mu = sub(lambda, ctx.rho);
  WeylPerm w0 = longest_element(ctx.n);

  const int m = static_cast<int>(cached->elems.size());
  VirtualWeylSum out;
  for (int a = 0; a < m; ++a) {
    const WeylPerm& sigma = cached->elems[a];
    Weight qrho_sigma = rho_sigma(sigma, ctx);
    for (auto& c : qrho_sigma) c = static_cast<int>(q) * c;
    for (int b = 0; b < m; ++b) {
      if (cached->gamma[a][b].is_zero()) continue;
      Weight e = eps_sigma(w0.compose(cached->elems[b]), ctx);
      Weight arg = add(dot_action(sigma, sub(mu, w.apply(e)), ctx), qrho_sigma);
      out += brauer_expand(arg, cached->gamma[a][b], ctx);
    }
  }
  return reduce_mod_det(out, q);
}

long long dl_dimension(const WeylPerm& w, int n, long long q) {
  long long num = 1;
  for (int i = 1; i <= n; ++i) num *= pow_ll(q, i) - 1;
  long long den = 1;
  for (const auto& cyc : w.cycles()) den *= pow_ll(q, static_cast<int>(cyc.size())) - 1;
  return num / den;
}

std::set<Weight> generic_jh(const WeylPerm& w, const Weight& mu, const RootCtx& ctx) {
  const int n = ctx.n, p = ctx.p;
  WeylPerm w0 = longest_element(n);

  int mu_max = 0;
  for (int c : mu) mu_max = std::max(mu_max, std::abs(c));
  const int bound = (mu_max + p * (n - 1)) / (p - 1) + 2;

  // exists nu in the box with the prescribed coordinate sum such that
  // some sigma makes sigma.(mu + (w - p)nu) dominant and linked above target
  auto admits_nu = [&](const Weight& target) -> bool {
    long long need = weight_sum(mu) - weight_sum(target);
    if (need % (p - 1) != 0) return false;
    long long nu_sum = need / (p - 1);
    if (std::abs(nu_sum) > static_cast<long long>(bound) * n) return false;
    Weight nu(n);
    bool found = false;
    auto rec = [&](auto&& self, int k, long long acc) -> void {
      if (found) return;
      if (k == n - 1) {
        long long last = nu_sum - acc;
        if (last < -bound || last > bound) return;
        nu[k] = static_cast<int>(last);
        Weight x = add(mu, sub(w.apply(nu), scale(p, nu)));
        Normalized nx = normalize_weyl(x, ctx);
        if (nx.sign == 0) return;  // no sigma yields a dominant weight
        if (up_arrow(nx.dominant, target, ctx)) found = true;
        return;
      }
      for (int v = -bound; v <= bound && !found; ++v) {
        nu[k] = v;
        self(self, k + 1, acc + v);
      }
    };
    rec(rec, 0, 0);
    return found;
  };

  std::set<Weight> out;
  std::vector<int> diffs(n - 1);
  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == n - 1) {
      for (int last = 0; last <= p - 2; ++last) {
        Weight lam(n);
        lam[n - 1] = last;
        for (int i = n - 2; i >= 0; --i) lam[i] = lam[i + 1] + diffs[i];
        Weight target = dot_action(w0, sub(lam, scale(p, ctx.rho)), ctx);
        if (admits_nu(target)) out.insert(lam);
      }
      return;
    }
    for (int d = 0; d <= p - 1; ++d) {
      diffs[idx] = d;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace serre
