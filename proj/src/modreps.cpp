#include "serre/modreps.hpp"

namespace serre {

bool is_p_restricted(const Weight& lam, int p) {
  for (size_t i = 0; i + 1 < lam.size(); ++i) {
    int d = lam[i] - lam[i + 1];
    if (d < 0 || d > p - 1) return false;
  }
  return true;
}

SerreWeight canonical_serre(const Weight& lam, int p) {
  require(is_p_restricted(lam, p), "weight is not p-restricted");
  int n = static_cast<int>(lam.size());
  SerreWeight f{n, p, lam};
  long long shift = mod_reduce(lam[n - 1], p - 1) - lam[n - 1];
  for (int i = 0; i < n; ++i) f.a[i] += static_cast<int>(shift);
  return f;
}

bool is_regular(const SerreWeight& f) {
  for (int i = 0; i + 1 < f.n; ++i)
    if (f.a[i] - f.a[i + 1] >= f.p - 1) return false;
  return true;
}

SerreWeight reg_normalize(const Weight& b, int p) {
  int n = static_cast<int>(b.size());
  Weight x(n);
  x[n - 1] = static_cast<int>(mod_reduce(b[n - 1], p - 1));
  for (int i = n - 2; i >= 0; --i)
    x[i] = x[i + 1] + static_cast<int>(mod_reduce(b[i] - x[i + 1], p - 1));
  return SerreWeight{n, p, x};
}

SerreWeight r_operator(const SerreWeight& f) {
  Weight v(f.n);
  for (int i = 0; i < f.n; ++i) v[i] = f.a[f.n - 1 - i] - (f.n - 1 - i);
  return reg_normalize(v, f.p);
}

SerreWeight gl3_reflection(const SerreWeight& f) {
  require(f.n == 3, "alcove swap is specific to n = 3");
  require(is_regular(f), "alcove swap needs a regular weight");
  Weight v{f.a[2] + f.p - 2, f.a[1], f.a[0] - f.p + 2};
  return canonical_serre(v, f.p);
}

SerreWeight serre_twist(const SerreWeight& f, long long k) {
  Weight v = f.a;
  int kk = static_cast<int>(mod_reduce(k, f.p - 1));
  for (auto& c : v) c += kk;
  return canonical_serre(v, f.p);
}

SerreWeight dual_twist(const SerreWeight& f, long long k, bool dualize) {
  Weight v = f.a;
  if (dualize) {
    Weight d(f.n);
    for (int i = 0; i < f.n; ++i) d[i] = -v[f.n - 1 - i];
    v = d;
  }
  int kk = static_cast<int>(mod_reduce(k, f.p - 1));
  for (auto& c : v) c += kk;
  return canonical_serre(v, f.p);
}

GLnFqIrred steinberg_factorize(const Weight& lam, int p, int r) {
  int n = static_cast<int>(lam.size());
  long long q = pow_ll(p, r);
  for (int i = 0; i + 1 < n; ++i) {
    long long d = lam[i] - lam[i + 1];
    require(d >= 0 && d <= q - 1, "weight is not q-restricted");
  }
  // digits of the consecutive differences, then of the last coordinate
  std::vector<std::vector<int>> ddig(n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    long long d = lam[i] - lam[i + 1];
    for (int k = 0; k < r; ++k) {
      ddig[i].push_back(static_cast<int>(d % p));
      d /= p;
    }
  }
  std::vector<long long> last(r, 0);
  long long t = lam[n - 1];
  for (int k = 0; k + 1 < r; ++k) {
    long long c = mod_reduce(t, p);
    last[k] = c;
    t = (t - c) / p;
  }
  last[r - 1] = t;
  GLnFqIrred out{n, p, r, {}};
  out.factors.resize(r);
  for (int k = 0; k < r; ++k) {
    Weight f(n);
    f[n - 1] = static_cast<int>(last[k]);
    for (int i = n - 2; i >= 0; --i) f[i] = f[i + 1] + ddig[i][k];
    out.factors[k] = std::move(f);
  }
  return out;
}

namespace {

// restricted n=3 weight strictly inside the upper alcove
bool upper_alcove_interior(const Weight& lam, int p) {
  return lam[0] - lam[1] < p - 1 && lam[1] - lam[2] < p - 1 && lam[0] - lam[2] > p - 2;
}

}  // namespace

std::set<SerreWeight> weyl_jh_gl3(const Weight& lam, int p) {
  require(lam.size() == 3, "weyl_jh_gl3 is specific to n = 3");
  require(is_p_restricted(lam, p), "weight is not p-restricted");
  SerreWeight f = canonical_serre(lam, p);
  std::set<SerreWeight> out{f};
  if (upper_alcove_interior(lam, p)) out.insert(gl3_reflection(f));
  return out;
}

std::set<SerreWeight> rjh_of_weyl_term(const Weight& nu, int p) {
  require(nu.size() == 3, "rjh_of_weyl_term is specific to n = 3");
  RootCtx ctx(3, p);
  Normalized nw = normalize_weyl(nu, ctx);
  std::set<SerreWeight> out;
  if (nw.sign == 0) return out;
  for (const auto& f : weyl_jh_gl3(nw.dominant, p)) out.insert(r_operator(f));
  return out;
}

std::map<SerreWeight, long long> f_expand_virtual(const VirtualWeylSum& v,
                                                  const RootCtx& ctx) {
  require(ctx.n == 2 || ctx.n == 3, "irreducible expansion known for n <= 3 only");
  std::map<SerreWeight, long long> out;
  auto bump = [&](const SerreWeight& f, long long c) {
    auto it = out.find(f);
    if (it == out.end()) {
      if (c != 0) out.emplace(f, c);
    } else if ((it->second += c) == 0) {
      out.erase(it);
    }
  };
  for (const auto& [lam, c] : v.terms) {
    require(is_p_restricted(lam, ctx.p),
            "virtual sum has a non-restricted Weyl label");
    SerreWeight f = canonical_serre(lam, ctx.p);
    bump(f, c);
    if (ctx.n == 3 && upper_alcove_interior(lam, ctx.p)) bump(gl3_reflection(f), c);
  }
  return out;
}

}  // namespace serre
