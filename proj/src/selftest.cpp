#include "serre/selftest.hpp"

#include <chrono>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>

#include "serre/bdj2.hpp"
#include "serre/jantzen.hpp"
#include "serre/json_io.hpp"
#include "serre/weightsets.hpp"

namespace serre {

namespace {

using Clock = std::chrono::steady_clock;

std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

// -------------------------------------------------------------- generic types

// Distinct tame types with an explicit deep good witness, covering different
// cycle shapes where possible.
std::vector<TameType> deep_generic_types(int n, int p, int delta, size_t want) {
  TameCtx tctx{n, p, 1};
  RootCtx ctx(n, p);
  std::vector<TameType> out;
  auto consider = [&](const TamePair& x) {
    if (!is_deep_in_c0(x.mu, delta, ctx)) return false;
    if (!is_good(x, tctx)) return false;
    TameType t = tau_of_pair(x, tctx);
    for (const auto& seen : out)
      if (seen == t) return false;
    out.push_back(t);
    return true;
  };
  std::vector<WeylPerm> shapes{WeylPerm::identity(n), WeylPerm::n_cycle(n)};
  if (n >= 3) {
    WeylPerm mixed = WeylPerm::identity(n);  // one transposition
    std::swap(mixed.img[0], mixed.img[1]);
    shapes.push_back(mixed);
  }
  for (const auto& w : shapes) {
    bool done = false;
    std::vector<int> diffs(n - 1, 0);
    auto rec = [&](auto&& self, int idx) -> void {
      if (done) return;
      if (idx == n - 1) {
        for (int last = 0; last <= p - 2 && !done; ++last) {
          Weight mu(n);
          mu[n - 1] = last;
          for (int i = n - 2; i >= 0; --i) mu[i] = mu[i + 1] + diffs[i];
          if (consider({w, mu})) done = true;
        }
        return;
      }
      for (int d = delta; d <= p - 1 - delta && !done; ++d) {
        diffs[idx] = d;
        self(self, idx + 1);
      }
    };
    rec(rec, 0);
    if (out.size() >= want) break;
  }
  // top up with further identity-type witnesses
  if (out.size() < want) {
    std::vector<int> diffs(n - 1, 0);
    auto rec = [&](auto&& self, int idx) -> void {
      if (out.size() >= want) return;
      if (idx == n - 1) {
        for (int last = 0; last <= p - 2 && out.size() < want; ++last) {
          Weight mu(n);
          mu[n - 1] = last;
          for (int i = n - 2; i >= 0; --i) mu[i] = mu[i + 1] + diffs[i];
          consider({WeylPerm::identity(n), mu});
        }
        return;
      }
      for (int d = delta; d <= p - 1 - delta && out.size() < want; ++d) {
        diffs[idx] = d;
        self(self, idx + 1);
      }
    };
    rec(rec, 0);
  }
  require(out.size() >= want, "could not build enough deep generic types");
  out.resize(want);
  return out;
}

bool in_lower_alcove(const SerreWeight& f) {
  return f.a.front() - f.a.back() < f.p - 2;
}

// ----------------------------------------------------------------- criteria

bool criterion_generic_counts(bool quick, std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  struct Case {
    int n, p, delta;
    long long expect;
  };
  std::vector<Case> cases{{2, 11, 2, 2}, {3, 13, 3, 9}};
  if (!quick) cases.push_back({4, 23, 4, 88});
  for (const auto& c : cases) {
    for (const auto& tau : deep_generic_types(c.n, c.p, c.delta, 3)) {
      bool generic = false;
      WeightSet ws = w_question_generic(tau, c.delta, &generic);
      long long got = static_cast<long long>(ws.weights.size());
      if (!generic || got != c.expect) {
        ok = false;
        os << "n=" << c.n << " tau=" << tau_spec_string(tau) << " got " << got
           << (generic ? "" : " (ungeneric)") << "; ";
      }
      if (c.n == 3) {
        long long lower = 0;
        for (const auto& f : ws.weights)
          if (in_lower_alcove(f)) ++lower;
        if (lower != 3) {
          ok = false;
          os << "n=3 lower-alcove count " << lower << " != 3; ";
        }
      }
    }
    long long formula = predicted_count(c.n, CountMode::formula);
    if (formula != c.expect) {
      ok = false;
      os << "formula count n=" << c.n << " gave " << formula << "; ";
    }
  }
  if (!quick) {
    long long n5 = predicted_count(5, CountMode::formula, 7);
    if (n5 != 1640) {
      ok = false;
      os << "n=5 formula count " << n5 << " != 1640; ";
    }
  }
  detail = os.str();
  return ok;
}

bool criterion_extra_weight_table(bool, std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  struct Row {
    int p;
    const char* tau;
    Weight extra;
  };
  const std::vector<Row> rows{{5, "2:8,1:0", {6, 3, 0}},
                              {7, "2:12,1:3", {13, 8, 3}},
                              {11, "2:40,1:0", {16, 9, 2}}};
  for (const auto& row : rows) {
    TameType tau = parse_tau_spec(row.tau, 3, row.p);
    SerreWeight extra = canonical_serre(row.extra, row.p);
    WeightSet wq = w_question_gl3(tau);
    WeightSet ad = adps_weights_gl3(tau);
    bool contains = wq.weights.count(extra) > 0;
    std::set<SerreWeight> diff;
    for (const auto& f : wq.weights)
      if (!ad.weights.count(f)) diff.insert(f);
    bool subset = true;
    for (const auto& f : ad.weights)
      if (!wq.weights.count(f)) subset = false;
    if (!contains || !subset || diff != std::set<SerreWeight>{extra}) {
      ok = false;
      os << "p=" << row.p << " extra-weight row failed; ";
    }
  }
  detail = os.str();
  return ok;
}

VirtualWeylSum sum_of_terms(const std::vector<Weight>& terms, const RootCtx& ctx) {
  VirtualWeylSum out;
  for (const auto& t : terms) {
    Normalized nw = normalize_weyl(t, ctx);
    if (nw.sign != 0) out.add_term(nw.dominant, nw.sign);
  }
  return out;
}

bool criterion_jantzen_oracle(bool quick, std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  std::vector<int> ps = quick ? std::vector<int>{5} : std::vector<int>{5, 7};
  for (int p : ps) {
    RootCtx ctx(3, p);
    HulsurkarData h = hulsurkar(ctx);
    WeylPerm id3 = WeylPerm::identity(3);
    WeylPerm cyc = WeylPerm::n_cycle(3);
    for (int k = 0; k <= p - 2 && ok; ++k) {
      for (int j = k; j <= k + p - 1 && ok; ++j) {
        for (int i = j; i <= k + p - 1 && ok; ++i) {
          VirtualWeylSum expect = sum_of_terms(
              {{k + p - 1, j, i - p + 1},
               {i, k, j - p + 1},
               {j + p - 1, i, k},
               {i, j, k},
               {j, k, i - p + 1},
               {k + p - 1, i, j}},
              ctx);
          VirtualWeylSum got = jantzen_virtual(id3, {i, j, k}, ctx, p, &h);
          if (!(got == expect)) {
            ok = false;
            os << "principal-series expansion mismatch at p=" << p << " "
               << weight_str({i, j, k}) << "; ";
          }
        }
      }
      for (int j = k; j <= k + p && ok; ++j) {
        for (int i = j + 1; i <= k + p && ok; ++i) {
          VirtualWeylSum expect = sum_of_terms(
              {{k + p - 1, j, i - p + 1},
               {i - 1, k, j - p + 2},
               {j + p - 1, i - 1, k + 1},
               {i - 2, j + 1, k + 1},
               {j - 1, k + 1, i - p + 1},
               {k + p - 2, i, j + 1}},
              ctx);
          VirtualWeylSum got = jantzen_virtual(cyc, {i, j, k}, ctx, p, &h);
          if (!(got == expect)) {
            ok = false;
            os << "cuspidal expansion mismatch at p=" << p << " "
               << weight_str({i, j, k}) << "; ";
          }
        }
      }
    }
  }
  detail = os.str();
  return ok;
}

bool criterion_route_agreement(bool quick, std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  std::vector<int> ps = quick ? std::vector<int>{5} : std::vector<int>{5, 7};
  for (int p : ps) {
    auto types = all_tame_types(3, p);
    std::vector<std::string> bad(types.size());
    parallel_for(static_cast<long long>(types.size()), [&](long long idx) {
      const TameType& tau = types[idx];
      WeightSet ex = w_question_exact(tau);
      WeightSet gl = w_question_gl3(tau);
      if (ex.weights != gl.weights)
        bad[idx] = tau_spec_string(tau);
    });
    for (const auto& b : bad)
      if (!b.empty()) {
        ok = false;
        os << "exact/gl3 disagree at p=" << p << " tau=" << b << "; ";
      }
  }

  // generic route against both on good 3-deep types
  std::vector<int> deep_ps = quick ? std::vector<int>{11} : std::vector<int>{11, 13};
  for (int p : deep_ps) {
    RootCtx ctx(3, p);
    TameCtx tctx{3, p, 1};
    std::set<TameType> taus;
    for (const auto& w : WeylPerm::all(3)) {
      for (int d1 = 3; d1 <= p - 4; ++d1)
        for (int d2 = 3; d2 <= p - 4; ++d2)
          for (int last = 0; last <= p - 2; ++last) {
            Weight mu{d1 + d2 + last, d2 + last, last};
            if (!is_deep_in_c0(mu, 3, ctx)) continue;
            TamePair x{w, mu};
            if (!is_good(x, tctx)) continue;
            taus.insert(tau_of_pair(x, tctx));
          }
    }
    std::vector<TameType> list(taus.begin(), taus.end());
    std::vector<std::string> bad(list.size());
    parallel_for(static_cast<long long>(list.size()), [&](long long idx) {
      const TameType& tau = list[idx];
      WeightSet ex = w_question_exact(tau);
      WeightSet gen = w_question_generic(tau, 3);
      WeightSet gl = w_question_gl3(tau);
      if (ex.weights != gen.weights || ex.weights != gl.weights)
        bad[idx] = tau_spec_string(tau);
    });
    for (const auto& b : bad)
      if (!b.empty()) {
        ok = false;
        os << "generic route disagrees at p=" << p << " tau=" << b << "; ";
      }
  }
  detail = os.str();
  return ok;
}

bool criterion_bdj_theorem(bool quick, std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  std::vector<std::pair<int, int>> cases;
  if (quick)
    cases = {{3, 1}, {3, 2}, {5, 1}};
  else
    cases = {{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {5, 3}, {7, 1}, {7, 2}};
  for (auto [p, f] : cases) {
    Gl2Ctx ctx(p, f);
    BdjVerifyReport rep = verify_bdj_theorem(ctx);
    if (!rep.passed) {
      ok = false;
      os << "(p,f)=(" << p << "," << f << ") " << rep.counterexamples.size()
         << " counterexamples; ";
    }
  }
  detail = os.str();
  return ok;
}

bool criterion_cross_theory(bool quick, std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  std::vector<int> ps = quick ? std::vector<int>{5} : std::vector<int>{3, 5, 7, 11, 13};
  for (int p : ps) {
    RootCtx ctx(2, p);
    Gl2Ctx gctx(p, 1);
    HulsurkarData h = hulsurkar(ctx);
    TameCtx tctx{2, p, 1};
    for (const auto& gt : all_gl2_types(gctx)) {
      TameType tau = gt.niveau == 1
                         ? TameType::from_orbits(2, p, {{1, gt.e1}, {1, gt.e2}})
                         : TameType::from_orbits(2, p, {{2, gt.e1}});
      auto pair = find_good_pair(tau);
      if (!pair) {
        ok = false;
        os << "no good pair at p=" << p << " " << gl2_type_str(gt) << "; ";
        continue;
      }
      VirtualWeylSum red = jantzen_virtual(pair->w, pair->mu, ctx, p, &h);
      long long mass = char_of_virtual(red, ctx).mass();
      long long want = gt.niveau == 1 ? p + 1 : p - 1;
      if (mass != want) {
        ok = false;
        os << "mass " << mass << " != " << want << " at p=" << p << " "
           << gl2_type_str(gt) << "; ";
        continue;
      }
      std::set<Gl2Weight> from_jantzen;
      for (const auto& [f, c] : f_expand_virtual(red, ctx)) {
        if (c <= 0) {
          ok = false;
          os << "nonpositive JH coefficient at p=" << p << "; ";
        }
        from_jantzen.insert(
            Gl2Weight{{f.a[0] - f.a[1]}, mod_reduce(f.a[1], p - 1)});
      }
      if (from_jantzen != diamond_constituents(gt, gctx)) {
        ok = false;
        os << "JH sets differ at p=" << p << " " << gl2_type_str(gt) << "; ";
      }
    }
  }
  detail = os.str();
  return ok;
}

// -------------------------------------------------- criterion 7 property kit

bool props_brauer(std::ostringstream& os) {
  std::mt19937 rng(20240511);
  for (int n = 2; n <= 3; ++n) {
    RootCtx ctx(n, 5);
    for (int it = 0; it < (n == 2 ? 400 : 600); ++it) {
      Weight lam(n);
      for (auto& c : lam) c = static_cast<int>(rng() % 13) - 4;
      Weight nu(n);
      for (auto& c : nu) c = static_cast<int>(rng() % 4);
      std::sort(nu.begin(), nu.end(), std::greater<int>());
      FormalCharacter chi = weyl_character(nu, ctx);
      FormalCharacter lhs = char_of_virtual(brauer_expand(lam, chi, ctx), ctx);
      Normalized nl = normalize_weyl(lam, ctx);
      FormalCharacter rhs;
      if (nl.sign != 0)
        rhs = (weyl_character(nl.dominant, ctx) * chi).scaled(nl.sign);
      if (!(lhs == rhs)) {
        os << "Brauer identity failed n=" << n << " lam=" << weight_str(lam) << "; ";
        return false;
      }
    }
  }
  return true;
}

bool props_dimension(std::ostringstream& os) {
  std::mt19937 rng(777);
  int checked = 0;
  while (checked < 500) {
    int n = 2 + static_cast<int>(rng() % 3);
    int p = n <= 3 ? 7 : 5;
    RootCtx ctx(n, p);
    Weight lam(n);
    for (auto& c : lam) c = static_cast<int>(rng() % (2 * p + 1));
    std::sort(lam.begin(), lam.end(), std::greater<int>());
    if (weyl_character(lam, ctx).mass() != weyl_dimension(lam, ctx)) {
      os << "dimension mismatch " << weight_str(lam) << "; ";
      return false;
    }
    ++checked;
  }
  return true;
}

bool props_steinberg(std::ostringstream& os) {
  const int p = 5, r = 2;
  const long long q = 25;
  for (long long d = 0; d <= q - 1; ++d) {
    for (long long b = 0; b <= q - 2; ++b) {
      Weight lam{static_cast<int>(b + d), static_cast<int>(b)};
      GLnFqIrred fac = steinberg_factorize(lam, p, r);
      Weight sum(2, 0);
      long long dimprod = 1;
      long long pk = 1;
      for (const auto& f : fac.factors) {
        if (!is_p_restricted(f, p)) {
          os << "factor not restricted for " << weight_str(lam) << "; ";
          return false;
        }
        sum[0] += static_cast<int>(pk) * f[0];
        sum[1] += static_cast<int>(pk) * f[1];
        dimprod *= f[0] - f[1] + 1;
        pk *= p;
      }
      if (sum != lam) {
        os << "digit round-trip failed for " << weight_str(lam) << "; ";
        return false;
      }
      long long dimdigits = 1;
      long long dd = d;
      for (int k = 0; k < r; ++k) {
        dimdigits *= dd % p + 1;
        dd /= p;
      }
      if (dimprod != dimdigits) {
        os << "dimension multiplicativity failed for " << weight_str(lam) << "; ";
        return false;
      }
    }
  }
  return true;
}

bool props_r_operator(std::ostringstream& os) {
  const int p = 5;
  int lower = 0, upper = 0;
  std::set<SerreWeight> swapped;
  for (int d1 = 0; d1 <= p - 2; ++d1)
    for (int d2 = 0; d2 <= p - 2; ++d2)
      for (int last = 0; last <= p - 2; ++last) {
        SerreWeight f = canonical_serre({d1 + d2 + last, d2 + last, last}, p);
        if (!is_regular(f)) continue;
        SerreWeight rr = r_operator(r_operator(f));
        if (rr != serre_twist(f, 1 - 3)) {
          os << "R^2 twist identity failed; ";
          return false;
        }
        if (in_lower_alcove(f)) {
          ++lower;
          SerreWeight g = gl3_reflection(f);
          if (in_lower_alcove(g) || !is_regular(g) ||
              g.a[0] - g.a[2] == p - 2) {
            os << "alcove swap image not interior-upper; ";
            return false;
          }
          if (gl3_reflection(g) != f) {
            os << "alcove swap not involutive; ";
            return false;
          }
          swapped.insert(g);
        } else if (f.a[0] - f.a[2] > p - 2) {
          ++upper;
        }
      }
  if (static_cast<int>(swapped.size()) != lower || lower != upper) {
    os << "alcove swap not bijective lower->upper; ";
    return false;
  }
  return true;
}

bool props_order_axioms(std::ostringstream& os) {
  for (int n = 2; n <= 3; ++n) {
    for (int p : {5, 7}) {
      RootCtx ctx(n, p);
      // dot action is a group action
      std::vector<Weight> probes;
      std::mt19937 rng(99);
      for (int t = 0; t < 6; ++t) {
        Weight lam(n);
        for (auto& c : lam) c = static_cast<int>(rng() % 9) - 4;
        probes.push_back(lam);
      }
      for (const auto& v : WeylPerm::all(n))
        for (const auto& w : WeylPerm::all(n))
          for (const auto& lam : probes)
            if (dot_action(v.compose(w), lam, ctx) !=
                dot_action(v, dot_action(w, lam, ctx), ctx)) {
              os << "dot action not a group action; ";
              return false;
            }

      // orbit points of a base weight inside a coordinate box
      Weight base(n);
      for (int i = 0; i < n; ++i) base[i] = n - 1 - i;
      std::set<Weight> orbit;
      const int cap = p + n;
      for (const auto& w : WeylPerm::all(n)) {
        Weight b = dot_action(w, base, ctx);
        std::vector<int> beta(n, 0);
        auto rec = [&](auto&& self, int idx, int acc) -> void {
          if (idx == n - 1) {
            int lastb = -acc;
            Weight nu = b;
            for (int i = 0; i < n - 1; ++i) nu[i] += p * beta[i];
            nu[n - 1] += p * lastb;
            for (int c : nu)
              if (c < -cap || c > cap) return;
            orbit.insert(nu);
            return;
          }
          for (int v = -2; v <= 2; ++v) {
            beta[idx] = v;
            self(self, idx + 1, acc + v);
          }
        };
        rec(rec, 0, 0);
      }
      std::vector<Weight> pts(orbit.begin(), orbit.end());
      size_t m = pts.size();
      std::vector<std::vector<bool>> up(m, std::vector<bool>(m));
      for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) up[a][b] = up_arrow(pts[a], pts[b], ctx);
      for (size_t a = 0; a < m; ++a) {
        if (!up[a][a]) {
          os << "up-arrow not reflexive; ";
          return false;
        }
        for (size_t b = 0; b < m; ++b) {
          if (up[a][b] && !dominance_leq(pts[a], pts[b])) {
            os << "up-arrow does not imply dominance order; ";
            return false;
          }
          if (up[a][b] && up[b][a] && a != b) {
            os << "up-arrow not antisymmetric; ";
            return false;
          }
          if (!up[a][b]) continue;
          for (size_t c = 0; c < m; ++c)
            if (up[b][c] && !up[a][c]) {
              os << "up-arrow not transitive; ";
              return false;
            }
        }
      }
    }
  }
  return true;
}

bool props_alcove_count(std::ostringstream& os) {
  for (int n = 2; n <= 5; ++n) {
    long long want = 1;
    for (int i = 2; i < n; ++i) want *= i;
    for (int p : {7, 11, 13}) {
      RootCtx ctx(n, p);
      if (static_cast<long long>(enumerate_restricted_alcoves(ctx).size()) != want) {
        os << "restricted alcove count wrong n=" << n << " p=" << p << "; ";
        return false;
      }
    }
  }
  return true;
}

bool props_deep_good(std::ostringstream& os) {
  for (int n = 2; n <= 3; ++n) {
    for (int p : {3, 5, 7, 11}) {
      if (p <= n) continue;
      RootCtx ctx(n, p);
      TameCtx tctx{n, p, 1};
      std::vector<int> diffs(n - 1, 0);
      bool bad = false;
      auto rec = [&](auto&& self, int idx) -> void {
        if (bad) return;
        if (idx == n - 1) {
          for (int last = 0; last <= p - 2 && !bad; ++last) {
            Weight mu(n);
            mu[n - 1] = last;
            for (int i = n - 2; i >= 0; --i) mu[i] = mu[i + 1] + diffs[i];
            if (!is_deep_in_c0(mu, n, ctx)) continue;
            for (const auto& w : WeylPerm::all(n))
              if (!is_good({w, mu}, tctx)) {
                bad = true;
                os << "deep weight with non-good pair n=" << n << " p=" << p
                   << " mu=" << weight_str(mu) << "; ";
                return;
              }
          }
          return;
        }
        for (int d = 0; d <= p - 1 && !bad; ++d) {
          diffs[idx] = d;
          self(self, idx + 1);
        }
      };
      rec(rec, 0);
      if (bad) return false;
    }
  }
  return true;
}

bool props_twist_dual(std::ostringstream& os) {
  auto types = all_tame_types(3, 5);
  std::vector<char> bad(types.size(), 0);
  parallel_for(static_cast<long long>(types.size()), [&](long long i) {
    StructuralReport rep = structural_checks(types[i]);
    if (!rep.twist_ok || !rep.dual_ok) bad[i] = 1;
  });
  for (size_t i = 0; i < types.size(); ++i)
    if (bad[i]) {
      os << "twist/dual identity failed at tau=" << tau_spec_string(types[i]) << "; ";
      return false;
    }
  return true;
}

bool props_gee(std::ostringstream& os) {
  const int p = 13;
  RootCtx ctx(3, p);
  TameCtx tctx{3, p, 1};

  // 3-deep restricted lambda in the upper alcove together with the lower
  // constituent label of W(lambda)
  std::vector<std::pair<SerreWeight, SerreWeight>> pairs;  // (F(lam), F(rlam))
  for (int d1 = 0; d1 <= p - 1; ++d1)
    for (int d2 = 0; d2 <= p - 1; ++d2)
      for (int last = 0; last <= p - 2; ++last) {
        Weight lam{d1 + d2 + last, d2 + last, last};
        Alcove c;
        auto a = alcove_of(lam, ctx);
        if (std::holds_alternative<OnWall>(a)) continue;
        c = std::get<Alcove>(a);
        if (!alcove_predicates(c, ctx).restricted) continue;
        if (!is_deep(lam, 3, c, ctx)) continue;
        auto jh = weyl_jh_gl3(lam, p);
        if (jh.size() != 2) continue;
        SerreWeight flam = canonical_serre(lam, p);
        for (const auto& g : jh)
          if (!(g == flam)) pairs.emplace_back(flam, g);
      }
  require(!pairs.empty(), "no deep upper-alcove weights at p=13");

  // precompute one good pair per tame type by a single scan
  std::map<TameType, TamePair> witness;
  for (const auto& w : WeylPerm::all(3))
    for (int a = 0; a < 3 * p; ++a)
      for (int b = 0; b < 3 * p; ++b)
        for (int c = 0; c <= p - 2; ++c) {
          TamePair x{w, {a, b, c}};
          if (!is_good(x, tctx)) continue;
          witness.emplace(tau_of_pair(x, tctx), x);
        }

  auto types = all_tame_types(3, p);
  std::vector<std::string> bad(types.size());
  HulsurkarData h = hulsurkar(ctx);
  parallel_for(static_cast<long long>(types.size()), [&](long long idx) {
    const TameType& tau = types[idx];
    auto it = witness.find(tau);
    if (it == witness.end()) {
      bad[idx] = "no good pair for " + tau_spec_string(tau);
      return;
    }
    VirtualWeylSum red = jantzen_virtual(it->second.w, it->second.mu, ctx, p, &h);
    std::set<SerreWeight> wq;
    for (const auto& [f, c] : f_expand_virtual(red, ctx)) {
      (void)c;
      wq.insert(r_operator(f));
    }
    for (const auto& [flam, flow] : pairs)
      if (wq.count(flow) && !wq.count(flam)) {
        bad[idx] = "closure fails at tau=" + tau_spec_string(tau);
        return;
      }
  });
  for (const auto& b : bad)
    if (!b.empty()) {
      os << b << "; ";
      return false;
    }
  return true;
}

bool props_phi(std::ostringstream& os) {
  for (int p : {3, 5}) {
    for (int f = 1; f <= 3; ++f) {
      Gl2Ctx ctx(p, f);
      long long lower = 0, upper = 0;
      std::vector<int> vals(f, 0);
      auto each_string = [&](int lo, int hi, auto&& fn) {
        auto rec = [&](auto&& self, int idx) -> void {
          if (idx == f) {
            fn();
            return;
          }
          for (int v = lo; v <= hi; ++v) {
            vals[idx] = v;
            self(self, idx + 1);
          }
        };
        rec(rec, 0);
      };
      bool ok = true;
      each_string(0, p - 1, [&] {
        for (const auto& sys : interval_systems(vals, IntervalSide::lower, ctx)) {
          ++lower;
          IntervalSystem img = phi(sys, ctx);
          if (!check_interval_axioms(img, IntervalSide::upper, ctx) ||
              !(phi_inverse(img, ctx) == sys))
            ok = false;
        }
      });
      each_string(1, p, [&] {
        for (const auto& sys : interval_systems(vals, IntervalSide::upper, ctx)) {
          ++upper;
          if (!(phi(phi_inverse(sys, ctx), ctx) == sys)) ok = false;
        }
      });
      if (!ok || lower != upper) {
        os << "phi bijection failed p=" << p << " f=" << f << " (" << lower
           << " vs " << upper << "); ";
        return false;
      }
    }
  }
  return true;
}

bool criterion_properties(bool quick, std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  ok &= props_brauer(os);
  ok &= props_dimension(os);
  ok &= props_steinberg(os);
  ok &= props_r_operator(os);
  ok &= props_order_axioms(os);
  if (!quick) ok &= props_alcove_count(os);
  ok &= props_deep_good(os);
  if (!quick) {
    ok &= props_twist_dual(os);
    ok &= props_gee(os);
  }
  ok &= props_phi(os);
  detail = os.str();
  return ok;
}

bool negative_control(bool, std::string& detail) {
  RootCtx ctx(2, 5);
  HulsurkarData h = hulsurkar(ctx);
  if (!verify_hulsurkar_identity(h)) {
    detail = "identity check rejected a correct inverse";
    return false;
  }
  h.gamma[0][0] = FormalCharacter::monomial(Weight{3, 1}, 1);
  if (verify_hulsurkar_identity(h)) {
    detail = "identity check accepted a corrupted inverse";
    return false;
  }
  return true;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_criteria(bool quick) {
  struct Entry {
    const char* name;
    bool (*fn)(bool, std::string&);
  };
  const std::vector<Entry> entries{
      {"1 generic weight counts (2, 9, 88, 1640)", criterion_generic_counts},
      {"2 extra-weight table rows (p = 5, 7, 11)", criterion_extra_weight_table},
      {"3 six-term reduction expansions", criterion_jantzen_oracle},
      {"4 route agreement (exact / lists / generic)", criterion_route_agreement},
      {"5 GL2 weight-set identity, all (p, f)", criterion_bdj_theorem},
      {"6 cross-theory consistency at n = 2", criterion_cross_theory},
      {"7 property suites", criterion_properties},
      {"8 negative control (corrupted inverse detected)", negative_control},
  };
  std::vector<CriterionResult> out;
  for (const auto& e : entries) {
    auto start = Clock::now();
    std::string detail;
    bool passed = false;
    try {
      passed = e.fn(quick, detail);
    } catch (const std::exception& ex) {
      detail = std::string("exception: ") + ex.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    out.push_back({e.name, passed, detail, secs});
  }
  return out;
}

bool run_acceptance(bool quick, std::ostream& os) {
  bool all = true;
  for (const auto& r : run_acceptance_criteria(quick)) {
    os << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.name << "  ["
       << static_cast<long long>(r.seconds * 1000) << " ms]";
    if (!r.passed && !r.detail.empty()) os << "  " << r.detail;
    os << "\n";
    all &= r.passed;
  }
  return all;
}

}  // namespace serre
