#include "serre/bdj2.hpp"

#include <algorithm>
#include <sstream>

namespace serre {

namespace {

std::vector<int> digits_base_p(long long v, int p, int f) {
  std::vector<int> d(f);
  for (int i = 0; i < f; ++i) {
    d[i] = static_cast<int>(v % p);
    v /= p;
  }
  require(v == 0, "value does not fit in f base-p digits");
  return d;
}

long long from_digits(const std::vector<int>& d, int p) {
  long long v = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
  return v;
}

}  // namespace

Gl2Weight gl2_weight_from_ab(long long a, long long b, const Gl2Ctx& ctx) {
  long long d = a - b;
  require(d >= 0 && d <= ctx.q() - 1, "a - b out of the restricted range");
  return Gl2Weight{digits_base_p(d, ctx.p, ctx.f), mod_reduce(b, ctx.q() - 1)};
}

bool gl2_regular(const Gl2Weight& w, const Gl2Ctx& ctx) {
  for (int mi : w.m)
    if (mi == ctx.p - 1) return false;
  return true;
}

Gl2Weight gl2_twist(const Gl2Weight& w, long long k, const Gl2Ctx& ctx) {
  return Gl2Weight{w.m, mod_reduce(w.b + k, ctx.q() - 1)};
}

Gl2TameType gl2_niveau1(long long c1, long long c2, const Gl2Ctx& ctx) {
  long long a = mod_reduce(c1, ctx.q() - 1), b = mod_reduce(c2, ctx.q() - 1);
  if (a > b) std::swap(a, b);
  return Gl2TameType{1, a, b};
}

Gl2TameType gl2_niveau2(long long gamma, const Gl2Ctx& ctx) {
  long long m = ctx.qq() - 1;
  long long g = mod_reduce(gamma, m);
  require(g % (ctx.q() + 1) != 0, "exponent factors through the norm");
  long long g2 = mod_reduce(g * ctx.q(), m);
  if (g > g2) std::swap(g, g2);
  return Gl2TameType{2, g, g2};
}

Gl2TameType gl2_type_twist(const Gl2TameType& t, long long k, const Gl2Ctx& ctx) {
  if (t.niveau == 1) return gl2_niveau1(t.e1 + k, t.e2 + k, ctx);
  return gl2_niveau2(t.e1 + k * (ctx.q() + 1), ctx);
}

std::set<Gl2Weight> w_bdj(const Gl2TameType& rho, const Gl2Ctx& ctx) {
  const int p = ctx.p, f = ctx.f;
  const long long qm1 = ctx.q() - 1;
  std::set<Gl2Weight> out;
  std::vector<int> m(f);

  if (rho.niveau == 1) {
    auto rec = [&](auto&& self, int idx) -> void {
      if (idx == f) {
        for (unsigned mask = 0; mask < (1u << f); ++mask) {
          long long sj = 0, sjc = 0;
          for (int i = 0; i < f; ++i)
            ((mask >> i) & 1 ? sj : sjc) += static_cast<long long>(m[i] + 1) * pow_ll(p, i);
          for (int swap = 0; swap < 2; ++swap) {
            long long c = swap ? rho.e2 : rho.e1;
            long long cp = swap ? rho.e1 : rho.e2;
            long long b = mod_reduce(c - sj, qm1);
            if (mod_reduce(sjc + b - cp, qm1) == 0) out.insert(Gl2Weight{m, b});
          }
        }
        return;
      }
      for (int v = 0; v <= p - 1; ++v) {
        m[idx] = v;
        self(self, idx + 1);
      }
    };
    rec(rec, 0);
    return out;
  }

  const long long qqm1 = ctx.qq() - 1;
  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == f) {
      // J subset of Z/2f bijective onto Z/f: pick i or i+f per residue
      for (unsigned mask = 0; mask < (1u << f); ++mask) {
        long long sj = 0, sjc = 0;
        for (int i = 0; i < f; ++i) {
          long long term = static_cast<long long>(m[i] + 1);
          if ((mask >> i) & 1) {
            sj += term * pow_ll(p, i + f);
            sjc += term * pow_ll(p, i);
          } else {
            sj += term * pow_ll(p, i);
            sjc += term * pow_ll(p, i + f);
          }
        }
        // gamma = sj + (1+q) b, p^f gamma = sjc + (1+q) b  (mod qq-1)
        long long diff = mod_reduce(rho.e1 - sj, qqm1);
        if (diff % (ctx.q() + 1) != 0) continue;
        long long b = mod_reduce(diff / (ctx.q() + 1), qm1);
        long long t = mod_reduce((1 + ctx.q()) * b, qqm1);
        if (mod_reduce(sj + t - rho.e1, qqm1) == 0 &&
            mod_reduce(sjc + t - rho.e2, qqm1) == 0)
          out.insert(Gl2Weight{m, b});
      }
      return;
    }
    for (int v = 0; v <= p - 1; ++v) {
      m[idx] = v;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
  return out;
}

Gl2CharZeroLabel v_p(const Gl2TameType& rho, const Gl2Ctx& ctx) {
  if (rho.niveau == 1) return {false, rho.e1, rho.e2, ctx.q() + 1};
  require(rho.e1 % (ctx.q() + 1) != 0, "niveau-2 exponent is not primitive");
  return {true, rho.e1, rho.e2, ctx.q() - 1};
}

std::set<Gl2Weight> diamond_constituents(const Gl2TameType& rho, const Gl2Ctx& ctx) {
  const int p = ctx.p, f = ctx.f;
  const long long qm1 = ctx.q() - 1;
  std::set<Gl2Weight> out;
  std::vector<int> m(f);

  if (rho.niveau == 1) {
    auto rec = [&](auto&& self, int idx) -> void {
      if (idx == f) {
        long long msum = 0;
        for (int i = 0; i < f; ++i) msum += static_cast<long long>(m[i]) * pow_ll(p, i);
        for (unsigned mask = 0; mask < (1u << f); ++mask) {
          long long sj = 0, sjc = 0;
          for (int i = 0; i < f; ++i)
            ((mask >> i) & 1 ? sj : sjc) +=
                static_cast<long long>(p - 1 - m[i]) * pow_ll(p, i);
          for (int swap = 0; swap < 2; ++swap) {
            long long c = swap ? rho.e2 : rho.e1;
            long long cp = swap ? rho.e1 : rho.e2;
            long long t = mod_reduce(c - sjc, qm1);  // twist = m + b digits
            if (mod_reduce(sj + t - cp, qm1) != 0) continue;
            out.insert(Gl2Weight{m, mod_reduce(t - msum, qm1)});
          }
        }
        return;
      }
      for (int v = 0; v <= p - 1; ++v) {
        m[idx] = v;
        self(self, idx + 1);
      }
    };
    rec(rec, 0);
    return out;
  }

  const long long qqm1 = ctx.qq() - 1;
  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == f) {
      bool steinberg = true;
      for (int i = 0; i < f; ++i)
        if (m[i] != p - 1) steinberg = false;
      if (steinberg) return;  // dim p^f exceeds the cuspidal mass
      long long msum = 0;
      for (int i = 0; i < f; ++i) msum += static_cast<long long>(m[i]) * pow_ll(p, i);
      for (unsigned mask = 0; mask < (1u << f); ++mask) {
        long long sj = 0, sjc = 0;
        for (int i = 0; i < f; ++i) {
          long long term = static_cast<long long>(p - 1 - m[i]);
          if ((mask >> i) & 1) {
            sj += term * pow_ll(p, i + f);
            sjc += term * pow_ll(p, i);
          } else {
            sj += term * pow_ll(p, i);
            sjc += term * pow_ll(p, i + f);
          }
        }
        long long diff = mod_reduce(rho.e1 - sjc, qqm1);
        if (diff % (ctx.q() + 1) != 0) continue;
        long long t = mod_reduce(diff / (ctx.q() + 1), qm1);
        long long tt = mod_reduce((1 + ctx.q()) * t, qqm1);
        if (mod_reduce(sjc + tt - rho.e1, qqm1) == 0 &&
            mod_reduce(sj + tt - rho.e2, qqm1) == 0)
          out.insert(Gl2Weight{m, mod_reduce(t - msum, qm1)});
      }
      return;
    }
    for (int v = 0; v <= p - 1; ++v) {
      m[idx] = v;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
  return out;
}

Gl2Weight r_p(const Gl2Weight& w, const Gl2Ctx& ctx) {
  require(gl2_regular(w, ctx), "r_p needs a regular weight");
  const long long qm1 = ctx.q() - 1;
  long long a = w.b + w.sym_degree(ctx);
  long long ap = w.b + static_cast<long long>(ctx.p - 2) * ctx.digit_sum_base();
  long long bp = mod_reduce(a, qm1);
  long long d = mod_reduce(ap - a, qm1);  // digits p-2-m_i, again regular
  return gl2_weight_from_ab(bp + d, bp, ctx);
}

namespace {

std::set<std::set<int>> ss_sets_impl(const std::vector<int>& m, int p, int f,
                                     bool weak) {
  auto s_ok = [&](int s, const std::set<int>& S) -> bool {
    if (!weak && m[s] == 0) return false;
    for (int i = 0; i < f; ++i) {
      if (i == s) continue;  // the interval {i..s-1} would wrap the whole circle
      if (m[i] != p - 1) continue;
      int gap = ((s - i) % f + f) % f;  // in [1, f-1]
      bool ok = true;
      for (int k = 1; k < gap && ok; ++k)
        if (m[(i + k) % f] != p - 2) ok = false;
      for (int k = 0; k < gap && ok; ++k)
        if (S.count((i + k) % f)) ok = false;
      if (ok) return true;
    }
    return false;
  };
  std::set<std::set<int>> out;
  for (unsigned mask = 0; mask < (1u << f); ++mask) {
    std::set<int> S;
    for (int i = 0; i < f; ++i)
      if ((mask >> i) & 1) S.insert(i);
    bool ok = true;
    for (int s : S)
      if (!s_ok(s, S)) {
        ok = false;
        break;
      }
    if (ok) out.insert(S);
  }
  return out;
}

}  // namespace

std::set<std::set<int>> ss_sets(const Gl2Weight& w, const Gl2Ctx& ctx) {
  return ss_sets_impl(w.m, ctx.p, ctx.f, false);
}

std::set<std::set<int>> ss_sets_weak(const Gl2Weight& w, const Gl2Ctx& ctx) {
  return ss_sets_impl(w.m, ctx.p, ctx.f, true);
}

std::set<Gl2Weight> r_ext(const Gl2Weight& w, const Gl2Ctx& ctx, bool weak) {
  const long long qm1 = ctx.q() - 1;
  long long a = w.b + w.sym_degree(ctx);
  std::set<Gl2Weight> out;
  auto systems = weak ? ss_sets_weak(w, ctx) : ss_sets(w, ctx);
  for (const auto& S : systems) {
    long long in_s = 0;
    for (int s : S) in_s += pow_ll(ctx.p, s);
    long long ap = mod_reduce(w.b - (ctx.digit_sum_base() - in_s), qm1);
    long long bp = mod_reduce(a - in_s, qm1);
    long long d = mod_reduce(ap - bp, qm1);
    if (d == 0) {
      out.insert(gl2_weight_from_ab(bp, bp, ctx));
      out.insert(gl2_weight_from_ab(bp + qm1, bp, ctx));
    } else {
      out.insert(gl2_weight_from_ab(bp + d, bp, ctx));
    }
  }
  return out;
}

bool check_interval_axioms(const IntervalSystem& sys, IntervalSide side,
                           const Gl2Ctx& ctx) {
  const int p = ctx.p, f = ctx.f;
  if (static_cast<int>(sys.values.size()) != f) return false;
  const int lo = side == IntervalSide::lower ? 0 : 1;
  const int hi = side == IntervalSide::lower ? p - 1 : p;
  for (int v : sys.values)
    if (v < lo || v > hi) return false;

  std::vector<int> owner(f, -1);  // interval index covering each position
  std::vector<int> start_of(f, 0);
  for (size_t t = 0; t < sys.intervals.size(); ++t) {
    const auto& iv = sys.intervals[t];
    if (iv.len < 1 || iv.len > f) return false;
    for (int k = 0; k < iv.len; ++k) {
      int pos = (iv.start + k) % f;
      if (owner[pos] != -1) return false;  // overlap
      owner[pos] = static_cast<int>(t);
      start_of[pos] = (k == 0);
    }
  }

  if (side == IntervalSide::lower) {
    for (const auto& iv : sys.intervals)
      for (int k = 0; k < iv.len; ++k) {
        int v = sys.values[(iv.start + k) % f];
        if (v != 0 && v != 1) return false;  // A1
      }
    for (int i = 0; i < f; ++i) {
      int prev = (i + f - 1) % f;
      if (owner[i] != -1) {
        bool rhs = start_of[i] && owner[prev] != -1;  // A2
        if ((sys.values[i] == 1) != rhs) return false;
      } else if (sys.values[i] == 0 && owner[prev] == -1) {
        return false;  // A3
      }
    }
    for (size_t t = 0; t < sys.intervals.size(); ++t) {
      const auto& iv = sys.intervals[t];
      int succ = (iv.start + iv.len) % f;
      if (iv.positive) {  // A4
        if (owner[succ] != -1) return false;
        if (!(sys.values[succ] >= 0 && sys.values[succ] <= p - 2)) return false;
      } else {  // A5
        bool in_other = owner[succ] != -1 && owner[succ] != static_cast<int>(t);
        if (!in_other && !(sys.values[succ] >= 2 && sys.values[succ] <= p - 1))
          return false;
      }
    }
    return true;
  }

  for (const auto& iv : sys.intervals)
    for (int k = 0; k < iv.len; ++k) {
      int v = sys.values[(iv.start + k) % f];
      if (v != p - 1 && v != p) return false;  // B1
    }
  for (int i = 0; i < f; ++i) {
    bool is_start = owner[i] != -1 && start_of[i];
    if (is_start != (sys.values[i] == p)) return false;  // B2
  }
  for (size_t t = 0; t < sys.intervals.size(); ++t) {
    const auto& iv = sys.intervals[t];
    int succ = (iv.start + iv.len) % f;
    if (iv.positive) {  // B3
      if (owner[succ] != -1) return false;
      if (!(sys.values[succ] >= 1 && sys.values[succ] <= p - 1)) return false;
    } else {  // B4
      bool in_other = owner[succ] != -1 && owner[succ] != static_cast<int>(t);
      if (!in_other && !(sys.values[succ] >= 1 && sys.values[succ] <= p - 2))
        return false;
    }
  }
  return true;
}

std::vector<IntervalSystem> interval_systems(const std::vector<int>& values,
                                             IntervalSide side, const Gl2Ctx& ctx) {
  const int f = ctx.f;
  std::vector<IntervalSystem> out;
  // enumerate disjoint signed interval collections: assign each position a
  // state, then split covered stretches at declared start points
  std::vector<SignedInterval> chosen;
  auto emit = [&]() {
    IntervalSystem sys{values, chosen};
    std::sort(sys.intervals.begin(), sys.intervals.end());
    if (check_interval_axioms(sys, side, ctx)) out.push_back(std::move(sys));
  };
  // choose intervals directly: iterate over all subsets of candidate
  // intervals (start, len) that stay disjoint, each with a sign
  std::vector<SignedInterval> cands;
  for (int s = 0; s < f; ++s)
    for (int l = 1; l <= f; ++l) cands.push_back({s, l, false});
  auto rec = [&](auto&& self, size_t idx, unsigned covered) -> void {
    if (idx == cands.size()) {
      emit();
      return;
    }
    self(self, idx + 1, covered);  // skip
    auto iv = cands[idx];
    unsigned m = 0;
    for (int k = 0; k < iv.len; ++k) m |= 1u << ((iv.start + k) % f);
    if (__builtin_popcount(m) != iv.len || (covered & m)) return;
    for (bool sign : {false, true}) {
      iv.positive = sign;
      chosen.push_back(iv);
      self(self, idx + 1, covered | m);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0u);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IntervalSystem phi(const IntervalSystem& sys, const Gl2Ctx& ctx,
                   long long* twist_exponent_out) {
  require(check_interval_axioms(sys, IntervalSide::lower, ctx),
          "phi needs a valid lower-side system");
  const int f = ctx.f, p = ctx.p;
  std::vector<int> owner(f, -1);
  for (size_t t = 0; t < sys.intervals.size(); ++t)
    for (int k = 0; k < sys.intervals[t].len; ++k)
      owner[(sys.intervals[t].start + k) % f] = static_cast<int>(t);

  IntervalSystem out = sys;
  long long twist = 0;
  for (const auto& iv : sys.intervals) {
    out.values[iv.start % f] = p;
    for (int k = 1; k < iv.len; ++k) out.values[(iv.start + k) % f] = p - 1;
    int succ = (iv.start + iv.len) % f;
    if (owner[succ] == -1)
      out.values[succ] = sys.values[succ] + (iv.positive ? 1 : -1);
    if (iv.positive) twist += pow_ll(p, succ);
  }
  if (twist_exponent_out) *twist_exponent_out = twist;
  require(check_interval_axioms(out, IntervalSide::upper, ctx),
          "phi image violates the upper-side axioms");
  return out;
}

IntervalSystem phi_inverse(const IntervalSystem& sys, const Gl2Ctx& ctx) {
  require(check_interval_axioms(sys, IntervalSide::upper, ctx),
          "phi_inverse needs a valid upper-side system");
  const int f = ctx.f, p = ctx.p;
  std::vector<int> owner(f, -1);
  for (size_t t = 0; t < sys.intervals.size(); ++t)
    for (int k = 0; k < sys.intervals[t].len; ++k)
      owner[(sys.intervals[t].start + k) % f] = static_cast<int>(t);

  IntervalSystem out = sys;
  for (const auto& iv : sys.intervals) {
    int prev = (iv.start + f - 1) % f;
    out.values[iv.start % f] = owner[prev] != -1 ? 1 : 0;
    for (int k = 1; k < iv.len; ++k) out.values[(iv.start + k) % f] = 0;
    int succ = (iv.start + iv.len) % f;
    if (owner[succ] == -1)
      out.values[succ] = sys.values[succ] - (iv.positive ? 1 : -1);
  }
  require(check_interval_axioms(out, IntervalSide::lower, ctx),
          "phi_inverse image violates the lower-side axioms");
  return out;
}

SuccessorsReport successors_equivalence(const std::vector<int>& alpha,
                                        const Gl2Ctx& ctx) {
  SuccessorsReport rep;
  std::vector<int> m(ctx.f);
  for (int i = 0; i < ctx.f; ++i) {
    require(alpha[i] >= 0 && alpha[i] <= ctx.p - 1, "alpha out of range");
    m[i] = ctx.p - 1 - alpha[i];
  }
  rep.subset_side = ss_sets_impl(m, ctx.p, ctx.f, false);
  for (const auto& sys : interval_systems(alpha, IntervalSide::lower, ctx)) {
    std::set<int> s;
    for (const auto& iv : sys.intervals)
      if (iv.positive) s.insert((iv.start + iv.len) % ctx.f);
    rep.interval_side.insert(std::move(s));
  }
  rep.empty_in_subset_side = rep.subset_side.count({}) > 0;
  rep.empty_in_interval_side = rep.interval_side.count({}) > 0;
  auto nonempty = [](const std::set<std::set<int>>& v) {
    std::set<std::set<int>> o;
    for (const auto& s : v)
      if (!s.empty()) o.insert(s);
    return o;
  };
  rep.nonempty_agree = nonempty(rep.subset_side) == nonempty(rep.interval_side);
  return rep;
}

std::vector<Gl2TameType> all_gl2_types(const Gl2Ctx& ctx) {
  std::vector<Gl2TameType> out;
  const long long qm1 = ctx.q() - 1;
  for (long long c1 = 0; c1 < qm1; ++c1)
    for (long long c2 = c1; c2 < qm1; ++c2) out.push_back(gl2_niveau1(c1, c2, ctx));
  const long long qqm1 = ctx.qq() - 1;
  for (long long g = 0; g < qqm1; ++g) {
    if (g % (ctx.q() + 1) == 0) continue;
    auto t = gl2_niveau2(g, ctx);
    if (t.e1 == g) out.push_back(t);
  }
  return out;
}

std::string gl2_weight_str(const Gl2Weight& w, const Gl2Ctx& ctx) {
  std::ostringstream os;
  os << "F(" << w.b + w.sym_degree(ctx) << "," << w.b << ")";
  return os.str();
}

std::string gl2_type_str(const Gl2TameType& t) {
  std::ostringstream os;
  os << (t.niveau == 1 ? "niv1:" : "niv2:") << t.e1;
  if (t.niveau == 1) os << "," << t.e2;
  return os.str();
}

BdjVerifyReport verify_bdj_theorem(const Gl2Ctx& ctx, bool weak) {
  BdjVerifyReport rep;
  for (const auto& rho : all_gl2_types(ctx)) {
    ++rep.checked;
    auto predicted = w_bdj(rho, ctx);
    auto jh = diamond_constituents(rho, ctx);

    // (i) regular weights via r_p
    std::set<Gl2Weight> lhs_reg, rhs_reg;
    for (const auto& w : predicted)
      if (gl2_regular(w, ctx)) lhs_reg.insert(w);
    for (const auto& w : jh)
      if (gl2_regular(w, ctx)) rhs_reg.insert(r_p(w, ctx));
    if (lhs_reg != rhs_reg) {
      rep.passed = false;
      rep.counterexamples.push_back(gl2_type_str(rho) + " part (i)");
      continue;
    }

    // (ii) full sets via r_ext
    std::set<Gl2Weight> rhs;
    for (const auto& w : jh) {
      auto ext = r_ext(w, ctx, weak);
      rhs.insert(ext.begin(), ext.end());
    }
    if (predicted != rhs) {
      rep.passed = false;
      rep.counterexamples.push_back(gl2_type_str(rho) + " part (ii)");
    }
  }
  return rep;
}

}  // namespace serre
