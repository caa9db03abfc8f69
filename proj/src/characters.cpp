#include "serre/characters.hpp"

#include <algorithm>

#include "serre/lattice.hpp"

namespace serre {

long long FormalCharacter::mass() const {
  long long m = 0;
  for (const auto& [w, c] : terms) m += c;
  return m;
}

void FormalCharacter::add_term(const Weight& w, long long m) {
  if (m == 0) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, m);
  } else if ((it->second += m) == 0) {
    terms.erase(it);
  }
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& o) {
  for (const auto& [w, c] : o.terms) add_term(w, c);
  return *this;
}

FormalCharacter FormalCharacter::operator*(const FormalCharacter& o) const {
  FormalCharacter r;
  for (const auto& [a, ca] : terms)
    for (const auto& [b, cb] : o.terms) r.add_term(add(a, b), ca * cb);
  return r;
}

FormalCharacter FormalCharacter::scaled(long long c) const {
  FormalCharacter r;
  if (c == 0) return r;
  for (const auto& [w, m] : terms) r.terms[w] = c * m;
  return r;
}

bool FormalCharacter::is_w_symmetric() const {
  // Group terms by sorted coordinate vector; each class must carry the full
  // orbit at one multiplicity.
  std::map<Weight, long long> by_sorted;
  for (const auto& [w, c] : terms) {
    Weight s = w;
    std::sort(s.begin(), s.end(), std::greater<int>());
    auto it = by_sorted.find(s);
    if (it == by_sorted.end())
      by_sorted.emplace(s, c);
    else if (it->second != c)
      return false;
  }
  for (const auto& [s, c] : by_sorted) {
    Weight v = s;
    std::sort(v.begin(), v.end());
    long long orbit = 0;
    do {
      ++orbit;
      auto it = terms.find(v);
      if (it == terms.end() || it->second != c) return false;
    } while (std::next_permutation(v.begin(), v.end()));
    (void)orbit;
  }
  return true;
}

void VirtualWeylSum::add_term(const Weight& w, long long m) {
  if (m == 0) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, m);
  } else if ((it->second += m) == 0) {
    terms.erase(it);
  }
}

VirtualWeylSum& VirtualWeylSum::operator+=(const VirtualWeylSum& o) {
  for (const auto& [w, c] : o.terms) add_term(w, c);
  return *this;
}

Normalized normalize_weyl(const Weight& lam, const RootCtx& ctx) {
  Weight shifted = add(lam, ctx.rho);
  // selection-sort descending, tracking parity
  int sign = 1;
  for (size_t i = 0; i < shifted.size(); ++i) {
    size_t best = i;
    for (size_t j = i + 1; j < shifted.size(); ++j) {
      if (shifted[j] > shifted[best]) best = j;
    }
    if (best != i) {
      std::swap(shifted[i], shifted[best]);
      sign = -sign;
    }
    if (i > 0 && shifted[i] == shifted[i - 1]) return {0, {}};
  }
  return {sign, sub(shifted, ctx.rho)};
}

namespace {

// Characters of dominant rows, built by the GL_k -> GL_{k-1} branching rule.
// Weight coordinate k is |row_k| - |row_{k-1}|.
struct BranchMemo {
  std::map<Weight, FormalCharacter> memo;

  const FormalCharacter& get(const Weight& row) {
    auto it = memo.find(row);
    if (it != memo.end()) return it->second;
    FormalCharacter out;
    int k = static_cast<int>(row.size());
    if (k == 1) {
      out.terms[Weight{row[0]}] = 1;
    } else {
      Weight mu(k - 1);
      long long row_sum = weight_sum(row);
      auto rec = [&](auto&& self, int idx) -> void {
        if (idx == k - 1) {
          const FormalCharacter& sub_ch = get(mu);
          long long last = row_sum - weight_sum(mu);
          for (const auto& [w, c] : sub_ch.terms) {
            Weight full = w;
            full.push_back(static_cast<int>(last));
            out.add_term(full, c);
          }
          return;
        }
        int lo = row[idx + 1], hi = row[idx];
        for (int v = (idx > 0 ? std::min(mu[idx - 1], hi) : hi); v >= lo; --v) {
          mu[idx] = v;
          self(self, idx + 1);
        }
      };
      rec(rec, 0);
    }
    return memo.emplace(row, std::move(out)).first->second;
  }
};

}  // namespace

FormalCharacter weyl_character(const Weight& lam, const RootCtx& ctx) {
  require(is_dominant(lam), "weyl_character needs a dominant weight");
  require(static_cast<int>(lam.size()) == ctx.n, "rank mismatch");
  BranchMemo memo;
  return memo.get(lam);
}

long long weyl_dimension(const Weight& lam, const RootCtx& ctx) {
  require(is_dominant(lam), "weyl_dimension needs a dominant weight");
  __int128 num = 1, den = 1;
  for (auto [i, j] : ctx.pos_roots) {
    num *= ctx.shifted_pairing(lam, i, j);
    den *= j - i;
  }
  return static_cast<long long>(num / den);
}

VirtualWeylSum brauer_expand(const Weight& lam, const FormalCharacter& chi,
                             const RootCtx& ctx) {
  VirtualWeylSum out;
  for (const auto& [mu, a] : chi.terms) {
    Normalized nw = normalize_weyl(add(lam, mu), ctx);
    if (nw.sign != 0) out.add_term(nw.dominant, a * nw.sign);
  }
  return out;
}

VirtualWeylSum reduce_mod_det(const VirtualWeylSum& v, long long q) {
  VirtualWeylSum out;
  for (const auto& [lam, c] : v.terms) {
    Weight l = lam;
    int shift = static_cast<int>(mod_reduce(l.back(), q - 1) - l.back());
    for (auto& x : l) x += shift;
    out.add_term(l, c);
  }
  return out;
}

FormalCharacter char_of_virtual(const VirtualWeylSum& v, const RootCtx& ctx) {
  FormalCharacter out;
  for (const auto& [lam, c] : v.terms) out += weyl_character(lam, ctx).scaled(c);
  return out;
}

}  // namespace serre
