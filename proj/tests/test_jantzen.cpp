#include <doctest.h>

#include <random>

#include "serre/jantzen.hpp"
#include "serre/modreps.hpp"

using namespace serre;

TEST_CASE("inverse matrix for n = 2") {
  RootCtx ctx(2, 5);
  HulsurkarData h = hulsurkar(ctx);
  CHECK(h.gamma_is_diagonal());
  CHECK(verify_hulsurkar_identity(h));
  // elems order: identity first, transposition second
  CHECK(h.gamma[0][0] == FormalCharacter::monomial({1, 1}));
  CHECK(h.gamma[1][1] == FormalCharacter::monomial({0, 0}));
}

TEST_CASE("inverse matrix is diagonal exactly for n <= 3") {
  for (int p : {5, 7}) {
    CHECK(hulsurkar(RootCtx(2, p)).gamma_is_diagonal());
    CHECK(hulsurkar(RootCtx(3, p)).gamma_is_diagonal());
  }
  HulsurkarData h4 = hulsurkar(RootCtx(4, 5));
  CHECK_FALSE(h4.gamma_is_diagonal());
  CHECK(verify_hulsurkar_identity(h4));
  CHECK(verify_hulsurkar_identity(hulsurkar(RootCtx(3, 7))));
}

TEST_CASE("principal series reduction for n = 2") {
  const int p = 5;
  RootCtx ctx(2, p);
  for (int m = 0; m <= p - 1; ++m) {
    VirtualWeylSum red = jantzen_virtual(WeylPerm::identity(2), {m, 0}, ctx, p);
    VirtualWeylSum want;
    want.add_term({m, 0}, 1);
    want.add_term({p - 1, m}, 1);
    CHECK(red == want);
    CHECK(char_of_virtual(red, ctx).mass() == p + 1);
  }
}

TEST_CASE("transposition-type reduction for n = 3 matches the displayed terms") {
  const int p = 5;
  RootCtx ctx(3, p);
  HulsurkarData h = hulsurkar(ctx);
  WeylPerm w;  // (2 3)
  w.img = {0, 2, 1};
  for (int k = 0; k <= p - 2; ++k)
    for (int j = k + 1; j <= k + p - 1; ++j)
      for (int i = j; i <= k + p - 1; ++i) {
        VirtualWeylSum want;
        for (Weight t : {Weight{k + p - 1, j, i - p + 1},
                         Weight{i, k, j - p + 1},
                         Weight{j + p - 2, i, k + 1},
                         Weight{i, j - 1, k + 1},
                         Weight{j - 1, k + 1, i - p + 1},
                         Weight{k + p - 2, i, j + 1}}) {
          Normalized nw = normalize_weyl(t, ctx);
          if (nw.sign != 0) want.add_term(nw.dominant, nw.sign);
        }
        CHECK(jantzen_virtual(w, {i, j, k}, ctx, p, &h) == want);
      }
}

TEST_CASE("character mass equals the Deligne-Lusztig dimension") {
  std::mt19937 rng(8);
  for (int n = 2; n <= 3; ++n) {
    for (long long p : {5, 7, 11}) {
      RootCtx ctx(n, static_cast<int>(p));
      HulsurkarData h = hulsurkar(ctx);
      auto all = WeylPerm::all(n);
      for (int it = 0; it < (n == 2 ? 12 : 6); ++it) {
        const WeylPerm& w = all[rng() % all.size()];
        Weight lam(n);
        for (auto& c : lam) c = static_cast<int>(rng() % p);
        VirtualWeylSum red = jantzen_virtual(w, lam, ctx, p, &h);
        CHECK(char_of_virtual(red, ctx).mass() == dl_dimension(w, n, p));
      }
    }
  }
  // q-dependence: q = p^2 on GL2
  RootCtx c2(2, 5);
  HulsurkarData h2 = hulsurkar(c2);
  WeylPerm id2 = WeylPerm::identity(2);
  WeylPerm s2 = WeylPerm::n_cycle(2);
  CHECK(char_of_virtual(jantzen_virtual(id2, {7, 0}, c2, 25, &h2), c2).mass() == 26);
  CHECK(char_of_virtual(jantzen_virtual(s2, {7, 0}, c2, 25, &h2), c2).mass() == 24);
}

TEST_CASE("reduction depends only on the pair orbit") {
  std::mt19937 rng(14);
  for (int n = 2; n <= 3; ++n) {
    const int p = 5;
    RootCtx ctx(n, p);
    TameCtx tctx{n, p, 1};
    HulsurkarData h = hulsurkar(ctx);
    auto all = WeylPerm::all(n);
    for (int it = 0; it < 12; ++it) {
      TamePair x{all[rng() % all.size()], Weight(n)};
      for (auto& c : x.mu) c = static_cast<int>(rng() % (2 * p)) - p / 2;
      Weight nu(n);
      for (auto& c : nu) c = static_cast<int>(rng() % 3) - 1;
      TamePair y = act_pair(nu, all[rng() % all.size()], x, tctx);
      CHECK(jantzen_virtual(x.w, x.mu, ctx, p, &h) ==
            jantzen_virtual(y.w, y.mu, ctx, p, &h));
    }
  }
}

TEST_CASE("generic constituent recipe") {
  // n = 2: two weights for a deep principal-series pair
  {
    RootCtx ctx(2, 11);
    Weight mu{5, 0};  // deep in C_0
    auto jh = generic_jh(WeylPerm::identity(2), mu, ctx);
    CHECK(jh.size() == 2);
  }
  // n = 3, p = 11: nine weights for every torus type
  {
    RootCtx ctx(3, 11);
    Weight mu{6, 3, 0};
    REQUIRE(is_deep_in_c0(mu, 3, ctx));
    for (const auto& w : WeylPerm::all(3)) {
      auto jh = generic_jh(w, mu, ctx);
      CHECK(jh.size() == 9);
    }
  }
  // agreement with the exact route at a deep pair
  {
    const int p = 11;
    RootCtx ctx(3, p);
    HulsurkarData h = hulsurkar(ctx);
    Weight pair_mu{8, 4, 0};
    REQUIRE(is_deep_in_c0(sub(pair_mu, ctx.rho), 3, ctx));
    for (const auto& w : WeylPerm::all(3)) {
      VirtualWeylSum red = jantzen_virtual(w, pair_mu, ctx, p, &h);
      std::set<Weight> exact;
      for (const auto& [f, c] : f_expand_virtual(red, ctx)) {
        CHECK(c > 0);
        exact.insert(f.a);
      }
      CHECK(exact == generic_jh(w, sub(pair_mu, ctx.rho), ctx));
    }
  }
}
