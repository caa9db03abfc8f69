#include <doctest.h>

#include <random>

#include "serre/characters.hpp"
#include "serre/lattice.hpp"

using namespace serre;

TEST_CASE("Weyl characters of small weights") {
  RootCtx c2(2, 5);
  FormalCharacter std2 = weyl_character({1, 0}, c2);
  CHECK(std2.terms ==
        std::map<Weight, long long>{{{0, 1}, 1}, {{1, 0}, 1}});

  RootCtx c3(3, 5);
  FormalCharacter ext2 = weyl_character({1, 1, 0}, c3);
  CHECK(ext2.terms == std::map<Weight, long long>{
                          {{0, 1, 1}, 1}, {{1, 0, 1}, 1}, {{1, 1, 0}, 1}});

  FormalCharacter adj = weyl_character({2, 1, 0}, c3);
  CHECK(adj.mass() == 8);
  CHECK(adj.terms.at({1, 1, 1}) == 2);
  CHECK(adj.is_w_symmetric());
}

TEST_CASE("chamber normalisation") {
  RootCtx c2(2, 5);
  CHECK(normalize_weyl({0, 1}, c2).sign == 0);
  Normalized n = normalize_weyl({-1, 1}, c2);
  CHECK(n.sign == -1);
  CHECK(n.dominant == Weight{0, 0});
  Normalized d = normalize_weyl({3, 1}, c2);
  CHECK(d.sign == 1);
  CHECK(d.dominant == Weight{3, 1});
}

TEST_CASE("normalisation is idempotent and sign-multiplicative") {
  RootCtx ctx(3, 5);
  std::mt19937 rng(5);
  for (int it = 0; it < 200; ++it) {
    Weight lam(3);
    for (auto& c : lam) c = static_cast<int>(rng() % 11) - 5;
    Normalized n = normalize_weyl(lam, ctx);
    if (n.sign == 0) continue;
    Normalized again = normalize_weyl(n.dominant, ctx);
    CHECK(again.sign == 1);
    CHECK(again.dominant == n.dominant);
    for (const auto& w : WeylPerm::all(3)) {
      Normalized m = normalize_weyl(dot_action(w, lam, ctx), ctx);
      CHECK(m.sign == n.sign * w.sign());
      CHECK(m.dominant == n.dominant);
    }
  }
}

TEST_CASE("Brauer expansion") {
  RootCtx c2(2, 5);
  VirtualWeylSum unit = brauer_expand({2, 1}, FormalCharacter::unit(2), c2);
  CHECK(unit.terms == std::map<Weight, long long>{{{2, 1}, 1}});

  VirtualWeylSum prod = brauer_expand({1, 0}, weyl_character({1, 0}, c2), c2);
  CHECK(prod.terms ==
        std::map<Weight, long long>{{{1, 1}, 1}, {{2, 0}, 1}});

  FormalCharacter chi;
  chi.add_term({1, -1}, 1);
  chi.add_term({0, 0}, 1);
  chi.add_term({-1, 1}, 1);
  CHECK(chi.is_w_symmetric());
  VirtualWeylSum adj = brauer_expand({0, 0}, chi, c2);
  CHECK(adj.terms == std::map<Weight, long long>{{{1, -1}, 1}});
}

TEST_CASE("character of a virtual sum") {
  RootCtx c2(2, 5);
  CHECK(char_of_virtual(VirtualWeylSum{}, c2).is_zero());
  VirtualWeylSum v;
  v.add_term({1, 0}, 1);
  CHECK(char_of_virtual(v, c2) == weyl_character({1, 0}, c2));
}

TEST_CASE("Brauer identity against the character ring") {
  std::mt19937 rng(31);
  for (int n = 2; n <= 3; ++n) {
    RootCtx ctx(n, 7);
    for (int it = 0; it < 60; ++it) {
      Weight lam(n), nu(n);
      for (auto& c : lam) c = static_cast<int>(rng() % 9) - 3;
      for (auto& c : nu) c = static_cast<int>(rng() % 3);
      std::sort(nu.begin(), nu.end(), std::greater<int>());
      FormalCharacter chi = weyl_character(nu, ctx);
      FormalCharacter lhs = char_of_virtual(brauer_expand(lam, chi, ctx), ctx);
      Normalized nl = normalize_weyl(lam, ctx);
      FormalCharacter rhs;
      if (nl.sign != 0)
        rhs = (weyl_character(nl.dominant, ctx) * chi).scaled(nl.sign);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("Brauer expansion is associative through products") {
  std::mt19937 rng(47);
  RootCtx ctx(2, 5);
  for (int it = 0; it < 40; ++it) {
    Weight lam{static_cast<int>(rng() % 5), static_cast<int>(rng() % 5) - 2};
    Weight n1{static_cast<int>(rng() % 3), 0};
    Weight n2{static_cast<int>(rng() % 3), 0};
    std::sort(n1.begin(), n1.end(), std::greater<int>());
    std::sort(n2.begin(), n2.end(), std::greater<int>());
    FormalCharacter c1 = weyl_character(n1, ctx), c2 = weyl_character(n2, ctx);
    VirtualWeylSum direct = brauer_expand(lam, c1 * c2, ctx);
    VirtualWeylSum staged;
    for (const auto& [nu, c] : brauer_expand(lam, c1, ctx).terms) {
      VirtualWeylSum part = brauer_expand(nu, c2, ctx);
      for (const auto& [mu, d] : part.terms) staged.add_term(mu, c * d);
    }
    CHECK(direct == staged);
  }
}

TEST_CASE("character mass equals the dimension product") {
  std::mt19937 rng(11);
  for (int it = 0; it < 80; ++it) {
    int n = 2 + static_cast<int>(rng() % 3);
    RootCtx ctx(n, 7);
    Weight lam(n);
    for (auto& c : lam) c = static_cast<int>(rng() % 15);
    std::sort(lam.begin(), lam.end(), std::greater<int>());
    CHECK(weyl_character(lam, ctx).mass() == weyl_dimension(lam, ctx));
  }
}
