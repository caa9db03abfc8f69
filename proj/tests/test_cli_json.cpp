#include <doctest.h>

#include "serre/json_io.hpp"

using namespace serre;

TEST_CASE("tame type parsing canonicalises") {
  TameType t = parse_tau_spec("2:8,1:0", 3, 5);
  CHECK(t.orbits == std::vector<TameOrbit>{{2, 8}, {1, 0}});
  CHECK(parse_tau_spec("2:40,1:0", 3, 5) == t);  // 40 = 16 mod 24, orbit of 8
  CHECK(parse_tau_spec("1:7,2:8", 3, 5) ==
        parse_tau_spec("2:8,1:3", 3, 5));
  // imprimitive niveau-2 exponent splits into two degree-1 orbits
  TameType split = parse_tau_spec("2:6,1:0", 3, 5);
  CHECK(split.orbits == std::vector<TameOrbit>{{1, 0}, {1, 1}, {1, 1}});
  CHECK(tau_spec_string(t) == "2:8,1:0");
  CHECK_THROWS(parse_tau_spec("4:1", 3, 5));
  CHECK_THROWS(parse_tau_spec("2:8;1:0", 3, 5));
}

TEST_CASE("permutation parsing") {
  WeylPerm c = parse_perm("(1 2 3)", 3);
  CHECK(c == WeylPerm::n_cycle(3));
  CHECK(parse_perm("id", 3) == WeylPerm::identity(3));
  WeylPerm t = parse_perm("(2 3)", 3);
  CHECK(t.img == std::vector<int>{0, 2, 1});
  CHECK(parse_perm("(1 2)(3 4)", 4).img == std::vector<int>{1, 0, 3, 2});
  CHECK_THROWS(parse_perm("(1 5)", 3));
  CHECK_THROWS(parse_perm("(1 2", 3));
  CHECK_THROWS(parse_perm("(1 2)(2 3)", 3));
}

TEST_CASE("weight parsing") {
  CHECK(parse_weight("4,2,0", 3) == Weight{4, 2, 0});
  CHECK_THROWS(parse_weight("4,2", 3));
  CHECK_THROWS(parse_weight("4,x,0", 3));
}

TEST_CASE("json shapes are stable") {
  RootCtx ctx(3, 5);
  Alcove c = alcove_of_interior({4, 2, 0}, ctx);
  json ja = to_json(c, ctx);
  CHECK(ja["levels"].dump() == "[[1,2,0],[1,3,1],[2,3,0]]");

  SerreWeight f = canonical_serre({6, 3, 0}, 5);
  CHECK(to_json(f).dump() == R"({"n":3,"p":5,"weight":[6,3,0]})");

  TameType t = parse_tau_spec("2:8,1:0", 3, 5);
  json jt = to_json(t);
  CHECK(jt["orbits"][0]["niveau"] == 2);
  CHECK(jt["orbits"][0]["exp"] == 8);

  VirtualWeylSum v;
  v.add_term({2, 1, 0}, 1);
  v.add_term({4, 2, 0}, -2);
  CHECK(to_json(v).dump() == to_json(v).dump());  // deterministic
  CHECK(to_json(v)["terms"][0][0].dump() == "[2,1,0]");
}
