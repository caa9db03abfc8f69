#include <doctest.h>

#include "serre/json_io.hpp"
#include "serre/weightsets.hpp"

using namespace serre;

namespace {
SerreWeight F(std::initializer_list<int> a, int p) {
  return canonical_serre(Weight(a), p);
}
}  // namespace

TEST_CASE("exact route for GL2") {
  TameType tau = TameType::from_orbits(2, 5, {{1, 2}, {1, 0}});
  WeightSet ws = w_question_exact(tau);
  CHECK(ws.weights == std::set<SerreWeight>{F({3, 2}, 5), F({1, 0}, 5)});
}

TEST_CASE("closed-form lists for C(tau)") {
  // niveau 1, p = 7, exponents (4,2,0)
  TameType t1 = TameType::from_orbits(3, 7, {{1, 4}, {1, 2}, {1, 0}});
  auto c1 = c_tau_gl3(t1, Gl3Mode::closed_form);
  const int p = 7;
  int i = 4, j = 2, k = 0;
  for (Weight lam : {Weight{i, j, k}, Weight{j, k, i - p + 1},
                     Weight{k + p - 1, i, j}, Weight{k + p - 1, j, i - p + 1},
                     Weight{i, k, j - p + 1}, Weight{j + p - 1, i, k}})
    CHECK(c1.count(canonical_serre(lam, p).a));

  // niveau 2, p = 5, m = 8: parameters (i,j,k) = (4,3,1)
  TameType t2 = TameType::from_orbits(3, 5, {{2, 8}, {1, 0}});
  auto c2 = c_tau_gl3(t2, Gl3Mode::closed_form);
  CHECK(c2.count(Weight{8, 4, 0}));

  // the two routes agree for every tame type at p = 5
  for (const auto& tau : all_tame_types(3, 5))
    CHECK(c_tau_gl3(tau, Gl3Mode::search) == c_tau_gl3(tau, Gl3Mode::closed_form));
}

TEST_CASE("A-sets") {
  CHECK(a_set({4, 2, 0}, 5) ==
        std::set<SerreWeight>{F({2, 1, 0}, 5), F({7, 5, 3}, 5)});
  CHECK(a_set({8, 4, 0}, 5) == std::set<SerreWeight>{F({6, 3, 0}, 5)});
  // weight whose regularised class sits on the alcove wall
  CHECK(a_set({5, 3, 0}, 5) == std::set<SerreWeight>{F({3, 2, 0}, 5)});
}

TEST_CASE("extra-weight table rows") {
  struct Row {
    int p;
    const char* tau;
    Weight extra;
  };
  for (const Row& row : {Row{5, "2:8,1:0", {6, 3, 0}},
                         Row{7, "2:12,1:3", {13, 8, 3}},
                         Row{11, "2:40,1:0", {16, 9, 2}}}) {
    TameType tau = parse_tau_spec(row.tau, 3, row.p);
    SerreWeight extra = canonical_serre(row.extra, row.p);
    WeightSet wq = w_question_gl3(tau);
    WeightSet ad = adps_weights_gl3(tau);
    CHECK(wq.weights.count(extra));
    CHECK_FALSE(ad.weights.count(extra));
    for (const auto& f : ad.weights) CHECK(wq.weights.count(f));
  }
}

TEST_CASE("niveau-1 ADPS prediction agrees exactly") {
  for (const auto& tau : all_tame_types(3, 5)) {
    if (tau.orbits.size() != 3) continue;
    CHECK(adps_weights_gl3(tau).weights == w_question_gl3(tau).weights);
  }
}

TEST_CASE("ADPS prediction is contained in the full one at p = 5") {
  for (const auto& tau : all_tame_types(3, 5)) {
    WeightSet wq = w_question_gl3(tau);
    for (const auto& f : adps_weights_gl3(tau).weights)
      CHECK(wq.weights.count(f));
  }
}

TEST_CASE("predicted counts") {
  CHECK(predicted_count(2, CountMode::formula) == 2);
  CHECK(predicted_count(3, CountMode::formula) == 9);
  CHECK(predicted_count(4, CountMode::formula) == 88);
  CHECK(predicted_count(2, CountMode::enumeration, 11) == 2);
  CHECK(predicted_count(3, CountMode::enumeration, 13) == 9);
}

TEST_CASE("generic prediction composition at n = 3") {
  TameType tau = TameType::from_orbits(3, 13, {{1, 8}, {1, 4}, {1, 0}});
  bool generic = false;
  WeightSet ws = w_question_generic(tau, 3, &generic);
  CHECK(generic);
  CHECK(ws.weights.size() == 9);
  int lower = 0;
  for (const auto& f : ws.weights)
    if (f.a[0] - f.a[2] < 13 - 2) ++lower;
  CHECK(lower == 3);
  for (const auto& f : ws.weights) CHECK(is_regular(f));
}

TEST_CASE("route agreement spot checks at p = 5") {
  for (const auto& tau : all_tame_types(3, 5))
    CHECK(w_question_exact(tau).weights == w_question_gl3(tau).weights);
}

TEST_CASE("twist and dual identities at p = 5") {
  int done = 0;
  for (const auto& tau : all_tame_types(3, 5)) {
    if (++done > 12) break;
    StructuralReport rep = structural_checks(tau);
    CHECK(rep.twist_ok);
    CHECK(rep.dual_ok);
  }
}

TEST_CASE("tame type catalogue") {
  auto types = all_tame_types(3, 5);
  CHECK(types.size() == 100);  // 20 split + 40 niveau-2 + 40 niveau-3
  for (const auto& t : types) {
    int total = 0;
    for (const auto& o : t.orbits) total += o.niveau;
    CHECK(total == 3);
  }
  CHECK(all_tame_types(2, 5).size() == 10 + 10);
}
