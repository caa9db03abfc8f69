#include <CLI11.hpp>
#include <iostream>

#include "serre/json_io.hpp"
#include "serre/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitCounterexample = 2;

serre::json with_schema(serre::json j) {
  j["schema_version"] = 1;
  return j;
}

void emit(const serre::json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  // tsv: weights or flat key/value rows
  if (j.contains("weights")) {
    for (const auto& w : j["weights"]) {
      const auto& v = w["weight"];
      for (size_t i = 0; i < v.size(); ++i)
        std::cout << v[i].get<long long>() << (i + 1 < v.size() ? "\t" : "\n");
    }
    return;
  }
  for (const auto& [k, v] : j.items()) std::cout << k << "\t" << v.dump() << "\n";
}

int require_prime(long long p) {
  if (!serre::is_prime(p) || p < 3) {
    std::cerr << "error: --p must be an odd prime\n";
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Serre-weight computations for tame inertial types"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}));

  // wq
  auto* wq = app.add_subcommand("wq", "predicted weight set of a tame type");
  int wq_n = 3, wq_p = 5, wq_delta = -1;
  std::string wq_tau, wq_route = "exact";
  wq->add_option("--n", wq_n, "dimension")->required();
  wq->add_option("--p", wq_p, "prime")->required();
  wq->add_option("--tau", wq_tau, "tame type, e.g. 2:8,1:0")->required();
  wq->add_option("--route", wq_route, "computation route")
      ->check(CLI::IsMember({"exact", "generic", "gl3", "adps"}));
  wq->add_option("--delta", wq_delta, "genericity depth (generic route)");

  // jantzen reduce
  auto* jz = app.add_subcommand("jantzen", "Deligne-Lusztig reduction mod p");
  auto* jzr = jz->add_subcommand("reduce", "virtual Weyl-module sum");
  int jz_n = 3, jz_p = 5;
  long long jz_q = 0;
  std::string jz_w = "id", jz_lambda;
  jzr->add_option("--n", jz_n)->required();
  jzr->add_option("--p", jz_p)->required();
  jzr->add_option("--q", jz_q, "prime power (default p)");
  jzr->add_option("--w", jz_w, "torus type, cycle notation");
  jzr->add_option("--lambda", jz_lambda, "weight, comma separated")->required();

  // counts
  auto* counts = app.add_subcommand("counts", "generic weight count");
  int c_n = 3, c_p = 0;
  std::string c_via = "formula";
  counts->add_option("--n", c_n)->required();
  counts->add_option("--p", c_p, "prime used for alcove geometry");
  counts->add_option("--via", c_via)->check(CLI::IsMember({"formula", "enumeration"}));

  // compare-adps
  auto* cmp = app.add_subcommand("compare-adps", "diff the two n=3 predictions");
  int cmp_p = 5;
  cmp->add_option("--p", cmp_p)->required();

  // bdj
  auto* bdj = app.add_subcommand("bdj", "GL2 weight sets over p^f");
  auto* bw = bdj->add_subcommand("weights", "conjectural weight set");
  int b_p = 5, b_f = 1;
  std::string b_type;
  bw->add_option("--p", b_p)->required();
  bw->add_option("--f", b_f)->required();
  bw->add_option("--type", b_type, "niv1:c,c' or niv2:gamma")->required();
  auto* br = bdj->add_subcommand("rext", "multi-valued reflection of a weight");
  int r_p_ = 5, r_f = 1;
  std::string r_m, r_b, r_mode = "strict";
  br->add_option("--p", r_p_)->required();
  br->add_option("--f", r_f)->required();
  br->add_option("--m", r_m, "digit vector, comma separated")->required();
  br->add_option("--b", r_b, "twist digit vector, comma separated")->required();
  br->add_option("--mode", r_mode)->check(CLI::IsMember({"strict", "weak"}));
  auto* bv = bdj->add_subcommand("verify", "exhaustive weight-set identity");
  int v_p_ = 5, v_f = 1;
  std::string v_mode = "strict";
  bv->add_option("--p", v_p_)->required();
  bv->add_option("--f", v_f)->required();
  bv->add_option("--mode", v_mode)->check(CLI::IsMember({"strict", "weak"}));

  // selftest
  auto* st = app.add_subcommand("selftest", "run the acceptance suite");
  bool st_quick = false;
  st->add_flag("--quick", st_quick, "subset suite, under a minute");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*wq) {
      if (int rc = require_prime(wq_p)) return rc;
      if (wq_n < 2) {
        std::cerr << "error: --n must be at least 2\n";
        return kExitDomainError;
      }
      serre::TameType tau = serre::parse_tau_spec(wq_tau, wq_n, wq_p);
      int delta = wq_delta >= 0 ? wq_delta : wq_n;
      serre::WeightSet ws;
      bool generic = true;
      if (wq_route == "exact")
        ws = serre::w_question_exact(tau);
      else if (wq_route == "generic")
        ws = serre::w_question_generic(tau, delta, &generic);
      else if (wq_route == "gl3")
        ws = serre::w_question_gl3(tau);
      else
        ws = serre::adps_weights_gl3(tau);
      serre::json out = with_schema(serre::to_json(ws, wq_route == "generic" ? delta : -1));
      if (wq_route == "generic" && !generic)
        out["warning"] = "ungeneric input - no correctness guarantee";
      emit(out, format);
      return kExitOk;
    }

    if (*jzr) {
      if (int rc = require_prime(jz_p)) return rc;
      serre::RootCtx ctx(jz_n, jz_p);
      serre::WeylPerm w = serre::parse_perm(jz_w, jz_n);
      serre::Weight lam = serre::parse_weight(jz_lambda, jz_n);
      long long q = jz_q ? jz_q : jz_p;
      serre::VirtualWeylSum red = serre::jantzen_virtual(w, lam, ctx, q);
      serre::json out = with_schema(serre::to_json(red));
      out["mass"] = serre::char_of_virtual(red, ctx).mass();
      emit(out, format);
      return kExitOk;
    }

    if (*counts) {
      auto mode = c_via == "formula" ? serre::CountMode::formula
                                     : serre::CountMode::enumeration;
      long long value = serre::predicted_count(c_n, mode, c_p);
      emit(with_schema(serre::json{{"n", c_n}, {"count", value}, {"via", c_via}}),
           format);
      return kExitOk;
    }

    if (*cmp) {
      if (int rc = require_prime(cmp_p)) return rc;
      serre::json rows = serre::json::array();
      for (const auto& tau : serre::all_tame_types(3, cmp_p)) {
        serre::WeightSet wqs = serre::w_question_gl3(tau);
        serre::WeightSet ad = serre::adps_weights_gl3(tau);
        serre::json missing = serre::json::array();
        for (const auto& f : wqs.weights)
          if (!ad.weights.count(f)) missing.push_back(serre::to_json(f));
        rows.push_back(serre::json{{"tau", serre::tau_spec_string(tau)},
                                   {"predicted", wqs.weights.size()},
                                   {"adps", ad.weights.size()},
                                   {"missing_from_adps", missing}});
      }
      emit(with_schema(serre::json{{"p", cmp_p}, {"rows", rows}}), format);
      return kExitOk;
    }

    if (*bw) {
      if (int rc = require_prime(b_p)) return rc;
      serre::Gl2Ctx ctx(b_p, b_f);
      auto rho = serre::parse_gl2_type(b_type, ctx);
      serre::json weights = serre::json::array();
      for (const auto& w : serre::w_bdj(rho, ctx))
        weights.push_back(serre::to_json(w, ctx));
      emit(with_schema(serre::json{{"p", b_p},
                                   {"f", b_f},
                                   {"type", serre::gl2_type_str(rho)},
                                   {"weights", weights}}),
           format);
      return kExitOk;
    }

    if (*br) {
      if (int rc = require_prime(r_p_)) return rc;
      serre::Gl2Ctx ctx(r_p_, r_f);
      serre::Weight m = serre::parse_weight(r_m, r_f);
      serre::Weight b = serre::parse_weight(r_b, r_f);
      long long bval = 0;
      for (int i = r_f - 1; i >= 0; --i) {
        if (m[i] < 0 || m[i] > r_p_ - 1 || b[i] < 0 || b[i] > r_p_ - 1) {
          std::cerr << "error: --m/--b digits must lie in [0, p-1]\n";
          return kExitDomainError;
        }
        bval = bval * r_p_ + b[i];
      }
      serre::Gl2Weight w{std::vector<int>(m.begin(), m.end()),
                         serre::mod_reduce(bval, ctx.q() - 1)};
      serre::json out_w = serre::json::array();
      for (const auto& r : serre::r_ext(w, ctx, r_mode == "weak"))
        out_w.push_back(serre::to_json(r, ctx));
      emit(with_schema(serre::json{{"p", r_p_},
                                   {"f", r_f},
                                   {"input", serre::to_json(w, ctx)},
                                   {"mode", r_mode},
                                   {"weights", out_w}}),
           format);
      return kExitOk;
    }

    if (*bv) {
      if (int rc = require_prime(v_p_)) return rc;
      serre::Gl2Ctx ctx(v_p_, v_f);
      auto rep = serre::verify_bdj_theorem(ctx, v_mode == "weak");
      emit(with_schema(serre::to_json(rep)), format);
      return rep.passed ? kExitOk : kExitCounterexample;
    }

    if (*st) {
      bool ok = serre::run_acceptance(st_quick, std::cout);
      return ok ? kExitOk : kExitCounterexample;
    }
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}
