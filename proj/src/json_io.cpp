#include "serre/json_io.hpp"

#include <sstream>

namespace serre {

json to_json(const Alcove& c, const RootCtx& ctx) {
  json levels = json::array();
  for (int k = 0; k < ctx.num_pos_roots(); ++k) {
    auto [i, j] = ctx.pos_roots[k];
    levels.push_back(json::array({i + 1, j + 1, c.levels[k]}));
  }
  return json{{"levels", levels}};
}

json to_json(const FormalCharacter& c) {
  json terms = json::array();
  for (const auto& [w, m] : c.terms) terms.push_back(json::array({json(w), m}));
  return json{{"terms", terms}};
}

json to_json(const VirtualWeylSum& v) {
  json terms = json::array();
  for (const auto& [w, m] : v.terms) terms.push_back(json::array({json(w), m}));
  return json{{"terms", terms}};
}

json to_json(const SerreWeight& f) {
  return json{{"n", f.n}, {"p", f.p}, {"weight", f.a}};
}

json to_json(const TameType& t) {
  json orbits = json::array();
  for (const auto& o : t.orbits)
    orbits.push_back(json{{"niveau", o.niveau}, {"exp", o.exp}});
  return json{{"p", t.p}, {"n", t.n}, {"orbits", orbits}};
}

json to_json(const WeightSet& ws, int delta) {
  json weights = json::array();
  for (const auto& f : ws.weights) weights.push_back(to_json(f));
  json out{{"n", ws.n},
           {"p", ws.p},
           {"provenance", route_name(ws.provenance)},
           {"weights", weights}};
  if (delta >= 0) out["delta"] = delta;
  return out;
}

json to_json(const Gl2Weight& w, const Gl2Ctx& ctx) {
  return json{{"p", ctx.p},
              {"f", ctx.f},
              {"a", w.b + w.sym_degree(ctx)},
              {"b", w.b},
              {"m", w.m}};
}

json to_json(const BdjVerifyReport& rep) {
  return json{{"checked", rep.checked},
              {"passed", rep.passed},
              {"counterexamples", rep.counterexamples}};
}

namespace {

long long parse_ll(const std::string& s) {
  size_t pos = 0;
  long long v = std::stoll(s, &pos);
  require(pos == s.size(), "malformed integer");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

TameType parse_tau_spec(const std::string& spec, int n, int p) {
  std::vector<TameOrbit> orbits;
  for (const auto& part : split(spec, ',')) {
    auto kv = split(part, ':');
    require(kv.size() == 2, "tau orbit must look like d:e");
    long long d = parse_ll(kv[0]);
    require(d >= 1 && d <= n, "orbit niveau out of range");
    orbits.push_back({static_cast<int>(d), parse_ll(kv[1])});
  }
  return TameType::from_orbits(n, p, std::move(orbits));
}

std::string tau_spec_string(const TameType& t) {
  std::ostringstream os;
  for (size_t i = 0; i < t.orbits.size(); ++i) {
    if (i) os << ',';
    os << t.orbits[i].niveau << ':' << t.orbits[i].exp;
  }
  return os.str();
}

Gl2TameType parse_gl2_type(const std::string& spec, const Gl2Ctx& ctx) {
  if (spec.rfind("niv1:", 0) == 0) {
    auto es = split(spec.substr(5), ',');
    require(es.size() == 2, "niveau-1 type needs two exponents");
    return gl2_niveau1(parse_ll(es[0]), parse_ll(es[1]), ctx);
  }
  if (spec.rfind("niv2:", 0) == 0) {
    auto es = split(spec.substr(5), ',');
    require(es.size() == 1, "niveau-2 type needs one exponent");
    return gl2_niveau2(parse_ll(es[0]), ctx);
  }
  fail("type must start with niv1: or niv2:");
}

WeylPerm parse_perm(const std::string& spec, int n) {
  WeylPerm w = WeylPerm::identity(n);
  if (spec == "id" || spec == "1") return w;
  size_t pos = 0;
  while (pos < spec.size()) {
    require(spec[pos] == '(', "cycle notation expected, e.g. (1 2 3)");
    size_t close = spec.find(')', pos);
    require(close != std::string::npos, "unbalanced cycle");
    std::istringstream is(spec.substr(pos + 1, close - pos - 1));
    std::vector<int> cyc;
    long long v;
    while (is >> v) {
      require(v >= 1 && v <= n, "cycle entry out of range");
      cyc.push_back(static_cast<int>(v - 1));
    }
    require(cyc.size() >= 2, "cycles need at least two entries");
    for (size_t i = 0; i < cyc.size(); ++i) {
      require(w.img[cyc[i]] == static_cast<int>(cyc[i]), "cycles must be disjoint");
    }
    for (size_t i = 0; i < cyc.size(); ++i)
      w.img[cyc[i]] = cyc[(i + 1) % cyc.size()];
    pos = close + 1;
  }
  return w;
}

Weight parse_weight(const std::string& spec, int n) {
  auto parts = split(spec, ',');
  require(static_cast<int>(parts.size()) == n, "weight needs n coordinates");
  Weight w(n);
  for (int i = 0; i < n; ++i) w[i] = static_cast<int>(parse_ll(parts[i]));
  return w;
}

}  // namespace serre
