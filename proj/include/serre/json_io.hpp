#pragma once

#include <json.hpp>

#include "serre/bdj2.hpp"
#include "serre/characters.hpp"
#include "serre/lattice.hpp"
#include "serre/modreps.hpp"
#include "serre/tametypes.hpp"
#include "serre/weightsets.hpp"

namespace serre {

using json = nlohmann::json;

inline json to_json(const Weight& w) { return json(w); }

json to_json(const Alcove& c, const RootCtx& ctx);
json to_json(const FormalCharacter& c);
json to_json(const VirtualWeylSum& v);
json to_json(const SerreWeight& f);
json to_json(const TameType& t);
json to_json(const WeightSet& ws, int delta = -1);
json to_json(const Gl2Weight& w, const Gl2Ctx& ctx);
json to_json(const BdjVerifyReport& rep);

// "d:e[,d:e...]"
TameType parse_tau_spec(const std::string& spec, int n, int p);

// "niv1:c,c'" or "niv2:gamma"
Gl2TameType parse_gl2_type(const std::string& spec, const Gl2Ctx& ctx);

// "id" or cycle notation like "(1 2 3)(4 5)"; 1-based entries
WeylPerm parse_perm(const std::string& spec, int n);

// comma-separated integers
Weight parse_weight(const std::string& spec, int n);

std::string tau_spec_string(const TameType& t);

}  // namespace serre
