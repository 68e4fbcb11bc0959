#pragma once

#include <json.hpp>

#include "stabkit/apolarity.hpp"
#include "stabkit/stability.hpp"

namespace stabkit {

// Deterministic serialization uses insertion-ordered JSON throughout.
using Json = nlohmann::ordered_json;

Json to_json(const GaussRat& v);          // {"re":"num/den","im":"num/den"}
GaussRat gauss_from_json(const Json& j);

// {"degree":[...],"terms":[{"mu":[...],"re":"num/den","im":"num/den"}]}
Json to_json(const BihomPoly& p);
BihomPoly poly_from_json(const Json& j);

// {"a":{...},"b":{...},"c":{...},"d":{...}}
Json to_json(const MoebiusMap& m);
MoebiusMap moebius_from_json(const Json& j);

// {"in_degree":[...],"out_degree":[...],"entries":[...]} column-major
Json to_json(const LinearOp& T);
LinearOp op_from_json(const Json& j);

Json to_json(const Verdict& v);

Json poly_json_from_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace stabkit
