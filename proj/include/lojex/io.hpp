#pragma once

// JSON reading and writing for every input format and result type.
// Rationals are written as strings "a/b" (or "a"); readers also accept JSON
// integers. Malformed input throws InvalidInput.

#include "lojex/closure.hpp"
#include "lojex/exponent.hpp"
#include "lojex/families.hpp"
#include "lojex/infinity.hpp"
#include "lojex/multiplicity.hpp"

#include <json.hpp>

#include <filesystem>

namespace lojex::io {

using Json = nlohmann::ordered_json;

Json read_file(const std::filesystem::path& path);

Rat rat_from(const Json& j);
Json to_json(const Rat& r);
ExtRat ext_rat_from(const Json& j);
Json to_json(const ExtRat& r);
Json to_json(const RatVec& v);
RatVec rat_vec_from(const Json& j);
Json to_json(const ExpVec& e);
ExpVec exp_vec_from(const Json& j);
Json to_json(const WeightVec& w);
WeightVec weight_from(const Json& j);

// {"dim": n, "gens": [[...], ...]}
MonomialIdeal ideal_from(const Json& j);
Json to_json(const MonomialIdeal& ideal);

// {"kind": "power" | "linear" | "product", ...}; a bare ideal object is read
// as the power filtration of that ideal.
FiltrationSpec filtration_from(const Json& j);
Json to_json(const FiltrationSpec& f);
bool is_filtration(const Json& j);

// {"candidates": [{"label": [..] or "..", "a0", "a1", "b0", "b1"}, ...]}
FamilySpec family_from(const Json& j);
Json to_json(const FamilySpec& f);

// {"kind": "principal", "e0": [..], "e1": [..]} |
// {"kind": "product", "terms": [{"ideal": {..}, "l0": .., "l1": ..}, ...]}
BFamily bfamily_from(const Json& j);

// {"n": 2, "components": [[{"exp": [..], "coeff": ".."}, ...], ...]}
PolyMap polymap_from(const Json& j);
Json to_json(const PolyMap& F);

// {"rows": [{"label": .., "ordX": .., "ordY": ..}, ...]}
DivisorTable table_from(const Json& j);
Json to_json(const DivisorTable& t);

// {"a": .., "b": .., "d": .., "str": ..}
Surd surd_from(const Json& j);
Json to_json(const Surd& s);

Json to_json(const NewtonPolyhedron& p);
Json to_json(const ClosureCertificate& c);
Json to_json(const PowerMembership& m);
Json to_json(const LojResult& r);
Json to_json(const LctResult& r);
Json to_json(const ThetaReport& r);
Json to_json(const SharpnessWitness& w);
Json to_json(const MixedTable& t);
Json to_json(const TeissierReport& r);
Json to_json(const MilnorReport& r);
Json to_json(const ChamberReport& r);
Json to_json(const StabilityReport& r);
Json to_json(const NondegeneracyReport& r);
Json to_json(const InfinityMin& m);

} // namespace lojex::io
