#pragma once

#include <json.hpp>

#include <string>

#include "muldep/search.hpp"

namespace muldep {

using ojson = nlohmann::ordered_json;

inline constexpr const char* kVersion = "muldep 0.1.0";

ojson to_json(const mpq_class& x);
ojson to_json(const Poly& f);
ojson to_json(const PlaceSet& S);
ojson to_json(const HeightValue& h);
ojson to_json(const GroupSpec& G);
ojson to_json(const RelationWitness& w);
ojson to_json(const Verdict& v);
ojson to_json(const HypothesisReport& hr);
ojson to_json(const ScanReport& rep);
ojson to_json(const HyperellipticReport& rep);
ojson to_json(const ValidateReport& rep);
ojson to_json(const PlaceBreakdown& b);
ojson to_json(const BoundReport& rep);
ojson to_json(const PeriodicityReport& rep);
ojson to_json(const LfWitness& w);
ojson to_json(const CoprimeBasis& cb);
ojson to_json(const SquarefreeDecomposition& d);
ojson to_json(const DiophantineBasis& d);

// One row per hit: alpha,height,offset,verdict,k,eta,m,gamma_exponents.
std::string scan_report_csv(const ScanReport& rep);

Poly poly_from_json(const ojson& j);
mpq_class rational_from_json(const ojson& j);
GroupSpec group_from_json(const ojson& j);

} // namespace muldep
