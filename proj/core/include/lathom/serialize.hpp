#pragma once

#include <json.hpp>

#include "lathom/homothety.hpp"
#include "lathom/ramsey.hpp"
#include "lathom/systems.hpp"

namespace lathom {

using json = nlohmann::json;

// {"domain": descriptor, "codomain": descriptor, "images": [...], "scale": d}
// with images rendered in element order.
json map_to_json(const HomothetyMap& f);
HomothetyMap map_from_json(const json& j);

// {"lattice": descriptor, "k": ..., "colors": [...]} in element order.
json coloring_to_json(const Coloring& chi);
Coloring coloring_from_json(const json& j);

// {"t": ..., "n": ..., "N": ..., "sets": [[...], ...], "alpha": [...]}
json hjform_to_json(const HJForm& form);
HJForm hjform_from_json(const json& j);

// Witness elements are rendered through the map's own lattices.
json verify_report_to_json(const VerifyReport& report, const HomothetyMap& f);

json triple_to_json(const LatticeModel& lattice, const AdmissibleTriple& triple);
json witness_to_json(const MonoWitness& witness);

json axioms_report_to_json(const AxiomsReport& report);
json compat_report_to_json(const CompatReport& report);
json rigidity_report_to_json(const RigidityReport& report);
json ramsey_result_to_json(const RamseyResult& result);
json l_predicate_result_to_json(const LPredicateResult& result, const LatticeModel& domain);

} // namespace lathom
