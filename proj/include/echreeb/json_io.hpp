#pragma once

#include <json.hpp>

#include "echreeb/curves.hpp"
#include "echreeb/flow.hpp"
#include "echreeb/generators.hpp"
#include "echreeb/index.hpp"
#include "echreeb/manifold.hpp"
#include "echreeb/perturb.hpp"

namespace echreeb {

// All documents use insertion-ordered JSON so reports are byte-stable.
using Json = nlohmann::ordered_json;

// Surd <-> [num, den, surd_num, surd_den] meaning num/den + (surd_num/surd_den) sqrt6.
Json surd_to_json(const Surd& s);
Surd surd_from_json(const Json& j);

// Profile document: {"base": "taubes", "f_coeffs": [...], "c": [num, den]}.
Json profile_to_json(const FormProfile& profile);
FormProfile profile_from_json(const Json& j);

Json morse_bott_to_json(const FormProfile& profile, const MorseBottCatalog& catalog);

Json orbit_to_json(const ReebOrbit& o);
ReebOrbit orbit_from_json(const Json& j);
Json catalog_to_json(const OrbitCatalog& c);
OrbitCatalog catalog_from_json(const Json& j);

Json neighborhood_to_json(const NeighborhoodSpec& n);

Json return_map_to_json(const ReturnMapReport& r);

// Curve documents: {"orbits": [...], "components": [...]} with orbit
// references by name (inline or into a catalog).
OrbitRef orbit_ref_from_json(const Json& j);
Json orbit_ref_to_json(const OrbitRef& o);
FormalCurveComponent component_from_json(const Json& j, const OrbitCatalog* catalog,
                                         const std::vector<OrbitRef>& inline_orbits);
Json component_to_json(const FormalCurveComponent& c);

Json generator_to_json(const OrbitSetGenerator& g);
Json generators_to_json(const EnumeratedGenerators& e, const FilteredDimensions& dims);

Json manifold_to_json(const ManifoldSummary& m);
ManifoldSummary manifold_from_json(const Json& j);

}  // namespace echreeb
