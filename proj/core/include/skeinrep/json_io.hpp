#pragma once

// JSON (de)serialization for reports and CLI input.  Scalars are coefficient
// vectors {"num": [...], "den": [...]} in the zeta-power basis; entries are
// JSON integers when they fit and decimal strings otherwise.

#include "skeinrep/classify.hpp"
#include "skeinrep/modules.hpp"

#include <json.hpp>

namespace skeinrep {

using json = nlohmann::json;

json mpz_to_json(const mpz_class& v);
mpz_class json_to_mpz(const json& j);

json cyc_to_json(const Cyc& v);
Cyc parse_cyc(const CycField& F, const json& j);

json mat_to_json(const Mat& m);
Mat parse_mat(const CycField& F, const json& j);

json nf_to_json(const NFElement& x);

json family_spec_to_json(const FamilySpec& s);
FamilySpec parse_family_spec(const CycField& F, const json& j);

json shadow_to_json(const ShadowDqB& sh);

json proj_point_to_json(const ProjPoint& p);
ProjPoint parse_proj_point(const CycField& F, const json& j);

ShadowSpec parse_shadow_spec(const CycField& F, const json& j);

json relation_report_to_json(const RelationReport& r);
json morphism_report_to_json(const MorphismReport& r);

}  // namespace skeinrep
