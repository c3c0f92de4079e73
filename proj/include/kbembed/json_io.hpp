#pragma once

#include <string>

#include <json.hpp>

#include "kbembed/blaschke.hpp"
#include "kbembed/extremal.hpp"
#include "kbembed/measure.hpp"
#include "kbembed/model_space.hpp"
#include "kbembed/pick.hpp"
#include "kbembed/schur.hpp"

namespace kbembed {

using json = nlohmann::json;

// Complex numbers serialize as [re, im]; polynomials as arrays of them.
json to_json(cplx z);
cplx cplx_from_json(const json& j);

json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

// {"gamma": [re, im], "zeros": [{"z": [re, im], "r": int}]}
json to_json(const BlaschkeProduct& b);
BlaschkeProduct blaschke_from_json(const json& j);

// {"num": [...], "den": [...]}
json to_json(const RationalSchur& s);
RationalSchur schur_from_json(const json& j);

// {"atoms": [{"t": [re, im], "s": real}]}
json to_json(const AtomicMeasure& sigma);
AtomicMeasure measure_from_json(const json& j);

// Measure fields plus {"beta": real}.
json to_json(const HerglotzData& h);
HerglotzData herglotz_from_json(const json& j);

json to_json(const IsometryCertificate& cert);
json to_json(const ExtremalityReport& report);

// {"nodes": [[re,im],...], "values": [[re,im],...], "boundary": bool}
PickSystem pick_system_from_json(const json& j);

// CSV atom table: header arg_t,re_t,im_t,weight. Deterministic shortest
// round-trip formatting.
std::string measure_to_csv(const AtomicMeasure& sigma);

std::string format_double(double v);

}  // namespace kbembed
