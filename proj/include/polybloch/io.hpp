#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "polybloch/quiver_engine.hpp"
#include "polybloch/realization_verify.hpp"
#include "polybloch/regulator_maps.hpp"
#include "polybloch/symbolic_relations.hpp"

namespace pb {

using json = nlohmann::ordered_json;

struct FormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

json cplx_to_json(cplx z);  // [re, im]
cplx cplx_from_json(const json& j);

// {generators:[...], terms:[{coef, u:{gen:exp}, v:{gen:exp}, sign1, sign2}]}
json relation_to_json(const RelationSum& r);
RelationSum relation_from_json(const json& j);

// {signs:[[s1,s2]...], values:{gen:[re,im]}, logs:{gen:[re,im]}}
json realization_to_json(const Realization& r);
Realization realization_from_json(const json& j);

// {vertices:[{name, frozen}], edges:[[i,j,mult]]}
json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);
// coordinates of a seed as Laurent strings in the initial variables
json seed_to_json(const MutationClass& mc, std::size_t seed);

json scenario_to_json(const ScenarioReport& r);
json comparison_to_json(const MultisetComparison& c);

// rows of [re, im] pairs
json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);

json read_json_file(const std::string& path);

}  // namespace pb
