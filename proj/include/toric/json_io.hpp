#pragma once

// JSON faces of every value the command line speaks, plus the printable
// monomial/binomial strings.  Each renderer has a parser and
// parse(render(x)) = x holds for all of them.  Malformed input throws
// schema_error with a $.path-positioned message.

#include <toric/analyze.hpp>
#include <toric/construct.hpp>
#include <toric/gluing.hpp>
#include <toric/model.hpp>
#include <toric/verify.hpp>

#include <json.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toric {

using Json = nlohmann::json;

struct schema_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// json text -> value; parse failures become schema_error
Json parse_json_text(const std::string& text);

// integers ride as JSON numbers within int64; beyond that is a cap_error
Json int_to_json(const Int& x);
Int int_from_json(const Json& j, const std::string& where);
Json ivec_to_json(const IVec& v);
IVec ivec_from_json(const Json& j, const std::string& where);

// "x1^8*x3", "y1^4", "1"; slots past nx are y1, y2, ...
std::string monomial_string(const IVec& exps, std::size_t nx);
std::string binomial_string(const Binomial& f, std::size_t nx);

Json variety_to_json(const Variety& v);
Variety variety_from_json(const Json& j);

Json binomial_to_json(const Binomial& f, std::size_t nx);
Binomial binomial_from_json(const Json& j, const std::string& where);

Json condition_report_to_json(const ConditionReport& r);
ConditionReport condition_report_from_json(const Json& j);

Json ara_report_to_json(const AraReport& r);
AraReport ara_report_from_json(const Json& j);

Json gluing_tree_to_json(const GluingTree& t);
GluingTree gluing_tree_from_json(const Json& j);

Json triple_to_json(const TripleResult& t, std::size_t nx);
TripleResult triple_from_json(const Json& j);

Json equality_report_to_json(const EqualityReport& r);
EqualityReport equality_report_from_json(const Json& j);

}  // namespace toric
