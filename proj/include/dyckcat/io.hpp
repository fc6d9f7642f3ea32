#pragma once

#include <string>

#include "dyckcat/cluster.hpp"
#include "dyckcat/nakayama.hpp"
#include "dyckcat/shiftcat.hpp"
#include "dyckcat/snake.hpp"

#include "json.hpp"

namespace dyckcat {

using Json = nlohmann::json;

Json to_json(const ARQuiver& ar, const AdmissibleSubchain* chain = nullptr);
Json to_json(const SnakeGraph& g);
Json to_json(const PerfectMatching& p);
Json to_json(const VerifyReport& r);
Json to_json(const RepA& rep);

/// Graphviz rendering; vertices labeled "[l,r]", tau edges dashed.
std::string to_dot(const ARQuiver& ar);

}  // namespace dyckcat
