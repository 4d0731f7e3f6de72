#pragma once

#include "isoharmonic/billiard.hpp"
#include "isoharmonic/curve.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace isoharmonic::io {

using json = nlohmann::json;

// {"x":[..],"u":[..],"y0":..,"c1":[..],"c2":[..],"sigma":["l","r",..],"t":[re,im]}; c1, c2, t optional.
TCurveConfig config_from_json(const json& j);
json to_json(const TCurveConfig& c);

// {"endpoints":[..]} in any order; written descending.
IntervalSystem intervals_from_json(const json& j);
json to_json(const IntervalSystem& E);

// {"b":[..],"alpha":[..]}
BilliardConfig billiard_from_json(const json& j);
json to_json(const BilliardConfig& c);

json to_json(const Eigen::VectorXd& v);
json to_json(const Eigen::VectorXi& v);
Eigen::VectorXd vector_from_json(const json& j);

// Reads a JSON file; throws std::invalid_argument on a missing file or a parse error.
json read_file(const std::string& path);

// Serialization with every double printed as %.17g.
std::string dump(const json& j, int indent = 2);
std::string format_double(double x);

// Comma-separated rows with %.17g numbers.
void write_csv(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows);

}  // namespace isoharmonic::io
