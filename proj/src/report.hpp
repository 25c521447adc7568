#pragma once

// JSON documents behind the C API. Every analysis returns
// {"summary": {...}, "profiles": {name: {"columns": [...], "rows": [[...]]}}};
// group documents carry "groups", "background" and "summary".

#include <json.hpp>
#include <span>
#include <string>
#include <vector>

#include "swnet/groups.hpp"
#include "swnet/mixing.hpp"
#include "swnet/netbuild.hpp"
#include "swnet/network.hpp"
#include "swnet/predict.hpp"

namespace swnet::report {

using nlohmann::json;

json stats(const Network& network, const std::vector<std::string>& warnings);
json mixing(const Network& network, const PowerLawOptions& fit);
json clustering(const Network& network);
json groups(const ExtractionResult& result, const Network& network, const ExtractionConfig& config);
std::vector<NodeGroup> groups_from_json(const json& doc, const Network& network);
json groupmix(std::span<const NodeGroup> groups, const Network& network, bool include_pattern);
json predict(const Network& network, std::span<const NodeGroup> groups, const LabeledNodes& labels,
             const PredictionConfig& config);
json extract(const BuildResult& build);

}  // namespace swnet::report
