#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "starics/distributions.hpp"
#include "starics/lambda_tree.hpp"
#include "starics/threading.hpp"

namespace starics {

using ordered_json = nlohmann::ordered_json;

std::string tree_to_dot(const LambdaTree& tree);
ordered_json tree_to_json(const LambdaTree& tree);
/// Inverse of tree_to_json. Derived fields (Sigma[u], C(u)) are recomputed.
LambdaTree tree_from_json(const nlohmann::json& doc);

std::string gamma_to_dot(const GammaGraph& gamma);
ordered_json gamma_to_json(const GammaGraph& gamma);

/// "omega,classes,vertices" with one row per weight.
std::string distribution_csv(const WeightDistribution& classes, const WeightDistribution& vertices);
ordered_json distribution_json(const WeightDistribution& classes, const WeightDistribution& vertices);

std::string eset_csv(const EsetDistribution& eset);
ordered_json eset_json(const EsetDistribution& eset);

/// Command-line entry point; returns the process exit status
/// (0 ok, 1 failed verification, 2 usage error, 3 resource guard refusal).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace starics
