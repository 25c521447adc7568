#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swnet/groups.hpp"
#include "swnet/network.hpp"

namespace swnet {

// Label used for nodes without a value; it is an ordinary prediction target.
inline constexpr std::string_view kUnknownLabel = "(unknown)";

struct LabeledNodes {
  std::vector<std::string> labels;  // indexed by node id
};

// Labels from a node attribute; missing or empty values become kUnknownLabel.
LabeledNodes labels_from_attribute(const Network& network, std::string_view key);

// Longest run of leading dot-separated segments shared by all labels
// (kUnknownLabel ignored), e.g. "a.b" for {a.b.x, a.b.y.z}.
std::string common_label_prefix(std::span<const std::string> labels);

// Drops `prefix` (when it is a segment prefix of `label`) and keeps the next
// `depth` segments. Labels with fewer than prefix + depth segments are
// returned unchanged.
std::string truncate_label(std::string_view label, std::string_view prefix, std::size_t depth);

// Truncates every label with the auto-detected common prefix.
LabeledNodes truncate_labels(const LabeledNodes& labels, std::size_t depth);

enum class Strategy { neighbors, groups, network, majority, random };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view text);

struct PredictionConfig {
  Strategy strategy = Strategy::groups;
  std::optional<std::size_t> depth;  // truncate package labels
  std::size_t runs = 100;
  std::uint64_t seed = 1;
  bool include_pattern = false;  // group membership is S, or S and T
  unsigned threads = 1;
};

void validate(const PredictionConfig& config);

// |Γ(i) ∩ Γ(j)| / |Γ(i) ∪ Γ(j)| on the given (undirected) network, 0 when
// both neighbourhoods are empty.
double jaccard_similarity(const Network& network, NodeId i, NodeId j);

// Shared state for repeated predictions on one network/group set.
class Predictor {
 public:
  Predictor(const Network& network, std::span<const NodeGroup> groups, const LabeledNodes& labels,
            const PredictionConfig& config);

  // Nodes in at least one group, ascending.
  const std::vector<NodeId>& population() const { return population_; }
  // Modal label of the population, smallest label on ties.
  const std::string& majority_label() const { return majority_; }
  const std::vector<std::string>& population_labels() const { return distinct_; }

  // Predicts node i without looking at its own label. `fallback` is set when
  // the candidate set was empty and the population majority (i excluded) was
  // returned. The majority baseline itself is the plain population mode.
  std::string predict(NodeId i, std::uint64_t run_seed, bool* fallback = nullptr) const;

 private:
  std::vector<NodeId> candidates(NodeId i) const;

  Network view_;
  const LabeledNodes& labels_;
  PredictionConfig config_;
  std::vector<std::vector<std::size_t>> groups_of_;  // node -> group indices
  std::vector<std::vector<NodeId>> members_;         // group -> members
  std::vector<NodeId> population_;
  std::map<std::string, std::size_t> freq_;  // population label counts
  std::string majority_;
  std::vector<std::string> distinct_;
};

std::string predict_label(const Network& network, std::span<const NodeGroup> groups, const LabeledNodes& labels,
                          NodeId i, const PredictionConfig& config, std::uint64_t run_seed);

struct PredictionResult {
  Strategy strategy = Strategy::groups;
  std::size_t evaluated = 0;
  std::size_t runs = 0;
  std::size_t labels = 0;          // distinct labels in the population
  double accuracy = 0.0;           // mean over runs
  double accuracy_sd = 0.0;        // standard deviation over runs
  std::vector<double> run_accuracy;
  std::size_t fallbacks = 0;       // empty candidate sets, summed over runs
  std::vector<NodeId> nodes;       // evaluated nodes
  std::vector<std::string> modal;  // most frequent prediction per node over runs
};

// Leave-one-out over nodes included in groups. Throws Error(evaluation) when
// no node is in a group.
PredictionResult evaluate(const Network& network, std::span<const NodeGroup> groups, const LabeledNodes& labels,
                          const PredictionConfig& config);

}  // namespace swnet
