#include "swnet/predict.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "swnet/error.hpp"
#include "swnet/parallel.hpp"
#include "swnet/stats.hpp"

namespace swnet {

namespace {

std::vector<std::string_view> segments(std::string_view label) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto dot = label.find('.', start);
    out.push_back(label.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return out;
}

}  // namespace

LabeledNodes labels_from_attribute(const Network& network, std::string_view key) {
  LabeledNodes out;
  out.labels.reserve(network.node_count());
  for (const auto& node : network.nodes()) {
    auto it = node.attributes.find(std::string(key));
    out.labels.push_back(it == node.attributes.end() || it->second.empty() ? std::string(kUnknownLabel) : it->second);
  }
  return out;
}

std::string common_label_prefix(std::span<const std::string> labels) {
  std::optional<std::vector<std::string_view>> common;
  for (const auto& label : labels) {
    if (label == kUnknownLabel) continue;
    auto segs = segments(label);
    if (!common) {
      common = segs;
      continue;
    }
    std::size_t k = 0;
    while (k < common->size() && k < segs.size() && (*common)[k] == segs[k]) ++k;
    common->resize(k);
  }
  std::string prefix;
  if (!common) return prefix;
  for (auto s : *common) prefix += (prefix.empty() ? "" : ".") + std::string(s);
  return prefix;
}

std::string truncate_label(std::string_view label, std::string_view prefix, std::size_t depth) {
  auto segs = segments(label);
  const auto pre = prefix.empty() ? std::vector<std::string_view>{} : segments(prefix);
  if (segs.size() < pre.size() + depth) return std::string(label);
  const std::size_t skip = std::equal(pre.begin(), pre.end(), segs.begin()) ? pre.size() : 0;
  std::string out;
  for (std::size_t k = skip; k < skip + depth; ++k) out += (out.empty() ? "" : ".") + std::string(segs[k]);
  return out;
}

LabeledNodes truncate_labels(const LabeledNodes& labels, std::size_t depth) {
  auto prefix = common_label_prefix(labels.labels);
  LabeledNodes out;
  out.labels.reserve(labels.labels.size());
  for (const auto& l : labels.labels) {
    out.labels.push_back(l == kUnknownLabel ? l : truncate_label(l, prefix, depth));
  }
  return out;
}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::neighbors: return "neighbors";
    case Strategy::groups: return "groups";
    case Strategy::network: return "network";
    case Strategy::majority: return "majority";
    case Strategy::random: return "random";
  }
  return "groups";
}

std::optional<Strategy> parse_strategy(std::string_view text) {
  for (auto s : {Strategy::neighbors, Strategy::groups, Strategy::network, Strategy::majority, Strategy::random}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

void validate(const PredictionConfig& config) {
  if (config.runs == 0) throw Error(ErrorCode::invalid_argument, "runs must be at least 1");
  if (config.depth && *config.depth == 0) throw Error(ErrorCode::invalid_argument, "label depth must be positive");
  if (config.threads == 0) throw Error(ErrorCode::invalid_argument, "threads must be positive");
}

double jaccard_similarity(const Network& network, NodeId i, NodeId j) {
  auto a = network.neighbors(i);
  auto b = network.neighbors(j);
  std::size_t common = 0;
  auto x = a.begin();
  auto y = b.begin();
  while (x != a.end() && y != b.end()) {
    if (*x < *y) {
      ++x;
    } else if (*y < *x) {
      ++y;
    } else {
      ++common;
      ++x;
      ++y;
    }
  }
  const auto uni = a.size() + b.size() - common;
  return uni == 0 ? 0.0 : static_cast<double>(common) / static_cast<double>(uni);
}

Predictor::Predictor(const Network& network, std::span<const NodeGroup> groups, const LabeledNodes& labels,
                     const PredictionConfig& config)
    : view_(network.directed() ? undirected_view(network) : network), labels_(labels), config_(config) {
  validate(config);
  const auto n = view_.node_count();
  if (labels.labels.size() != n) throw Error(ErrorCode::invalid_argument, "one label per node is required");
  groups_of_.resize(n);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::vector<NodeId> members(groups[g].S.begin(), groups[g].S.end());
    if (config.include_pattern) members.insert(members.end(), groups[g].T.begin(), groups[g].T.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (auto v : members) {
      if (v >= n) throw Error(ErrorCode::invalid_argument, "group member outside the network");
      groups_of_[v].push_back(g);
    }
    members_.push_back(std::move(members));
  }
  for (NodeId v = 0; v < n; ++v) {
    if (groups_of_[v].empty()) continue;
    population_.push_back(v);
    ++freq_[labels.labels[v]];
  }
  std::size_t best = 0;
  for (const auto& [label, count] : freq_) {
    distinct_.push_back(label);
    if (count > best) {
      best = count;
      majority_ = label;
    }
  }
}

std::vector<NodeId> Predictor::candidates(NodeId i) const {
  std::vector<NodeId> out;
  switch (config_.strategy) {
    case Strategy::neighbors: {
      auto nb = view_.neighbors(i);
      out.assign(nb.begin(), nb.end());
      break;
    }
    case Strategy::groups:
      for (auto g : groups_of_[i]) out.insert(out.end(), members_[g].begin(), members_[g].end());
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      break;
    case Strategy::network:
      out.resize(view_.node_count());
      for (NodeId v = 0; v < out.size(); ++v) out[v] = v;
      break;
    default: break;
  }
  std::erase(out, i);
  return out;
}

std::string Predictor::predict(NodeId i, std::uint64_t run_seed, bool* fallback) const {
  if (fallback) *fallback = false;
  std::mt19937_64 rng(derive_seed(run_seed, i));
  if (config_.strategy == Strategy::majority) return majority_;
  if (config_.strategy == Strategy::random) {
    if (distinct_.empty()) return std::string(kUnknownLabel);
    return distinct_[std::uniform_int_distribution<std::size_t>(0, distinct_.size() - 1)(rng)];
  }
  auto cand = candidates(i);
  if (cand.empty()) {
    if (fallback) *fallback = true;
    // Population majority without node i itself.
    const std::string* own = groups_of_[i].empty() ? nullptr : &labels_.labels[i];
    std::size_t best = 0;
    std::string label = std::string(kUnknownLabel);
    for (const auto& [l, count] : freq_) {
      const auto c = count - (own && *own == l ? 1 : 0);
      if (c > best) {
        best = c;
        label = l;
      }
    }
    return label;
  }
  std::map<std::string_view, double> weight;
  for (auto j : cand) weight[labels_.labels[j]] += jaccard_similarity(view_, i, j);
  double top = -1.0;
  for (const auto& [label, w] : weight) top = std::max(top, w);
  // Sums of the same weights in another order may differ in the last bits.
  const double tol = 1e-12 * std::max(1.0, top);
  std::vector<std::string_view> best;
  for (const auto& [label, w] : weight) {
    if (w >= top - tol) best.push_back(label);
  }
  return std::string(best[std::uniform_int_distribution<std::size_t>(0, best.size() - 1)(rng)]);
}

std::string predict_label(const Network& network, std::span<const NodeGroup> groups, const LabeledNodes& labels,
                          NodeId i, const PredictionConfig& config, std::uint64_t run_seed) {
  return Predictor(network, groups, labels, config).predict(i, run_seed);
}

PredictionResult evaluate(const Network& network, std::span<const NodeGroup> groups, const LabeledNodes& labels,
                          const PredictionConfig& config) {
  validate(config);
  const LabeledNodes truncated = config.depth ? truncate_labels(labels, *config.depth) : labels;
  Predictor predictor(network, groups, truncated, config);
  const auto& pop = predictor.population();
  if (pop.empty()) throw Error(ErrorCode::evaluation, "no node is included in a group");

  PredictionResult result;
  result.strategy = config.strategy;
  result.evaluated = pop.size();
  result.runs = config.runs;
  result.labels = predictor.population_labels().size();
  result.nodes = pop;
  result.run_accuracy.assign(config.runs, 0.0);
  std::vector<std::vector<std::string>> predictions(config.runs, std::vector<std::string>(pop.size()));
  std::vector<std::size_t> fallbacks(config.runs, 0), run_hits(config.runs, 0);
  parallel_for(config.runs, config.threads, [&](std::size_t r) {
    const auto run_seed = derive_seed(config.seed, r);
    std::size_t hits = 0;
    for (std::size_t k = 0; k < pop.size(); ++k) {
      bool fell_back = false;
      predictions[r][k] = predictor.predict(pop[k], run_seed, &fell_back);
      fallbacks[r] += fell_back;
      hits += predictions[r][k] == truncated.labels[pop[k]];
    }
    run_hits[r] = hits;
    result.run_accuracy[r] = static_cast<double>(hits) / static_cast<double>(pop.size());
  });
  for (auto f : fallbacks) result.fallbacks += f;
  // Pooled hits keep the mean exact when every run scores the same.
  std::size_t hits = 0;
  for (auto h : run_hits) hits += h;
  result.accuracy = static_cast<double>(hits) / static_cast<double>(pop.size() * config.runs);
  double ss = 0.0;
  for (auto a : result.run_accuracy) ss += (a - result.accuracy) * (a - result.accuracy);
  result.accuracy_sd = config.runs > 1 ? std::sqrt(ss / static_cast<double>(config.runs - 1)) : 0.0;
  for (std::size_t k = 0; k < pop.size(); ++k) {
    std::map<std::string, std::size_t> votes;
    for (std::size_t r = 0; r < config.runs; ++r) ++votes[predictions[r][k]];
    std::string modal;
    std::size_t top = 0;
    for (const auto& [label, c] : votes) {
      if (c > top) {
        top = c;
        modal = label;
      }
    }
    result.modal.push_back(modal);
  }
  return result;
}

}  // namespace swnet
