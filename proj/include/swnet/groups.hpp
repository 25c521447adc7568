#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "swnet/network.hpp"

namespace swnet {

// Group taxonomy by the relation between a group S and its pattern T:
// community S = T; module S and T disjoint; hub & spokes a module with a
// single pattern node; core/periphery S strictly inside T or T strictly
// inside S; mixture everything else.
enum class GroupKind { community, core_periphery, mixture, module, hub_spokes };

std::string_view to_string(GroupKind kind);
std::optional<GroupKind> parse_group_kind(std::string_view text);

struct NodeGroup {
  std::vector<NodeId> S;  // sorted node ids of the input network
  std::vector<NodeId> T;  // sorted
  double W = 0.0;
  double tau = 0.0;
  GroupKind kind = GroupKind::mixture;
  std::size_t order = 0;           // extraction index, 0-based
  double threshold = 0.0;          // significance threshold of its round
  std::size_t links_removed = 0;   // S-T links deleted when it was extracted
};

struct ExtractionConfig {
  std::size_t restarts = 30;
  std::size_t tabu_tenure = 7;
  // Stop a run after this many steps without improving its best W.
  // 0 selects the automatic rule, see effective_non_improving().
  std::size_t max_non_improving = 0;
  std::size_t significance_samples = 100;
  double significance_level = 0.01;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

// Throws Error(invalid_argument) unless every field is positive and the
// level lies in (0, 0.5).
void validate(const ExtractionConfig& config);

// Non-improving step limit actually used for a residual with n nodes.
std::size_t effective_non_improving(const ExtractionConfig& config, std::size_t n);

// 2st / (n (s + t)). Throws Error(domain) for s = t = 0 or n = 0.
double mu(std::size_t s, std::size_t t, std::size_t n);

// Criterion from the group's size, pattern size, S-T incidences, total degree
// of S and node count. L(S,T^C) = degree_sum_S - links_st.
double criterion_from_counts(std::size_t s, std::size_t t, std::size_t links_st, std::size_t degree_sum_s,
                             std::size_t n);

// W(S,T) on an undirected network with n = node_count(). Each link {i,j}
// contributes [i in S][j in T] + [j in S][i in T] to L(S,T), and likewise
// for L(S,T^C). Throws Error(domain) for empty S or T, or T = V.
double criterion_W(const Network& network, std::span<const NodeId> S, std::span<const NodeId> T);

struct GroupCandidate {
  std::vector<NodeId> S;
  std::vector<NodeId> T;
  double W = 0.0;
  bool found = false;  // false when no (S, T) with s >= 2, 1 <= t < n exists
};

// Best (S, T) over config.restarts tabu-search runs; deterministic in seed.
GroupCandidate tabu_search_best_group(const Network& network, const ExtractionConfig& config, std::uint64_t seed);

struct SignificanceModel {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<double> samples;  // best W per G(n, m) sample
  double threshold = 0.0;       // (1 - level) quantile of samples
};

// Uniform random simple undirected graph with n nodes and m links.
Network random_gnm(std::size_t n, std::size_t m, std::uint64_t seed);

SignificanceModel significance_threshold(std::size_t n, std::size_t m, const ExtractionConfig& config,
                                         std::uint64_t seed);

struct ExtractionResult {
  std::vector<NodeGroup> groups;
  std::vector<Link> background_links;  // residual links, original ids
  std::vector<NodeId> background_nodes;  // nodes still incident to residual links
  std::size_t n = 0;                   // of the extracted (undirected) network
  std::size_t m = 0;
  double final_threshold = 0.0;        // threshold of the round that stopped
  double final_candidate_W = 0.0;
};

// Sequential extraction on the undirected view: find the best group, stop if
// it is not above the ER threshold of the current residual, else delete the
// S-T links, drop isolated nodes and repeat.
ExtractionResult extract_all(const Network& network, const ExtractionConfig& config);

struct GroupClass {
  double tau = 0.0;
  GroupKind kind = GroupKind::mixture;
};

// tau = |S∩T| / |S∪T|; kind with precedence hub_spokes > module > community
// > core_periphery > mixture. Inputs must be sorted and non-empty.
GroupClass classify_group(std::span<const NodeId> S, std::span<const NodeId> T);

struct KindSummary {
  std::size_t count = 0;
  double mean_s = 0.0;
  double mean_t = 0.0;
  double links_share = 0.0;  // links removed by these groups / m
  double nodes_share = 0.0;  // distinct member nodes / n
};

struct GroupSummary {
  std::size_t count = 0;
  double mean_s = 0.0;
  double mean_t = 0.0;
  double mean_tau = 0.0;
  KindSummary community, core_periphery, mixture, module, hub_spokes;
  double links_explained = 0.0;
  double background_links_share = 1.0;
  double background_nodes_share = 0.0;
  double nodes_included_share = 0.0;
};

// Hub & spokes groups are also counted as modules in `module`, matching the
// four-column group tables; `hub_spokes` reports them separately.
GroupSummary group_summary(const ExtractionResult& result, bool count_pattern_nodes = false);

}  // namespace swnet
