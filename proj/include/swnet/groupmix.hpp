#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "swnet/groups.hpp"
#include "swnet/network.hpp"

namespace swnet {

// Node quantities averaged over group members. Degrees come from the network
// as given (directed degrees stay directed); clustering is measured on its
// undirected view. Always the original network, never an extraction residual.
enum class NodeQuantity { degree, in_degree, out_degree, clustering_c, clustering_d };

std::string_view to_string(NodeQuantity q);
std::vector<double> node_quantity(const Network& network, NodeQuantity q);

struct GroupMeans {
  double over_S = 0.0;
  double over_T = 0.0;
};

// Arithmetic means of `values` over S and over T, per group.
std::vector<GroupMeans> group_means(std::span<const NodeGroup> groups, std::span<const double> values);
std::vector<GroupMeans> group_means(std::span<const NodeGroup> groups, const Network& network, NodeQuantity q);

// Pearson correlation across groups of (alpha-mean over S, beta-mean over T).
// Undefined for fewer than two groups or a constant marginal.
std::optional<double> group_mixing(std::span<const NodeGroup> groups, const Network& network, NodeQuantity alpha,
                                   NodeQuantity beta);

struct GroupRow {
  std::size_t order = 0;
  double k_S = 0, k_T = 0, c_S = 0, c_T = 0, d_S = 0, d_T = 0, tau = 0;
};

struct GroupMixingReport {
  std::optional<double> r;                                    // total degree
  std::optional<double> r_in_in, r_in_out, r_out_in, r_out_out;  // directed networks only
  std::optional<double> r_c, r_d;
  std::vector<GroupRow> rows;
};

GroupMixingReport group_mixing_report(std::span<const NodeGroup> groups, const Network& network);

// Per member node: its degree, clustering and the mean tau of the groups that
// contain it. Nodes in no group are omitted. Membership is S, or S and T when
// `include_pattern` is set.
struct NodeTauRow {
  NodeId node = 0;
  std::size_t degree = 0;
  double c = 0, d = 0;
  double mean_tau = 0;
  std::size_t groups = 0;
};

std::vector<NodeTauRow> node_tau_rows(std::span<const NodeGroup> groups, const Network& network,
                                      bool include_pattern = false);

// Mean tau by exact degree, and by clustering bucketed to 0.05.
struct TauProfileRow {
  double key = 0;
  double mean_tau = 0;
  std::size_t count = 0;
};

struct GroupProfiles {
  std::vector<TauProfileRow> by_degree;
  std::vector<TauProfileRow> by_c;
  std::vector<TauProfileRow> by_d;
};

GroupProfiles group_profiles(std::span<const NodeTauRow> rows);

}  // namespace swnet
