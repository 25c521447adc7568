#pragma once

#include <optional>
#include <vector>

#include "swnet/mixing.hpp"
#include "swnet/network.hpp"

namespace swnet {

enum class ClusteringKind { standard, degree_corrected };

// All functions below operate on the undirected view; directed inputs are
// converted internally.

// t_i: links among the neighbours of i.
std::vector<std::size_t> neighbor_links(const Network& network);

// c_i = t_i / C(k_i, 2), and 0 for k_i <= 1.
std::vector<double> clustering_c(const Network& network);

// omega_i = floor(1/2 sum_{j in Γ(i)} min(k_j - 1, k_i - 1)).
std::vector<std::size_t> clustering_omega(const Network& network);

// d_i = t_i / omega_i, and 0 for k_i <= 1 or omega_i = 0.
std::vector<double> clustering_d(const Network& network);

std::vector<double> clustering_values(const Network& network, ClusteringKind kind);

// Edge-end Pearson correlation of c or d over both link orientations.
std::optional<double> clustering_mixing(const Network& network, ClusteringKind kind);

// Mean clustering of the link-adjacent neighbours, per node (0 for isolated nodes).
std::vector<double> neighbor_clustering(const Network& network, ClusteringKind kind);

inline constexpr double kClusteringBucket = 0.05;

// Rounds a clustering value to the nearest multiple of kClusteringBucket.
double clustering_bucket(double value);

// Mean neighbour clustering as a function of (bucketed) node clustering,
// accumulated over ordered link ends.
std::vector<ProfileRow> neighbor_clustering_profile(const Network& network, ClusteringKind kind);

// Mean clustering per exact degree value. The degree axis comes from the
// network as given, so in/out axes keep directed degrees.
std::vector<ProfileRow> clustering_degree_profile(const Network& network, ClusteringKind kind,
                                                  DegreeKind axis);

struct ClusteringReport {
  std::vector<double> c;
  std::vector<double> d;
  double mean_c = 0.0;
  double mean_d = 0.0;
  double p_baseline = 0.0;     // <k> / (n - 1) on the undirected view
  double share_d_eq_1 = 0.0;   // fraction of nodes
  double share_d_lt_p = 0.0;
  std::optional<double> r_c;
  std::optional<double> r_d;
};

ClusteringReport clustering_report(const Network& network);

}  // namespace swnet
