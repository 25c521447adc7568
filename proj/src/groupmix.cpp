#include "swnet/groupmix.hpp"

#include <cmath>
#include <map>

#include "swnet/clustering.hpp"
#include "swnet/stats.hpp"

namespace swnet {

std::string_view to_string(NodeQuantity q) {
  switch (q) {
    case NodeQuantity::degree: return "degree";
    case NodeQuantity::in_degree: return "in_degree";
    case NodeQuantity::out_degree: return "out_degree";
    case NodeQuantity::clustering_c: return "c";
    case NodeQuantity::clustering_d: return "d";
  }
  return "degree";
}

std::vector<double> node_quantity(const Network& network, NodeQuantity q) {
  switch (q) {
    case NodeQuantity::degree: return degree_values(network, DegreeKind::total);
    case NodeQuantity::in_degree: return degree_values(network, DegreeKind::in);
    case NodeQuantity::out_degree: return degree_values(network, DegreeKind::out);
    case NodeQuantity::clustering_c: return clustering_c(network);
    case NodeQuantity::clustering_d: return clustering_d(network);
  }
  return {};
}

namespace {

double mean_over(std::span<const NodeId> members, std::span<const double> values) {
  if (members.empty()) return 0.0;
  double sum = 0.0;
  for (auto v : members) sum += values[v];
  return sum / static_cast<double>(members.size());
}

}  // namespace

std::vector<GroupMeans> group_means(std::span<const NodeGroup> groups, std::span<const double> values) {
  std::vector<GroupMeans> out;
  out.reserve(groups.size());
  for (const auto& g : groups) out.push_back({mean_over(g.S, values), mean_over(g.T, values)});
  return out;
}

std::vector<GroupMeans> group_means(std::span<const NodeGroup> groups, const Network& network, NodeQuantity q) {
  auto values = node_quantity(network, q);
  return group_means(groups, values);
}

std::optional<double> group_mixing(std::span<const NodeGroup> groups, const Network& network, NodeQuantity alpha,
                                   NodeQuantity beta) {
  if (groups.size() < 2) return std::nullopt;
  auto a = group_means(groups, network, alpha);
  auto b = alpha == beta ? a : group_means(groups, network, beta);
  std::vector<double> x, y;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    x.push_back(a[i].over_S);
    y.push_back(b[i].over_T);
  }
  return pearson(x, y);
}

GroupMixingReport group_mixing_report(std::span<const NodeGroup> groups, const Network& network) {
  GroupMixingReport report;
  report.r = group_mixing(groups, network, NodeQuantity::degree, NodeQuantity::degree);
  if (network.directed()) {
    using Q = NodeQuantity;
    report.r_in_in = group_mixing(groups, network, Q::in_degree, Q::in_degree);
    report.r_in_out = group_mixing(groups, network, Q::in_degree, Q::out_degree);
    report.r_out_in = group_mixing(groups, network, Q::out_degree, Q::in_degree);
    report.r_out_out = group_mixing(groups, network, Q::out_degree, Q::out_degree);
  }
  report.r_c = group_mixing(groups, network, NodeQuantity::clustering_c, NodeQuantity::clustering_c);
  report.r_d = group_mixing(groups, network, NodeQuantity::clustering_d, NodeQuantity::clustering_d);
  auto k = group_means(groups, network, NodeQuantity::degree);
  auto c = group_means(groups, network, NodeQuantity::clustering_c);
  auto d = group_means(groups, network, NodeQuantity::clustering_d);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    report.rows.push_back({groups[i].order, k[i].over_S, k[i].over_T, c[i].over_S, c[i].over_T, d[i].over_S,
                           d[i].over_T, groups[i].tau});
  }
  return report;
}

std::vector<NodeTauRow> node_tau_rows(std::span<const NodeGroup> groups, const Network& network,
                                      bool include_pattern) {
  const auto n = network.node_count();
  std::vector<double> tau_sum(n, 0.0);
  std::vector<std::size_t> count(n, 0);
  std::vector<char> mark(n, 0);
  for (const auto& g : groups) {
    std::vector<NodeId> members(g.S.begin(), g.S.end());
    if (include_pattern) members.insert(members.end(), g.T.begin(), g.T.end());
    for (auto v : members) {
      if (mark[v]) continue;
      mark[v] = 1;
      tau_sum[v] += g.tau;
      ++count[v];
    }
    for (auto v : members) mark[v] = 0;
  }
  auto c = clustering_c(network);
  auto d = clustering_d(network);
  std::vector<NodeTauRow> rows;
  for (NodeId v = 0; v < n; ++v) {
    if (count[v] == 0) continue;
    rows.push_back({v, network.degree(v), c[v], d[v], tau_sum[v] / static_cast<double>(count[v]), count[v]});
  }
  return rows;
}

GroupProfiles group_profiles(std::span<const NodeTauRow> rows) {
  auto build = [&](auto key_of) {
    std::map<long, std::pair<double, std::size_t>> acc;
    for (const auto& r : rows) {
      auto& slot = acc[key_of(r)];
      slot.first += r.mean_tau;
      ++slot.second;
    }
    return acc;
  };
  GroupProfiles p;
  for (const auto& [k, s] : build([](const NodeTauRow& r) { return static_cast<long>(r.degree); })) {
    p.by_degree.push_back({static_cast<double>(k), s.first / static_cast<double>(s.second), s.second});
  }
  auto bucket = [](double v) { return std::lround(v / kClusteringBucket); };
  for (const auto& [k, s] : build([&](const NodeTauRow& r) { return bucket(r.c); })) {
    p.by_c.push_back({static_cast<double>(k) * kClusteringBucket, s.first / static_cast<double>(s.second), s.second});
  }
  for (const auto& [k, s] : build([&](const NodeTauRow& r) { return bucket(r.d); })) {
    p.by_d.push_back({static_cast<double>(k) * kClusteringBucket, s.first / static_cast<double>(s.second), s.second});
  }
  return p;
}

}  // namespace swnet
