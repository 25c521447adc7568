#include "swnet/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "swnet/stats.hpp"

namespace swnet {

namespace {

const Network& as_undirected(const Network& network, Network& storage) {
  if (!network.directed()) return network;
  storage = undirected_view(network);
  return storage;
}

}  // namespace

std::vector<std::size_t> neighbor_links(const Network& network) {
  Network storage;
  const auto& g = as_undirected(network, storage);
  const auto n = g.node_count();
  std::vector<std::size_t> t(n, 0);
  // Each triangle is found once per link (u < v) through the common neighbours.
  for (const auto& l : g.links()) {
    auto a = g.neighbors(l.source);
    auto b = g.neighbors(l.target);
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (*i < *j) {
        ++i;
      } else if (*j < *i) {
        ++j;
      } else {
        ++t[*i];
        ++i;
        ++j;
      }
    }
  }
  return t;
}

std::vector<double> clustering_c(const Network& network) {
  Network storage;
  const auto& g = as_undirected(network, storage);
  auto t = neighbor_links(g);
  std::vector<double> c(g.node_count(), 0.0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const double k = static_cast<double>(g.degree(v));
    if (k > 1) c[v] = static_cast<double>(t[v]) / (k * (k - 1) / 2.0);
  }
  return c;
}

std::vector<std::size_t> clustering_omega(const Network& network) {
  Network storage;
  const auto& g = as_undirected(network, storage);
  std::vector<std::size_t> omega(g.node_count(), 0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const auto kv = g.degree(v);
    if (kv <= 1) continue;
    std::size_t slots = 0;
    for (auto w : g.neighbors(v)) slots += std::min(g.degree(w) - 1, kv - 1);
    omega[v] = slots / 2;
  }
  return omega;
}

std::vector<double> clustering_d(const Network& network) {
  Network storage;
  const auto& g = as_undirected(network, storage);
  auto t = neighbor_links(g);
  auto omega = clustering_omega(g);
  std::vector<double> d(g.node_count(), 0.0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) > 1 && omega[v] > 0) d[v] = static_cast<double>(t[v]) / static_cast<double>(omega[v]);
  }
  return d;
}

std::vector<double> clustering_values(const Network& network, ClusteringKind kind) {
  return kind == ClusteringKind::standard ? clustering_c(network) : clustering_d(network);
}

std::optional<double> clustering_mixing(const Network& network, ClusteringKind kind) {
  Network storage;
  const auto& g = as_undirected(network, storage);
  auto values = clustering_values(g, kind);
  return link_end_correlation(g, values, values, true);
}

std::vector<double> neighbor_clustering(const Network& network, ClusteringKind kind) {
  Network storage;
  const auto& g = as_undirected(network, storage);
  auto values = clustering_values(g, kind);
  std::vector<double> out(g.node_count(), 0.0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    auto nb = g.neighbors(v);
    if (nb.empty()) continue;
    double sum = 0;
    for (auto w : nb) sum += values[w];
    out[v] = sum / static_cast<double>(nb.size());
  }
  return out;
}

double clustering_bucket(double value) {
  return std::round(value / kClusteringBucket) * kClusteringBucket;
}

std::vector<ProfileRow> neighbor_clustering_profile(const Network& network, ClusteringKind kind) {
  Network storage;
  const auto& g = as_undirected(network, storage);
  auto values = clustering_values(g, kind);
  std::map<long, std::pair<double, std::size_t>> acc;
  auto key = [](double v) { return std::lround(v / kClusteringBucket); };
  for (const auto& l : g.links()) {
    auto& fwd = acc[key(values[l.source])];
    fwd.first += values[l.target];
    ++fwd.second;
    auto& rev = acc[key(values[l.target])];
    rev.first += values[l.source];
    ++rev.second;
  }
  std::vector<ProfileRow> rows;
  for (const auto& [b, sum] : acc) {
    rows.push_back({static_cast<double>(b) * kClusteringBucket, sum.first / static_cast<double>(sum.second),
                    sum.second});
  }
  return rows;
}

std::vector<ProfileRow> clustering_degree_profile(const Network& network, ClusteringKind kind,
                                                  DegreeKind axis) {
  auto values = clustering_values(network, kind);
  std::map<std::size_t, std::pair<double, std::size_t>> acc;
  for (NodeId v = 0; v < network.node_count(); ++v) {
    auto& slot = acc[network.degree(v, axis)];
    slot.first += values[v];
    ++slot.second;
  }
  std::vector<ProfileRow> rows;
  for (const auto& [k, sum] : acc) {
    rows.push_back({static_cast<double>(k), sum.first / static_cast<double>(sum.second), sum.second});
  }
  return rows;
}

ClusteringReport clustering_report(const Network& network) {
  Network storage;
  const auto& g = as_undirected(network, storage);
  ClusteringReport report;
  report.c = clustering_c(g);
  report.d = clustering_d(g);
  const auto n = g.node_count();
  if (n == 0) return report;
  report.mean_c = mean(report.c);
  report.mean_d = mean(report.d);
  const double mean_k = 2.0 * static_cast<double>(g.link_count()) / static_cast<double>(n);
  report.p_baseline = n > 1 ? mean_k / static_cast<double>(n - 1) : 0.0;
  std::size_t ones = 0, below = 0;
  for (auto d : report.d) {
    if (d == 1.0) ++ones;
    if (d < report.p_baseline) ++below;
  }
  report.share_d_eq_1 = static_cast<double>(ones) / static_cast<double>(n);
  report.share_d_lt_p = static_cast<double>(below) / static_cast<double>(n);
  report.r_c = link_end_correlation(g, report.c, report.c, true);
  report.r_d = link_end_correlation(g, report.d, report.d, true);
  return report;
}

}  // namespace swnet
