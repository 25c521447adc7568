#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "swnet/clustering.hpp"
#include "swnet/groupmix.hpp"

using namespace swnet;

namespace {

const std::vector<oracle::Edge> kFixtureA{{0, 1}, {1, 2}, {0, 2}, {2, 3}};

NodeGroup group(std::vector<NodeId> S, std::vector<NodeId> T, std::size_t order = 0) {
  NodeGroup g;
  auto cls = classify_group(S, T);
  g.S = std::move(S);
  g.T = std::move(T);
  g.tau = cls.tau;
  g.kind = cls.kind;
  g.order = order;
  return g;
}

double mean_over(const std::vector<double>& values, const std::vector<NodeId>& set) {
  double sum = 0;
  for (auto v : set) sum += values[v];
  return sum / static_cast<double>(set.size());
}

}  // namespace

TEST_SUITE("groupmix") {
  TEST_CASE("arithmetic group means") {
    auto net = oracle::make_network(4, kFixtureA, false);
    std::vector<NodeGroup> groups{group({0, 1, 2}, {0, 1, 2})};
    auto m = group_means(groups, net, NodeQuantity::degree);
    CHECK(m[0].over_S == doctest::Approx(7.0 / 3.0));
    CHECK(m[0].over_S == m[0].over_T);
  }

  TEST_CASE("random instance matches per-node sums") {
    std::mt19937_64 rng(12);
    auto edges = oracle::random_edges(20, 0.25, rng);
    auto net = oracle::make_network(20, edges, false);
    auto [c, d] = oracle::clustering(oracle::adjacency(20, edges));
    std::vector<double> k(20, 0);
    for (auto [a, b] : edges) k[a] += 1, k[b] += 1;
    std::vector<NodeGroup> groups;
    std::uniform_int_distribution<NodeId> pick(0, 19);
    for (int g = 0; g < 6; ++g) {
      std::set<NodeId> S, T;
      while (S.size() < 3) S.insert(pick(rng));
      while (T.size() < 2) T.insert(pick(rng));
      groups.push_back(group({S.begin(), S.end()}, {T.begin(), T.end()}, static_cast<std::size_t>(g)));
    }
    auto mk = group_means(groups, net, NodeQuantity::degree);
    auto mc = group_means(groups, net, NodeQuantity::clustering_c);
    auto md = group_means(groups, net, NodeQuantity::clustering_d);
    std::vector<double> xs, ys;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      CHECK(mk[g].over_S == doctest::Approx(mean_over(k, groups[g].S)));
      CHECK(mk[g].over_T == doctest::Approx(mean_over(k, groups[g].T)));
      CHECK(mc[g].over_S == doctest::Approx(mean_over(c, groups[g].S)));
      CHECK(md[g].over_T == doctest::Approx(mean_over(d, groups[g].T)));
      xs.push_back(mean_over(k, groups[g].S));
      ys.push_back(mean_over(k, groups[g].T));
    }
    auto r = group_mixing(groups, net, NodeQuantity::degree, NodeQuantity::degree);
    auto want = oracle::pearson(xs, ys);
    REQUIRE(r.has_value() == want.has_value());
    if (r) {
      CHECK(*r == doctest::Approx(*want));
      CHECK(std::abs(*r) <= 1.0 + 1e-12);
    }
  }

  TEST_CASE("communities of different degree correlate perfectly") {
    auto net = oracle::make_network(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}, {2, 4}}, false);
    std::vector<NodeGroup> groups{group({0, 1}, {0, 1}), group({2, 3, 4}, {2, 3, 4}), group({4, 5}, {4, 5})};
    auto r = group_mixing(groups, net, NodeQuantity::degree, NodeQuantity::degree);
    REQUIRE(r.has_value());
    CHECK(*r == doctest::Approx(1.0));
  }

  TEST_CASE("undefined cases") {
    auto net = oracle::make_network(4, kFixtureA, false);
    std::vector<NodeGroup> one{group({0, 1}, {0, 1})};
    CHECK_FALSE(group_mixing(one, net, NodeQuantity::degree, NodeQuantity::degree).has_value());
    std::vector<NodeGroup> same{group({0, 1}, {0, 1}), group({0, 1}, {0, 1})};
    CHECK_FALSE(group_mixing(same, net, NodeQuantity::degree, NodeQuantity::degree).has_value());
    auto report = group_mixing_report(same, net);
    CHECK_FALSE(report.r.has_value());
    CHECK_FALSE(report.r_in_in.has_value());
  }

  TEST_CASE("directed variants pair alpha over S with beta over T") {
    auto net = oracle::make_network(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {3, 4}, {4, 0}, {2, 3}}, true);
    std::vector<double> in(5, 0), out(5, 0);
    for (auto l : net.links()) out[l.source] += 1, in[l.target] += 1;
    std::vector<NodeGroup> groups{group({0, 1}, {2}), group({2, 3}, {0, 4}), group({1, 4}, {1, 3}),
                                  group({0, 3, 4}, {1})};
    std::vector<double> xs, ys;
    for (const auto& g : groups) xs.push_back(mean_over(in, g.S)), ys.push_back(mean_over(out, g.T));
    auto rep = group_mixing_report(groups, net);
    auto want = oracle::pearson(xs, ys);
    REQUIRE(rep.r_in_out.has_value() == want.has_value());
    if (want) CHECK(*rep.r_in_out == doctest::Approx(*want));
    CHECK(rep.rows.size() == 4);
  }

  TEST_CASE("means come from the network passed in, not a residual") {
    // Two 8-cliques joined by one link; extraction deletes the clique links.
    std::vector<oracle::Edge> edges;
    for (unsigned base : {0u, 8u})
      for (unsigned i = 0; i < 8; ++i)
        for (unsigned j = i + 1; j < 8; ++j) edges.push_back({base + i, base + j});
    edges.push_back({0, 8});
    for (unsigned v = 16; v < 30; ++v) edges.push_back({v, v + 1});
    edges.push_back({15, 16});
    auto net = oracle::make_network(31, edges, false);
    std::vector<double> k(31, 0);
    for (auto [a, b] : edges) k[a] += 1, k[b] += 1;
    ExtractionConfig config;
    config.restarts = 10;
    config.significance_samples = 20;
    auto result = extract_all(net, config);
    REQUIRE(result.groups.size() >= 2);
    auto m = group_means(result.groups, net, NodeQuantity::degree);
    for (std::size_t g = 0; g < result.groups.size(); ++g) {
      CHECK(m[g].over_S == doctest::Approx(mean_over(k, result.groups[g].S)));
      CHECK(m[g].over_T == doctest::Approx(mean_over(k, result.groups[g].T)));
    }
  }

  TEST_CASE("node tau rows") {
    auto net = oracle::make_network(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}}, false);
    std::vector<NodeGroup> groups{group({0, 1, 2}, {0, 1, 2}), group({2, 5}, {4})};
    auto rows = node_tau_rows(groups, net);
    std::map<NodeId, NodeTauRow> by_node;
    for (auto r : rows) by_node[r.node] = r;
    CHECK(by_node.at(0).mean_tau == 1.0);
    CHECK(by_node.at(2).mean_tau == doctest::Approx(0.5));
    CHECK(by_node.at(2).groups == 2);
    CHECK(by_node.count(4) == 0);
    auto with_pattern = node_tau_rows(groups, net, true);
    CHECK(with_pattern.size() == rows.size() + 1);
    auto prof = group_profiles(rows);
    std::size_t total = 0;
    for (auto r : prof.by_degree) total += r.count;
    CHECK(total == rows.size());
  }
}
