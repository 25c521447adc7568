#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace swnet {

// Dense node index, 0 .. n-1, assigned at load/build time.
using NodeId = std::uint32_t;

struct Link {
  NodeId source = 0;
  NodeId target = 0;
  auto operator<=>(const Link&) const = default;
};

struct NodeRecord {
  NodeId id = 0;
  std::string name;
  std::map<std::string, std::string> attributes;  // package, kind, author, version, ...
};

// A possibly non-simple link list as read from disk or produced by extraction.
struct RawGraph {
  std::vector<NodeRecord> nodes;
  std::vector<Link> links;
  bool directed = true;
};

enum class DegreeKind { in, out, total };

// Immutable simple graph. Links are sorted; for undirected networks every
// link is stored once as (min, max). Adjacency is kept in CSR form.
class Network {
 public:
  Network() = default;

  // Throws Error(invalid_argument) on self-links, duplicate links, endpoints
  // outside [0, n) or node ids that are not 0..n-1 in order.
  Network(std::vector<NodeRecord> nodes, std::vector<Link> links, bool directed);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t link_count() const noexcept { return links_.size(); }
  bool directed() const noexcept { return directed_; }
  bool empty() const noexcept { return nodes_.empty(); }

  std::span<const NodeRecord> nodes() const noexcept { return nodes_; }
  const NodeRecord& node(NodeId id) const { return nodes_.at(id); }
  std::span<const Link> links() const noexcept { return links_; }

  // Undirected networks: out/in neighbours both equal the neighbour list.
  std::span<const NodeId> out_neighbors(NodeId v) const;
  std::span<const NodeId> in_neighbors(NodeId v) const;
  // Union of in and out neighbours, sorted, without repeats.
  std::span<const NodeId> neighbors(NodeId v) const;

  std::size_t out_degree(NodeId v) const { return out_neighbors(v).size(); }
  std::size_t in_degree(NodeId v) const { return in_neighbors(v).size(); }
  // in + out for directed networks (a mutual pair counts twice), |Γ(v)| otherwise.
  std::size_t degree(NodeId v) const;
  std::size_t degree(NodeId v, DegreeKind kind) const;

  bool has_link(NodeId source, NodeId target) const;
  std::optional<NodeId> find(std::string_view name) const;

 private:
  void build_index();

  std::vector<NodeRecord> nodes_;
  std::vector<Link> links_;
  bool directed_ = true;

  std::vector<std::size_t> out_offsets_, in_offsets_, nb_offsets_;
  std::vector<NodeId> out_adj_, in_adj_, nb_adj_;
  std::unordered_map<std::string, NodeId> by_name_;
};

// Collapses parallel links and drops self-links. Undirected inputs are
// normalized to (min, max) first. The node set is unchanged.
Network reduce_to_simple(RawGraph raw);

// Induced subgraph on `keep` (any order); nodes are re-indexed in increasing
// order of their old ids and keep their names and attributes.
Network induced_subgraph(const Network& network, std::span<const NodeId> keep);

// Subgraph induced by the largest weakly connected component. Ties go to the
// component holding the smallest node id.
Network largest_component(const Network& network);

// Weak-component label per node, components numbered by smallest member id.
std::vector<std::size_t> component_labels(const Network& network);

// Every link becomes an unordered pair; mutual pairs collapse into one link.
Network undirected_view(const Network& network);

struct DegreeSummary {
  bool directed = false;
  std::vector<std::size_t> degree;      // k_i
  std::vector<std::size_t> in_degree;   // empty for undirected networks
  std::vector<std::size_t> out_degree;  // empty for undirected networks
  double mean_degree = 0.0;
  std::size_t max_degree = 0;
  std::size_t max_in_degree = 0;
  std::size_t max_out_degree = 0;
};

DegreeSummary degree_summary(const Network& network);

std::vector<double> degree_values(const Network& network, DegreeKind kind);

std::string_view to_string(DegreeKind kind);
std::optional<DegreeKind> parse_degree_kind(std::string_view text);

}  // namespace swnet
