#include "swnet/network.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "swnet/error.hpp"

namespace swnet {

namespace {

void build_csr(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& pairs,
               std::vector<std::size_t>& offsets, std::vector<NodeId>& adj) {
  offsets.assign(n + 1, 0);
  for (const auto& [u, v] : pairs) ++offsets[u + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  adj.assign(pairs.size(), 0);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [u, v] : pairs) adj[cursor[u]++] = v;
  for (std::size_t u = 0; u < n; ++u) std::sort(adj.begin() + offsets[u], adj.begin() + offsets[u + 1]);
}

std::span<const NodeId> row(const std::vector<std::size_t>& offsets, const std::vector<NodeId>& adj,
                            NodeId v) {
  if (static_cast<std::size_t>(v) + 1 >= offsets.size()) throw Error(ErrorCode::invalid_argument, "node id out of range");
  return {adj.data() + offsets[v], offsets[v + 1] - offsets[v]};
}

}  // namespace

Network::Network(std::vector<NodeRecord> nodes, std::vector<Link> links, bool directed)
    : nodes_(std::move(nodes)), links_(std::move(links)), directed_(directed) {
  const auto n = nodes_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (nodes_[i].id != i) throw Error(ErrorCode::invalid_argument, "node ids must be 0..n-1 in order");
  }
  for (const auto& l : links_) {
    if (l.source >= n || l.target >= n) throw Error(ErrorCode::invalid_argument, "link endpoint is not a node");
    if (l.source == l.target) throw Error(ErrorCode::invalid_argument, "self-link in simple network");
    if (!directed_ && l.source > l.target) {
      throw Error(ErrorCode::invalid_argument, "undirected links must be stored as (min, max)");
    }
  }
  std::sort(links_.begin(), links_.end());
  if (std::adjacent_find(links_.begin(), links_.end()) != links_.end()) {
    throw Error(ErrorCode::invalid_argument, "duplicate link in simple network");
  }
  build_index();
}

void Network::build_index() {
  const auto n = nodes_.size();
  std::vector<std::pair<NodeId, NodeId>> out, in, both;
  out.reserve(links_.size());
  in.reserve(links_.size());
  both.reserve(2 * links_.size());
  for (const auto& l : links_) {
    out.emplace_back(l.source, l.target);
    in.emplace_back(l.target, l.source);
    both.emplace_back(l.source, l.target);
    both.emplace_back(l.target, l.source);
  }
  std::sort(both.begin(), both.end());
  both.erase(std::unique(both.begin(), both.end()), both.end());
  if (directed_) {
    build_csr(n, out, out_offsets_, out_adj_);
    build_csr(n, in, in_offsets_, in_adj_);
  }
  build_csr(n, both, nb_offsets_, nb_adj_);

  by_name_.clear();
  by_name_.reserve(n);
  for (const auto& rec : nodes_) by_name_.emplace(rec.name, rec.id);
}

std::span<const NodeId> Network::out_neighbors(NodeId v) const {
  return directed_ ? row(out_offsets_, out_adj_, v) : row(nb_offsets_, nb_adj_, v);
}

std::span<const NodeId> Network::in_neighbors(NodeId v) const {
  return directed_ ? row(in_offsets_, in_adj_, v) : row(nb_offsets_, nb_adj_, v);
}

std::span<const NodeId> Network::neighbors(NodeId v) const { return row(nb_offsets_, nb_adj_, v); }

std::size_t Network::degree(NodeId v) const {
  return directed_ ? out_degree(v) + in_degree(v) : neighbors(v).size();
}

std::size_t Network::degree(NodeId v, DegreeKind kind) const {
  switch (kind) {
    case DegreeKind::in: return in_degree(v);
    case DegreeKind::out: return out_degree(v);
    case DegreeKind::total: break;
  }
  return degree(v);
}

bool Network::has_link(NodeId source, NodeId target) const {
  if (source >= node_count() || target >= node_count()) return false;
  auto row = out_neighbors(source);
  return std::binary_search(row.begin(), row.end(), target);
}

std::optional<NodeId> Network::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

Network reduce_to_simple(RawGraph raw) {
  const auto n = raw.nodes.size();
  for (std::size_t i = 0; i < n; ++i) raw.nodes[i].id = static_cast<NodeId>(i);
  std::vector<Link> links;
  links.reserve(raw.links.size());
  for (auto l : raw.links) {
    if (l.source >= n || l.target >= n) throw Error(ErrorCode::invalid_argument, "link endpoint is not a node");
    if (l.source == l.target) continue;
    if (!raw.directed && l.source > l.target) std::swap(l.source, l.target);
    links.push_back(l);
  }
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());
  return Network(std::move(raw.nodes), std::move(links), raw.directed);
}

Network induced_subgraph(const Network& network, std::span<const NodeId> keep) {
  std::vector<NodeId> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  constexpr auto absent = static_cast<NodeId>(-1);
  std::vector<NodeId> remap(network.node_count(), absent);
  std::vector<NodeRecord> nodes;
  nodes.reserve(sorted.size());
  for (auto old : sorted) {
    remap.at(old) = static_cast<NodeId>(nodes.size());
    NodeRecord rec = network.node(old);
    rec.id = remap[old];
    nodes.push_back(std::move(rec));
  }
  std::vector<Link> links;
  for (const auto& l : network.links()) {
    if (remap[l.source] != absent && remap[l.target] != absent) links.push_back({remap[l.source], remap[l.target]});
  }
  return Network(std::move(nodes), std::move(links), network.directed());
}

std::vector<std::size_t> component_labels(const Network& network) {
  const auto n = network.node_count();
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(n, unset);
  std::size_t next = 0;
  std::queue<NodeId> queue;
  for (NodeId start = 0; start < n; ++start) {
    if (label[start] != unset) continue;
    label[start] = next;
    queue.push(start);
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop();
      for (auto w : network.neighbors(v)) {
        if (label[w] == unset) {
          label[w] = next;
          queue.push(w);
        }
      }
    }
    ++next;
  }
  return label;
}

Network largest_component(const Network& network) {
  if (network.empty()) return network;
  auto label = component_labels(network);
  std::size_t count = *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::size_t> size(count, 0);
  for (auto l : label) ++size[l];
  // Labels follow smallest member id, so the first maximum wins ties.
  auto best = static_cast<std::size_t>(std::max_element(size.begin(), size.end()) - size.begin());
  std::vector<NodeId> keep;
  keep.reserve(size[best]);
  for (NodeId v = 0; v < network.node_count(); ++v) {
    if (label[v] == best) keep.push_back(v);
  }
  return induced_subgraph(network, keep);
}

Network undirected_view(const Network& network) {
  if (!network.directed()) return network;
  RawGraph raw;
  raw.nodes.assign(network.nodes().begin(), network.nodes().end());
  raw.links.assign(network.links().begin(), network.links().end());
  raw.directed = false;
  return reduce_to_simple(std::move(raw));
}

DegreeSummary degree_summary(const Network& network) {
  DegreeSummary s;
  s.directed = network.directed();
  const auto n = network.node_count();
  s.degree.resize(n);
  if (s.directed) {
    s.in_degree.resize(n);
    s.out_degree.resize(n);
  }
  std::size_t total = 0;
  for (NodeId v = 0; v < n; ++v) {
    s.degree[v] = network.degree(v);
    total += s.degree[v];
    s.max_degree = std::max(s.max_degree, s.degree[v]);
    if (s.directed) {
      s.in_degree[v] = network.in_degree(v);
      s.out_degree[v] = network.out_degree(v);
      s.max_in_degree = std::max(s.max_in_degree, s.in_degree[v]);
      s.max_out_degree = std::max(s.max_out_degree, s.out_degree[v]);
    }
  }
  s.mean_degree = n == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(n);
  return s;
}

std::vector<double> degree_values(const Network& network, DegreeKind kind) {
  std::vector<double> values(network.node_count());
  for (NodeId v = 0; v < network.node_count(); ++v) values[v] = static_cast<double>(network.degree(v, kind));
  return values;
}

std::string_view to_string(DegreeKind kind) {
  switch (kind) {
    case DegreeKind::in: return "in";
    case DegreeKind::out: return "out";
    case DegreeKind::total: return "total";
  }
  return "total";
}

std::optional<DegreeKind> parse_degree_kind(std::string_view text) {
  if (text == "in") return DegreeKind::in;
  if (text == "out") return DegreeKind::out;
  if (text == "total") return DegreeKind::total;
  return std::nullopt;
}

}  // namespace swnet
