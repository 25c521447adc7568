#include "swnet/groups.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <unordered_set>

#include "swnet/error.hpp"
#include "swnet/parallel.hpp"
#include "swnet/stats.hpp"

namespace swnet {

std::string_view to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::community: return "community";
    case GroupKind::core_periphery: return "core_periphery";
    case GroupKind::mixture: return "mixture";
    case GroupKind::module: return "module";
    case GroupKind::hub_spokes: return "hub_spokes";
  }
  return "mixture";
}

std::optional<GroupKind> parse_group_kind(std::string_view text) {
  for (auto k : {GroupKind::community, GroupKind::core_periphery, GroupKind::mixture, GroupKind::module,
                 GroupKind::hub_spokes}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

void validate(const ExtractionConfig& c) {
  if (c.restarts == 0 || c.tabu_tenure == 0 || c.significance_samples == 0 || c.threads == 0) {
    throw Error(ErrorCode::invalid_argument, "extraction config values must be positive");
  }
  if (!(c.significance_level > 0.0 && c.significance_level < 0.5)) {
    throw Error(ErrorCode::invalid_argument, "significance level must lie in (0, 0.5)");
  }
}

std::size_t effective_non_improving(const ExtractionConfig& config, std::size_t n) {
  if (config.max_non_improving > 0) return config.max_non_improving;
  return std::max<std::size_t>(2 * n, 1);
}

double mu(std::size_t s, std::size_t t, std::size_t n) {
  if (n == 0 || s + t == 0) throw Error(ErrorCode::domain, "mu requires n >= 1 and s + t > 0");
  return 2.0 * static_cast<double>(s) * static_cast<double>(t) /
         (static_cast<double>(n) * static_cast<double>(s + t));
}

double criterion_from_counts(std::size_t s, std::size_t t, std::size_t links_st, std::size_t degree_sum_s,
                             std::size_t n) {
  const double u = mu(s, t, n);
  const double ds = static_cast<double>(s);
  const double inside = static_cast<double>(links_st) / (ds * static_cast<double>(t));
  const double outside = static_cast<double>(degree_sum_s - links_st) / (ds * static_cast<double>(n - t));
  return u * (1.0 - u) * (inside - outside);
}

double criterion_W(const Network& network, std::span<const NodeId> S, std::span<const NodeId> T) {
  if (network.directed()) return criterion_W(undirected_view(network), S, T);
  const auto n = network.node_count();
  std::vector<char> in_s(n, 0), in_t(n, 0);
  for (auto v : S) in_s.at(v) = 1;
  for (auto v : T) in_t.at(v) = 1;
  const auto s = static_cast<std::size_t>(std::count(in_s.begin(), in_s.end(), 1));
  const auto t = static_cast<std::size_t>(std::count(in_t.begin(), in_t.end(), 1));
  if (s == 0 || t == 0) throw Error(ErrorCode::domain, "criterion requires non-empty S and T");
  if (t >= n) throw Error(ErrorCode::domain, "criterion requires T to miss at least one node");
  std::size_t inside = 0, degree_sum = 0;
  for (const auto& l : network.links()) {
    if (in_s[l.source]) inside += in_t[l.target];
    if (in_s[l.target]) inside += in_t[l.source];
  }
  for (NodeId v = 0; v < n; ++v) {
    if (in_s[v]) degree_sum += network.degree(v);
  }
  return criterion_from_counts(s, t, inside, degree_sum, n);
}

namespace {

// Compact undirected adjacency used by the search.
struct Adjacency {
  std::size_t n = 0;
  std::vector<std::size_t> offsets;
  std::vector<NodeId> adj;

  std::span<const NodeId> row(NodeId v) const { return {adj.data() + offsets[v], offsets[v + 1] - offsets[v]}; }
  std::size_t degree(NodeId v) const { return offsets[v + 1] - offsets[v]; }
  std::size_t link_count() const { return adj.size() / 2; }
};

Adjacency make_adjacency(std::size_t n, std::span<const Link> links) {
  Adjacency a;
  a.n = n;
  a.offsets.assign(n + 1, 0);
  for (const auto& l : links) {
    ++a.offsets[l.source + 1];
    ++a.offsets[l.target + 1];
  }
  std::partial_sum(a.offsets.begin(), a.offsets.end(), a.offsets.begin());
  a.adj.resize(2 * links.size());
  std::vector<std::size_t> cursor(a.offsets.begin(), a.offsets.end() - 1);
  for (const auto& l : links) {
    a.adj[cursor[l.source]++] = l.target;
    a.adj[cursor[l.target]++] = l.source;
  }
  return a;
}

Adjacency make_adjacency(const Network& network) {
  if (!network.directed()) return make_adjacency(network.node_count(), network.links());
  auto view = undirected_view(network);
  return make_adjacency(view.node_count(), view.links());
}

// Insertion-ordered set over [0, n) with O(1) insert/erase.
class IndexedSet {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  void resize(std::size_t n) { pos_.assign(n, npos); }
  bool contains(NodeId v) const { return pos_[v] != npos; }
  void insert(NodeId v) {
    if (contains(v)) return;
    pos_[v] = items_.size();
    items_.push_back(v);
  }
  void erase(NodeId v) {
    auto p = pos_[v];
    if (p == npos) return;
    items_[p] = items_.back();
    pos_[items_[p]] = p;
    items_.pop_back();
    pos_[v] = npos;
  }
  void clear() {
    for (auto v : items_) pos_[v] = npos;
    items_.clear();
  }
  std::span<const NodeId> items() const { return items_; }
  std::size_t size() const { return items_.size(); }

 private:
  std::vector<NodeId> items_;
  std::vector<std::size_t> pos_;
};

enum class Side { S = 0, T = 1 };

struct Move {
  NodeId node = 0;
  Side side = Side::S;
  double W = -std::numeric_limits<double>::infinity();
};

// State of one tabu run. Arrays are sized once per search and reset sparsely.
class TabuSearch {
 public:
  TabuSearch(const Adjacency& g, const ExtractionConfig& config)
      : g_(g), tenure_(config.tabu_tenure), limit_(effective_non_improving(config, g.n)) {
    S_.resize(g.n);
    T_.resize(g.n);
    cand_s_.resize(g.n);
    cand_t_.resize(g.n);
    adj_t_.assign(g.n, 0);
    adj_s_.assign(g.n, 0);
    tabu_until_[0].assign(g.n, 0);
    tabu_until_[1].assign(g.n, 0);
    touched_flag_.assign(g.n, 0);
    all_nodes_.resize(g.n);
    std::iota(all_nodes_.begin(), all_nodes_.end(), NodeId{0});
  }

  GroupCandidate run(std::mt19937_64& rng) {
    GroupCandidate best;
    if (g_.n < 2) return best;
    initialize(rng);
    best.found = true;
    best.W = current();
    snapshot(best);

    std::size_t step = 0, idle = 0;
    while (idle < limit_) {
      auto move = choose(step, best.W, rng);
      if (!move) break;
      apply(move->node, move->side);
      tabu_until_[static_cast<int>(move->side)][move->node] = step + 1 + tenure_;
      touch(move->node);
      ++step;
      if (move->W > best.W) {
        best.W = current();
        snapshot(best);
        idle = 0;
      } else {
        ++idle;
      }
    }
    reset();
    return best;
  }

 private:
  double current() const { return criterion_from_counts(S_.size(), T_.size(), links_st_, degree_sum_s_, g_.n); }

  bool feasible(std::size_t s, std::size_t t) const { return s >= 2 && t >= 1 && t < g_.n; }

  void touch(NodeId v) {
    if (!touched_flag_[v]) {
      touched_flag_[v] = 1;
      touched_.push_back(v);
    }
  }

  void snapshot(GroupCandidate& best) const {
    best.S.assign(S_.items().begin(), S_.items().end());
    best.T.assign(T_.items().begin(), T_.items().end());
    std::sort(best.S.begin(), best.S.end());
    std::sort(best.T.begin(), best.T.end());
  }

  void apply(NodeId v, Side side) {
    touch(v);
    if (side == Side::S) {
      const bool adding = !S_.contains(v);
      if (adding) {
        S_.insert(v);
        links_st_ += adj_t_[v];
        degree_sum_s_ += g_.degree(v);
      } else {
        S_.erase(v);
        links_st_ -= adj_t_[v];
        degree_sum_s_ -= g_.degree(v);
      }
      for (auto w : g_.row(v)) {
        touch(w);
        if (adding) {
          if (adj_s_[w]++ == 0) cand_t_.insert(w);
        } else if (--adj_s_[w] == 0) {
          cand_t_.erase(w);
        }
      }
    } else {
      const bool adding = !T_.contains(v);
      if (adding) {
        T_.insert(v);
        links_st_ += adj_s_[v];
      } else {
        T_.erase(v);
        links_st_ -= adj_s_[v];
      }
      for (auto w : g_.row(v)) {
        touch(w);
        if (adding) {
          if (adj_t_[w]++ == 0) cand_s_.insert(w);
        } else if (--adj_t_[w] == 0) {
          cand_s_.erase(w);
        }
      }
    }
  }

  void initialize(std::mt19937_64& rng) {
    const auto n = g_.n;
    const auto hi = std::max<std::size_t>(3, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n)))));
    std::uniform_int_distribution<std::size_t> size_dist(2, hi);
    const auto s0 = std::min(size_dist(rng), n);
    const auto t0 = std::min(size_dist(rng), n - 1);

    auto draw = [&](std::size_t count, Side side) {
      std::vector<NodeId> chosen;
      std::sample(all_nodes_.begin(), all_nodes_.end(), std::back_inserter(chosen), count, rng);
      for (auto v : chosen) apply(v, side);
    };
    draw(s0, Side::S);
    draw(t0, Side::T);
  }

  std::optional<Move> choose(std::size_t step, double best_w, std::mt19937_64& rng) const {
    Move chosen;
    std::size_t ties = 0;
    const auto s = S_.size(), t = T_.size();
    auto consider = [&](NodeId v, Side side, std::size_t s2, std::size_t t2, std::size_t l2, std::size_t k2) {
      if (!feasible(s2, t2)) return;
      const double w = criterion_from_counts(s2, t2, l2, k2, g_.n);
      const bool tabu = tabu_until_[static_cast<int>(side)][v] > step;
      if (tabu && !(w > best_w)) return;
      if (w > chosen.W) {
        chosen = {v, side, w};
        ties = 1;
      } else if (w == chosen.W) {
        ++ties;
        if (std::uniform_int_distribution<std::size_t>(0, ties - 1)(rng) == 0) chosen = {v, side, w};
      }
    };
    for (auto v : S_.items()) consider(v, Side::S, s - 1, t, links_st_ - adj_t_[v], degree_sum_s_ - g_.degree(v));
    for (auto v : T_.items()) consider(v, Side::T, s, t - 1, links_st_ - adj_s_[v], degree_sum_s_);
    for (auto v : cand_s_.items()) {
      if (!S_.contains(v)) consider(v, Side::S, s + 1, t, links_st_ + adj_t_[v], degree_sum_s_ + g_.degree(v));
    }
    for (auto v : cand_t_.items()) {
      if (!T_.contains(v)) consider(v, Side::T, s, t + 1, links_st_ + adj_s_[v], degree_sum_s_);
    }
    if (ties == 0) return std::nullopt;
    return chosen;
  }

  void reset() {
    S_.clear();
    T_.clear();
    cand_s_.clear();
    cand_t_.clear();
    for (auto v : touched_) {
      adj_s_[v] = adj_t_[v] = 0;
      tabu_until_[0][v] = tabu_until_[1][v] = 0;
      touched_flag_[v] = 0;
    }
    touched_.clear();
    links_st_ = degree_sum_s_ = 0;
  }

  const Adjacency& g_;
  std::size_t tenure_;
  std::size_t limit_;
  IndexedSet S_, T_, cand_s_, cand_t_;  // cand_s_: nodes with a T neighbour; cand_t_: with an S neighbour
  std::vector<std::size_t> adj_t_, adj_s_;
  std::vector<std::size_t> tabu_until_[2];
  std::vector<char> touched_flag_;
  std::vector<NodeId> touched_, all_nodes_;
  std::size_t links_st_ = 0, degree_sum_s_ = 0;
};

GroupCandidate best_of_restarts(const Adjacency& g, const ExtractionConfig& config, std::uint64_t seed,
                                unsigned threads) {
  std::vector<GroupCandidate> runs(config.restarts);
  if (threads <= 1) {
    TabuSearch search(g, config);
    for (std::size_t r = 0; r < config.restarts; ++r) {
      std::mt19937_64 rng(derive_seed(seed, r));
      runs[r] = search.run(rng);
    }
  } else {
    parallel_for(config.restarts, threads, [&](std::size_t r) {
      TabuSearch search(g, config);
      std::mt19937_64 rng(derive_seed(seed, r));
      runs[r] = search.run(rng);
    });
  }
  GroupCandidate best;
  for (auto& run : runs) {
    if (run.found && (!best.found || run.W > best.W)) best = std::move(run);
  }
  return best;
}

std::vector<Link> gnm_links(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t pairs = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m > pairs) throw Error(ErrorCode::invalid_argument, "G(n,m): m exceeds n(n-1)/2");
  std::mt19937_64 rng(seed);
  // Dense requests sample the complement instead.
  const bool complement = m > pairs / 2;
  const auto want = complement ? pairs - m : m;
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(want * 2);
  std::uniform_int_distribution<std::uint64_t> pick_node(0, n == 0 ? 0 : n - 1);
  while (chosen.size() < want) {
    auto a = pick_node(rng), b = pick_node(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    chosen.insert(a * n + b);
  }
  std::vector<Link> links;
  links.reserve(m);
  if (!complement) {
    for (auto code : chosen) links.push_back({static_cast<NodeId>(code / n), static_cast<NodeId>(code % n)});
  } else {
    for (NodeId a = 0; a < n; ++a) {
      for (NodeId b = a + 1; b < n; ++b) {
        if (!chosen.count(static_cast<std::uint64_t>(a) * n + b)) links.push_back({a, b});
      }
    }
  }
  std::sort(links.begin(), links.end());
  return links;
}

}  // namespace

GroupCandidate tabu_search_best_group(const Network& network, const ExtractionConfig& config, std::uint64_t seed) {
  validate(config);
  return best_of_restarts(make_adjacency(network), config, seed, config.threads);
}

Network random_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::vector<NodeRecord> nodes(n);
  for (std::size_t i = 0; i < n; ++i) nodes[i] = {static_cast<NodeId>(i), std::to_string(i), {}};
  return Network(std::move(nodes), gnm_links(n, m, seed), false);
}

SignificanceModel significance_threshold(std::size_t n, std::size_t m, const ExtractionConfig& config,
                                         std::uint64_t seed) {
  validate(config);
  SignificanceModel model;
  model.n = n;
  model.m = m;
  model.samples.assign(config.significance_samples, 0.0);
  if (m > 0 && n >= 2) {
    parallel_for(config.significance_samples, config.threads, [&](std::size_t k) {
      const auto sample_seed = derive_seed(seed, k);
      auto g = make_adjacency(n, gnm_links(n, m, sample_seed));
      auto best = best_of_restarts(g, config, derive_seed(sample_seed, 0x5eed), 1);
      model.samples[k] = best.found ? best.W : 0.0;
    });
  }
  model.threshold = quantile(model.samples, 1.0 - config.significance_level);
  return model;
}

GroupClass classify_group(std::span<const NodeId> S, std::span<const NodeId> T) {
  if (S.empty() || T.empty()) throw Error(ErrorCode::domain, "classify_group requires non-empty S and T");
  std::vector<NodeId> common;
  std::set_intersection(S.begin(), S.end(), T.begin(), T.end(), std::back_inserter(common));
  const auto inter = common.size();
  const auto uni = S.size() + T.size() - inter;
  GroupClass c;
  c.tau = static_cast<double>(inter) / static_cast<double>(uni);
  if (inter == 0) {
    c.kind = T.size() == 1 ? GroupKind::hub_spokes : GroupKind::module;
  } else if (inter == S.size() && inter == T.size()) {
    c.kind = GroupKind::community;
  } else if (inter == S.size() || inter == T.size()) {
    c.kind = GroupKind::core_periphery;
  } else {
    c.kind = GroupKind::mixture;
  }
  return c;
}

ExtractionResult extract_all(const Network& network, const ExtractionConfig& config) {
  validate(config);
  const Network* source = &network;
  Network view;
  if (network.directed()) {
    view = undirected_view(network);
    source = &view;
  }
  ExtractionResult result;
  result.n = source->node_count();
  result.m = source->link_count();
  std::vector<Link> residual(source->links().begin(), source->links().end());

  constexpr auto absent = std::numeric_limits<NodeId>::max();
  std::vector<NodeId> local(result.n, absent);
  std::vector<char> in_s(result.n, 0), in_t(result.n, 0);

  for (std::size_t round = 0; !residual.empty(); ++round) {
    // Compact the residual: nodes without links are gone.
    std::vector<NodeId> active;
    for (const auto& l : residual) {
      for (auto v : {l.source, l.target}) {
        if (local[v] == absent) {
          local[v] = 0;
          active.push_back(v);
        }
      }
    }
    std::sort(active.begin(), active.end());
    for (std::size_t i = 0; i < active.size(); ++i) local[active[i]] = static_cast<NodeId>(i);
    std::vector<Link> compact;
    compact.reserve(residual.size());
    for (const auto& l : residual) compact.push_back({local[l.source], local[l.target]});
    auto g = make_adjacency(active.size(), compact);
    for (auto v : active) local[v] = absent;

    auto candidate = best_of_restarts(g, config, derive_seed(config.seed, 2 * round), config.threads);
    auto model = significance_threshold(active.size(), residual.size(), config, derive_seed(config.seed, 2 * round + 1));
    result.final_threshold = model.threshold;
    result.final_candidate_W = candidate.W;
    if (!candidate.found || !(candidate.W > model.threshold)) break;

    NodeGroup group;
    for (auto v : candidate.S) group.S.push_back(active[v]);
    for (auto v : candidate.T) group.T.push_back(active[v]);
    group.W = candidate.W;
    group.threshold = model.threshold;
    group.order = result.groups.size();
    auto cls = classify_group(group.S, group.T);
    group.tau = cls.tau;
    group.kind = cls.kind;

    for (auto v : group.S) in_s[v] = 1;
    for (auto v : group.T) in_t[v] = 1;
    const auto before = residual.size();
    std::erase_if(residual, [&](const Link& l) {
      return (in_s[l.source] && in_t[l.target]) || (in_s[l.target] && in_t[l.source]);
    });
    for (auto v : group.S) in_s[v] = 0;
    for (auto v : group.T) in_t[v] = 0;
    group.links_removed = before - residual.size();
    result.groups.push_back(std::move(group));
  }

  result.background_links = residual;
  std::vector<char> seen(result.n, 0);
  for (const auto& l : residual) seen[l.source] = seen[l.target] = 1;
  for (NodeId v = 0; v < result.n; ++v) {
    if (seen[v]) result.background_nodes.push_back(v);
  }
  return result;
}

GroupSummary group_summary(const ExtractionResult& result, bool count_pattern_nodes) {
  GroupSummary summary;
  summary.count = result.groups.size();
  const double m = static_cast<double>(std::max<std::size_t>(result.m, 1));
  const double n = static_cast<double>(std::max<std::size_t>(result.n, 1));

  struct Acc {
    std::size_t count = 0, s = 0, t = 0, links = 0;
    std::vector<char> nodes;
  };
  auto fresh = [&] { return Acc{0, 0, 0, 0, std::vector<char>(result.n, 0)}; };
  Acc community = fresh(), core = fresh(), mixture = fresh(), module = fresh(), spokes = fresh(), all = fresh();

  double tau_sum = 0.0;
  for (const auto& g : result.groups) {
    std::vector<Acc*> targets{&all};
    switch (g.kind) {
      case GroupKind::community: targets.push_back(&community); break;
      case GroupKind::core_periphery: targets.push_back(&core); break;
      case GroupKind::mixture: targets.push_back(&mixture); break;
      case GroupKind::module: targets.push_back(&module); break;
      case GroupKind::hub_spokes:
        targets.push_back(&module);
        targets.push_back(&spokes);
        break;
    }
    for (auto* acc : targets) {
      ++acc->count;
      acc->s += g.S.size();
      acc->t += g.T.size();
      acc->links += g.links_removed;
      for (auto v : g.S) acc->nodes[v] = 1;
      if (count_pattern_nodes) {
        for (auto v : g.T) acc->nodes[v] = 1;
      }
    }
    tau_sum += g.tau;
  }

  auto finish = [&](const Acc& acc) {
    KindSummary k;
    k.count = acc.count;
    if (acc.count > 0) {
      k.mean_s = static_cast<double>(acc.s) / static_cast<double>(acc.count);
      k.mean_t = static_cast<double>(acc.t) / static_cast<double>(acc.count);
    }
    k.links_share = result.m == 0 ? 0.0 : static_cast<double>(acc.links) / m;
    k.nodes_share = result.n == 0 ? 0.0
                                  : static_cast<double>(std::count(acc.nodes.begin(), acc.nodes.end(), 1)) / n;
    return k;
  };
  summary.community = finish(community);
  summary.core_periphery = finish(core);
  summary.mixture = finish(mixture);
  summary.module = finish(module);
  summary.hub_spokes = finish(spokes);
  auto total = finish(all);
  summary.mean_s = total.mean_s;
  summary.mean_t = total.mean_t;
  summary.mean_tau = summary.count == 0 ? 0.0 : tau_sum / static_cast<double>(summary.count);
  summary.links_explained = total.links_share;
  summary.nodes_included_share = total.nodes_share;
  summary.background_links_share =
      result.m == 0 ? 1.0 : static_cast<double>(result.background_links.size()) / m;
  summary.background_nodes_share =
      result.n == 0 ? 0.0 : static_cast<double>(result.background_nodes.size()) / n;
  return summary;
}

}  // namespace swnet
