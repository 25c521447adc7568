#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "swnet/error.hpp"
#include "swnet/netbuild.hpp"

namespace swnet {

namespace {

std::string dotted(std::string name) {
  std::replace(name.begin(), name.end(), '$', '.');
  return name;
}

class Resolver {
 public:
  explicit Resolver(const std::vector<ClassModel>& models) : models_(models) {
    for (std::size_t i = 0; i < models.size(); ++i) {
      qualified_.emplace(models[i].qualified_name, static_cast<long>(i));
      canonical_.emplace(dotted(models[i].qualified_name), static_cast<long>(i));
    }
  }

  long resolve(const ClassModel& from, const std::string& name) const {
    auto dot = name.find('.');
    if (dot == std::string::npos) return simple(from, name);
    if (auto it = canonical_.find(name); it != canonical_.end()) return it->second;
    auto head = simple(from, name.substr(0, dot));
    if (head < 0) return -1;
    auto rest = name.substr(dot + 1);
    std::replace(rest.begin(), rest.end(), '.', '$');
    return lookup(qualified_, models_[static_cast<std::size_t>(head)].qualified_name + "$" + rest);
  }

 private:
  static long lookup(const std::unordered_map<std::string, long>& map, const std::string& key) {
    auto it = map.find(key);
    return it == map.end() ? -1 : it->second;
  }

  long simple(const ClassModel& from, const std::string& name) const {
    // The class itself and its enclosing classes, then their member types.
    std::vector<const std::string*> scopes{&from.qualified_name};
    for (const auto& e : from.enclosing) scopes.push_back(&e);
    for (const auto* scope : scopes) {
      if (auto r = lookup(qualified_, *scope + "$" + name); r >= 0) return r;
      auto idx = lookup(qualified_, *scope);
      if (idx >= 0 && models_[static_cast<std::size_t>(idx)].simple_name == name) return idx;
    }
    for (const auto& imp : from.single_imports) {
      auto last = imp.rfind('.');
      if (imp.compare(last == std::string::npos ? 0 : last + 1, std::string::npos, name) == 0) {
        if (auto r = lookup(canonical_, imp); r >= 0) return r;
      }
    }
    if (auto r = lookup(qualified_, from.package.empty() ? name : from.package + "." + name); r >= 0) return r;
    for (const auto& imp : from.demand_imports) {
      if (auto r = lookup(canonical_, imp + "." + name); r >= 0) return r;
    }
    return -1;
  }

  const std::vector<ClassModel>& models_;
  std::unordered_map<std::string, long> qualified_;
  std::unordered_map<std::string, long> canonical_;
};

// Looks for a cycle reachable in `parents`; returns its node sequence with
// the first node repeated at the end, or empty.
std::vector<NodeId> find_cycle(const std::vector<std::vector<NodeId>>& parents, const std::vector<NodeId>& order) {
  const auto n = parents.size();
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<NodeId> stack;
  std::vector<std::size_t> next(n, 0);
  for (auto root : order) {
    if (state[root]) continue;
    stack.push_back(root);
    state[root] = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      if (next[v] < parents[v].size()) {
        auto p = parents[v][next[v]++];
        if (state[p] == 1) {
          auto it = std::find(stack.begin(), stack.end(), p);
          std::vector<NodeId> cycle(it, stack.end());
          cycle.push_back(p);
          return cycle;
        }
        if (state[p] == 0) {
          state[p] = 1;
          stack.push_back(p);
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return {};
}

}  // namespace

long resolve_type(const std::vector<ClassModel>& models, const ClassModel& from, const std::string& name) {
  return Resolver(models).resolve(from, name);
}

std::vector<TypedLink> typed_links(const std::vector<ClassModel>& models) {
  Resolver resolver(models);
  std::set<TypedLink> links;
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto& m = models[i];
    auto add = [&](const std::vector<TypeRef>& refs, DependencyKind kind) {
      for (const auto& ref : refs) {
        auto j = resolver.resolve(m, ref.name);
        if (j >= 0 && static_cast<std::size_t>(j) != i) {
          links.insert({static_cast<NodeId>(i), static_cast<NodeId>(j), kind});
        }
      }
    };
    add(m.supertypes, DependencyKind::inheritance);
    add(m.field_types, DependencyKind::composition);
    add(m.signature_types, DependencyKind::dependence);
  }
  return {links.begin(), links.end()};
}

Network explicit_edges(const std::vector<ClassModel>& models) {
  std::vector<NodeRecord> nodes(models.size());
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto& m = models[i];
    auto& node = nodes[i];
    node.id = static_cast<NodeId>(i);
    node.name = m.qualified_name;
    node.attributes["package"] = m.package;
    node.attributes["kind"] = std::string(to_string(m.kind));
    if (!m.author.empty()) node.attributes["author"] = m.author;
    if (!m.version.empty()) node.attributes["version"] = m.version;
  }
  std::set<Link> links;
  for (const auto& l : typed_links(models)) links.insert({l.source, l.target});
  return Network(std::move(nodes), {links.begin(), links.end()}, true);
}

std::vector<std::vector<NodeId>> inheritance_parents(const std::vector<ClassModel>& models,
                                                     std::vector<std::string>* warnings) {
  std::vector<std::vector<NodeId>> parents(models.size());
  for (const auto& l : typed_links(models)) {
    if (l.kind == DependencyKind::inheritance) parents[l.source].push_back(l.target);
  }
  // Deterministic traversal: by qualified name.
  std::vector<NodeId> order(models.size());
  for (NodeId i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](NodeId a, NodeId b) { return models[a].qualified_name < models[b].qualified_name; });
  for (auto& p : parents) {
    std::sort(p.begin(), p.end(), [&](NodeId a, NodeId b) { return models[a].qualified_name < models[b].qualified_name; });
  }
  while (true) {
    auto cycle = find_cycle(parents, order);
    if (cycle.empty()) break;
    std::size_t worst = 0;
    auto key = [&](std::size_t k) {
      return std::pair{models[cycle[k]].qualified_name, models[cycle[k + 1]].qualified_name};
    };
    for (std::size_t k = 1; k + 1 < cycle.size(); ++k) {
      if (key(k) > key(worst)) worst = k;
    }
    auto [from, to] = key(worst);
    if (warnings) {
      std::string path;
      for (auto v : cycle) path += (path.empty() ? "" : " -> ") + models[v].qualified_name;
      warnings->push_back("inheritance cycle " + path + "; ignoring " + from + " -> " + to);
    }
    auto& list = parents[cycle[worst]];
    list.erase(std::find(list.begin(), list.end(), cycle[worst + 1]));
  }
  return parents;
}

Network propagate_implicit(const Network& network, const std::vector<ClassModel>& models,
                           const PropagationOptions& options, std::vector<std::string>* warnings) {
  if (!network.directed()) throw Error(ErrorCode::invalid_argument, "implicit propagation needs a directed network");
  const auto n = network.node_count();
  auto model_parents = inheritance_parents(models, warnings);

  // Parents in network ids; classes missing from the network are skipped.
  std::vector<long> node_of(models.size(), -1);
  for (std::size_t i = 0; i < models.size(); ++i) {
    if (auto v = network.find(models[i].qualified_name)) node_of[i] = static_cast<long>(*v);
  }
  std::vector<std::vector<NodeId>> parents(n);
  for (std::size_t i = 0; i < models.size(); ++i) {
    if (node_of[i] < 0) continue;
    for (auto p : model_parents[i]) {
      if (node_of[p] >= 0) parents[static_cast<std::size_t>(node_of[i])].push_back(static_cast<NodeId>(node_of[p]));
    }
  }

  // Ancestors first.
  std::vector<std::size_t> pending(n, 0);
  std::vector<std::vector<NodeId>> children(n);
  for (NodeId v = 0; v < n; ++v) {
    pending[v] = parents[v].size();
    for (auto p : parents[v]) children[p].push_back(v);
  }
  std::vector<NodeId> order;
  for (NodeId v = 0; v < n; ++v) {
    if (pending[v] == 0) order.push_back(v);
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (auto c : children[order[k]]) {
      if (--pending[c] == 0) order.push_back(c);
    }
  }

  // inherited[v]: links v acquires from its ancestors.
  std::vector<std::set<NodeId>> inherited(n);
  for (auto v : order) {
    for (auto p : parents[v]) {
      auto& acc = inherited[v];
      acc.insert(inherited[p].begin(), inherited[p].end());
      for (auto w : network.out_neighbors(p)) {
        const bool is_inheritance =
            std::find(parents[p].begin(), parents[p].end(), w) != parents[p].end();
        if (options.include_inheritance || !is_inheritance) acc.insert(w);
      }
    }
  }

  std::set<Link> links(network.links().begin(), network.links().end());
  for (NodeId v = 0; v < n; ++v) {
    for (auto w : inherited[v]) {
      if (w != v) links.insert({v, w});
    }
  }
  std::vector<NodeRecord> nodes(network.nodes().begin(), network.nodes().end());
  return Network(std::move(nodes), {links.begin(), links.end()}, true);
}

BuildResult build_network(const ParsedCorpus& corpus, const BuildOptions& options) {
  if (corpus.models.empty()) throw Error(ErrorCode::corpus, "no classes found in the corpus");
  BuildResult result;
  result.classes_parsed = corpus.models.size();
  result.warnings = corpus.warnings;
  result.errors = corpus.errors;
  auto explicit_net = explicit_edges(corpus.models);
  Network net = options.implicit
                    ? propagate_implicit(explicit_net, corpus.models, options.propagation, &result.warnings)
                    : explicit_net;
  if (options.largest_component) net = largest_component(net);
  for (const auto& l : net.links()) {
    auto s = explicit_net.find(net.node(l.source).name);
    auto t = explicit_net.find(net.node(l.target).name);
    if (s && t && explicit_net.has_link(*s, *t)) ++result.explicit_links;
  }
  result.total_links = net.link_count();
  result.network = std::move(net);
  return result;
}

}  // namespace swnet
