#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "swnet/clustering.hpp"
#include "swnet/error.hpp"
#include "swnet/groupmix.hpp"

namespace swnet::report {

namespace {

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json table(std::vector<std::string> columns, json rows) {
  return json{{"columns", std::move(columns)}, {"rows", std::move(rows)}};
}

json profile_table(std::span<const ProfileRow> rows, const std::string& key, const std::string& value) {
  json out = json::array();
  for (const auto& r : rows) out.push_back({r.key, r.mean, r.count});
  return table({key, value, "count"}, std::move(out));
}

json fit_json(const PowerLawFit& f) {
  if (!f.defined) return json{{"defined", false}};
  return json{{"defined", true},      {"gamma", f.gamma}, {"k_min", f.k_min},       {"tail_size", f.tail_size},
              {"ks_distance", f.ks_distance}, {"gof_p", f.gof_p}, {"valid", f.valid}};
}

json distribution(std::span<const std::size_t> values) {
  std::map<std::size_t, std::size_t> counts;
  for (auto v : values) ++counts[v];
  json rows = json::array();
  for (const auto& [k, c] : counts) rows.push_back({k, c});
  return table({"k", "count"}, std::move(rows));
}

json names(const Network& network, std::span<const NodeId> ids) {
  json out = json::array();
  for (auto v : ids) out.push_back(network.node(v).name);
  return out;
}

json kind_json(const KindSummary& k) {
  return json{{"count", k.count}, {"mean_s", k.mean_s}, {"mean_t", k.mean_t}, {"links_share", k.links_share},
              {"nodes_share", k.nodes_share}};
}

}  // namespace

json stats(const Network& network, const std::vector<std::string>& warnings) {
  auto d = degree_summary(network);
  json s{{"n", network.node_count()},
         {"m", network.link_count()},
         {"directed", network.directed()},
         {"mean_degree", d.mean_degree},
         {"max_degree", d.max_degree},
         {"components", 0},
         {"largest_component", 0},
         {"warnings", warnings}};
  if (network.directed()) {
    s["max_in_degree"] = d.max_in_degree;
    s["max_out_degree"] = d.max_out_degree;
  }
  auto labels = component_labels(network);
  if (!labels.empty()) {
    std::map<std::size_t, std::size_t> sizes;
    for (auto l : labels) ++sizes[l];
    s["components"] = sizes.size();
    std::size_t big = 0;
    for (const auto& [l, c] : sizes) big = std::max(big, c);
    s["largest_component"] = big;
  }
  return json{{"summary", s}};
}

json mixing(const Network& network, const PowerLawOptions& fit) {
  auto report = mixing_report(network);
  auto d = degree_summary(network);
  json s{{"r", opt(report.r)}, {"sigma_k", report.sigma_k}, {"directed", network.directed()}};
  json fits{{"degree", fit_json(fit_power_law(d.degree, fit))}};
  json profiles{{"degree_distribution", distribution(d.degree)}};
  if (network.directed()) {
    s["r_in_in"] = opt(report.r_in_in);
    s["r_in_out"] = opt(report.r_in_out);
    s["r_out_in"] = opt(report.r_out_in);
    s["r_out_out"] = opt(report.r_out_out);
    fits["in_degree"] = fit_json(fit_power_law(d.in_degree, fit));
    fits["out_degree"] = fit_json(fit_power_law(d.out_degree, fit));
    profiles["in_degree_distribution"] = distribution(d.in_degree);
    profiles["out_degree_distribution"] = distribution(d.out_degree);
  }
  s["power_law"] = fits;
  for (const auto& p : report.profiles) {
    const auto name = "connectivity_" + std::string(to_string(p.alpha)) + "_" + std::string(to_string(p.beta));
    profiles[name] = profile_table(p.rows, "k", "k_N");
  }
  return json{{"summary", s}, {"profiles", profiles}};
}

json clustering(const Network& network) {
  auto r = clustering_report(network);
  json s{{"mean_c", r.mean_c},           {"mean_d", r.mean_d},           {"p", r.p_baseline},
         {"share_d_eq_1", r.share_d_eq_1}, {"share_d_lt_p", r.share_d_lt_p}, {"r_c", opt(r.r_c)},
         {"r_d", opt(r.r_d)}};
  json profiles;
  std::vector<DegreeKind> axes{DegreeKind::total};
  if (network.directed()) axes = {DegreeKind::total, DegreeKind::in, DegreeKind::out};
  for (auto kind : {ClusteringKind::standard, ClusteringKind::degree_corrected}) {
    const std::string q = kind == ClusteringKind::standard ? "c" : "d";
    for (auto axis : axes) {
      const std::string axis_name = axis == DegreeKind::total ? "degree" : std::string(to_string(axis)) + "_degree";
      profiles[q + "_by_" + axis_name] = profile_table(clustering_degree_profile(network, kind, axis), "k", q);
    }
    profiles["neighbor_" + q] = profile_table(neighbor_clustering_profile(network, kind), q, q + "_N");
  }
  return json{{"summary", s}, {"profiles", profiles}};
}

json groups(const ExtractionResult& result, const Network& network, const ExtractionConfig& config) {
  json list = json::array();
  for (const auto& g : result.groups) {
    list.push_back({{"order", g.order},
                    {"S", names(network, g.S)},
                    {"T", names(network, g.T)},
                    {"s", g.S.size()},
                    {"t", g.T.size()},
                    {"W", g.W},
                    {"tau", g.tau},
                    {"kind", std::string(to_string(g.kind))},
                    {"threshold", g.threshold},
                    {"links_removed", g.links_removed}});
  }
  json links = json::array();
  for (const auto& l : result.background_links) {
    links.push_back({network.node(l.source).name, network.node(l.target).name});
  }
  auto sum = group_summary(result, false);
  auto with_pattern = group_summary(result, true);
  json background{{"links", links},
                  {"nodes", names(network, result.background_nodes)},
                  {"links_share", sum.background_links_share},
                  {"nodes_share", sum.background_nodes_share},
                  {"final_threshold", result.final_threshold},
                  {"final_candidate_W", result.final_candidate_W}};
  json summary{{"count", sum.count},
               {"n", result.n},
               {"m", result.m},
               {"mean_s", sum.mean_s},
               {"mean_t", sum.mean_t},
               {"mean_tau", sum.mean_tau},
               {"links_explained", sum.links_explained},
               {"nodes_included_share", sum.nodes_included_share},
               {"nodes_included_share_with_pattern", with_pattern.nodes_included_share},
               {"background_links_share", sum.background_links_share},
               {"background_nodes_share", sum.background_nodes_share},
               {"community", kind_json(sum.community)},
               {"core_periphery", kind_json(sum.core_periphery)},
               {"mixture", kind_json(sum.mixture)},
               {"module", kind_json(sum.module)},
               {"hub_spokes", kind_json(sum.hub_spokes)}};
  json cfg{{"restarts", config.restarts},
           {"tabu_tenure", config.tabu_tenure},
           {"max_non_improving", config.max_non_improving},
           {"significance_samples", config.significance_samples},
           {"significance_level", config.significance_level},
           {"seed", config.seed}};
  return json{{"groups", list}, {"background", background}, {"summary", summary}, {"config", cfg}};
}

std::vector<NodeGroup> groups_from_json(const json& doc, const Network& network) {
  if (!doc.is_object() || !doc.contains("groups") || !doc["groups"].is_array()) {
    throw Error(ErrorCode::parse, "groups document needs a \"groups\" array");
  }
  auto ids = [&](const json& list, const char* what) {
    if (!list.is_array() || list.empty()) throw Error(ErrorCode::parse, std::string("group ") + what + " must be a non-empty array");
    std::vector<NodeId> out;
    for (const auto& item : list) {
      std::string name = item.is_string() ? item.get<std::string>() : item.dump();
      auto v = network.find(name);
      if (!v) throw Error(ErrorCode::domain, "group member '" + name + "' is not a node of the network");
      out.push_back(*v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  std::vector<NodeGroup> out;
  for (const auto& item : doc["groups"]) {
    NodeGroup g;
    g.S = ids(item.value("S", json()), "S");
    g.T = ids(item.value("T", json()), "T");
    g.order = item.value("order", out.size());
    g.W = item.value("W", 0.0);
    g.threshold = item.value("threshold", 0.0);
    g.links_removed = item.value("links_removed", std::size_t{0});
    auto cls = classify_group(g.S, g.T);
    g.tau = cls.tau;
    g.kind = cls.kind;
    out.push_back(std::move(g));
  }
  return out;
}

json groupmix(std::span<const NodeGroup> groups, const Network& network, bool include_pattern) {
  auto r = group_mixing_report(groups, network);
  json s{{"groups", groups.size()}, {"r", opt(r.r)}, {"r_c", opt(r.r_c)}, {"r_d", opt(r.r_d)}};
  if (network.directed()) {
    s["r_in_in"] = opt(r.r_in_in);
    s["r_in_out"] = opt(r.r_in_out);
    s["r_out_in"] = opt(r.r_out_in);
    s["r_out_out"] = opt(r.r_out_out);
  }
  json rows = json::array();
  for (const auto& g : r.rows) rows.push_back({g.order, g.k_S, g.k_T, g.c_S, g.c_T, g.d_S, g.d_T, g.tau});
  auto node_rows = node_tau_rows(groups, network, include_pattern);
  auto prof = group_profiles(node_rows);
  auto tau_table = [](std::span<const TauProfileRow> p, const std::string& key) {
    json t = json::array();
    for (const auto& row : p) t.push_back({row.key, row.mean_tau, row.count});
    return table({key, "mean_tau", "count"}, std::move(t));
  };
  json nodes = json::array();
  for (const auto& n : node_rows) nodes.push_back({network.node(n.node).name, n.degree, n.c, n.d, n.mean_tau, n.groups});
  json profiles{{"groups", table({"order", "k_S", "k_T", "c_S", "c_T", "d_S", "d_T", "tau"}, rows)},
                {"nodes", table({"node", "k", "c", "d", "mean_tau", "groups"}, nodes)},
                {"tau_by_degree", tau_table(prof.by_degree, "k")},
                {"tau_by_c", tau_table(prof.by_c, "c")},
                {"tau_by_d", tau_table(prof.by_d, "d")}};
  return json{{"summary", s}, {"profiles", profiles}};
}

json predict(const Network& network, std::span<const NodeGroup> groups, const LabeledNodes& labels,
             const PredictionConfig& config) {
  json results;
  std::vector<Strategy> strategies{config.strategy};
  for (auto b : {Strategy::majority, Strategy::random}) {
    if (b != config.strategy) strategies.push_back(b);
  }
  PredictionResult main;
  for (auto s : strategies) {
    auto cfg = config;
    cfg.strategy = s;
    auto r = evaluate(network, groups, labels, cfg);
    results[std::string(to_string(s))] = json{{"accuracy", r.accuracy},
                                              {"accuracy_sd", r.accuracy_sd},
                                              {"accuracy_se", r.accuracy_sd / std::sqrt(static_cast<double>(r.runs))},
                                              {"fallbacks", r.fallbacks}};
    if (s == config.strategy) main = std::move(r);
  }
  json summary{{"strategy", std::string(to_string(config.strategy))},
               {"evaluated", main.evaluated},
               {"labels", main.labels},
               {"runs", main.runs},
               {"depth", config.depth ? json(*config.depth) : json(nullptr)},
               {"include_pattern", config.include_pattern},
               {"results", results}};
  json rows = json::array();
  const auto effective = config.depth ? truncate_labels(labels, *config.depth) : labels;
  for (std::size_t k = 0; k < main.nodes.size(); ++k) {
    const auto v = main.nodes[k];
    rows.push_back({network.node(v).name, effective.labels[v], main.modal[k]});
  }
  return json{{"summary", summary}, {"profiles", {{"predictions", table({"node", "label", "predicted"}, rows)}}}};
}

json extract(const BuildResult& build) {
  json s{{"classes", build.classes_parsed},
         {"n", build.network.node_count()},
         {"m", build.total_links},
         {"explicit_links", build.explicit_links},
         {"warnings", build.warnings},
         {"errors", build.errors}};
  return json{{"summary", s}};
}

}  // namespace swnet::report
