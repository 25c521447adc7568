#include <cstring>
#include <fstream>
#include <new>
#include <sstream>

#include "report.hpp"
#include "swnet/error.hpp"
#include "swnet/io.hpp"
#include "swnet/swnet.h"

#ifndef SWNET_VERSION
#define SWNET_VERSION "0.0.0"
#endif

struct swnet_network {
  swnet::Network network;
  std::vector<std::string> warnings;
};

struct swnet_groups {
  std::vector<swnet::NodeGroup> groups;
  nlohmann::json document;
};

namespace {

thread_local std::string last_error;

swnet_status fail(swnet_status status, const std::string& message) {
  last_error = message;
  return status;
}

swnet_status status_of(swnet::ErrorCode code) {
  switch (code) {
    case swnet::ErrorCode::invalid_argument: return SWNET_INVALID_ARGUMENT;
    case swnet::ErrorCode::io: return SWNET_IO;
    case swnet::ErrorCode::parse: return SWNET_PARSE;
    case swnet::ErrorCode::domain: return SWNET_DOMAIN;
    case swnet::ErrorCode::corpus: return SWNET_CORPUS;
    case swnet::ErrorCode::evaluation: return SWNET_EVALUATION;
  }
  return SWNET_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
swnet_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return SWNET_OK;
  } catch (const swnet::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(SWNET_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SWNET_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SWNET_INTERNAL, e.what());
  } catch (...) {
    return fail(SWNET_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw swnet::Error(swnet::ErrorCode::invalid_argument, what);
}

void emit(const nlohmann::json& doc, char** out) { *out = copy_string(doc.dump()); }

}  // namespace

extern "C" {

const char* swnet_version(void) { return SWNET_VERSION; }
const char* swnet_last_error(void) { return last_error.c_str(); }
void swnet_string_free(char* s) { std::free(s); }

swnet_status swnet_network_load(const char* edges_path, const swnet_load_options* options, swnet_network** out) {
  return guarded([&] {
    require(edges_path && out, "edges_path and out are required");
    swnet::LoadOptions opts;
    if (options) {
      opts.directed = options->directed != 0;
      opts.largest_component = options->largest_component != 0;
      if (options->attributes_path) opts.attributes_path = options->attributes_path;
    }
    auto loaded = swnet::load_network(edges_path, opts);
    *out = new swnet_network{std::move(loaded.network), std::move(loaded.warnings)};
  });
}

void swnet_extract_options_default(swnet_extract_options* options) {
  if (!options) return;
  options->implicit = 1;
  options->implicit_inheritance = 1;
  options->largest_component = 1;
  options->threads = 1;
}

swnet_status swnet_network_extract(const char* src_dir, const swnet_extract_options* options, swnet_network** out,
                                   char** summary_json) {
  return guarded([&] {
    require(src_dir && out, "src_dir and out are required");
    swnet_extract_options o;
    swnet_extract_options_default(&o);
    if (options) o = *options;
    auto corpus = swnet::parse_directory(src_dir, std::max(1u, o.threads));
    swnet::BuildOptions build;
    build.implicit = o.implicit != 0;
    build.propagation.include_inheritance = o.implicit_inheritance != 0;
    build.largest_component = o.largest_component != 0;
    auto result = swnet::build_network(corpus, build);
    if (summary_json) emit(swnet::report::extract(result), summary_json);
    *out = new swnet_network{std::move(result.network), std::move(result.warnings)};
  });
}

swnet_status swnet_network_save(const swnet_network* network, const char* edges_path, const char* nodes_path) {
  return guarded([&] {
    require(network && edges_path, "network and edges_path are required");
    std::ofstream edges(edges_path, std::ios::binary);
    if (!edges) throw swnet::Error(swnet::ErrorCode::io, std::string("cannot write ") + edges_path);
    swnet::write_edge_list(edges, network->network);
    if (!edges.flush()) throw swnet::Error(swnet::ErrorCode::io, std::string("cannot write ") + edges_path);
    if (nodes_path) {
      std::ofstream nodes(nodes_path, std::ios::binary);
      if (!nodes) throw swnet::Error(swnet::ErrorCode::io, std::string("cannot write ") + nodes_path);
      swnet::write_attribute_table(nodes, network->network);
      if (!nodes.flush()) throw swnet::Error(swnet::ErrorCode::io, std::string("cannot write ") + nodes_path);
    }
  });
}

swnet_status swnet_network_size(const swnet_network* network, size_t* nodes, size_t* links) {
  return guarded([&] {
    require(network, "network is required");
    if (nodes) *nodes = network->network.node_count();
    if (links) *links = network->network.link_count();
  });
}

void swnet_network_free(swnet_network* network) { delete network; }

swnet_status swnet_stats_json(const swnet_network* network, char** json) {
  return guarded([&] {
    require(network && json, "network and json are required");
    emit(swnet::report::stats(network->network, network->warnings), json);
  });
}

swnet_status swnet_mixing_json(const swnet_network* network, const swnet_fit_options* fit, char** json) {
  return guarded([&] {
    require(network && json, "network and json are required");
    swnet::PowerLawOptions opts;
    if (fit) {
      opts.resamples = fit->resamples;
      opts.seed = fit->seed;
    }
    emit(swnet::report::mixing(network->network, opts), json);
  });
}

swnet_status swnet_clustering_json(const swnet_network* network, char** json) {
  return guarded([&] {
    require(network && json, "network and json are required");
    emit(swnet::report::clustering(network->network), json);
  });
}

void swnet_group_options_default(swnet_group_options* options) {
  if (!options) return;
  swnet::ExtractionConfig c;
  options->restarts = c.restarts;
  options->tabu_tenure = c.tabu_tenure;
  options->max_non_improving = c.max_non_improving;
  options->samples = c.significance_samples;
  options->level = c.significance_level;
  options->seed = c.seed;
  options->threads = c.threads;
}

swnet_status swnet_groups_extract(const swnet_network* network, const swnet_group_options* options,
                                  swnet_groups** out) {
  return guarded([&] {
    require(network && out, "network and out are required");
    swnet_group_options o;
    swnet_group_options_default(&o);
    if (options) o = *options;
    swnet::ExtractionConfig c;
    c.restarts = o.restarts;
    c.tabu_tenure = o.tabu_tenure;
    c.max_non_improving = o.max_non_improving;
    c.significance_samples = o.samples;
    c.significance_level = o.level;
    c.seed = o.seed;
    c.threads = o.threads;
    auto result = swnet::extract_all(network->network, c);
    auto doc = swnet::report::groups(result, network->network, c);
    *out = new swnet_groups{std::move(result.groups), std::move(doc)};
  });
}

swnet_status swnet_groups_json(const swnet_groups* groups, char** json) {
  return guarded([&] {
    require(groups && json, "groups and json are required");
    emit(groups->document, json);
  });
}

swnet_status swnet_groups_parse(const char* json, const swnet_network* network, swnet_groups** out) {
  return guarded([&] {
    require(json && network && out, "json, network and out are required");
    auto doc = nlohmann::json::parse(json);
    auto groups = swnet::report::groups_from_json(doc, network->network);
    *out = new swnet_groups{std::move(groups), std::move(doc)};
  });
}

swnet_status swnet_groups_load(const char* path, const swnet_network* network, swnet_groups** out) {
  return guarded([&] {
    require(path && network && out, "path, network and out are required");
    std::ifstream in(path, std::ios::binary);
    std::ostringstream text;
    if (!in || !(text << in.rdbuf())) throw swnet::Error(swnet::ErrorCode::io, std::string("cannot read ") + path);
    auto doc = nlohmann::json::parse(text.str());
    auto groups = swnet::report::groups_from_json(doc, network->network);
    *out = new swnet_groups{std::move(groups), std::move(doc)};
  });
}

swnet_status swnet_groups_count(const swnet_groups* groups, size_t* count) {
  return guarded([&] {
    require(groups && count, "groups and count are required");
    *count = groups->groups.size();
  });
}

void swnet_groups_free(swnet_groups* groups) { delete groups; }

swnet_status swnet_groupmix_json(const swnet_network* network, const swnet_groups* groups, int include_pattern,
                                 char** json) {
  return guarded([&] {
    require(network && groups && json, "network, groups and json are required");
    emit(swnet::report::groupmix(groups->groups, network->network, include_pattern != 0), json);
  });
}

void swnet_predict_options_default(swnet_predict_options* options) {
  if (!options) return;
  swnet::PredictionConfig c;
  options->labels_path = nullptr;
  options->label_key = "package";
  options->depth = 0;
  options->strategy = "groups";
  options->runs = c.runs;
  options->seed = c.seed;
  options->include_pattern = 0;
  options->threads = 1;
}

swnet_status swnet_predict_json(const swnet_network* network, const swnet_groups* groups,
                                const swnet_predict_options* options, char** json) {
  return guarded([&] {
    require(network && groups && json, "network, groups and json are required");
    swnet_predict_options o;
    swnet_predict_options_default(&o);
    if (options) o = *options;
    require(o.label_key && o.strategy, "label_key and strategy are required");
    swnet::PredictionConfig c;
    auto strategy = swnet::parse_strategy(o.strategy);
    require(strategy.has_value(), "unknown strategy");
    c.strategy = *strategy;
    if (o.depth > 0) c.depth = o.depth;
    c.runs = o.runs;
    c.seed = o.seed;
    c.include_pattern = o.include_pattern != 0;
    c.threads = std::max(1u, o.threads);

    const auto& net = network->network;
    swnet::LabeledNodes labels;
    if (o.labels_path) {
      auto table = swnet::read_attribute_table_file(o.labels_path);
      auto key = std::find(table.keys.begin(), table.keys.end(), std::string(o.label_key));
      if (key == table.keys.end()) {
        throw swnet::Error(swnet::ErrorCode::invalid_argument,
                           std::string("label table has no column '") + o.label_key + "'");
      }
      const auto col = static_cast<std::size_t>(key - table.keys.begin());
      labels.labels.assign(net.node_count(), std::string(swnet::kUnknownLabel));
      for (const auto& row : table.rows) {
        auto v = net.find(row.name);
        if (v && !row.values[col].empty()) labels.labels[*v] = row.values[col];
      }
    } else {
      labels = swnet::labels_from_attribute(net, o.label_key);
    }
    auto doc = swnet::report::predict(net, groups->groups, labels, c);
    doc["summary"]["label_key"] = o.label_key;
    emit(doc, json);
  });
}

}  // extern "C"
