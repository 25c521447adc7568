// swnet command-line front end. Talks to the library only through swnet.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <string>

#include "swnet/swnet.h"

using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 20090801;

enum Exit { kOk = 0, kUsage = 1, kData = 2 };

struct Failure {
  int code;
  std::string message;
};

void check(swnet_status s) {
  if (s == SWNET_OK) return;
  throw Failure{s == SWNET_INVALID_ARGUMENT ? kUsage : kData, swnet_last_error()};
}

struct NetworkDeleter {
  void operator()(swnet_network* p) const { swnet_network_free(p); }
};
struct GroupsDeleter {
  void operator()(swnet_groups* p) const { swnet_groups_free(p); }
};
using NetworkPtr = std::unique_ptr<swnet_network, NetworkDeleter>;
using GroupsPtr = std::unique_ptr<swnet_groups, GroupsDeleter>;

json take(char* text) {
  std::unique_ptr<char, void (*)(char*)> guard(text, swnet_string_free);
  return json::parse(text);
}

std::string now_utc() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Options shared by the subcommands.
struct Common {
  std::string network;
  bool directed = false;
  bool largest_component = false;
  std::string nodes;
  std::string out;
  std::string profiles;
  std::string seed_text = std::to_string(kDefaultSeed);
  unsigned threads = 1;
  std::string started;

  std::uint64_t seed() const {
    if (seed_text == "random") return std::random_device{}() * 0x100000001ull ^ std::random_device{}();
    try {
      std::size_t used = 0;
      auto v = std::stoull(seed_text, &used);
      if (used == seed_text.size()) return v;
    } catch (const std::exception&) {
    }
    throw Failure{kUsage, "--seed expects a non-negative integer or 'random'"};
  }
};

void add_network_options(CLI::App* cmd, Common& c, bool positional = true) {
  if (positional) cmd->add_option("network", c.network, "Edge list (source<TAB>target)")->required()->check(CLI::ExistingFile);
  cmd->add_flag("--directed", c.directed, "Read links as ordered pairs");
  cmd->add_flag("--largest-component", c.largest_component, "Keep only the largest (weak) component");
  cmd->add_option("--nodes", c.nodes, "Node attribute table")->check(CLI::ExistingFile);
}

void add_output_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out, "Write the JSON report here instead of standard output");
  cmd->add_option("--profiles", c.profiles, "Directory for CSV profile tables");
}

NetworkPtr load(const Common& c) {
  swnet_load_options o{c.directed ? 1 : 0, c.largest_component ? 1 : 0, c.nodes.empty() ? nullptr : c.nodes.c_str()};
  swnet_network* raw = nullptr;
  check(swnet_network_load(c.network.c_str(), &o, &raw));
  return NetworkPtr(raw);
}

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  return v.dump();
}

void write_profiles(const std::string& dir, const std::string& prefix, const json& profiles) {
  if (dir.empty() || !profiles.is_object()) return;
  std::filesystem::create_directories(dir);
  for (const auto& [name, t] : profiles.items()) {
    auto path = std::filesystem::path(dir) / (prefix + "_" + name + ".csv");
    std::ofstream f(path);
    if (!f) throw Failure{kData, "cannot write " + path.string()};
    const auto& cols = t["columns"];
    for (std::size_t i = 0; i < cols.size(); ++i) f << (i ? "," : "") << csv_cell(cols[i]);
    f << "\n";
    for (const auto& row : t["rows"]) {
      for (std::size_t i = 0; i < row.size(); ++i) f << (i ? "," : "") << csv_cell(row[i]);
      f << "\n";
    }
  }
}

// Strips profile tables into CSV files and wraps the rest with its manifest.
void finish(const std::string& command, Common& c, json inputs, json config, std::optional<std::uint64_t> seed,
            json doc) {
  if (doc.contains("profiles")) {
    write_profiles(c.profiles, command, doc["profiles"]);
    doc.erase("profiles");
  }
  json manifest{{"command", command},
                {"inputs", std::move(inputs)},
                {"config", std::move(config)},
                {"seed", seed ? json(*seed) : json(nullptr)},
                {"version", swnet_version()},
                {"started", c.started},
                {"finished", now_utc()}};
  doc["manifest"] = manifest;
  const auto text = doc.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out);
    if (!f || !(f << text)) throw Failure{kData, "cannot write " + c.out};
  }
}

json network_inputs(const Common& c) {
  return json{{"network", c.network},
              {"directed", c.directed},
              {"largest_component", c.largest_component},
              {"nodes", c.nodes.empty() ? json(nullptr) : json(c.nodes)}};
}

struct GroupFlags {
  swnet_group_options o{};
  GroupFlags() { swnet_group_options_default(&o); }
  void add(CLI::App* cmd) {
    cmd->add_option("--restarts", o.restarts, "Tabu-search restarts per extraction")->check(CLI::PositiveNumber);
    cmd->add_option("--tenure", o.tabu_tenure, "Tabu tenure in moves")->check(CLI::PositiveNumber);
    cmd->add_option("--max-non-improving", o.max_non_improving, "Steps without improvement before a run stops (0: 2n)");
    cmd->add_option("--samples", o.samples, "Random graphs per significance test")->check(CLI::PositiveNumber);
    cmd->add_option("--level", o.level, "Significance level")->check(CLI::Range(0.0, 0.5));
  }
  json config() const {
    return json{{"restarts", o.restarts}, {"tabu_tenure", o.tabu_tenure}, {"max_non_improving", o.max_non_improving},
                {"samples", o.samples},   {"level", o.level}};
  }
};

struct PredictFlags {
  std::string labels, key = "package", strategy = "groups";
  std::size_t depth = 0, runs = 100;
  bool include_pattern = false;
  void add(CLI::App* cmd, bool labels_required) {
    auto* opt = cmd->add_option("--labels", labels, "Node table holding the labels")->check(CLI::ExistingFile);
    if (labels_required) opt->required();
    cmd->add_option("--label-key", key, "Label column, e.g. package, kind, author, version");
    cmd->add_option("--depth", depth, "Keep this many package segments after the common prefix (0: all)");
    cmd->add_option("--strategy", strategy, "groups, neighbors, network, majority or random")
        ->check(CLI::IsMember({"groups", "neighbors", "network", "majority", "random"}));
    cmd->add_option("--runs", runs, "Evaluation runs")->check(CLI::PositiveNumber);
    cmd->add_flag("--include-pattern", include_pattern, "Group membership includes pattern nodes");
  }
  swnet_predict_options options(std::uint64_t seed, unsigned threads) const {
    swnet_predict_options o;
    swnet_predict_options_default(&o);
    o.labels_path = labels.empty() ? nullptr : labels.c_str();
    o.label_key = key.c_str();
    o.depth = depth;
    o.strategy = strategy.c_str();
    o.runs = runs;
    o.seed = seed;
    o.include_pattern = include_pattern ? 1 : 0;
    o.threads = threads;
    return o;
  }
  json config() const {
    return json{{"labels", labels}, {"label_key", key}, {"depth", depth},
                {"strategy", strategy}, {"runs", runs}, {"include_pattern", include_pattern}};
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"swnet: degree mixing, clustering, node groups and label prediction on networks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(swnet_version()));
  Common c;
  c.started = now_utc();
  app.add_option("--threads", c.threads, "Worker threads")->envname("SWNET_THREADS")->check(CLI::PositiveNumber);

  // extract
  auto* extract = app.add_subcommand("extract", "Build a class dependency network from Java sources");
  std::string src, edges_out, nodes_out;
  bool no_implicit = false, no_implicit_inheritance = false, keep_components = false;
  extract->add_option("--src", src, "Source directory")->required()->check(CLI::ExistingDirectory);
  extract->add_option("--out", edges_out, "Edge list to write")->required();
  extract->add_option("--nodes", nodes_out, "Node attribute table to write");
  extract->add_flag("--no-implicit", no_implicit, "Do not copy dependencies from ancestors");
  extract->add_flag("--no-implicit-inheritance", no_implicit_inheritance,
                    "Copy only non-inheritance links from ancestors");
  extract->add_flag("--keep-components", keep_components, "Keep all components");
  extract->add_option("--summary", c.out, "Write the JSON summary here instead of standard output");

  auto* stats = app.add_subcommand("stats", "Size and degree summary");
  add_network_options(stats, c);
  add_output_options(stats, c);

  auto* mixing = app.add_subcommand("mixing", "Degree mixing, power-law fits and connectivity profiles");
  add_network_options(mixing, c);
  add_output_options(mixing, c);
  std::size_t resamples = 100;
  mixing->add_option("--resamples", resamples, "Bootstrap resamples of the power-law test");
  mixing->add_option("--seed", c.seed_text, "Master seed or 'random'");

  auto* clustering = app.add_subcommand("clustering", "Clustering, degree-corrected clustering and their mixing");
  add_network_options(clustering, c);
  add_output_options(clustering, c);

  GroupFlags gflags;
  auto* groups = app.add_subcommand("groups", "Extract statistically significant node groups");
  add_network_options(groups, c);
  add_output_options(groups, c);
  groups->add_option("--seed", c.seed_text, "Master seed or 'random'");
  gflags.add(groups);

  std::string groups_path;
  bool include_pattern = false;
  auto* groupmix = app.add_subcommand("groupmix", "Group degree and clustering mixing");
  add_network_options(groupmix, c);
  groupmix->add_option("groups", groups_path, "Group document")->required()->check(CLI::ExistingFile);
  add_output_options(groupmix, c);
  groupmix->add_flag("--include-pattern", include_pattern, "Group membership includes pattern nodes");

  PredictFlags pflags;
  auto* predict = app.add_subcommand("predict", "Label prediction from neighbours, groups or the whole network");
  add_network_options(predict, c);
  predict->add_option("groups", groups_path, "Group document")->required()->check(CLI::ExistingFile);
  add_output_options(predict, c);
  predict->add_option("--seed", c.seed_text, "Master seed or 'random'");
  pflags.add(predict, false);

  auto* report = app.add_subcommand("report", "All analyses in one document");
  add_network_options(report, c);
  add_output_options(report, c);
  report->add_option("--seed", c.seed_text, "Master seed or 'random'");
  report->add_option("--resamples", resamples, "Bootstrap resamples of the power-law test");
  gflags.add(report);
  PredictFlags rflags;
  rflags.add(report, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    if (e.get_exit_code() != 0) std::cerr << app.help();
    return kUsage;
  }

  try {
    if (*extract) {
      swnet_extract_options o;
      swnet_extract_options_default(&o);
      o.implicit = no_implicit ? 0 : 1;
      o.implicit_inheritance = no_implicit_inheritance ? 0 : 1;
      o.largest_component = keep_components ? 0 : 1;
      o.threads = c.threads;
      swnet_network* raw = nullptr;
      char* summary = nullptr;
      check(swnet_network_extract(src.c_str(), &o, &raw, &summary));
      NetworkPtr net(raw);
      auto doc = take(summary);
      check(swnet_network_save(net.get(), edges_out.c_str(), nodes_out.empty() ? nullptr : nodes_out.c_str()));
      json cfg{{"implicit", !no_implicit}, {"implicit_inheritance", !no_implicit_inheritance},
               {"largest_component", !keep_components}};
      finish("extract", c, json{{"src", src}, {"out", edges_out}, {"nodes", nodes_out}}, cfg, std::nullopt, doc);
      return kOk;
    }

    auto net = load(c);
    char* text = nullptr;
    if (*stats) {
      check(swnet_stats_json(net.get(), &text));
      finish("stats", c, network_inputs(c), json::object(), std::nullopt, take(text));
    } else if (*mixing) {
      const auto seed = c.seed();
      swnet_fit_options fit{resamples, seed};
      check(swnet_mixing_json(net.get(), &fit, &text));
      finish("mixing", c, network_inputs(c), json{{"resamples", resamples}}, seed, take(text));
    } else if (*clustering) {
      check(swnet_clustering_json(net.get(), &text));
      finish("clustering", c, network_inputs(c), json::object(), std::nullopt, take(text));
    } else if (*groups) {
      gflags.o.seed = c.seed();
      gflags.o.threads = c.threads;
      swnet_groups* raw = nullptr;
      check(swnet_groups_extract(net.get(), &gflags.o, &raw));
      GroupsPtr g(raw);
      check(swnet_groups_json(g.get(), &text));
      finish("groups", c, network_inputs(c), gflags.config(), gflags.o.seed, take(text));
    } else if (*groupmix || *predict) {
      swnet_groups* raw = nullptr;
      check(swnet_groups_load(groups_path.c_str(), net.get(), &raw));
      GroupsPtr g(raw);
      auto inputs = network_inputs(c);
      inputs["groups"] = groups_path;
      if (*groupmix) {
        check(swnet_groupmix_json(net.get(), g.get(), include_pattern ? 1 : 0, &text));
        finish("groupmix", c, inputs, json{{"include_pattern", include_pattern}}, std::nullopt, take(text));
      } else {
        const auto seed = c.seed();
        auto o = pflags.options(seed, c.threads);
        check(swnet_predict_json(net.get(), g.get(), &o, &text));
        finish("predict", c, inputs, pflags.config(), seed, take(text));
      }
    } else if (*report) {
      const auto seed = c.seed();
      json doc;
      json profiles = json::object();
      auto section = [&](const std::string& name, json part) {
        if (part.contains("profiles")) {
          for (auto& [k, v] : part["profiles"].items()) profiles[name + "_" + k] = v;
          part.erase("profiles");
        }
        doc[name] = part.contains("summary") && part.size() == 1 ? part["summary"] : part;
      };
      check(swnet_stats_json(net.get(), &text));
      section("stats", take(text));
      swnet_fit_options fit{resamples, seed};
      check(swnet_mixing_json(net.get(), &fit, &text));
      section("mixing", take(text));
      check(swnet_clustering_json(net.get(), &text));
      section("clustering", take(text));
      gflags.o.seed = seed;
      gflags.o.threads = c.threads;
      swnet_groups* raw = nullptr;
      check(swnet_groups_extract(net.get(), &gflags.o, &raw));
      GroupsPtr g(raw);
      check(swnet_groups_json(g.get(), &text));
      section("groups", take(text));
      std::size_t count = 0;
      check(swnet_groups_count(g.get(), &count));
      check(swnet_groupmix_json(net.get(), g.get(), rflags.include_pattern ? 1 : 0, &text));
      section("groupmix", take(text));
      const bool have_labels = !rflags.labels.empty() || !c.nodes.empty();
      if (have_labels && count > 0) {
        auto o = rflags.options(seed, c.threads);
        check(swnet_predict_json(net.get(), g.get(), &o, &text));
        section("predict", take(text));
      }
      doc["profiles"] = profiles;
      auto cfg = gflags.config();
      cfg["resamples"] = resamples;
      if (have_labels) cfg["predict"] = rflags.config();
      finish("report", c, network_inputs(c), cfg, seed, doc);
    }
    return kOk;
  } catch (const Failure& f) {
    std::cerr << "swnet: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "swnet: " << e.what() << "\n";
    return kData;
  }
}
