#include "swnet/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_map>

#include "swnet/error.hpp"

namespace swnet {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find('\t', start);
    fields.push_back(line.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return fields;
}

void chomp(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path);
  return in;
}

}  // namespace

RawGraph read_edge_list(std::istream& in, bool directed) {
  RawGraph raw;
  raw.directed = directed;
  std::unordered_map<std::string, NodeId> ids;
  auto intern = [&](const std::string& name) {
    auto [it, fresh] = ids.emplace(name, static_cast<NodeId>(raw.nodes.size()));
    if (fresh) raw.nodes.push_back({it->second, name, {}});
    return it->second;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    chomp(line);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_tabs(line);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw ParseError("expected `source<TAB>target`", lineno);
    }
    auto s = intern(fields[0]);
    auto t = intern(fields[1]);
    raw.links.push_back({s, t});
  }
  return raw;
}

RawGraph read_edge_list_file(const std::string& path, bool directed) {
  auto in = open_input(path);
  try {
    return read_edge_list(in, directed);
  } catch (const ParseError& e) {
    throw Error(ErrorCode::parse, path + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const Network& network) {
  for (const auto& l : network.links()) {
    out << network.node(l.source).name << '\t' << network.node(l.target).name << '\n';
  }
}

AttributeTable read_attribute_table(std::istream& in) {
  AttributeTable table;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    chomp(line);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_tabs(line);
    if (!header) {
      if (fields.size() < 2 || fields[0] != "id" || fields[1] != "name") {
        throw ParseError("node table header must start with `id<TAB>name`", lineno);
      }
      table.keys.assign(fields.begin() + 2, fields.end());
      header = true;
      continue;
    }
    if (fields.size() != table.keys.size() + 2) {
      throw ParseError("expected " + std::to_string(table.keys.size() + 2) + " fields", lineno);
    }
    AttributeTable::Row row{fields[0], fields[1], {fields.begin() + 2, fields.end()}};
    table.rows.push_back(std::move(row));
  }
  if (!header) throw ParseError("missing node table header", lineno);
  return table;
}

AttributeTable read_attribute_table_file(const std::string& path) {
  auto in = open_input(path);
  try {
    return read_attribute_table(in);
  } catch (const ParseError& e) {
    throw Error(ErrorCode::parse, path + ": " + e.what());
  }
}

void write_attribute_table(std::ostream& out, const Network& network) {
  std::set<std::string> keys;
  for (const auto& rec : network.nodes()) {
    for (const auto& [k, v] : rec.attributes) keys.insert(k);
  }
  out << "id\tname";
  for (const auto& k : keys) out << '\t' << k;
  out << '\n';
  for (const auto& rec : network.nodes()) {
    out << rec.id << '\t' << rec.name;
    for (const auto& k : keys) {
      auto it = rec.attributes.find(k);
      out << '\t' << (it == rec.attributes.end() ? "" : it->second);
    }
    out << '\n';
  }
}

std::vector<std::string> apply_attributes(RawGraph& raw, const AttributeTable& table) {
  std::unordered_map<std::string, NodeId> ids;
  for (const auto& rec : raw.nodes) ids.emplace(rec.name, rec.id);
  std::vector<std::string> warnings;
  for (const auto& row : table.rows) {
    auto it = ids.find(row.name);
    if (it == ids.end()) {
      warnings.push_back("node table: unknown node `" + row.name + "`");
      continue;
    }
    auto& attrs = raw.nodes[it->second].attributes;
    for (std::size_t k = 0; k < table.keys.size(); ++k) {
      if (!row.values[k].empty()) attrs[table.keys[k]] = row.values[k];
    }
  }
  return warnings;
}

LoadedNetwork load_network(const std::string& path, const LoadOptions& options) {
  LoadedNetwork result;
  auto raw = read_edge_list_file(path, options.directed);
  if (!options.attributes_path.empty()) {
    result.warnings = apply_attributes(raw, read_attribute_table_file(options.attributes_path));
  }
  result.network = reduce_to_simple(std::move(raw));
  if (options.largest_component) result.network = largest_component(result.network);
  return result;
}

}  // namespace swnet
