#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "swnet/network.hpp"

namespace swnet {

// Edge-list format: one link per line, `source<TAB>target`. Lines starting
// with '#' and empty lines are skipped; a trailing '\r' is tolerated. Node
// names are the two fields verbatim; nodes are numbered in order of first
// appearance. Any other line shape is a ParseError carrying the line number.
RawGraph read_edge_list(std::istream& in, bool directed);
RawGraph read_edge_list_file(const std::string& path, bool directed);

void write_edge_list(std::ostream& out, const Network& network);

// Node-attribute table: tab-separated, header `id<TAB>name<TAB>key1<TAB>...`,
// then one row per node. `id` is the dense index the writer used; readers
// match rows to nodes by `name`. Empty cells mean "attribute absent".
struct AttributeTable {
  std::vector<std::string> keys;
  struct Row {
    std::string id;
    std::string name;
    std::vector<std::string> values;  // parallel to keys
  };
  std::vector<Row> rows;
};

AttributeTable read_attribute_table(std::istream& in);
AttributeTable read_attribute_table_file(const std::string& path);

// Keys are the union of attribute keys over all nodes, sorted.
void write_attribute_table(std::ostream& out, const Network& network);

// Copies table attributes onto matching nodes. Returns one warning per row
// whose name is not a node.
std::vector<std::string> apply_attributes(RawGraph& raw, const AttributeTable& table);

struct LoadOptions {
  bool directed = false;
  bool largest_component = false;
  std::string attributes_path;  // optional node table
};

struct LoadedNetwork {
  Network network;
  std::vector<std::string> warnings;
};

// Reads an edge list (plus optional node table) and reduces it to a simple
// graph, optionally to its largest component.
LoadedNetwork load_network(const std::string& path, const LoadOptions& options);

}  // namespace swnet
