#pragma once

#include <string>
#include <vector>

#include "swnet/network.hpp"

namespace swnet {

// Class dependency networks from Java-like source signatures.
//
// Accepted subset: package and import declarations; class, interface, enum,
// record and annotation type declarations (top level and nested) with
// extends/implements clauses; field declarations; constructor and method
// signatures. Method bodies, initializers and field initial values are
// skipped by bracket matching. Visibility is ignored.

enum class ClassKind { class_, interface };
enum class DependencyKind { inheritance, composition, dependence };

std::string_view to_string(ClassKind kind);
std::string_view to_string(DependencyKind kind);

// One type name as written in the source, e.g. "List" or "java.util.Map.Entry".
struct TypeRef {
  std::string name;
  std::size_t line = 0;
};

struct ClassModel {
  std::string qualified_name;  // pkg.Outer$Inner
  std::string package;
  std::string simple_name;
  ClassKind kind = ClassKind::class_;
  std::string declaration;                // class, interface, enum, record, annotation
  std::vector<TypeRef> supertypes;        // extends + implements
  std::vector<TypeRef> field_types;       // multiset
  std::vector<TypeRef> signature_types;   // constructor/method parameters and returns
  std::string author;
  std::string version;
  std::string file;
  std::size_t line = 0;
  // Resolution context.
  std::vector<std::string> enclosing;       // qualified names, innermost first
  std::vector<std::string> single_imports;  // a.b.C
  std::vector<std::string> demand_imports;  // a.b (from a.b.*)
};

struct SourceFile {
  std::string path;
  std::string text;
};

struct ParsedCorpus {
  std::vector<ClassModel> models;
  std::vector<std::string> warnings;  // skipped regions, duplicates
  std::vector<std::string> errors;    // unreadable files
};

// Parses in-memory sources. Regions that do not fit the subset are skipped
// with a warning. Duplicate qualified names keep the first declaration.
ParsedCorpus parse_sources(const std::vector<SourceFile>& files, unsigned threads = 1);

// Recursively collects *.java files below `root` (sorted by path) and parses
// them. Throws Error(corpus) when no class is found.
ParsedCorpus parse_directory(const std::string& root, unsigned threads = 1);

struct TypedLink {
  NodeId source = 0;
  NodeId target = 0;
  DependencyKind kind = DependencyKind::dependence;
  auto operator<=>(const TypedLink&) const = default;
};

// Resolves every type reference against the corpus. Lookup order for a
// simple name: member types of the class and its enclosing classes, single
// type imports, the same package, on-demand imports. Dotted names are tried
// verbatim first, then as member types of a resolved leading name. Returns
// the model index or -1 for external types.
long resolve_type(const std::vector<ClassModel>& models, const ClassModel& from, const std::string& name);

// Distinct typed links between corpus classes, self references dropped.
// Node ids are model indices.
std::vector<TypedLink> typed_links(const std::vector<ClassModel>& models);

// Directed simple network with one node per model (name = qualified name,
// attributes package, kind and, when present, author and version).
Network explicit_edges(const std::vector<ClassModel>& models);

struct PropagationOptions {
  bool include_inheritance = true;  // also copy ancestors' inheritance links
};

// Adds to every class the outgoing links of all its ancestors. The
// inheritance relation is read from the models; cycles are broken at their
// lexicographically largest link and reported through `warnings`.
Network propagate_implicit(const Network& network, const std::vector<ClassModel>& models,
                           const PropagationOptions& options = {}, std::vector<std::string>* warnings = nullptr);

// Inheritance relation among corpus classes after cycle breaking, as
// parent lists per model index.
std::vector<std::vector<NodeId>> inheritance_parents(const std::vector<ClassModel>& models,
                                                     std::vector<std::string>* warnings = nullptr);

struct BuildOptions {
  bool implicit = true;
  PropagationOptions propagation;
  bool largest_component = true;
};

struct BuildResult {
  Network network;
  std::size_t explicit_links = 0;  // links of `network` that are explicit
  std::size_t total_links = 0;
  std::size_t classes_parsed = 0;
  std::vector<std::string> warnings;
  std::vector<std::string> errors;
};

// parse -> explicit -> implicit -> largest weak component. Throws
// Error(corpus) when the corpus has no classes.
BuildResult build_network(const ParsedCorpus& corpus, const BuildOptions& options = {});

}  // namespace swnet
