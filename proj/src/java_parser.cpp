// Signature-level parser for a Java subset. Only declarations are
// interpreted; everything inside method bodies and initializers is skipped.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "swnet/error.hpp"
#include "swnet/netbuild.hpp"
#include "swnet/parallel.hpp"

namespace swnet {

namespace {

enum class Tok { ident, punct, literal, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t line = 0;
};

struct DocComment {
  std::size_t next_token = 0;  // index of the token that follows the comment
  std::string author;
  std::string version;
};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n*");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n*");
  return std::string(s.substr(b, e - b + 1));
}

// First @author and @version values of a doc comment body.
void read_doc_tags(std::string_view body, DocComment& doc) {
  std::size_t start = 0;
  while (start <= body.size()) {
    auto end = body.find('\n', start);
    if (end == std::string_view::npos) end = body.size();
    auto line = trim(body.substr(start, end - start));
    for (auto [tag, slot] : {std::pair{std::string_view("@author"), &doc.author},
                             std::pair{std::string_view("@version"), &doc.version}}) {
      if (line.rfind(tag, 0) == 0 && slot->empty() &&
          (line.size() == tag.size() || std::isspace(static_cast<unsigned char>(line[tag.size()])))) {
        *slot = trim(std::string_view(line).substr(tag.size()));
      }
    }
    start = end + 1;
  }
}

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$' || static_cast<unsigned char>(c) >= 0x80;
}
bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

void tokenize(std::string_view src, std::vector<Token>& tokens, std::vector<DocComment>& docs) {
  std::size_t i = 0, line = 1;
  const auto n = src.size();
  auto advance_lines = [&](std::size_t from, std::size_t to) {
    line += static_cast<std::size_t>(std::count(src.begin() + static_cast<long>(from), src.begin() + static_cast<long>(to), '\n'));
  };
  while (i < n) {
    const char c = src[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '/' && i + 1 < n && src[i + 1] == '/') {
      while (i < n && src[i] != '\n') ++i;
    } else if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      auto close = src.find("*/", i + 2);
      const auto end = close == std::string_view::npos ? n : close + 2;
      if (i + 2 < n && src[i + 2] == '*' && end - i > 4) {
        DocComment doc;
        doc.next_token = tokens.size();
        read_doc_tags(src.substr(i + 3, end - i - 5), doc);
        docs.push_back(std::move(doc));
      }
      advance_lines(i, end);
      i = end;
    } else if (c == '"' && src.substr(i, 3) == "\"\"\"") {
      auto close = src.find("\"\"\"", i + 3);
      const auto end = close == std::string_view::npos ? n : close + 3;
      tokens.push_back({Tok::literal, "\"\"\"", line});
      advance_lines(i, end);
      i = end;
    } else if (c == '"' || c == '\'') {
      const auto start_line = line;
      std::size_t j = i + 1;
      while (j < n && src[j] != c && src[j] != '\n') j += src[j] == '\\' ? 2 : 1;
      tokens.push_back({Tok::literal, std::string(1, c), start_line});
      i = std::min(n, j + 1);
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < n && ident_char(src[j])) ++j;
      tokens.push_back({Tok::ident, std::string(src.substr(i, j - i)), line});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < n && (ident_char(src[j]) || src[j] == '.')) ++j;
      tokens.push_back({Tok::literal, std::string(src.substr(i, j - i)), line});
      i = j;
    } else {
      tokens.push_back({Tok::punct, std::string(1, c), line});
      ++i;
    }
  }
  tokens.push_back({Tok::end, "", line});
}

const std::unordered_set<std::string>& primitive_names() {
  static const std::unordered_set<std::string> names{"boolean", "byte", "char", "short", "int",
                                                     "long",    "float", "double", "void", "var"};
  return names;
}

const std::unordered_set<std::string>& modifier_names() {
  static const std::unordered_set<std::string> names{
      "public", "protected", "private",  "static",   "abstract", "final",  "native",
      "synchronized", "transient", "volatile", "strictfp", "default", "sealed"};
  return names;
}

class Parser {
 public:
  Parser(const SourceFile& file, std::vector<ClassModel>& out, std::vector<std::string>& warnings)
      : file_(file), out_(out), warnings_(warnings) {
    tokenize(file.text, toks_, docs_);
  }

  void parse_file() {
    skip_modifiers();
    if (is("package")) {
      ++pos_;
      package_ = qualified_name();
      expect(";");
    }
    while (true) {
      if (accept(";")) continue;
      if (!is("import")) break;
      ++pos_;
      bool is_static = accept("static");
      auto name = qualified_name();
      bool demand = false;
      if (is(".") && peek(1).text == "*") {
        pos_ += 2;
        demand = true;
      }
      expect(";");
      if (is_static || name.empty()) continue;
      (demand ? demand_imports_ : single_imports_).push_back(name);
    }
    while (!at_end()) {
      if (accept(";")) continue;
      const auto start = pos_;
      skip_modifiers();
      if (type_keyword()) {
        parse_type_declaration(start, {}, {}, {});
      } else {
        warn("unexpected '" + cur().text + "' at top level, skipped");
        recover();
      }
    }
  }

 private:
  // ---- token helpers
  const Token& cur() const { return toks_[pos_]; }
  const Token& peek(std::size_t k) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at_end() const { return cur().kind == Tok::end; }
  bool is(std::string_view text) const { return cur().kind != Tok::literal && cur().text == text; }
  bool accept(std::string_view text) {
    if (!is(text)) return false;
    ++pos_;
    return true;
  }
  void expect(std::string_view text) {
    if (!accept(text)) warn("expected '" + std::string(text) + "' before '" + cur().text + "'");
  }
  bool is_ident() const { return cur().kind == Tok::ident; }

  void warn(const std::string& what) {
    warnings_.push_back(file_.path + ":" + std::to_string(cur().line) + ": " + what);
  }

  // Skips a bracketed region starting at the current opening token.
  void skip_balanced() {
    const std::string open = cur().text;
    const std::string close = open == "(" ? ")" : open == "[" ? "]" : open == "<" ? ">" : "}";
    int depth = 0;
    while (!at_end()) {
      if (cur().kind == Tok::punct) {
        if (cur().text == open) ++depth;
        if (cur().text == close && --depth == 0) {
          ++pos_;
          return;
        }
      }
      ++pos_;
    }
  }

  // Skips to just past the next ';' at bracket depth 0, or stops before an
  // unmatched '}'.
  void skip_statement() {
    int depth = 0;
    while (!at_end()) {
      const auto& t = cur();
      if (t.kind == Tok::punct) {
        if (t.text == "(" || t.text == "[" || t.text == "{") ++depth;
        if (t.text == ")" || t.text == "]" || t.text == "}") {
          if (depth == 0) return;
          --depth;
        }
        if (t.text == ";" && depth == 0) {
          ++pos_;
          return;
        }
      }
      ++pos_;
    }
  }

  void recover() {
    if (is("{")) {
      skip_balanced();
    } else if (is("}")) {
      ++pos_;
    } else {
      ++pos_;
      skip_statement();
    }
  }

  std::string qualified_name() {
    std::string name;
    if (!is_ident()) return name;
    name = cur().text;
    ++pos_;
    while (is(".") && peek(1).kind == Tok::ident) {
      name += "." + peek(1).text;
      pos_ += 2;
    }
    return name;
  }

  void skip_annotation() {
    ++pos_;  // '@'
    qualified_name();
    if (is("(")) skip_balanced();
  }

  bool at_annotation() const { return is("@") && peek(1).text != "interface"; }

  void skip_modifiers() {
    while (true) {
      if (at_annotation()) {
        skip_annotation();
      } else if (is_ident() && modifier_names().count(cur().text) && peek(1).text != "(") {
        ++pos_;
      } else if (is("non") && peek(1).text == "-" && peek(2).text == "sealed") {
        pos_ += 3;
      } else {
        return;
      }
    }
  }

  bool type_keyword() const {
    if (is("class") || is("interface") || is("enum")) return peek(1).kind == Tok::ident;
    if (is("@") && peek(1).text == "interface") return true;
    if (is("record")) return peek(1).kind == Tok::ident && (peek(2).text == "(" || peek(2).text == "<");
    return false;
  }

  // ---- types
  using Scope = std::set<std::string>;

  // Parses a type, recording every named type into `sink` (null: discard).
  // Returns the leading name chain, empty when no type was found.
  std::string parse_type(std::vector<TypeRef>* sink, const Scope& scope) {
    while (at_annotation()) skip_annotation();
    if (accept("?")) {
      if (accept("extends") || accept("super")) parse_type(sink, scope);
      return "?";
    }
    if (!is_ident()) return {};
    const auto line = cur().line;
    std::string name = cur().text;
    ++pos_;
    while (true) {
      if (is("<")) parse_type_arguments(sink, scope);
      if (is(".") && peek(1).kind == Tok::ident) {
        name += "." + peek(1).text;
        pos_ += 2;
        continue;
      }
      if (is(".") && peek(1).text == "@") {  // a.@Ann B
        ++pos_;
        while (at_annotation()) skip_annotation();
        if (is_ident()) {
          name += "." + cur().text;
          ++pos_;
        }
        continue;
      }
      break;
    }
    while (true) {
      while (at_annotation()) skip_annotation();
      if (is("[") && peek(1).text == "]") {
        pos_ += 2;
      } else if (is(".") && peek(1).text == "." && peek(2).text == ".") {
        pos_ += 3;
      } else {
        break;
      }
    }
    const bool primitive = primitive_names().count(name) > 0;
    const bool type_param = scope.count(name) > 0;
    if (sink && !primitive && !type_param) sink->push_back({name, line});
    return name;
  }

  void parse_type_arguments(std::vector<TypeRef>* sink, const Scope& scope) {
    ++pos_;  // '<'
    while (!at_end() && !is(">")) {
      if (parse_type(sink, scope).empty()) {
        if (!accept(",") && !is(">")) ++pos_;
        continue;
      }
      if (!accept("&")) accept(",");
    }
    accept(">");
  }

  // `<T extends A & B, U>`: adds the names to scope; bounds are not recorded.
  void parse_type_parameters(Scope& scope) {
    ++pos_;  // '<'
    while (!at_end() && !is(">")) {
      while (at_annotation()) skip_annotation();
      if (is_ident()) {
        scope.insert(cur().text);
        ++pos_;
      }
      if (accept("extends")) {
        Scope bound_scope = scope;
        parse_type(nullptr, bound_scope);
        while (accept("&")) parse_type(nullptr, bound_scope);
      }
      if (!accept(",") && !is(">")) ++pos_;
    }
    accept(">");
  }

  void parse_type_list(std::vector<TypeRef>* sink, const Scope& scope) {
    do {
      if (parse_type(sink, scope).empty()) return;
    } while (accept(","));
  }

  // ---- declarations
  const DocComment* doc_before(std::size_t token) const {
    for (const auto& d : docs_) {
      if (d.next_token == token) return &d;
    }
    return nullptr;
  }

  void parse_type_declaration(std::size_t start, const std::vector<std::string>& enclosing, Scope scope,
                              const ClassModel* outer) {
    ClassModel m;
    m.file = file_.path;
    m.line = cur().line;
    if (accept("@")) {
      ++pos_;
      m.declaration = "annotation";
    } else {
      m.declaration = cur().text;
      ++pos_;
    }
    m.kind = (m.declaration == "interface" || m.declaration == "annotation") ? ClassKind::interface : ClassKind::class_;
    m.simple_name = cur().text;
    ++pos_;
    m.package = package_;
    if (enclosing.empty()) {
      m.qualified_name = package_.empty() ? m.simple_name : package_ + "." + m.simple_name;
    } else {
      m.qualified_name = enclosing.front() + "$" + m.simple_name;
    }
    m.enclosing = enclosing;
    m.single_imports = single_imports_;
    m.demand_imports = demand_imports_;
    if (const auto* doc = doc_before(start)) {
      m.author = doc->author;
      m.version = doc->version;
    }
    if (outer) {
      if (m.author.empty()) m.author = outer->author;
      if (m.version.empty()) m.version = outer->version;
    }
    // Static nested types cannot see the outer type parameters, but inner
    // classes can; keeping them in scope only matters for name clashes.
    if (is("<")) parse_type_parameters(scope);
    if (m.declaration == "record" && is("(")) {
      ++pos_;
      while (!at_end() && !is(")")) {
        skip_modifiers();
        if (parse_type(&m.field_types, scope).empty()) {
          ++pos_;
          continue;
        }
        if (is_ident()) ++pos_;
        accept(",");
      }
      accept(")");
    }
    while (!at_end() && !is("{")) {
      if (accept("extends") || accept("implements")) {
        parse_type_list(&m.supertypes, scope);
      } else if (accept("permits")) {
        parse_type_list(nullptr, scope);
      } else {
        warn("unexpected '" + cur().text + "' in declaration of " + m.simple_name);
        ++pos_;
      }
    }
    if (!accept("{")) return;

    std::vector<std::string> inner_enclosing{m.qualified_name};
    inner_enclosing.insert(inner_enclosing.end(), enclosing.begin(), enclosing.end());
    const auto index = out_.size();
    out_.push_back(std::move(m));
    if (out_[index].declaration == "enum") parse_enum_constants();
    parse_members(index, inner_enclosing, scope);
  }

  void parse_enum_constants() {
    while (!at_end() && !is(";") && !is("}")) {
      while (at_annotation()) skip_annotation();
      if (is_ident()) ++pos_;
      if (is("(")) skip_balanced();
      if (is("{")) skip_balanced();
      if (!accept(",") && !is(";") && !is("}")) {
        warn("unexpected '" + cur().text + "' in enum constants");
        ++pos_;
      }
    }
    accept(";");
  }

  // The model vector may grow while members are parsed, so it is addressed
  // by index.
  void parse_members(std::size_t index, const std::vector<std::string>& enclosing, const Scope& class_scope) {
    while (!at_end() && !is("}")) {
      if (accept(";")) continue;
      if (is("{")) {
        skip_balanced();
        continue;
      }
      if (is("static") && peek(1).text == "{") {
        ++pos_;
        skip_balanced();
        continue;
      }
      const auto start = pos_;
      skip_modifiers();
      if (type_keyword()) {
        auto outer = out_[index];
        parse_type_declaration(start, enclosing, class_scope, &outer);
        continue;
      }
      Scope scope = class_scope;
      if (is("<")) parse_type_parameters(scope);
      parse_member(index, scope);
    }
    accept("}");
  }

  void parse_member(std::size_t index, const Scope& scope) {
    std::vector<TypeRef> type_refs;
    const auto before = pos_;
    auto type = parse_type(&type_refs, scope);
    if (type.empty()) {
      warn("unexpected '" + cur().text + "' in class body, skipped");
      recover();
      return;
    }
    auto& m = out_[index];
    if (is("(") && type == m.simple_name) {  // constructor
      parse_parameters(index, scope);
      finish_method();
      return;
    }
    if (is("{") && type == m.simple_name && m.declaration == "record") {  // compact constructor
      skip_balanced();
      return;
    }
    if (!is_ident()) {
      warn("unexpected '" + cur().text + "' after type '" + type + "', skipped");
      if (pos_ == before) ++pos_;
      recover();
      return;
    }
    ++pos_;  // member name
    if (is("(")) {
      auto& sig = out_[index].signature_types;
      sig.insert(sig.end(), type_refs.begin(), type_refs.end());
      parse_parameters(index, scope);
      finish_method();
      return;
    }
    auto& fields = out_[index].field_types;
    fields.insert(fields.end(), type_refs.begin(), type_refs.end());
    skip_statement();
  }

  void parse_parameters(std::size_t index, const Scope& scope) {
    ++pos_;  // '('
    while (!at_end() && !is(")")) {
      skip_modifiers();
      std::vector<TypeRef> refs;
      if (parse_type(&refs, scope).empty()) {
        ++pos_;
        continue;
      }
      auto& sig = out_[index].signature_types;
      sig.insert(sig.end(), refs.begin(), refs.end());
      if (is_ident() || is("this")) ++pos_;
      while (is("[") && peek(1).text == "]") pos_ += 2;
      if (!accept(",") && !is(")")) ++pos_;
    }
    accept(")");
  }

  void finish_method() {
    while (is("[") && peek(1).text == "]") pos_ += 2;
    if (accept("throws")) parse_type_list(nullptr, {});
    if (is("{")) {
      skip_balanced();
    } else {
      skip_statement();  // ';' or `default value;`
    }
  }

  const SourceFile& file_;
  std::vector<ClassModel>& out_;
  std::vector<std::string>& warnings_;
  std::vector<Token> toks_;
  std::vector<DocComment> docs_;
  std::size_t pos_ = 0;
  std::string package_;
  std::vector<std::string> single_imports_, demand_imports_;
};

}  // namespace

std::string_view to_string(ClassKind kind) { return kind == ClassKind::interface ? "interface" : "class"; }

std::string_view to_string(DependencyKind kind) {
  switch (kind) {
    case DependencyKind::inheritance: return "inheritance";
    case DependencyKind::composition: return "composition";
    case DependencyKind::dependence: return "dependence";
  }
  return "dependence";
}

ParsedCorpus parse_sources(const std::vector<SourceFile>& files, unsigned threads) {
  struct PerFile {
    std::vector<ClassModel> models;
    std::vector<std::string> warnings;
  };
  std::vector<PerFile> parsed(files.size());
  parallel_for(files.size(), threads, [&](std::size_t i) {
    Parser parser(files[i], parsed[i].models, parsed[i].warnings);
    parser.parse_file();
  });
  ParsedCorpus corpus;
  std::unordered_set<std::string> seen;
  for (auto& p : parsed) {
    corpus.warnings.insert(corpus.warnings.end(), p.warnings.begin(), p.warnings.end());
    for (auto& m : p.models) {
      if (!seen.insert(m.qualified_name).second) {
        corpus.warnings.push_back(m.file + ":" + std::to_string(m.line) + ": duplicate class " + m.qualified_name +
                                  " ignored");
        continue;
      }
      corpus.models.push_back(std::move(m));
    }
  }
  if (corpus.models.empty()) throw Error(ErrorCode::corpus, "no classes found in the corpus");
  return corpus;
}

ParsedCorpus parse_directory(const std::string& root, unsigned threads) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw Error(ErrorCode::io, "not a directory: " + root);
  std::vector<std::string> paths;
  for (auto it = fs::recursive_directory_iterator(root, fs::directory_options::skip_permission_denied, ec);
       !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (it->is_regular_file(ec) && it->path().extension() == ".java") paths.push_back(it->path().string());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<SourceFile> files;
  std::vector<std::string> errors;
  for (const auto& p : paths) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream text;
    if (!in || !(text << in.rdbuf())) {
      errors.push_back(p + ": unreadable");
      continue;
    }
    files.push_back({p, text.str()});
  }
  if (files.empty()) throw Error(ErrorCode::corpus, "no readable .java files below " + root);
  auto corpus = parse_sources(files, threads);
  corpus.errors = std::move(errors);
  return corpus;
}

}  // namespace swnet
