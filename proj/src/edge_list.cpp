#include "irr/edge_list.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace irr {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

std::size_t parse_count(std::string_view word, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto* end = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(word) + "'");
  }
  return value;
}

struct RawDocument {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> lines;
};

RawDocument parse_raw(std::string_view text) {
  RawDocument doc;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto words = split_words(line);
    if (words.empty() || words.front().front() == '#') continue;
    if (!have_header) {
      if (words.size() != 2 || words[0] != "n") throw ParseError(line_no, "expected header 'n <count>'");
      doc.n = parse_count(words[1], line_no, "a vertex count");
      have_header = true;
      continue;
    }
    if (words.size() != 2) throw ParseError(line_no, "expected '<u> <v>'");
    const std::size_t u = parse_count(words[0], line_no, "a vertex label");
    const std::size_t v = parse_count(words[1], line_no, "a vertex label");
    if (u >= doc.n || v >= doc.n) {
      throw ParseError(line_no, "vertex " + std::to_string(u >= doc.n ? u : v) + " out of range for n=" +
                                    std::to_string(doc.n));
    }
    if (u == v) throw ParseError(line_no, "loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    doc.pairs.emplace_back(u, v);
    doc.lines.push_back(line_no);
  }
  if (!have_header) throw ParseError(0, "missing header 'n <count>'");
  return doc;
}

}  // namespace

Digraph parse_edge_list(std::string_view text) {
  const RawDocument doc = parse_raw(text);
  std::vector<Edge> edges;
  for (const auto& [u, v] : doc.pairs) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  return Digraph::build(doc.n, edges);
}

std::pair<std::size_t, std::vector<UndirectedEdge>> parse_tree_edge_list(std::string_view text) {
  const RawDocument doc = parse_raw(text);
  std::vector<UndirectedEdge> edges;
  for (const auto& [u, v] : doc.pairs) {
    edges.push_back({static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))});
  }
  return {doc.n, edges};
}

std::string serialize_edge_list(const Digraph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.from) + " " + std::to_string(e.to) + "\n";
  return out;
}

namespace {

enum class Tok { Ident, Arrow, UndirectedArrow, LBrace, RBrace, Semi, Comma, Other, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
};

class DotLexer {
 public:
  explicit DotLexer(std::string_view s) : s_(s) {}

  Token next() {
    skip_space();
    if (i_ >= s_.size()) return {Tok::End, "", line_};
    const char c = s_[i_];
    if (c == '{') return single(Tok::LBrace);
    if (c == '}') return single(Tok::RBrace);
    if (c == ';') return single(Tok::Semi);
    if (c == ',') return single(Tok::Comma);
    if (c == '-' && i_ + 1 < s_.size() && (s_[i_ + 1] == '>' || s_[i_ + 1] == '-')) {
      const Tok k = s_[i_ + 1] == '>' ? Tok::Arrow : Tok::UndirectedArrow;
      i_ += 2;
      return {k, k == Tok::Arrow ? "->" : "--", line_};
    }
    if (c == '"') return quoted();
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' ||
        static_cast<unsigned char>(c) >= 0x80) {
      const std::size_t start = i_;
      while (i_ < s_.size()) {
        const char d = s_[i_];
        if (!(std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.' || static_cast<unsigned char>(d) >= 0x80 ||
              (d == '-' && i_ == start))) {
          break;
        }
        ++i_;
      }
      return {Tok::Ident, std::string(s_.substr(start, i_ - start)), line_};
    }
    return single(Tok::Other);
  }

 private:
  Token single(Tok k) {
    Token t{k, std::string(1, s_[i_]), line_};
    ++i_;
    return t;
  }

  Token quoted() {
    const std::size_t line = line_;
    ++i_;
    std::string text;
    while (i_ < s_.size() && s_[i_] != '"') {
      if (s_[i_] == '\\' && i_ + 1 < s_.size()) ++i_;
      if (s_[i_] == '\n') ++line_;
      text.push_back(s_[i_++]);
    }
    if (i_ >= s_.size()) throw ParseError(line, "unterminated quoted identifier");
    ++i_;
    return {Tok::Ident, text, line};
  }

  void skip_space() {
    while (i_ < s_.size()) {
      const char c = s_[i_];
      if (c == '\n') {
        ++line_;
        ++i_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i_;
      } else if (c == '/' && i_ + 1 < s_.size() && s_[i_ + 1] == '/') {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else if (c == '#' && (i_ == 0 || s_[i_ - 1] == '\n')) {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else if (c == '/' && i_ + 1 < s_.size() && s_[i_ + 1] == '*') {
        i_ += 2;
        while (i_ + 1 < s_.size() && !(s_[i_] == '*' && s_[i_ + 1] == '/')) {
          if (s_[i_] == '\n') ++line_;
          ++i_;
        }
        i_ += 2;
      } else {
        break;
      }
    }
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
};

}  // namespace

DotGraph parse_dot(std::string_view text) {
  DotLexer lex(text);
  Token t = lex.next();
  if (t.kind != Tok::Ident || t.text != "digraph") {
    throw ParseError(t.line, "expected 'digraph' (only directed graphs are supported)");
  }
  t = lex.next();
  if (t.kind == Tok::Ident) t = lex.next();
  if (t.kind != Tok::LBrace) throw ParseError(t.line, "expected '{'");

  std::map<std::string, Vertex> labels;
  DotGraph out;
  std::vector<Edge> edges;
  auto label_of = [&](const std::string& name) {
    auto [it, inserted] = labels.try_emplace(name, static_cast<Vertex>(out.names.size()));
    if (inserted) out.names.push_back(name);
    return it->second;
  };

  t = lex.next();
  while (t.kind != Tok::RBrace) {
    if (t.kind == Tok::Semi || t.kind == Tok::Comma) {
      t = lex.next();
      continue;
    }
    if (t.kind == Tok::End) throw ParseError(t.line, "missing '}'");
    if (t.kind != Tok::Ident) throw ParseError(t.line, "unexpected '" + t.text + "'");
    if (t.text == "subgraph" || t.text == "graph" || t.text == "node" || t.text == "edge") {
      throw ParseError(t.line, "'" + t.text + "' statements are not supported");
    }
    Vertex from = label_of(t.text);
    t = lex.next();
    while (t.kind == Tok::Arrow) {
      Token target = lex.next();
      if (target.kind != Tok::Ident) throw ParseError(target.line, "expected a node after '->'");
      const Vertex to = label_of(target.text);
      if (from == to) throw ParseError(target.line, "loop edge on '" + target.text + "'");
      edges.push_back({from, to});
      from = to;
      t = lex.next();
    }
    if (t.kind == Tok::UndirectedArrow) throw ParseError(t.line, "undirected edges '--' are not supported");
    if (t.kind == Tok::Other && t.text == "[") throw ParseError(t.line, "attributes are not supported");
    if (t.kind == Tok::Other && t.text == "=") throw ParseError(t.line, "graph attributes are not supported");
  }
  if (lex.next().kind != Tok::End) throw ParseError(t.line, "trailing content after '}'");
  out.graph = Digraph::build(out.names.size(), edges);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace irr
