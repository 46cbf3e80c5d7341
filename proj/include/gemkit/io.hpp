#pragma once

// Text and JSON encodings of colored graphs.
//
//   gem v1
//   colors <n+1>
//   order <2p>
//   meta <key>=<value>        (any number, keys sorted on output)
//   c0: v0 v1 ... v{2p-1}     (partner of each vertex; one line per color)

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

namespace detail {

class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      lines_.push_back(line);
      start = end + 1;
    }
    while (!lines_.empty() && lines_.back().find_first_not_of(" \t") == std::string_view::npos) lines_.pop_back();
  }
  bool done() const { return next_ >= lines_.size(); }
  int line_number() const { return static_cast<int>(next_) + 1; }
  std::string_view peek() const { return lines_[next_]; }
  std::string_view take(const char* expecting) {
    if (done()) error(column_end(), std::string("unexpected end of input, expected ") + expecting);
    return lines_[next_++];
  }
  [[noreturn]] void error(int column, const std::string& what, int line = 0) const {
    throw GemError(ErrorKind::Syntax, "line " + std::to_string(line ? line : static_cast<int>(next_)) +
                                          ", column " + std::to_string(column) + ": " + what);
  }
  int column_end() const { return 1; }

 private:
  std::vector<std::string_view> lines_;
  std::size_t next_ = 0;
};

// Parses "<keyword> <integer>" and returns the integer.
inline int keyword_int(LineReader& in, const char* keyword) {
  std::string_view line = in.take(keyword);
  const std::string_view kw(keyword);
  if (line.substr(0, kw.size()) != kw || line.size() <= kw.size() || line[kw.size()] != ' ')
    in.error(1, "expected '" + std::string(keyword) + " <count>'");
  std::string_view num = line.substr(kw.size() + 1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
  if (ec != std::errc() || ptr != num.data() + num.size() || value < 0)
    in.error(static_cast<int>(kw.size()) + 2, "expected a non-negative integer");
  return value;
}

inline std::vector<Vertex> parse_row(LineReader& in, std::string_view line, std::size_t offset, int order) {
  std::vector<Vertex> row;
  std::size_t i = offset;
  while (i < line.size()) {
    if (line[i] == ' ') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    int v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, v);
    if (ec != std::errc() || ptr != line.data() + j)
      in.error(static_cast<int>(i) + 1, "expected a vertex id, found '" + std::string(line.substr(i, j - i)) + "'");
    if (v < 0 || v >= order)
      in.error(static_cast<int>(i) + 1, "vertex id " + std::to_string(v) + " out of range 0.." +
                                            std::to_string(order - 1));
    row.push_back(v);
    i = j;
  }
  return row;
}

}  // namespace detail

inline ColoredGraph parse_gem_text(std::string_view text) {
  detail::LineReader in(text);
  if (in.take("'gem v1'") != "gem v1") in.error(1, "expected header 'gem v1'");
  const int colors = detail::keyword_int(in, "colors");
  if (colors < 2 || colors > kMaxColors)
    in.error(8, "color count must lie in 2.." + std::to_string(kMaxColors));
  const int order = detail::keyword_int(in, "order");
  Metadata meta;
  while (!in.done() && in.peek().substr(0, 5) == "meta ") {
    std::string_view line = in.take("meta");
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos || eq == 5) in.error(6, "expected 'meta <key>=<value>'");
    const std::string key(line.substr(5, eq - 5));
    for (std::size_t i = 0; i < key.size(); ++i)
      if (!(std::isalnum(static_cast<unsigned char>(key[i])) || key[i] == '_'))
        in.error(static_cast<int>(6 + i), "invalid character in meta key");
    if (meta.count(key)) in.error(6, "duplicate meta key '" + key + "'");
    meta[key] = std::string(line.substr(eq + 1));
  }
  std::vector<std::vector<Vertex>> matchings;
  for (int c = 0; c < colors; ++c) {
    std::string_view line = in.take("a color line");
    const std::string prefix = "c" + std::to_string(c) + ":";
    if (line.substr(0, prefix.size()) != prefix) in.error(1, "expected '" + prefix + "'");
    auto row = detail::parse_row(in, line, prefix.size(), order);
    if (static_cast<int>(row.size()) != order)
      in.error(static_cast<int>(line.size()) + 1, "incomplete matching for color " + std::to_string(c) + ": " +
                                                      std::to_string(row.size()) + " entries, expected " +
                                                      std::to_string(order));
    matchings.push_back(std::move(row));
  }
  if (!in.done()) in.error(1, "unexpected trailing content", in.line_number());
  return ColoredGraph::checked(colors - 1, std::move(matchings), std::move(meta));
}

inline std::string serialize_gem(const ColoredGraph& g) {
  std::string s = "gem v1\ncolors " + std::to_string(g.num_colors()) + "\norder " + std::to_string(g.order()) + "\n";
  for (const auto& [k, v] : g.meta()) s += "meta " + k + "=" + v + "\n";
  for (Color c = 0; c < g.num_colors(); ++c) {
    s += "c" + std::to_string(c) + ":";
    for (Vertex w : g.matching(c)) s += " " + std::to_string(w);
    s += "\n";
  }
  return s;
}

inline nlohmann::ordered_json gem_to_json(const ColoredGraph& g) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["colors"] = g.num_colors();
  j["order"] = g.order();
  j["matchings"] = g.matchings();
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : g.meta()) meta[k] = v;
  j["meta"] = meta;
  return j;
}

inline ColoredGraph gem_from_json(const nlohmann::json& j) {
  try {
    if (j.at("version").get<int>() != 1) throw GemError(ErrorKind::Syntax, "unsupported version");
    const int colors = j.at("colors").get<int>();
    const int order = j.at("order").get<int>();
    auto m = j.at("matchings").get<std::vector<std::vector<Vertex>>>();
    if (static_cast<int>(m.size()) != colors)
      throw GemError(ErrorKind::Syntax, "expected " + std::to_string(colors) + " matchings");
    for (std::size_t c = 0; c < m.size(); ++c)
      if (static_cast<int>(m[c].size()) != order)
        throw GemError(ErrorKind::Structure, "incomplete matching for color " + std::to_string(c));
    Metadata meta;
    if (j.contains("meta"))
      for (const auto& [k, v] : j.at("meta").items()) meta[k] = v.is_string() ? v.get<std::string>() : v.dump();
    return ColoredGraph::checked(colors - 1, std::move(m), std::move(meta));
  } catch (const nlohmann::json::exception& e) {
    throw GemError(ErrorKind::Syntax, std::string("malformed JSON graph: ") + e.what());
  }
}

// Accepts either encoding, detected from the first non-blank character.
inline ColoredGraph parse_gem(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw GemError(ErrorKind::Syntax, std::string("JSON: ") + e.what());
    }
    return gem_from_json(j);
  }
  return parse_gem_text(text);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GemError(ErrorKind::Syntax, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ColoredGraph load_gem(const std::string& path) { return parse_gem(read_file(path)); }

inline void save_gem(const std::string& path, const ColoredGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GemError(ErrorKind::Syntax, "cannot write " + path);
  out << serialize_gem(g);
}

}  // namespace gemkit
