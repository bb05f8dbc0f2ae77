#include "diamdom/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "diamdom/error.hpp"

namespace diamdom {
namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t to_number(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = split_tokens(text.substr(pos, end - pos));
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    pos = end + 1;
  }
  return lines;
}

Edge checked_edge(std::size_t a, std::size_t b, std::size_t n, std::size_t line_no) {
  if (a >= n || b >= n) {
    throw ParseError(line_no, "vertex id out of range for n = " + std::to_string(n));
  }
  if (a == b) throw ParseError(line_no, "self-loop on vertex " + std::to_string(a));
  return make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
}

Graph parse_edge_list(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing header line \"n m\"");
  const Line& header = lines.front();
  if (header.tokens.size() != 2) throw ParseError(header.number, "header must be \"n m\"");
  std::size_t n = to_number(header.tokens[0], header.number);
  std::size_t m = to_number(header.tokens[1], header.number);
  if (lines.size() - 1 != m) {
    std::size_t at = lines.size() - 1 > m ? lines[m + 1].number : lines.back().number + 1;
    throw ParseError(at, "header announces " + std::to_string(m) + " edges, found " +
                             std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 2) throw ParseError(line.number, "edge line must be \"u v\"");
    edges.push_back(checked_edge(to_number(line.tokens[0], line.number),
                                 to_number(line.tokens[1], line.number), n, line.number));
  }
  return Graph(n, edges);
}

Graph parse_dimacs(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  for (const Line& line : tokenize(text)) {
    std::string_view kind = line.tokens.front();
    if (kind == "c") continue;
    if (kind == "p") {
      if (n) throw ParseError(line.number, "duplicate problem line");
      if (line.tokens.size() != 4 || (line.tokens[1] != "edge" && line.tokens[1] != "col")) {
        throw ParseError(line.number, "problem line must be \"p edge n m\"");
      }
      n = to_number(line.tokens[2], line.number);
      to_number(line.tokens[3], line.number);
      continue;
    }
    if (kind == "e") {
      if (!n) throw ParseError(line.number, "edge before problem line");
      if (line.tokens.size() != 3) throw ParseError(line.number, "edge line must be \"e u v\"");
      std::size_t a = to_number(line.tokens[1], line.number);
      std::size_t b = to_number(line.tokens[2], line.number);
      if (a == 0 || b == 0) throw ParseError(line.number, "DIMACS vertex ids are 1-based");
      edges.push_back(checked_edge(a - 1, b - 1, *n, line.number));
      continue;
    }
    throw ParseError(line.number, "unknown line type '" + std::string(kind) + "'");
  }
  if (!n) throw ParseError(0, "missing problem line \"p edge n m\"");
  return Graph(*n, edges);
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::edge_list ? parse_edge_list(text) : parse_dimacs(text);
}

Graph read_graph_file(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str(), format);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

}  // namespace diamdom
