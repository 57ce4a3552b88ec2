#include "colref/graph6.hpp"

#include <array>
#include <cstdint>
#include <sstream>

#include "colref/errors.hpp"

namespace colref {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, long long n) {
  if (n < 0) fail(Errc::FormatError, "negative order");
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else if (n <= 68719476735LL) {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  } else {
    fail(Errc::FormatError, "order too large for graph6");
  }
}

struct Reader {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  int next6() {
    if (done()) fail(Errc::FormatError, "truncated graph6 data");
    unsigned char c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) {
      fail(Errc::FormatError, "character " + std::to_string(int(c)) + " outside 63..126 at offset " +
                                  std::to_string(pos - 1));
    }
    return c - 63;
  }
};

long long read_size(Reader& r) {
  int first = r.next6();
  if (first != 63) return first;
  int second = r.next6();
  if (second != 63) {
    long long n = second;
    for (int i = 0; i < 2; ++i) n = (n << 6) | r.next6();
    return n;
  }
  long long n = 0;
  for (int i = 0; i < 6; ++i) n = (n << 6) | r.next6();
  return n;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

} // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  append_size(out, n);
  int bit = 5;
  int group = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      if (g.adjacent(row, col)) group |= 1 << bit;
      if (--bit < 0) {
        out.push_back(static_cast<char>(group + 63));
        bit = 5;
        group = 0;
      }
    }
  }
  if (bit != 5) out.push_back(static_cast<char>(group + 63));
  return out;
}

Graph graph6_decode(std::string_view text) {
  std::string_view body = strip(text);
  if (body.substr(0, kHeader.size()) == kHeader) body.remove_prefix(kHeader.size());
  if (body.empty()) fail(Errc::FormatError, "empty graph6 input");
  Reader r{body};
  long long n64 = read_size(r);
  if (n64 > (1 << 24)) fail(Errc::FormatError, "order " + std::to_string(n64) + " unreasonably large");
  const int n = static_cast<int>(n64);
  Graph g(n);
  int bit = -1;
  int group = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      if (bit < 0) {
        group = r.next6();
        bit = 5;
      }
      if (group & (1 << bit)) g.add_edge(row, col);
      --bit;
    }
  }
  // Padding bits must be zero and nothing may follow.
  if (bit >= 0 && (group & ((1 << (bit + 1)) - 1)) != 0) {
    fail(Errc::FormatError, "nonzero padding bits");
  }
  if (!r.done()) fail(Errc::FormatError, "trailing characters after graph data");
  return g;
}

std::vector<Graph> graph6_decode_lines(std::string_view text) {
  std::vector<Graph> graphs;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = strip(text.substr(start, end - start));
    if (!line.empty()) graphs.push_back(graph6_decode(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return graphs;
}

std::string dot_export(const Graph& g, const Partition* partition) {
  // Colour palette for partition classes; cycles when there are more classes.
  static constexpr std::array<const char*, 12> palette = {
      "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c",
      "#fdbf6f", "#ff7f00", "#cab2d6", "#6a3d9a", "#ffff99", "#b15928"};
  std::ostringstream out;
  out << "graph G {\n";
  out << "  node [shape=circle];\n";
  std::vector<int> colour;
  if (partition) colour = partition->colour_of(g.order());
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (partition) {
      out << " [style=filled, fillcolor=\"" << palette[colour[v] % palette.size()] << "\", label=\"" << v
          << "\", tooltip=\"class " << colour[v] << "\"]";
    }
    out << ";\n";
  }
  for (const auto& [u, v] : edge_list(g)) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

} // namespace colref
