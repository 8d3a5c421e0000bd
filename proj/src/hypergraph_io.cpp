#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "echg/io.hpp"
#include "io_util.hpp"

namespace echg {

namespace detail {

bool next_data_line(std::istream& in, std::size_t& line_no, std::vector<std::uint64_t>& fields) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    fields.clear();
    std::size_t pos = first;
    while (pos < line.size()) {
      pos = line.find_first_not_of(" \t\r", pos);
      if (pos == std::string::npos) break;
      const auto end = std::min(line.find_first_of(" \t\r", pos), line.size());
      std::uint64_t value = 0;
      const auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
      if (ec != std::errc() || ptr != line.data() + end)
        throw ParseError(line_no, "expected a non-negative integer, got '" + line.substr(pos, end - pos) + "'");
      fields.push_back(value);
      pos = end;
    }
    return true;
  }
  return false;
}

std::uint32_t narrow(std::uint64_t value, std::size_t line_no) {
  if (value > UINT32_MAX) throw ParseError(line_no, "value " + std::to_string(value) + " too large");
  return static_cast<std::uint32_t>(value);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return in;
}

}  // namespace detail

Hypergraph read_hypergraph(std::istream& in) {
  std::size_t line_no = 0;
  std::vector<std::uint64_t> fields;
  if (!detail::next_data_line(in, line_no, fields)) throw ParseError(line_no, "missing 'h m' header");
  if (fields.size() != 2) throw ParseError(line_no, "header must be 'h m'");
  const std::uint32_t h = detail::narrow(fields[0], line_no);
  const std::uint32_t m = detail::narrow(fields[1], line_no);
  if (h < 2) throw ParseError(line_no, "uniformity h must be at least 2");
  if (m < h) throw ParseError(line_no, "vertex count m must be at least h");

  std::vector<VertexSet> edges;
  while (detail::next_data_line(in, line_no, fields)) {
    if (fields.size() != h)
      throw ParseError(line_no, "edge has " + std::to_string(fields.size()) + " vertices, expected " +
                                    std::to_string(h));
    VertexSet e;
    for (auto f : fields) {
      if (f >= m) throw ParseError(line_no, "vertex " + std::to_string(f) + " out of range");
      e.push_back(static_cast<Vertex>(f));
    }
    VertexSet sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError(line_no, "edge repeats a vertex");
    edges.push_back(std::move(e));
  }
  return Hypergraph(h, m, edges);
}

Hypergraph read_hypergraph_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& hg, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << hg.uniformity() << ' ' << hg.vertex_count() << '\n';
  for (std::size_t i = 0; i < hg.edge_count(); ++i) {
    const auto e = hg.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j];
    out << '\n';
  }
}

}  // namespace echg
