#include <istream>
#include <ostream>

#include "echg/io.hpp"
#include "io_util.hpp"

namespace echg {

Design read_design(std::istream& in) {
  std::size_t line_no = 0;
  std::vector<std::uint64_t> fields;
  if (!detail::next_data_line(in, line_no, fields)) throw ParseError(line_no, "missing 't v k lambda' header");
  if (fields.size() != 4) throw ParseError(line_no, "header must be 't v k lambda'");
  const std::uint32_t t = detail::narrow(fields[0], line_no);
  const std::uint32_t v = detail::narrow(fields[1], line_no);
  const std::uint32_t k = detail::narrow(fields[2], line_no);
  const std::uint32_t lambda = detail::narrow(fields[3], line_no);
  if (t < 1 || t > k || k > v) throw ParseError(line_no, "parameters need 1 <= t <= k <= v");
  if (lambda < 1) throw ParseError(line_no, "lambda must be at least 1");

  std::vector<VertexSet> blocks;
  while (detail::next_data_line(in, line_no, fields)) {
    if (fields.size() != k)
      throw ParseError(line_no, "block has " + std::to_string(fields.size()) + " points, expected " +
                                    std::to_string(k));
    VertexSet block;
    for (auto f : fields) {
      if (f >= v) throw ParseError(line_no, "point " + std::to_string(f) + " out of range");
      block.push_back(static_cast<Vertex>(f));
    }
    std::sort(block.begin(), block.end());
    if (std::adjacent_find(block.begin(), block.end()) != block.end())
      throw ParseError(line_no, "block repeats a point");
    blocks.push_back(std::move(block));
  }
  return Design(t, v, k, lambda, std::move(blocks));
}

Design read_design_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_design(in);
}

void write_design(std::ostream& out, const Design& design, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << design.t << ' ' << design.v << ' ' << design.k << ' ' << design.lambda << '\n';
  for (const auto& block : design.blocks) {
    for (std::size_t j = 0; j < block.size(); ++j) out << (j ? " " : "") << block[j];
    out << '\n';
  }
}

MolsSet read_mols(std::istream& in) {
  std::size_t line_no = 0;
  std::vector<std::uint64_t> fields;
  if (!detail::next_data_line(in, line_no, fields)) throw ParseError(line_no, "missing 'q l' header");
  if (fields.size() != 2) throw ParseError(line_no, "header must be 'q l'");
  const std::uint32_t q = detail::narrow(fields[0], line_no);
  const std::uint32_t count = detail::narrow(fields[1], line_no);
  if (q < 1) throw ParseError(line_no, "order must be at least 1");

  std::vector<LatinSquare> squares;
  for (std::uint32_t s = 0; s < count; ++s) {
    std::vector<std::vector<std::uint32_t>> rows;
    std::size_t first_line = 0;
    for (std::uint32_t r = 0; r < q; ++r) {
      if (!detail::next_data_line(in, line_no, fields)) throw ParseError(0, "unexpected end of input in square");
      if (r == 0) first_line = line_no;
      if (fields.size() != q) throw ParseError(line_no, "row must have " + std::to_string(q) + " symbols");
      std::vector<std::uint32_t> row;
      for (auto f : fields) {
        if (f >= q) throw ParseError(line_no, "symbol " + std::to_string(f) + " out of range");
        row.push_back(static_cast<std::uint32_t>(f));
      }
      rows.push_back(std::move(row));
    }
    if (!is_latin(rows)) throw ParseError(first_line, "square " + std::to_string(s) + " is not Latin");
    squares.emplace_back(rows);
  }
  if (detail::next_data_line(in, line_no, fields)) throw ParseError(line_no, "trailing data after last square");
  try {
    return MolsSet(q, std::move(squares));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

MolsSet read_mols_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_mols(in);
}

void write_mols(std::ostream& out, const MolsSet& mols, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << mols.order() << ' ' << mols.size() << '\n';
  for (std::size_t s = 0; s < mols.size(); ++s) {
    out << "# square " << s << '\n';
    const auto& sq = mols.squares()[s];
    for (std::uint32_t r = 0; r < mols.order(); ++r) {
      for (std::uint32_t c = 0; c < mols.order(); ++c) out << (c ? " " : "") << sq.at(r, c);
      out << '\n';
    }
  }
}

}  // namespace echg
