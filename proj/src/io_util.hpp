#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iosfwd>
#include <string>
#include <vector>

namespace echg::detail {

/// Reads the next non-blank, non-comment line as whitespace-separated
/// non-negative integers. Returns false at end of input.
bool next_data_line(std::istream& in, std::size_t& line_no, std::vector<std::uint64_t>& fields);

std::uint32_t narrow(std::uint64_t value, std::size_t line_no);

std::ifstream open_input(const std::string& path);

}  // namespace echg::detail
